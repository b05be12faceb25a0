#include "garside/tuple.hpp"

#include "garside/error.hpp"

namespace garside {

TupleElement::TupleElement(std::vector<Element> entries)
    : entries_(std::move(entries))
{
  if (entries_.empty())
    throw Error(Errc::dimension_mismatch, "tuple must have at least one entry");
  for (const Element& e : entries_)
    if (e.structure_ptr() != entries_.front().structure_ptr())
      throw Error(Errc::structure_mismatch, "tuple entries from different structures");
}

TupleElement TupleElement::prefix(std::size_t k) const
{
  return TupleElement(std::vector<Element>(entries_.begin(),
                                           entries_.begin() + static_cast<std::ptrdiff_t>(k)));
}

std::vector<std::int64_t> TupleElement::infs() const
{
  std::vector<std::int64_t> out;
  for (const Element& e : entries_)
    out.push_back(e.inf());
  return out;
}

std::vector<std::int64_t> TupleElement::sups() const
{
  std::vector<std::int64_t> out;
  for (const Element& e : entries_)
    out.push_back(e.sup());
  return out;
}

std::string TupleElement::key() const
{
  std::string out;
  for (const Element& e : entries_)
    e.encode_to(out);
  return out;
}

TupleElement decode_tuple(const StructurePtr& g, std::string_view key)
{
  const std::size_t n = static_cast<std::size_t>(g->strands());
  std::vector<Element> entries;
  std::size_t pos = 0;
  auto byte = [&](std::size_t i) { return static_cast<std::uint8_t>(key[i]); };
  while (pos < key.size()) {
    if (key.size() - pos < 12) throw Error(Errc::parse_error, "truncated tuple key");
    std::uint64_t biased = 0;
    for (int i = 0; i < 8; ++i)
      biased = (biased << 8) | byte(pos++);
    std::uint32_t len = 0;
    for (int i = 0; i < 4; ++i)
      len = (len << 8) | byte(pos++);
    if ((key.size() - pos) / n < len) throw Error(Errc::parse_error, "truncated tuple key");
    std::vector<Simple> factors;
    factors.reserve(len);
    for (std::uint32_t k = 0; k < len; ++k, pos += n)
      factors.push_back(g->decode(key.substr(pos, n)));
    Element e = Element::delta_power(g, static_cast<std::int64_t>(biased ^ (1ull << 63)));
    for (const Simple& s : factors)
      e.right_multiply(s);
    entries.push_back(std::move(e));
  }
  return TupleElement(std::move(entries));
}

Interval::Interval(std::vector<std::int64_t> lo_, std::vector<std::int64_t> hi_)
    : lo(std::move(lo_)), hi(std::move(hi_))
{
  if (lo.size() != hi.size())
    throw Error(Errc::dimension_mismatch, "interval bounds of different length");
  for (std::size_t i = 0; i < lo.size(); ++i)
    if (lo[i] > hi[i]) throw Error(Errc::bad_parameter, "interval with lo > hi");
}

Interval Interval::of(const TupleElement& a)
{
  return Interval(a.infs(), a.sups());
}

Interval Interval::from_inf(const TupleElement& a)
{
  return Interval(a.infs(), std::vector<std::int64_t>(a.size(), kUnbounded));
}

bool in_interval(const TupleElement& a, const Interval& iv)
{
  if (a.size() != iv.size())
    throw Error(Errc::dimension_mismatch, "tuple and interval dimensions differ");
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].inf() < iv.lo[i]) return false;
    if (iv.hi[i] != kUnbounded && a[i].sup() > iv.hi[i]) return false;
  }
  return true;
}

TupleElement conjugate(const TupleElement& a, const Element& x)
{
  if (a.structure_ptr() != x.structure_ptr())
    throw Error(Errc::structure_mismatch, "conjugator from another structure");
  Element xi = inverse(x);
  std::vector<Element> out;
  for (const Element& e : a.entries())
    out.push_back(multiply(multiply(xi, e), x));
  return TupleElement(std::move(out));
}

TupleElement conjugate_by_simple(const TupleElement& a, const Simple& s)
{
  std::vector<Element> out;
  out.reserve(a.size());
  for (const Element& e : a.entries())
    out.push_back(conjugate_by_simple(e, s));
  return TupleElement(std::move(out));
}

TupleElement conjugate_by_simple_inverse(const TupleElement& a, const Simple& s)
{
  std::vector<Element> out;
  out.reserve(a.size());
  for (const Element& e : a.entries())
    out.push_back(conjugate_by_simple_inverse(e, s));
  return TupleElement(std::move(out));
}

TupleElement tau_power(const TupleElement& a, std::int64_t k)
{
  std::vector<Element> out;
  out.reserve(a.size());
  for (const Element& e : a.entries())
    out.push_back(tau_power(e, k));
  return TupleElement(std::move(out));
}

}  // namespace garside

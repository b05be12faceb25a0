#include "garside/element.hpp"

#include <cstdio>
#include <cstdlib>

#include "garside/error.hpp"

namespace garside {

std::int64_t checked_add(std::int64_t a, std::int64_t b)
{
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) {
    std::fprintf(stderr, "garside: Δ exponent overflow (%lld + %lld)\n",
                 static_cast<long long>(a), static_cast<long long>(b));
    std::abort();
  }
  return r;
}

namespace {

// Moves the largest possible prefix of b into a; returns false if nothing moved.
bool left_weight(const GarsideStructure& g, Simple& a, Simple& b)
{
  Simple u = g.meet_left(g.partial(a), b);
  if (u.is_identity()) return false;
  a = a.then(u);
  b = u.left_quotient(b);
  return true;
}

}  // namespace

Element::Element(StructurePtr g) : g_(std::move(g)) {}

Element Element::delta_power(StructurePtr g, std::int64_t k)
{
  Element e(std::move(g));
  e.inf_ = k;
  return e;
}

Element Element::from_simple(StructurePtr g, const Simple& s)
{
  Element e(std::move(g));
  e.right_multiply(s);
  return e;
}

Element Element::from_factors(StructurePtr g, std::int64_t inf,
                              const std::vector<Simple>& factors)
{
  Element e = delta_power(std::move(g), inf);
  for (const Simple& s : factors)
    e.right_multiply(s);
  return e;
}

std::int64_t Element::sup() const
{
  return checked_add(inf_, canonical_length());
}

void Element::absorb_deltas()
{
  std::size_t lead = 0;
  while (lead < factors_.size() && g_->is_delta(factors_[lead]))
    ++lead;
  if (lead > 0) {
    factors_.erase(factors_.begin(), factors_.begin() + static_cast<std::ptrdiff_t>(lead));
    inf_ = checked_add(inf_, static_cast<std::int64_t>(lead));
  }
  while (!factors_.empty() && factors_.back().is_identity())
    factors_.pop_back();
}

void Element::right_multiply(const Simple& s)
{
  if (s.is_identity()) return;
  factors_.push_back(s);
  for (std::size_t k = factors_.size() - 1; k > 0; --k)
    if (!left_weight(*g_, factors_[k - 1], factors_[k])) break;
  absorb_deltas();
}

void Element::left_multiply(const Simple& s)
{
  if (s.is_identity()) return;
  factors_.insert(factors_.begin(), g_->tau_power(s, inf_));
  for (std::size_t k = 0; k + 1 < factors_.size(); ++k)
    if (!left_weight(*g_, factors_[k], factors_[k + 1])) break;
  absorb_deltas();
}

void Element::left_multiply_delta_power(std::int64_t k)
{
  inf_ = checked_add(inf_, k);
}

// X·Δ^k = Δ^k·τ^k(X)
void Element::right_multiply_delta_power(std::int64_t k)
{
  inf_ = checked_add(inf_, k);
  apply_tau(k);
}

void Element::apply_tau(std::int64_t k)
{
  if (k % g_->tau_order() == 0) return;
  for (Simple& s : factors_)
    s = g_->tau_power(s, k);
}

void Element::encode_to(std::string& out) const
{
  // Sign-flipped big-endian so byte order agrees with numeric order.
  auto biased = static_cast<std::uint64_t>(inf_) ^ (1ull << 63);
  for (int shift = 56; shift >= 0; shift -= 8)
    out.push_back(static_cast<char>((biased >> shift) & 0xff));
  auto len = static_cast<std::uint32_t>(factors_.size());
  for (int shift = 24; shift >= 0; shift -= 8)
    out.push_back(static_cast<char>((len >> shift) & 0xff));
  for (const Simple& s : factors_)
    out += g_->encode(s);
}

std::string Element::encode() const
{
  std::string out;
  encode_to(out);
  return out;
}

Element make_element(const StructurePtr& g, std::span<const int> word)
{
  // Every inverse letter x^{-1} = Δ^{-1}·∂̃(x); pushing all the Δ^{-1} to the
  // front twists each positive factor by τ^{-m}, m = inverse letters after it.
  std::vector<Simple> positive;
  positive.reserve(word.size());
  std::int64_t inverses = 0;
  for (int letter : word) {
    int i = letter < 0 ? -letter : letter;
    if (letter == 0 || i > g->n_atoms())
      throw Error(Errc::index_out_of_range,
                  "atom index " + std::to_string(letter) + " out of range");
  }
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    int letter = *it;
    Simple x = g->atom((letter < 0 ? -letter : letter) - 1);
    if (letter > 0) {
      positive.push_back(g->tau_power(x, -inverses));
    } else {
      ++inverses;
      positive.push_back(g->tau_power(g->partial_inv(x), -(inverses - 1)));
    }
  }
  Element e = Element::delta_power(g, -inverses);
  for (auto it = positive.rbegin(); it != positive.rend(); ++it)
    e.right_multiply(*it);
  return e;
}

static void check_same(const Element& a, const Element& b)
{
  if (a.structure_ptr() != b.structure_ptr())
    throw Error(Errc::structure_mismatch, "elements from different structures");
}

Element multiply(const Element& a, const Element& b)
{
  check_same(a, b);
  Element r = a;
  r.right_multiply_delta_power(b.inf());
  for (const Simple& s : b.factors())
    r.right_multiply(s);
  return r;
}

// (Δ^p s_1⋯s_l)^{-1} = Δ^{-p-l} t_l ⋯ t_1 with t_k = τ^{-(k-1)-p}(∂̃(s_k)).
Element inverse(const Element& a)
{
  const GarsideStructure& g = a.structure();
  const auto& f = a.factors();
  const std::int64_t l = a.canonical_length();
  std::vector<Simple> twisted;
  twisted.reserve(f.size());
  for (std::int64_t k = l; k >= 1; --k)
    twisted.push_back(g.tau_power(g.partial_inv(f[static_cast<std::size_t>(k - 1)]),
                                  -(k - 1) - a.inf()));
  return Element::from_factors(a.structure_ptr(), -checked_add(a.inf(), l), twisted);
}

Element conjugate(const Element& g, const Element& x)
{
  check_same(g, x);
  return multiply(multiply(inverse(x), g), x);
}

Element conjugate_by_simple(const Element& g, const Simple& s)
{
  // s^{-1} = Δ^{-1}·∂̃(s)
  Element r = g;
  r.left_multiply(g.structure().partial_inv(s));
  r.left_multiply_delta_power(-1);
  r.right_multiply(s);
  return r;
}

Element conjugate_by_simple_inverse(const Element& g, const Simple& s)
{
  // s^{-1} = ∂(s)·Δ^{-1}
  Element r = g;
  r.left_multiply(s);
  r.right_multiply(g.structure().partial(s));
  r.right_multiply_delta_power(-1);
  return r;
}

Element tau_power(const Element& a, std::int64_t k)
{
  Element r = a;
  r.apply_tau(k);
  return r;
}

Simple tau_power(const GarsideStructure& g, const Simple& s, std::int64_t k)
{
  return g.tau_power(s, k);
}

bool is_left_weighted(const GarsideStructure& g, const Simple& s,
                      const Simple& t)
{
  for (int i = 0; i < g.n_atoms(); ++i) {
    Simple x = g.atom(i);
    if (g.left_divides(x, t) && g.product_if_simple(s, x)) return false;
  }
  return true;
}

bool is_normal_form(const Element& a)
{
  const GarsideStructure& g = a.structure();
  const auto& f = a.factors();
  for (const Simple& s : f) {
    if (s.strands() != g.strands() || g.is_identity(s) || g.is_delta(s) ||
        !g.left_divides(s, g.delta()))
      return false;
  }
  for (std::size_t i = 0; i + 1 < f.size(); ++i)
    if (!is_left_weighted(g, f[i], f[i + 1])) return false;
  return true;
}

std::int64_t exponent_sum(const Element& a)
{
  const GarsideStructure& g = a.structure();
  std::int64_t total = a.inf() * g.delta_atom_length();
  for (const Simple& s : a.factors())
    total += g.atom_length(s);
  return total;
}

std::vector<int> to_word(const Element& a)
{
  const GarsideStructure& g = a.structure();
  std::vector<int> delta_word;
  for (int i : atom_word(g, g.delta()))
    delta_word.push_back(i + 1);
  std::vector<int> word;
  for (std::int64_t k = 0; k < a.inf(); ++k)
    word.insert(word.end(), delta_word.begin(), delta_word.end());
  for (std::int64_t k = 0; k < -a.inf(); ++k)
    for (auto it = delta_word.rbegin(); it != delta_word.rend(); ++it)
      word.push_back(-*it);
  for (const Simple& s : a.factors())
    for (int i : atom_word(g, s))
      word.push_back(i + 1);
  return word;
}

}  // namespace garside

#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "garside/element.hpp"

namespace garside {

/// An upper bound of +∞.
inline constexpr std::int64_t kUnbounded = std::numeric_limits<std::int64_t>::max();

/// A nonempty r-vector of elements over one structure.
class TupleElement {
 public:
  explicit TupleElement(std::vector<Element> entries);

  std::size_t size() const { return entries_.size(); }
  const Element& operator[](std::size_t i) const { return entries_[i]; }
  Element& operator[](std::size_t i) { return entries_[i]; }
  const std::vector<Element>& entries() const { return entries_; }
  const GarsideStructure& structure() const { return entries_.front().structure(); }
  const StructurePtr& structure_ptr() const { return entries_.front().structure_ptr(); }

  /// The first k coordinates.
  TupleElement prefix(std::size_t k) const;

  std::vector<std::int64_t> infs() const;
  std::vector<std::int64_t> sups() const;

  /// Injective encoding: per coordinate (inf, length, factor encodings).
  std::string key() const;

  friend bool operator==(const TupleElement& a, const TupleElement& b)
  {
    return a.entries_ == b.entries_;
  }

 private:
  std::vector<Element> entries_;
};

/// Inverse of TupleElement::key.
TupleElement decode_tuple(const StructurePtr& g, std::string_view key);

/// [lo, hi] coordinatewise; hi[i] may be kUnbounded.
struct Interval {
  std::vector<std::int64_t> lo;
  std::vector<std::int64_t> hi;

  Interval() = default;
  Interval(std::vector<std::int64_t> lo, std::vector<std::int64_t> hi);

  std::size_t size() const { return lo.size(); }
  /// The interval [inf a, sup a].
  static Interval of(const TupleElement& a);
  /// The interval [inf a, ∞].
  static Interval from_inf(const TupleElement& a);

  friend bool operator==(const Interval&, const Interval&) = default;
};

bool in_interval(const TupleElement& a, const Interval& iv);

TupleElement conjugate(const TupleElement& a, const Element& x);
/// s^{-1} a s, coordinatewise
TupleElement conjugate_by_simple(const TupleElement& a, const Simple& s);
/// s a s^{-1}, coordinatewise
TupleElement conjugate_by_simple_inverse(const TupleElement& a, const Simple& s);
TupleElement tau_power(const TupleElement& a, std::int64_t k);

}  // namespace garside

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "garside/structure.hpp"

namespace garside {

/// A group element in left normal form Δ^inf · s_1 ⋯ s_l, where every s_i is a
/// simple different from 1 and Δ and each adjacent pair is left-weighted.
class Element {
 public:
  explicit Element(StructurePtr g);

  static Element delta_power(StructurePtr g, std::int64_t k);
  static Element from_simple(StructurePtr g, const Simple& s);
  /// Normalizes Δ^inf · factors[0] ⋯ factors[n-1]; the factors may be any
  /// simples, in any order.
  static Element from_factors(StructurePtr g, std::int64_t inf,
                              const std::vector<Simple>& factors);

  const GarsideStructure& structure() const { return *g_; }
  const StructurePtr& structure_ptr() const { return g_; }

  std::int64_t inf() const { return inf_; }
  std::int64_t sup() const;
  std::int64_t canonical_length() const { return static_cast<std::int64_t>(factors_.size()); }
  const std::vector<Simple>& factors() const { return factors_; }
  bool is_identity() const { return inf_ == 0 && factors_.empty(); }

  /// this := s · this
  void left_multiply(const Simple& s);
  /// this := this · s
  void right_multiply(const Simple& s);
  /// this := Δ^k · this
  void left_multiply_delta_power(std::int64_t k);
  /// this := this · Δ^k
  void right_multiply_delta_power(std::int64_t k);
  /// this := τ^k(this)
  void apply_tau(std::int64_t k);

  /// Appends the canonical encoding (inf, length, factor encodings).
  void encode_to(std::string& out) const;
  std::string encode() const;

  friend bool operator==(const Element& a, const Element& b)
  {
    return a.g_ == b.g_ && a.inf_ == b.inf_ && a.factors_ == b.factors_;
  }

 private:
  void absorb_deltas();

  StructurePtr g_;
  std::int64_t inf_ = 0;
  std::vector<Simple> factors_;
};

std::int64_t checked_add(std::int64_t a, std::int64_t b);

/// Normal form of a word of signed 1-based atom indices (negative = inverse).
Element make_element(const StructurePtr& g, std::span<const int> word);
Element multiply(const Element& a, const Element& b);
Element inverse(const Element& a);
/// x^{-1} g x
Element conjugate(const Element& g, const Element& x);
/// s^{-1} g s for a simple s
Element conjugate_by_simple(const Element& g, const Simple& s);
/// s g s^{-1} for a simple s
Element conjugate_by_simple_inverse(const Element& g, const Simple& s);
Element tau_power(const Element& a, std::int64_t k);
Simple tau_power(const GarsideStructure& g, const Simple& s, std::int64_t k);

/// Left-weightedness of (s, t): no atom x with x ≼ t and s·x simple.
bool is_left_weighted(const GarsideStructure& g, const Simple& s,
                      const Simple& t);
/// Checks every structural invariant of a normal form with primitives only.
bool is_normal_form(const Element& a);

/// Image in the abelianization (homogeneous presentation length).
std::int64_t exponent_sum(const Element& a);

/// A word (signed 1-based atom indices) representing the element.
std::vector<int> to_word(const Element& a);

}  // namespace garside

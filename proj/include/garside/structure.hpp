#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "garside/simple.hpp"

namespace garside {

enum class LatticeOp { meet_left, meet_right, join_left, join_right };
enum class Side { right, left };

/// A concrete Garside structure: atoms, the Garside element and the
/// order-theoretic primitives on its simple elements.
///
/// Subclasses supply divisibility tests, the "is this product still simple"
/// test and a canonical byte encoding. Lattice operations have generic
/// implementations (greedy atom extension for meets, the complement
/// anti-isomorphism for joins); subclasses may override the meets with faster
/// routines, which tests check against the generic ones.
class GarsideStructure {
 public:
  virtual ~GarsideStructure() = default;

  GarsideStructure(const GarsideStructure&) = delete;
  GarsideStructure& operator=(const GarsideStructure&) = delete;

  virtual std::string_view name() const = 0;
  int strands() const { return strands_; }

  virtual int n_atoms() const = 0;
  /// Atom with 0-based index `i`.
  virtual Simple atom(int i) const = 0;

  const Simple& delta() const { return delta_; }
  const Simple& identity() const { return identity_; }
  int delta_atom_length() const { return delta_atom_length_; }
  int tau_order() const { return tau_order_; }

  bool is_identity(const Simple& s) const { return s == identity_; }
  bool is_delta(const Simple& s) const { return s == delta_; }

  /// `s * t` if it is simple, otherwise nothing.
  virtual std::optional<Simple> product_if_simple(const Simple& s,
                                                  const Simple& t) const = 0;
  /// s ≼ t
  virtual bool left_divides(const Simple& s, const Simple& t) const = 0;
  /// t ≽ s, i.e. t = u*s
  virtual bool right_divides(const Simple& t, const Simple& s) const = 0;

  /// Atom count of a simple (its length in the homogeneous presentation).
  virtual int atom_length(const Simple& s) const = 0;

  /// Flags of the atoms x with x ≼ s (resp. s ≽ x).
  virtual std::vector<bool> left_atom_divisors(const Simple& s) const;
  virtual std::vector<bool> right_atom_divisors(const Simple& s) const;

  virtual std::string encode(const Simple& s) const = 0;
  virtual Simple decode(std::string_view bytes) const = 0;

  /// Approximate |Div(Δ)|, used to refuse enumeration of huge simple sets.
  virtual double predicted_simple_count() const = 0;

  // τ = conjugation by Δ, ∂(s) = s\Δ, ∂̃(s) = Δ/s.
  Simple tau(const Simple& s) const { return tau_power(s, 1); }
  Simple tau_inv(const Simple& s) const { return tau_power(s, -1); }
  Simple tau_power(const Simple& s, long long k) const;
  Simple partial(const Simple& s) const;
  Simple partial_inv(const Simple& s) const;
  Simple partial_power(const Simple& s, long long k) const;

  virtual Simple meet_left(const Simple& s, const Simple& t) const;
  virtual Simple meet_right(const Simple& s, const Simple& t) const;
  Simple generic_meet_left(const Simple& s, const Simple& t) const;
  Simple generic_meet_right(const Simple& s, const Simple& t) const;
  /// s ∨ t, the right lcm (least common right multiple in ≼).
  Simple join_right(const Simple& s, const Simple& t) const;
  /// s ∨̃ t, the left lcm (least common left multiple in ≽).
  Simple join_left(const Simple& s, const Simple& t) const;
  /// s\t with s * (s\t) = s ∨ t.
  Simple complement_right(const Simple& s, const Simple& t) const;
  /// t/s with (t/s) * s = t ∨̃ s.
  Simple complement_left(const Simple& t, const Simple& s) const;

 protected:
  GarsideStructure(int strands, Simple delta, int delta_atom_length);
  /// Call once atoms are available; computes the τ order on simples.
  void finish_construction();

 private:
  int strands_;
  Simple delta_;
  Simple identity_;
  int delta_atom_length_;
  int tau_order_ = 1;
  int delta_perm_order_ = 1;
  std::vector<Simple> delta_powers_;  // Δ^k as permutations, k < perm order
};

using StructurePtr = std::shared_ptr<const GarsideStructure>;

Simple lattice(const GarsideStructure& g, const Simple& s, const Simple& t,
               LatticeOp op);
Simple complement(const GarsideStructure& g, const Simple& s, const Simple& t,
                  Side side);

/// Greedy decomposition of a simple into atom indices (0-based).
std::vector<int> atom_word(const GarsideStructure& g, const Simple& s);

}  // namespace garside

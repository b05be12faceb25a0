#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "garside/solver.hpp"

namespace garside {

/// A finitely generated subgroup, given by its generators.
class SubgroupSpec {
 public:
  explicit SubgroupSpec(std::vector<Element> generators);

  std::size_t size() const { return gens_.size(); }
  const std::vector<Element>& generators() const { return gens_; }
  const Element& operator[](std::size_t i) const { return gens_[i]; }

 private:
  std::vector<Element> gens_;
};

/// Search SCP capability: some x with conjugate(a, x) == c, or nothing.
using ScpOracle =
    std::function<std::optional<Element>(const TupleElement& a, const TupleElement& c)>;

/// An oracle backed by scp_search.
ScpOracle search_oracle(const ScpOptions& opts = {});

/// An oracle that answers with the first of `candidates` that works.
ScpOracle known_conjugators_oracle(std::vector<Element> candidates);

/// g^{ab} from g^a and g^b, where a commutes with every generator of B.
Element dh_recover(const Element& g, const SubgroupSpec& b, const Element& g_a,
                   const Element& g_b, const ScpOracle& oracle);

/// a1 b1 g a2 b2 from u = a1 g a2 and v = b1 g b2, where [A1,B1] = [A2,B2] = 1.
Element double_coset_recover(const Element& g, const SubgroupSpec& b1, const SubgroupSpec& b2,
                             const Element& u, const Element& v, const ScpOracle& oracle);

/// [a,b] = a^{-1} b^{-1} a b from conj_a = (a_i^b) and conj_b = (b_i^a). The
/// centralizer generators are trusted to generate Cent(A) and Cent(B); they are
/// only checked to commute with A and B.
Element commutator_recover(const SubgroupSpec& a, const SubgroupSpec& b,
                           const SubgroupSpec& cent_a, const SubgroupSpec& cent_b,
                           const TupleElement& conj_a, const TupleElement& conj_b,
                           const ScpOracle& oracle);

/// a1 b1 g a2 b2 from u = a1 g a2 and v = b1 g b2, where C centralizes a1 and
/// b2 lies in the group generated by cent_d.
Element centralizer_protocol_recover(const Element& g, const SubgroupSpec& c,
                                     const SubgroupSpec& cent_d, const Element& u,
                                     const Element& v, const ScpOracle& oracle);

enum class Problem { dh, double_coset, commutator, centralizer };

Problem parse_problem(std::string_view token);
const char* to_string(Problem p);

struct InstanceParams {
  int word_length = 8;  // atoms per private element
  int g_length = 16;    // atoms in the public base element g
  std::size_t generators = 0;  // use only the first k subgroup generators (0 = all)
  bool identity = false;       // all private elements trivial
};

struct DhInstance {
  Element g;
  SubgroupSpec b_gens;
  Element g_a, g_b;
  Element a, b;   // private
  Element shared;  // g^{ab}
};

struct DoubleCosetInstance {
  Element g;
  SubgroupSpec b1_gens, b2_gens;
  Element u, v;
  Element a1, a2, b1, b2;
  Element shared;  // a1 b1 g a2 b2
};

struct CommutatorInstance {
  SubgroupSpec a_gens, b_gens, cent_a, cent_b;
  TupleElement conj_a, conj_b;
  Element a, b;
  Element shared;  // [a,b]
};

struct CentralizerInstance {
  Element g;
  SubgroupSpec c_gens, cent_d;
  Element u, v;
  Element a1, a2, b1, b2;
  Element shared;  // a1 b1 g a2 b2
};

using Instance =
    std::variant<DhInstance, DoubleCosetInstance, CommutatorInstance, CentralizerInstance>;

/// A random instance over `g` (N ≥ 4) whose commuting subgroups act on
/// disjoint strand ranges. Deterministic in `seed`.
Instance gen_instance(Problem problem, const StructurePtr& g, const InstanceParams& params,
                      std::uint64_t seed);

/// Runs the matching recover operation on the instance's public data.
Element recover(const Instance& inst, const ScpOracle& oracle);
const Element& shared_value(const Instance& inst);
/// The private conjugators, enough to answer every oracle query of `recover`.
std::vector<Element> private_conjugators(const Instance& inst);

/// Element of a word in the classical generators σ_i (signed, 1-based), in
/// either braid structure.
Element sigma_word(const StructurePtr& g, std::span<const int> word);

/// σ_from, ..., σ_to.
std::vector<Element> sigma_range(const StructurePtr& g, int from, int to);

/// Generators of the centralizer of the braids on strands lo..hi, where the
/// range is an end segment (lo = 1 or hi = N): the
/// subgroup's center, the braids on the remaining strands, and the loop of the
/// nearest remaining strand around the segment.
std::vector<Element> parabolic_centralizer(const StructurePtr& g, int lo, int hi);

/// A central element: Δ^2 for Artin, δ^N for BKL.
Element central_generator(const StructurePtr& g);

}  // namespace garside

#pragma once

#include <cstdint>
#include <deque>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "garside/tuple.hpp"

namespace garside {

/// Simple x with a ↦ x·a·x^{-1} moving `a` towards `target`, a one-step shrink
/// of [inf a, sup a] (each lo raised by 0 or 1, each hi lowered by 0 or 1;
/// hi = kUnbounded imposes nothing).
Simple sliding_element(const TupleElement& a, const Interval& target);

struct ConjResult {
  Element y;             // a^{y^{-1}} = result
  bool success;          // result lies in the requested interval
  TupleElement result;
  std::int64_t iterations;
};

/// Repeated simultaneous sliding towards `iv`, at most `max_iter` steps
/// (kUnbounded for no limit).
ConjResult conj_to_interval(const TupleElement& a, const Interval& iv,
                            std::int64_t max_iter);

/// The unique minimal simple s with x dividing s (x ≼ s for Side::right,
/// s ≽ x for Side::left) such that v^s (right) or v^{s^{-1}} (left) stays in iv.
Simple min_simple(const TupleElement& v, const Interval& iv, int atom, Side side);

/// The minimal simples keeping v inside iv, one candidate per atom, deduplicated.
std::vector<Simple> minimal_simple_set(const TupleElement& v, const Interval& iv,
                                       Side side);

struct OrbitOptions {
  bool use_minimal = true;
  std::size_t cap = 100000;
  bool mod_tau = false;
};

struct OrbitBuilder;

/// A set of simultaneous conjugates of `base`, each with a witness x such that
/// base^x is the member. Members are stored by their canonical key only.
class OrbitSet {
 public:
  OrbitSet(TupleElement base, Interval iv, Element root_witness, bool mod_tau);
  OrbitSet(const OrbitSet& other);
  OrbitSet& operator=(const OrbitSet& other);
  OrbitSet(OrbitSet&&) = default;
  OrbitSet& operator=(OrbitSet&&) = default;

  const TupleElement& base() const { return base_; }
  const Interval& interval() const { return interval_; }
  std::size_t size() const { return members_.size(); }
  bool truncated() const { return truncated_; }
  bool mod_tau() const { return mod_tau_; }

  TupleElement member(std::size_t i) const;
  std::string_view member_key(std::size_t i) const;
  Element witness(std::size_t i) const;

  /// Index of the member equal to v (or to v's τ-representative if mod τ).
  std::optional<std::size_t> find(const TupleElement& v) const;
  bool contains(const TupleElement& v) const { return find(v).has_value(); }
  std::vector<std::string> sorted_keys() const;

 private:
  friend struct OrbitBuilder;
  friend OrbitSet mod_tau_reduce(const OrbitSet&);

  struct Node {
    std::uint32_t parent;
    Simple edge;              // witness(node) = witness(parent)·edge·Δ^shift
    std::int32_t shift;
  };

  // Returns (node index, inserted).
  std::pair<std::uint32_t, bool> add_node(std::string key, Node node, bool member);
  void add_member(std::uint32_t node);
  void rebuild_index();

  TupleElement base_;
  Interval interval_;
  Element root_witness_;
  bool mod_tau_;
  bool truncated_ = false;
  std::deque<std::string> keys_;
  std::vector<Node> nodes_;
  std::vector<std::uint32_t> members_;
  std::unordered_map<std::string_view, std::uint32_t> index_;  // key -> member slot
};

/// The τ-orbit representative of v (minimal key) and the k with τ^k(v) = rep.
std::pair<TupleElement, std::int64_t> tau_representative(const TupleElement& v);

/// Breadth-first closure of {a} under conjugation by simples inside iv.
/// Stops early once a member with key `stop_key` is found.
OrbitSet orbit_in_interval(const TupleElement& a, const Interval& iv,
                           const OrbitOptions& opts, std::string_view stop_key = {});

/// Keeps one member (the minimal key) per τ-orbit.
OrbitSet mod_tau_reduce(const OrbitSet& set);

enum class IntervalVariant { lex, lex_prime };

struct MinimalIntervalResult {
  Interval interval;
  Element conjugator;  // base^conjugator lies in interval
  IntervalVariant variant;
};

MinimalIntervalResult lex_minimal_interval(const TupleElement& a, IntervalVariant variant);

enum class InvariantKind { lss, lsss, lsss_prime };

/// The invariant's interval and one conjugate of `a` inside it.
MinimalIntervalResult invariant_interval(const TupleElement& a, InvariantKind kind);
OrbitSet invariant_set(const TupleElement& a, InvariantKind kind, const OrbitOptions& opts);

enum class ScpOutcome { conjugate, not_conjugate, unknown };

struct ScpOptions {
  OrbitOptions orbit;
  InvariantKind kind = InvariantKind::lsss;
};

struct ScpResult {
  ScpOutcome outcome;
  std::optional<Element> witness;  // conjugate(a, *witness) == c
  std::size_t explored = 0;
};

ScpOutcome scp_decide(const TupleElement& a, const TupleElement& c, const ScpOptions& opts = {});
ScpResult scp_search(const TupleElement& a, const TupleElement& c, const ScpOptions& opts = {});

const char* to_string(ScpOutcome o);
const char* to_string(InvariantKind k);

}  // namespace garside

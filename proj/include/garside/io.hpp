#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "garside/solver.hpp"

namespace garside {

/// Parses a word: signed integers for Artin (i ↔ σ_i), "(t,s)" tokens for the
/// BKL band generators a_ts, optionally prefixed with "-" for inverses.
/// Returns signed 1-based atom indices.
std::vector<int> parse_word(const GarsideStructure& g, std::string_view text);
std::string format_word(const GarsideStructure& g, const std::vector<int>& word);

Element parse_element(const StructurePtr& g, std::string_view text);
std::string format_element(const Element& a);

/// Tuple coordinates separated by ';'.
TupleElement parse_tuple(const StructurePtr& g, std::string_view text);

/// {"inf": p, "factors": [encoded simples as hex strings]}
std::string element_to_json(const Element& a);
Element element_from_json(const StructurePtr& g, std::string_view text);

/// JSON report of an invariant set: structure, n, r, variant, interval,
/// size, truncated, mod_tau, optionally members, and a witness word.
std::string invariant_to_json(const OrbitSet& set, InvariantKind kind, const Element& witness,
                              bool with_members);

}  // namespace garside

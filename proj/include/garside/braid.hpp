#pragma once

#include <string_view>
#include <utility>
#include <vector>

#include "garside/structure.hpp"

namespace garside {

/// Artin's half-twist structure on B_N: atoms σ_1..σ_{N-1}, Δ the half twist,
/// simples = permutation braids.
StructurePtr artin_structure(int n);

/// Birman–Ko–Lee band-generator structure on B_N: atoms a_ts (N ≥ t > s ≥ 1),
/// δ the cycle i ↦ i+1 (mod N), simples = noncrossing partitions with each
/// block traversed as an increasing cycle.
StructurePtr bkl_structure(int n);

/// Selects a structure by CLI token ("artin" | "bkl").
StructurePtr make_structure(std::string_view token, int n);

/// Index of the band generator a_ts (1-based strands, t > s) in a BKL structure.
int bkl_atom_index(int t, int s);
/// Inverse of bkl_atom_index.
std::pair<int, int> bkl_atom_strands(int index);

/// Every simple element of the structure, ordered by encoding.
/// Intended for tests and small exhaustive checks only.
std::vector<Simple> enumerate_simples(const GarsideStructure& g);

}  // namespace garside

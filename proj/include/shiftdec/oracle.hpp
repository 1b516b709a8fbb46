#pragma once

#include <utility>
#include <vector>

#include "shiftdec/decomp.hpp"

namespace shiftdec {

inline constexpr Residue kOraclePrimeCap = 23;

/// Naive enumeration of every B containing the identity (1 for Product,
/// 0 for Sum) with |B| <= |S|, each paired with its maximal partner A. No
/// pruning and no code shared with the search engine: sets are 64-bit masks,
/// so p <= 61 (OutOfRange otherwise). Returns canonical pairs, sorted.
std::vector<std::pair<ElementSet, ElementSet>> brute_force_factorizations(const Field & field,
                                                                          const ElementSet & s,
                                                                          WitnessKind kind);

/// Canonical pairs of a report, sorted, for comparison with the oracle.
std::vector<std::pair<ElementSet, ElementSet>> witness_pairs(const SearchReport & report);

} // namespace shiftdec

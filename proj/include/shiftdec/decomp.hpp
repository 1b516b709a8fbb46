#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "shiftdec/element_set.hpp"
#include "shiftdec/field.hpp"

namespace shiftdec {

enum class WitnessKind { Product, Sum, RatioRep, DiffRep };

std::string_view witness_kind_name(WitnessKind kind) noexcept;

/// A verified decomposition: A o B = target for Product/Sum, A/A or A - A = target
/// for the representation kinds (B absent).
struct DecompWitness {
    Residue p = 0;
    ElementSet target;
    WitnessKind kind = WitnessKind::Product;
    ElementSet a;
    std::optional<ElementSet> b;
    bool canonical = false;

    /// Recomputes the composition and checks the size constraints.
    bool verify(const Field & field) const;
};

struct TaskDescriptor {
    std::string task;
    Residue p = 0;
    Residue subgroup_order = 0;  ///< 0 when the task has no subgroup
    std::string variant;
    std::vector<std::pair<std::string, std::int64_t>> params;
};

struct SearchReport {
    TaskDescriptor task;
    std::vector<DecompWitness> witnesses;
    bool exhaustive = true;
    std::uint64_t nodes = 0;
    std::chrono::nanoseconds elapsed{0};
    std::optional<std::size_t> clique_number;
    std::optional<bool> oracle_agrees;
};

struct SearchOptions {
    std::size_t min_size = 2;
    /// Coverage-potential pruning runs at |B| = 2, 2 + k, 2 + 2k, ...
    std::size_t potential_interval = 4;
};

/// Complete list of canonical witnesses (A, B) with A o B = S, |A|, |B| >= min_size.
///
/// Product: normalized 1 in B, canonical = lexicographically least (bA, B/b)
/// over b in B. Sum: normalized 0 in B, canonical = least (A + b, B - b).
/// A is always the maximal partner of B, i.e. the intersection of the
/// preimages of S; coverage is monotone in A, so this suffices for
/// existence at fixed B. Throws ZeroInProductTarget if 0 is in S for Product.
SearchReport find_exact_factorizations(const Field & field, const ElementSet & s, WitnessKind kind,
                                       const SearchOptions & options = {});

/// Canonical forms used by the searches (and by the oracle comparisons).
std::pair<ElementSet, ElementSet> canonical_product_pair(const Field & field, const ElementSet & a,
                                                         const ElementSet & b);
std::pair<ElementSet, ElementSet> canonical_sum_pair(const Field & field, const ElementSet & a,
                                                     const ElementSet & b);
/// Least a^{-1} A over a in A.
ElementSet canonical_ratio_set(const Field & field, const ElementSet & a);
/// Least A - a over a in A.
ElementSet canonical_difference_set(const Field & field, const ElementSet & a);

/// All maximal A (normalized 1 in A) with A/A = T, via maximal cliques of the
/// compatibility graph on {x in T : 1/x in T}. Throws ZeroInTarget.
SearchReport find_ratio_representations(const Field & field, const ElementSet & t);

/// All maximal A (normalized 0 in A) with A - A = T. Throws MissingZero if 0 is not in T.
SearchReport find_difference_representations(const Field & field, const ElementSet & t);

struct DifferenceClique {
    std::size_t size = 0;
    ElementSet clique;  ///< a maximum clique containing 0
    std::uint64_t nodes = 0;
};

/// Largest A with A - A in G u {0}.
DifferenceClique max_difference_clique(const Field & field, const MultSubgroup & g);

} // namespace shiftdec

#pragma once

#include <span>
#include <vector>

#include "shiftdec/field.hpp"
#include "shiftdec/poly.hpp"

namespace shiftdec {

/// Multisets are sorted residue sequences with repetition.
using Multiset = std::vector<Residue>;

/// p_1..p_K of a multiset.
std::vector<Residue> power_sums(const Field & field, std::span<const Residue> xs, std::size_t k);

/// e_0..e_K by expanding prod (1 + x_i t); e_k = 0 for k > |X|.
std::vector<Residue> elementary_from_roots(const Field & field, std::span<const Residue> xs,
                                           std::size_t k);

/// e_1..e_K from p_1..p_K by Newton's recursion
/// k e_k = sum_{i=1..k} (-1)^{i-1} e_{k-i} p_i. Throws NonInvertibleIndex if K >= p.
std::vector<Residue> elementary_from_power_sums(const Field & field, std::span<const Residue> p);

/// x^K - e_1 x^{K-1} + ... + (-1)^K e_K from p_1..p_K.
DensePoly reconstruct_polynomial_from_power_sums(const Field & field, std::span<const Residue> p);

/// Roots in F_p with multiplicity, ascending. Throws ZeroPolynomial.
Multiset roots_over_field(const Field & field, const DensePoly & f);

/// Power sums and elementary symmetric values of one multiset, cached to order K.
class SymData {
public:
    SymData(const Field & field, Multiset xs, std::size_t k);

    const Multiset & elements() const noexcept { return xs_; }
    /// p_1..p_K (index 0 holds p_1).
    const std::vector<Residue> & power_sums() const noexcept { return p_; }
    /// e_0..e_K.
    const std::vector<Residue> & elementary() const noexcept { return e_; }

    /// Newton's relation at every cached order.
    bool newton_consistent(const Field & field) const;

private:
    Multiset xs_;
    std::vector<Residue> p_;
    std::vector<Residue> e_;
};

} // namespace shiftdec

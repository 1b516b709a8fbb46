#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace shiftdec {

using Complex = std::complex<double>;

/// Absolute tolerance for unit-magnitude quantities.
inline constexpr double kUnityTolerance = 1e-9;

/// The m-th roots of unity zeta^k = exp(2 pi i k / m) and x_k = zeta^k - 1.
class UnityGroup {
public:
    explicit UnityGroup(std::size_t m);

    std::size_t order() const noexcept { return elements_.size(); }
    const std::vector<Complex> & elements() const noexcept { return elements_; }
    const Complex & element(std::size_t k) const { return elements_.at(k % elements_.size()); }
    /// x_k for 1 <= k <= m - 1.
    Complex x(std::size_t k) const;
    /// Index k with |z - zeta^k| < tol, if any.
    std::optional<std::size_t> index_of(Complex z, double tol = kUnityTolerance) const;

private:
    std::vector<Complex> elements_;
};

struct XkQuadruple {
    std::size_t k, l, t, r;
};

struct XkClaimReport {
    std::size_t m = 0;
    std::uint64_t pairs_compared = 0;
    /// Quadruples where the float comparison and the exact criterion disagree.
    std::vector<XkQuadruple> disagreements;
    /// Quadruples with x_k x_l = x_t x_r but {k, l} != {t, r}.
    std::vector<XkQuadruple> violations;

    bool passed() const noexcept { return disagreements.empty() && violations.empty(); }
};

/// Exact criterion: x_k x_l = x_t x_r iff k + l = t + r (mod 2m) and |k - l| = |t - r|.
bool xk_products_equal_exact(std::size_t m, std::size_t k, std::size_t l, std::size_t t, std::size_t r);

/// Checks that x_k x_l = x_t x_r forces {k, l} = {t, r}, over all quadruples in
/// [1, m-1]^4, both numerically and by the exact criterion. m >= 3.
XkClaimReport check_xk_product_claim(std::size_t m);

/// A point of the extended plane; infinity is a tag, not a large float.
struct ExtComplex {
    Complex z{0.0, 0.0};
    bool infinite = false;

    static ExtComplex infinity() noexcept { return {{0.0, 0.0}, true}; }
    ExtComplex() = default;
    ExtComplex(Complex v) noexcept : z(v) {}
    ExtComplex(double re) noexcept : z(re, 0.0) {}
    ExtComplex(Complex v, bool inf) noexcept : z(v), infinite(inf) {}

    bool near(const ExtComplex & other, double tol = kUnityTolerance) const noexcept;
};

/// z -> (a z + b) / (c z + d).
class MobiusMap {
public:
    MobiusMap(Complex a, Complex b, Complex c, Complex d);

    static MobiusMap identity() { return {1.0, 0.0, 0.0, 1.0}; }
    static MobiusMap inversion() { return {0.0, 1.0, 1.0, 0.0}; }
    static MobiusMap rotation(Complex zeta) { return {zeta, 0.0, 0.0, 1.0}; }
    static MobiusMap reflection(Complex zeta) { return {0.0, zeta, 1.0, 0.0}; }

    Complex a() const noexcept { return a_; }
    Complex b() const noexcept { return b_; }
    Complex c() const noexcept { return c_; }
    Complex d() const noexcept { return d_; }
    Complex det() const noexcept { return a_ * d_ - b_ * c_; }

    ExtComplex operator()(const ExtComplex & z) const noexcept;
    MobiusMap inverse() const;
    /// (*this) o other.
    MobiusMap compose(const MobiusMap & other) const;

private:
    Complex a_, b_, c_, d_;
};

/// The unique map with z_i -> w_i, built from cross ratios. Throws DegenerateInput
/// if the z's or the w's are not pairwise distinct.
MobiusMap mobius_fit(const std::array<ExtComplex, 3> & z, const std::array<ExtComplex, 3> & w);

/// T(z) = (z - mu) / xi.
MobiusMap affine_normalizer(Complex xi, Complex mu);

/// psi = T o iota o T^{-1}, applied one map at a time so that psi(inf) = T(0)
/// = -mu/xi comes out exactly.
ExtComplex conjugated_inversion(Complex xi, Complex mu, const ExtComplex & z);

struct DihedralSurvivor {
    std::vector<std::size_t> permutation;  ///< zeta^k -> zeta^{permutation[k]}
    bool reflection = false;
    std::size_t shift = 0;                 ///< z -> zeta^shift z, or z -> zeta^shift / z
};

struct CircleMapReport {
    std::size_t m = 0;
    std::uint64_t fits = 0;
    std::vector<DihedralSurvivor> survivors;  ///< sorted by permutation
    /// Survivors that are neither a rotation nor a reflection.
    std::size_t non_dihedral = 0;

    bool passed() const noexcept { return non_dihedral == 0 && survivors.size() == 2 * m; }
};

/// Fits a map to every pair of ordered triples of distinct roots of unity and
/// keeps those preserving S^1 and permuting G. 3 <= m <= 12.
CircleMapReport classify_circle_preserving_maps(std::size_t m);

struct TwoByTwoWitness {
    std::size_t k11, k12, k21, k22;  ///< a_i b_j = x_{k_ij}
    Complex a1, a2, b1, b2;
};

/// Exhaustive search for A = {a1, a2}, B = {b1, b2} with AB = (G - 1) \ {0}. m >= 2.
std::vector<TwoByTwoWitness> search_2x2_decomposition(std::size_t m);

} // namespace shiftdec

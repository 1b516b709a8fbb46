#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "shiftdec/element_set.hpp"

namespace shiftdec {

/// Dense univariate polynomial over F_p, coefficients stored low degree first.
/// The coefficient vector is kept trimmed, so the zero polynomial has none.
class DensePoly {
public:
    explicit DensePoly(Residue modulus) : p_(modulus) {}
    DensePoly(Residue modulus, std::vector<Residue> coeffs);

    static DensePoly constant(Residue modulus, Residue c);
    static DensePoly monomial(Residue modulus, Residue c, std::size_t degree);
    /// x - root
    static DensePoly linear_factor(Residue modulus, Residue root);

    Residue modulus() const noexcept { return p_; }
    bool is_zero() const noexcept { return c_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    Residue coeff(std::size_t k) const noexcept { return k < c_.size() ? c_[k] : 0; }
    Residue leading() const noexcept { return c_.empty() ? 0 : c_.back(); }
    std::span<const Residue> coefficients() const noexcept { return c_; }

    Residue eval(Residue x) const;
    DensePoly derivative() const;
    /// k-th formal derivative.
    DensePoly derivative(std::size_t k) const;
    DensePoly pow(std::size_t e) const;
    DensePoly scaled(Residue c) const;

    /// Division by (x - b): returns (quotient, remainder) with remainder = f(b).
    std::pair<DensePoly, Residue> divide_linear(Residue b) const;

    DensePoly & operator+=(const DensePoly & other);
    DensePoly & operator-=(const DensePoly & other);
    friend DensePoly operator+(DensePoly a, const DensePoly & b) { return a += b; }
    friend DensePoly operator-(DensePoly a, const DensePoly & b) { return a -= b; }
    friend DensePoly operator*(const DensePoly & a, const DensePoly & b);

    friend bool operator==(const DensePoly & a, const DensePoly & b) noexcept {
        return a.p_ == b.p_ && a.c_ == b.c_;
    }

    std::string to_string() const;

private:
    void trim();
    void require_same_modulus(const DensePoly & other) const;

    Residue p_;
    std::vector<Residue> c_;
};

/// Largest k with (x - b)^k dividing f, by repeated exact synthetic division.
/// Throws ZeroPolynomial for f == 0.
std::size_t root_multiplicity(const DensePoly & f, Residue b);

} // namespace shiftdec

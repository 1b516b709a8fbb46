#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "shiftdec/element_set.hpp"
#include "shiftdec/field.hpp"
#include "shiftdec/poly.hpp"

namespace shiftdec {

/// Coefficients c_1..c_n with sum c_i = 1 and sum c_i a_i^j = 0 for 1 <= j < n.
struct CoeffSolution {
    std::vector<Residue> a;
    std::vector<Residue> c;
};

/// Solves the transposed Vandermonde system by elimination and by the
/// closed-form inverse, and throws InternalMismatch if the two disagree.
CoeffSolution solve_coefficients(const Field & field, const ElementSet & a);

std::vector<Residue> solve_coefficients_elimination(const Field & field, std::span<const Residue> a);
std::vector<Residue> solve_coefficients_closed_form(const Field & field, std::span<const Residue> a);

bool satisfies_coefficient_system(const Field & field, const CoeffSolution & sol);

/// C(n, k) mod p for arbitrary n via Lucas' theorem.
Residue binomial_lucas(const Field & field, std::uint64_t n, std::uint64_t k);

enum class BinomialFallback { Lucas, Disabled };

/// f(x) = -lambda^{n-1} + sum_i c_i (a_i x + lambda)^{n-1+|G|}.
///
/// Throws DegreeOverflow if n-1+|G| >= p with the fallback disabled, and
/// InternalMismatch if a coefficient of x^1..x^{n-1} fails to vanish.
DensePoly build_auxiliary_polynomial(const Field & field, const CoeffSolution & sol, Residue lambda,
                                     Residue g_order,
                                     BinomialFallback fallback = BinomialFallback::Lucas);
DensePoly build_auxiliary_polynomial(const Field & field, const ElementSet & a, Residue lambda,
                                     Residue g_order,
                                     BinomialFallback fallback = BinomialFallback::Lucas);

struct RootCheck {
    Residue b;
    std::size_t multiplicity;
    std::size_t required;
    bool holds() const noexcept { return multiplicity >= required; }
};

struct AuxAudit {
    ElementSet a;
    ElementSet b;
    Residue lambda = 0;
    Residue g_order = 0;
    bool lambda_in_g = false;
    /// AB + lambda avoids 0, i.e. lies in G.
    bool strict = false;

    std::size_t n = 0;
    std::size_t m = 0;
    std::size_t r = 0;

    CoeffSolution coeffs;
    DensePoly f{0};
    /// sum c_i a_i^{n-1+|G|}
    Residue leading_constant = 0;

    /// f == 0 contradicts the nonvanishing claim; reported, never assumed away.
    bool f_is_zero = false;

    std::vector<RootCheck> roots;
    bool multiplicities_hold = false;

    std::size_t degree_lower = 0;  ///< mn - r
    std::size_t degree_upper = 0;  ///< n - 1 + |G|
    bool degree_bounds_hold = false;

    bool equality_basic = false;                   ///< mn - r == n - 1 + |G|
    std::optional<bool> factorization_basic;       ///< set when equality_basic

    std::optional<bool> zero_root_holds;           ///< lambda in G, strict
    std::optional<bool> bound_strong_holds;        ///< (m+1)n <= |G| + n - 1
    bool equality_strong = false;
    std::optional<bool> factorization_strong;      ///< set when equality_strong

    bool lemma_bound_holds = false;                ///< nm <= |G| + r + n - 1
    std::optional<bool> lemma_strong_bound_holds;  ///< lambda in G: nm <= |G| + r - 1

    bool all_hold() const noexcept;
    /// Throws BoundViolation naming the first failed check.
    void enforce() const;
};

/// Throws HypothesisViolated unless AB + lambda lies in G u {0}.
AuxAudit audit_instance(const Field & field, const ElementSet & a, const ElementSet & b,
                        Residue lambda, const MultSubgroup & g);

struct BoundCheck {
    std::size_t lhs;
    std::size_t rhs;
    bool holds() const noexcept { return lhs <= rhs; }
};

/// |A||B| <= |G| + |(-A) n B| under A + B in G u {0} (HypothesisViolated otherwise).
BoundCheck check_hp_additive_bound(const Field & field, const ElementSet & a, const ElementSet & b,
                                   const MultSubgroup & g);

/// sum_i c_i a_i^n prod_{j != i} (1 - a_j x) == (-1)^{n-1} prod a_i in F_p[x].
bool check_gf_identity(const Field & field, const ElementSet & a);

struct DerivativeRatioCheck {
    Residue f_n = 0;          ///< f^{(n)}(b)
    Residue f_n1 = 0;         ///< f^{(n+1)}(b)
    Residue expected_n = 0;   ///< n! h(b)
    Residue expected_n1 = 0;  ///< (n+1)! h'(b)
    Residue ratio = 0;        ///< h'(b) / h(b)
    Residue derived_ratio = 0;
    bool holds() const noexcept {
        return f_n == expected_n && f_n1 == expected_n1 && ratio == derived_ratio;
    }
};

/// For f = (x - b)^n h checks f^{(n)}(b) = n! h(b), f^{(n+1)}(b) = (n+1)! h'(b)
/// and h'(b)/h(b) = f^{(n+1)}(b) / ((n+1) f^{(n)}(b)).
/// Throws RootOfH if h(b) == 0 and FactorialOverflow if n + 1 >= p.
DerivativeRatioCheck check_derivative_ratio(const Field & field, const DensePoly & h, Residue b,
                                            std::size_t n);

/// H(b) = 1/b + sum_{b' != b} 1/(b - b').
Residue harmonic_value(const Field & field, const ElementSet & b_set, Residue b);

struct HarmonicSumCheck {
    Residue sum;
    Residue expected;  ///< m(m+1)/2 mod p
    bool holds() const noexcept { return sum == expected; }
};

HarmonicSumCheck harmonic_sum_identity(const Field & field, const ElementSet & b_set);

struct AuditInput {
    MultSubgroup group;
    ElementSet a;
    ElementSet b;
    Residue lambda;
};

/// Random instances with AB + lambda in G u {0}, over odd primes 5 <= p <= pmax.
/// Roughly half use lambda in G; a third take B maximal, which hits the
/// equality cases.
std::vector<AuditInput> sample_audit_inputs(std::uint64_t seed, std::size_t count, Residue pmax);

} // namespace shiftdec

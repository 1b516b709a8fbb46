#include "shiftdec/stepanov.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "shiftdec/error.hpp"
#include "shiftdec/setops.hpp"

namespace shiftdec {

std::vector<Residue> solve_coefficients_elimination(const Field & field, std::span<const Residue> a)
{
    const std::size_t n = a.size();
    // Row j: a_1^j ... a_n^j | [j == 0]
    std::vector<std::vector<Residue>> m(n, std::vector<Residue>(n + 1, 0));
    for (std::size_t i = 0; i < n; ++i) {
        Residue power = 1;
        for (std::size_t j = 0; j < n; ++j) {
            m[j][i] = power;
            power = field.mul(power, a[i]);
        }
    }
    if (n > 0)
        m[0][n] = 1;

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m[pivot][col] == 0)
            ++pivot;
        if (pivot == n)
            throw Error(Errc::InternalMismatch, "singular Vandermonde system (repeated element?)");
        std::swap(m[col], m[pivot]);
        const Residue scale = field.inv(m[col][col]);
        for (auto & v : m[col])
            v = field.mul(v, scale);
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || m[row][col] == 0)
                continue;
            const Residue factor = m[row][col];
            for (std::size_t k = col; k <= n; ++k)
                m[row][k] = field.sub(m[row][k], field.mul(factor, m[col][k]));
        }
    }
    std::vector<Residue> c(n);
    for (std::size_t i = 0; i < n; ++i)
        c[i] = m[i][n];
    return c;
}

std::vector<Residue> solve_coefficients_closed_form(const Field & field, std::span<const Residue> a)
{
    const std::size_t n = a.size();
    Residue prod = 1;
    for (auto v : a)
        prod = field.mul(prod, v);
    const Residue numerator = (n - 1) % 2 == 0 ? prod : field.neg(prod);
    std::vector<Residue> c(n);
    for (std::size_t i = 0; i < n; ++i) {
        Residue denom = a[i];
        for (std::size_t j = 0; j < n; ++j)
            if (j != i)
                denom = field.mul(denom, field.sub(a[i], a[j]));
        c[i] = field.div(numerator, denom);
    }
    return c;
}

bool satisfies_coefficient_system(const Field & field, const CoeffSolution & sol)
{
    const std::size_t n = sol.a.size();
    for (std::size_t j = 0; j < n; ++j) {
        Residue sum = 0;
        for (std::size_t i = 0; i < n; ++i)
            sum = field.add(sum, field.mul(sol.c[i], field.pow(sol.a[i], j)));
        if (sum != (j == 0 ? 1u : 0u))
            return false;
    }
    return true;
}

CoeffSolution solve_coefficients(const Field & field, const ElementSet & a)
{
    if (a.contains(0))
        throw Error(Errc::ZeroElement, "coefficient system needs A in F_p^*");
    if (a.empty())
        throw Error(Errc::InternalMismatch, "coefficient system needs a nonempty A");
    CoeffSolution sol;
    sol.a = a.elements();
    sol.c = solve_coefficients_elimination(field, sol.a);
    if (sol.c != solve_coefficients_closed_form(field, sol.a))
        throw Error(Errc::InternalMismatch,
                    "elimination and closed form disagree for A = " + a.to_string());
    return sol;
}

Residue binomial_lucas(const Field & field, std::uint64_t n, std::uint64_t k)
{
    const Residue p = field.p();
    Residue result = 1;
    while (n || k) {
        const auto ni = static_cast<Residue>(n % p);
        const auto ki = static_cast<Residue>(k % p);
        if (ki > ni)
            return 0;
        result = field.mul(result, field.binomial(ni, ki));
        n /= p;
        k /= p;
    }
    return result;
}

DensePoly build_auxiliary_polynomial(const Field & field, const CoeffSolution & sol, Residue lambda,
                                     Residue g_order, BinomialFallback fallback)
{
    if (lambda % field.p() == 0)
        throw Error(Errc::ZeroParameter, "lambda must be nonzero");
    const std::size_t n = sol.a.size();
    const std::uint64_t big_n = n - 1 + std::uint64_t{g_order};
    const bool small = big_n < field.p();
    if (!small && fallback == BinomialFallback::Disabled)
        throw Error(Errc::DegreeOverflow, "n - 1 + |G| = " + std::to_string(big_n) +
                                              " >= p = " + std::to_string(field.p()));

    std::vector<Residue> powers(sol.a.size(), 1);  // a_i^k, advanced with k
    std::vector<Residue> coeffs(big_n + 1, 0);
    for (std::uint64_t k = 0; k <= big_n; ++k) {
        Residue moment = 0;
        for (std::size_t i = 0; i < n; ++i) {
            moment = field.add(moment, field.mul(sol.c[i], powers[i]));
            powers[i] = field.mul(powers[i], sol.a[i]);
        }
        const Residue binom = small ? field.binomial(static_cast<Residue>(big_n), static_cast<Residue>(k))
                                    : binomial_lucas(field, big_n, k);
        coeffs[k] = field.mul(field.mul(binom, field.pow(lambda, big_n - k)), moment);
    }
    coeffs[0] = field.sub(coeffs[0], field.pow(lambda, n - 1));
    DensePoly f(field.p(), std::move(coeffs));
    for (std::size_t k = 1; k < n; ++k)
        if (f.coeff(k) != 0)
            throw Error(Errc::InternalMismatch,
                        "coefficient of x^" + std::to_string(k) + " in f does not vanish");
    return f;
}

DensePoly build_auxiliary_polynomial(const Field & field, const ElementSet & a, Residue lambda,
                                     Residue g_order, BinomialFallback fallback)
{
    return build_auxiliary_polynomial(field, solve_coefficients(field, a), lambda, g_order, fallback);
}

bool AuxAudit::all_hold() const noexcept
{
    if (f_is_zero || !multiplicities_hold || !degree_bounds_hold || !lemma_bound_holds)
        return false;
    if (factorization_basic && !*factorization_basic)
        return false;
    for (auto * flag : {&zero_root_holds, &bound_strong_holds, &factorization_strong,
                        &lemma_strong_bound_holds})
        if (flag->has_value() && !**flag)
            return false;
    return true;
}

void AuxAudit::enforce() const
{
    auto fail = [&](const char * what) {
        std::ostringstream msg;
        msg << what << " for A = " << a.to_string() << ", B = " << b.to_string()
            << ", lambda = " << lambda << ", |G| = " << g_order << " over F_" << a.modulus();
        throw Error(Errc::BoundViolation, msg.str());
    };
    if (f_is_zero) fail("auxiliary polynomial vanishes identically");
    if (!multiplicities_hold) fail("root multiplicity below the required order");
    if (!degree_bounds_hold) fail("degree outside [mn - r, n - 1 + |G|]");
    if (factorization_basic && !*factorization_basic) fail("factorization at equality (basic) fails");
    if (zero_root_holds && !*zero_root_holds) fail("0 is not a root of multiplicity >= n");
    if (bound_strong_holds && !*bound_strong_holds) fail("(m+1)n <= |G| + n - 1 fails");
    if (factorization_strong && !*factorization_strong) fail("factorization at equality (strong) fails");
    if (!lemma_bound_holds) fail("|A||B| <= |G| + r + |A| - 1 fails");
    if (lemma_strong_bound_holds && !*lemma_strong_bound_holds) fail("|A||B| <= |G| + r - 1 fails");
}

AuxAudit audit_instance(const Field & field, const ElementSet & a, const ElementSet & b,
                        Residue lambda, const MultSubgroup & g)
{
    if (a.contains(0) || b.contains(0))
        throw Error(Errc::ZeroElement, "A and B must lie in F_p^*");
    if (a.empty() || b.empty())
        throw Error(Errc::HypothesisViolated, "A and B must be nonempty");
    lambda %= field.p();
    if (lambda == 0)
        throw Error(Errc::ZeroParameter, "lambda must be nonzero");

    AuxAudit out;
    out.a = a;
    out.b = b;
    out.lambda = lambda;
    out.g_order = g.order();
    out.lambda_in_g = g.contains(lambda);

    const ElementSet shifted =
        affine_image(field, compose_sets(field, a, b, Composition::Product), 1, lambda, DropZero::No);
    ElementSet allowed = g.elements();
    allowed.insert(0);
    if (!shifted.is_subset_of(allowed))
        throw Error(Errc::HypothesisViolated, "AB + lambda is not contained in G u {0}");
    out.strict = !shifted.contains(0);

    out.n = a.size();
    out.m = b.size();
    ElementSet zero_line(field.p());  // -lambda A^{-1}
    a.for_each([&](Residue x) { zero_line.insert(field.div(field.neg(lambda), x)); });
    const ElementSet hit = b & zero_line;
    out.r = hit.size();

    out.coeffs = solve_coefficients(field, a);
    out.f = build_auxiliary_polynomial(field, out.coeffs, lambda, g.order());
    out.f_is_zero = out.f.is_zero();
    out.degree_upper = out.n - 1 + g.order();
    out.degree_lower = out.m * out.n - out.r;
    for (std::size_t i = 0; i < out.n; ++i)
        out.leading_constant = field.add(out.leading_constant,
                                         field.mul(out.coeffs.c[i],
                                                   field.pow(out.coeffs.a[i], out.degree_upper)));

    const std::size_t nm = out.n * out.m;
    out.lemma_bound_holds = nm <= g.order() + out.r + out.n - 1;
    if (out.lambda_in_g)
        out.lemma_strong_bound_holds = nm + 1 <= g.order() + out.r;

    if (out.f_is_zero)
        return out;

    out.multiplicities_hold = true;
    b.for_each([&](Residue x) {
        RootCheck rc{x, root_multiplicity(out.f, x), hit.contains(x) ? out.n - 1 : out.n};
        out.multiplicities_hold = out.multiplicities_hold && rc.holds();
        out.roots.push_back(rc);
    });

    const auto deg = static_cast<std::size_t>(out.f.degree());
    out.degree_bounds_hold = out.degree_lower <= deg && deg <= out.degree_upper;

    out.equality_basic = out.degree_lower == out.degree_upper;
    if (out.equality_basic) {
        DensePoly expected = DensePoly::constant(field.p(), out.leading_constant);
        b.for_each([&](Residue x) {
            expected = expected * DensePoly::linear_factor(field.p(), x).pow(hit.contains(x) ? out.n - 1 : out.n);
        });
        out.factorization_basic = out.leading_constant != 0 && expected == out.f;
    }

    if (out.lambda_in_g && out.strict) {
        out.zero_root_holds = out.f.eval(0) == 0 && root_multiplicity(out.f, 0) >= out.n;
        const std::size_t lhs = (out.m + 1) * out.n;
        out.bound_strong_holds = lhs <= out.degree_upper;
        out.equality_strong = lhs == out.degree_upper;
        if (out.equality_strong) {
            DensePoly base = DensePoly::monomial(field.p(), 1, 1);
            b.for_each([&](Residue x) { base = base * DensePoly::linear_factor(field.p(), x); });
            const DensePoly expected = base.pow(out.n).scaled(out.leading_constant);
            out.factorization_strong = out.leading_constant != 0 && expected == out.f;
        }
    }
    return out;
}

BoundCheck check_hp_additive_bound(const Field & field, const ElementSet & a, const ElementSet & b,
                                   const MultSubgroup & g)
{
    ElementSet allowed = g.elements();
    allowed.insert(0);
    if (!compose_sets(field, a, b, Composition::Sum).is_subset_of(allowed))
        throw Error(Errc::HypothesisViolated, "A + B is not contained in G u {0}");
    const ElementSet neg_a = affine_image(field, a, field.p() - 1, 0, DropZero::No);
    return {a.size() * b.size(), g.order() + (neg_a & b).size()};
}

bool check_gf_identity(const Field & field, const ElementSet & a)
{
    const CoeffSolution sol = solve_coefficients(field, a);
    const std::size_t n = sol.a.size();
    const Residue p = field.p();
    DensePoly lhs(p);
    for (std::size_t i = 0; i < n; ++i) {
        DensePoly term = DensePoly::constant(p, field.mul(sol.c[i], field.pow(sol.a[i], n)));
        for (std::size_t j = 0; j < n; ++j)
            if (j != i)
                term = term * DensePoly(p, {1, field.neg(sol.a[j])});
        lhs += term;
    }
    Residue prod = 1;
    for (auto v : sol.a)
        prod = field.mul(prod, v);
    const DensePoly rhs = DensePoly::constant(p, (n - 1) % 2 == 0 ? prod : field.neg(prod));
    return lhs == rhs;
}

DerivativeRatioCheck check_derivative_ratio(const Field & field, const DensePoly & h, Residue b,
                                            std::size_t n)
{
    const Residue hb = h.eval(b);
    if (hb == 0)
        throw Error(Errc::RootOfH, "h(b) = 0");
    if (n + 1 >= field.p())
        throw Error(Errc::FactorialOverflow, "n + 1 must be below p");
    const DensePoly f = DensePoly::linear_factor(field.p(), b).pow(n) * h;
    const DensePoly fn = f.derivative(n);

    DerivativeRatioCheck out;
    out.f_n = fn.eval(b);
    out.f_n1 = fn.derivative().eval(b);
    out.expected_n = field.mul(field.factorial(static_cast<Residue>(n)), hb);
    out.expected_n1 = field.mul(field.factorial(static_cast<Residue>(n + 1)), h.derivative().eval(b));
    out.ratio = field.div(h.derivative().eval(b), hb);
    if (out.f_n != 0) {
        const Residue denom = field.mul(static_cast<Residue>((n + 1) % field.p()), out.f_n);
        out.derived_ratio = field.div(out.f_n1, denom);
    } else {
        out.derived_ratio = field.p();  // never equals a residue
    }
    return out;
}

Residue harmonic_value(const Field & field, const ElementSet & b_set, Residue b)
{
    Residue h = field.inv(b);
    b_set.for_each([&](Residue other) {
        if (other != b)
            h = field.add(h, field.inv(field.sub(b, other)));
    });
    return h;
}

HarmonicSumCheck harmonic_sum_identity(const Field & field, const ElementSet & b_set)
{
    if (b_set.contains(0))
        throw Error(Errc::ZeroElement, "B must lie in F_p^*");
    Residue sum = 0;
    b_set.for_each([&](Residue b) { sum = field.add(sum, field.mul(b, harmonic_value(field, b_set, b))); });
    const std::uint64_t m = b_set.size();
    return {sum, static_cast<Residue>(m * (m + 1) / 2 % field.p())};
}

std::vector<AuditInput> sample_audit_inputs(std::uint64_t seed, std::size_t count, Residue pmax)
{
    const auto primes = odd_primes_between(5, pmax);
    if (primes.empty())
        throw Error(Errc::OutOfRange, "no odd prime >= 5 below pmax");
    std::vector<Field> fields;
    for (auto p : primes)
        fields.push_back(Field::make(p));

    std::mt19937_64 rng(seed);
    auto uniform = [&](std::size_t lo, std::size_t hi) {
        return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
    };

    std::vector<AuditInput> out;
    out.reserve(count);
    while (out.size() < count) {
        const Field & field = fields[uniform(0, fields.size() - 1)];
        const Residue p = field.p();
        auto groups = enumerate_proper_subgroups(field);
        MultSubgroup g = groups[uniform(0, groups.size() - 1)];
        ElementSet allowed = g.elements();
        allowed.insert(0);

        Residue lambda;
        if (uniform(0, 1) == 0) {
            auto elems = g.elements().elements();
            lambda = elems[uniform(0, elems.size() - 1)];
        } else {
            lambda = static_cast<Residue>(uniform(1, p - 1));
        }

        // Admissible partners of a fixed set X: {y != 0 : Xy + lambda in G u {0}}.
        auto partners = [&](const ElementSet & x) {
            ElementSet ys(p);
            for (Residue y = 1; y < p; ++y) {
                bool ok = true;
                x.for_each([&](Residue v) { ok = ok && allowed.contains(field.add(field.mul(v, y), lambda)); });
                if (ok)
                    ys.insert(y);
            }
            return ys;
        };
        auto random_subset = [&](const ElementSet & from, std::size_t k) {
            auto elems = from.elements();
            std::shuffle(elems.begin(), elems.end(), rng);
            elems.resize(std::min(k, elems.size()));
            return ElementSet(p, std::span<const Residue>(elems));
        };

        // Grow one side greedily so that the partner set stays nonempty.
        const bool grow_a = uniform(0, 1) == 0;
        const std::size_t target = uniform(1, 4);
        ElementSet first(p);
        first.insert(static_cast<Residue>(uniform(1, p - 1)));
        ElementSet other = partners(first);
        for (std::size_t tries = 0; first.size() < target && tries < 32; ++tries) {
            const Residue cand = static_cast<Residue>(uniform(1, p - 1));
            if (first.contains(cand))
                continue;
            ElementSet grown = first;
            grown.insert(cand);
            ElementSet next = partners(grown);
            if (!next.empty()) {
                first = std::move(grown);
                other = std::move(next);
            }
        }
        if (other.empty())
            continue;
        if (uniform(0, 2) != 0)
            other = random_subset(other, uniform(1, other.size()));

        ElementSet a = grow_a ? first : other;
        ElementSet b = grow_a ? other : first;
        out.push_back(AuditInput{std::move(g), std::move(a), std::move(b), lambda});
    }
    return out;
}

} // namespace shiftdec

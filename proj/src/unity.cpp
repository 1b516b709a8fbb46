#include "shiftdec/unity.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include "shiftdec/error.hpp"

namespace shiftdec {

UnityGroup::UnityGroup(std::size_t m)
{
    if (m == 0)
        throw Error(Errc::OutOfRange, "group order must be positive");
    elements_.reserve(m);
    elements_.emplace_back(1.0, 0.0);
    for (std::size_t k = 1; k < m; ++k)
        elements_.push_back(std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(m)));
}

Complex UnityGroup::x(std::size_t k) const
{
    if (k == 0 || k >= order())
        throw Error(Errc::OutOfRange, "x_k needs 1 <= k <= m - 1");
    return elements_[k] - 1.0;
}

std::optional<std::size_t> UnityGroup::index_of(Complex z, double tol) const
{
    const double m = static_cast<double>(order());
    double turns = std::arg(z) / (2.0 * std::numbers::pi) * m;
    auto k = static_cast<long long>(std::llround(turns));
    k = ((k % static_cast<long long>(order())) + static_cast<long long>(order())) % static_cast<long long>(order());
    if (std::abs(z - elements_[static_cast<std::size_t>(k)]) < tol)
        return static_cast<std::size_t>(k);
    return std::nullopt;
}

bool xk_products_equal_exact(std::size_t m, std::size_t k, std::size_t l, std::size_t t, std::size_t r)
{
    // x_k = 2i sin(pi k / m) e^{i pi k / m}; the sines are positive on [1, m-1],
    // so equality splits into the phase and the product of sines.
    const std::size_t two_m = 2 * m;
    const bool phase = (k + l) % two_m == (t + r) % two_m;
    const std::size_t dkl = k > l ? k - l : l - k;
    const std::size_t dtr = t > r ? t - r : r - t;
    return phase && dkl == dtr;
}

XkClaimReport check_xk_product_claim(std::size_t m)
{
    if (m < 3)
        throw Error(Errc::OutOfRange, "check_xk_product_claim needs m >= 3");
    const UnityGroup g(m);
    XkClaimReport report;
    report.m = m;

    // Products are symmetric in each pair, so unordered pairs cover all quadruples.
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    std::vector<Complex> products;
    for (std::size_t k = 1; k < m; ++k)
        for (std::size_t l = k; l < m; ++l) {
            pairs.emplace_back(k, l);
            products.push_back(g.x(k) * g.x(l));
        }

    for (std::size_t i = 0; i < pairs.size(); ++i)
        for (std::size_t j = 0; j < pairs.size(); ++j) {
            const auto [k, l] = pairs[i];
            const auto [t, r] = pairs[j];
            ++report.pairs_compared;
            const bool numeric = std::abs(products[i] - products[j]) < kUnityTolerance;
            const bool exact = xk_products_equal_exact(m, k, l, t, r);
            if (numeric != exact)
                report.disagreements.push_back({k, l, t, r});
            if ((numeric || exact) && i != j)
                report.violations.push_back({k, l, t, r});
        }
    return report;
}

bool ExtComplex::near(const ExtComplex & other, double tol) const noexcept
{
    if (infinite || other.infinite)
        return infinite == other.infinite;
    return std::abs(z - other.z) < tol;
}

MobiusMap::MobiusMap(Complex a, Complex b, Complex c, Complex d) : a_(a), b_(b), c_(c), d_(d)
{
    const double scale = std::max({std::abs(a), std::abs(b), std::abs(c), std::abs(d)});
    if (scale == 0.0 || std::abs(det()) <= 1e-12 * scale * scale)
        throw Error(Errc::DegenerateInput, "Mobius map with vanishing determinant");
}

ExtComplex MobiusMap::operator()(const ExtComplex & z) const noexcept
{
    if (z.infinite) {
        if (c_ == Complex{})
            return ExtComplex::infinity();
        return a_ / c_;
    }
    const Complex den = c_ * z.z + d_;
    if (den == Complex{})
        return ExtComplex::infinity();
    return (a_ * z.z + b_) / den;
}

MobiusMap MobiusMap::inverse() const
{
    return {d_, -b_, -c_, a_};
}

MobiusMap MobiusMap::compose(const MobiusMap & o) const
{
    return {a_ * o.a_ + b_ * o.c_, a_ * o.b_ + b_ * o.d_, c_ * o.a_ + d_ * o.c_, c_ * o.b_ + d_ * o.d_};
}

namespace {

void require_distinct(const std::array<ExtComplex, 3> & pts)
{
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i + 1; j < 3; ++j)
            if (pts[i].near(pts[j], 1e-12))
                throw Error(Errc::DegenerateInput, "mobius_fit needs three distinct points");
}

/// The map sending (z1, z2, z3) to (0, 1, inf).
MobiusMap to_standard(const std::array<ExtComplex, 3> & p)
{
    const Complex z1 = p[0].z, z2 = p[1].z, z3 = p[2].z;
    if (p[0].infinite)
        return {0.0, z2 - z3, 1.0, -z3};
    if (p[1].infinite)
        return {1.0, -z1, 1.0, -z3};
    if (p[2].infinite)
        return {1.0, -z1, 0.0, z2 - z1};
    return {z2 - z3, -z1 * (z2 - z3), z2 - z1, -z3 * (z2 - z1)};
}

MobiusMap normalized(const MobiusMap & f)
{
    const Complex s = std::sqrt(f.det());
    return {f.a() / s, f.b() / s, f.c() / s, f.d() / s};
}

} // namespace

MobiusMap mobius_fit(const std::array<ExtComplex, 3> & z, const std::array<ExtComplex, 3> & w)
{
    require_distinct(z);
    require_distinct(w);
    return normalized(to_standard(w).inverse().compose(to_standard(z)));
}

MobiusMap affine_normalizer(Complex xi, Complex mu)
{
    if (xi == Complex{})
        throw Error(Errc::DegenerateInput, "affine normalizer needs xi != 0");
    return {1.0 / xi, -mu / xi, 0.0, 1.0};
}

ExtComplex conjugated_inversion(Complex xi, Complex mu, const ExtComplex & z)
{
    if (xi == Complex{})
        throw Error(Errc::DegenerateInput, "affine normalizer needs xi != 0");
    // T^{-1}(z) = xi z + mu
    const ExtComplex u = z.infinite ? ExtComplex::infinity() : ExtComplex(xi * z.z + mu);
    // iota(z) = 1/z
    ExtComplex v;
    if (u.infinite)
        v = Complex{};
    else if (u.z == Complex{})
        v = ExtComplex::infinity();
    else
        v = 1.0 / u.z;
    // T(z) = (z - mu) / xi
    if (v.infinite)
        return ExtComplex::infinity();
    return (v.z - mu) / xi;
}

CircleMapReport classify_circle_preserving_maps(std::size_t m)
{
    if (m < 3 || m > 12)
        throw Error(Errc::OutOfRange, "classify_circle_preserving_maps needs 3 <= m <= 12");
    const UnityGroup g(m);
    CircleMapReport report;
    report.m = m;

    std::vector<std::array<std::size_t, 3>> triples;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t k = 0; k < m; ++k)
                if (i != j && j != k && i != k)
                    triples.push_back({i, j, k});

    std::vector<ExtComplex> samples;
    for (std::size_t s = 0; s < 4 * m; ++s)
        samples.emplace_back(std::polar(1.0, 2.0 * std::numbers::pi * (static_cast<double>(s) + 0.5) /
                                                 static_cast<double>(4 * m)));

    std::set<std::vector<std::size_t>> seen;
    for (const auto & src : triples) {
        const std::array<ExtComplex, 3> z{g.element(src[0]), g.element(src[1]), g.element(src[2])};
        for (const auto & dst : triples) {
            const std::array<ExtComplex, 3> w{g.element(dst[0]), g.element(dst[1]), g.element(dst[2])};
            const MobiusMap f = mobius_fit(z, w);
            ++report.fits;

            auto on_circle = [&](const ExtComplex & p) {
                const ExtComplex q = f(p);
                return !q.infinite && std::abs(std::abs(q.z) - 1.0) < kUnityTolerance;
            };
            if (!std::all_of(samples.begin(), samples.end(), on_circle) ||
                !std::all_of(z.begin(), z.end(), on_circle))
                continue;

            std::vector<std::size_t> perm(m);
            std::vector<bool> hit(m, false);
            bool permutes = true;
            for (std::size_t k = 0; k < m && permutes; ++k) {
                const ExtComplex q = f(g.element(k));
                const auto idx = q.infinite ? std::nullopt : g.index_of(q.z);
                permutes = idx && !hit[*idx];
                if (permutes) {
                    perm[k] = *idx;
                    hit[*idx] = true;
                }
            }
            if (!permutes || !seen.insert(perm).second)
                continue;

            DihedralSurvivor s;
            s.permutation = perm;
            const std::size_t shift = perm[0];
            bool rotation = true, reflection = true;
            for (std::size_t k = 0; k < m; ++k) {
                const ExtComplex q = f(g.element(k));
                rotation = rotation && perm[k] == (shift + k) % m &&
                           q.near(MobiusMap::rotation(g.element(shift))(g.element(k)));
                reflection = reflection && perm[k] == (shift + m - k) % m &&
                             q.near(MobiusMap::reflection(g.element(shift))(g.element(k)));
            }
            if (!rotation && !reflection)
                ++report.non_dihedral;
            s.reflection = !rotation && reflection;
            s.shift = shift;
            report.survivors.push_back(std::move(s));
        }
    }
    std::sort(report.survivors.begin(), report.survivors.end(),
              [](const auto & x, const auto & y) { return x.permutation < y.permutation; });
    return report;
}

std::vector<TwoByTwoWitness> search_2x2_decomposition(std::size_t m)
{
    if (m < 2)
        throw Error(Errc::OutOfRange, "search_2x2_decomposition needs m >= 2");
    std::vector<TwoByTwoWitness> found;
    if (m == 2)
        return found;  // (G - 1) \ {0} = {-2} cannot be a product of two 2-sets
    const UnityGroup g(m);
    for (std::size_t k11 = 1; k11 < m; ++k11)
        for (std::size_t k12 = 1; k12 < m; ++k12) {
            if (k12 == k11)
                continue;  // b1 != b2
            for (std::size_t k21 = 1; k21 < m; ++k21) {
                if (k21 == k11)
                    continue;  // a1 != a2
                for (std::size_t k22 = 1; k22 < m; ++k22) {
                    // a1 b1 a2 b2 = a1 b2 a2 b1
                    if (std::abs(g.x(k11) * g.x(k22) - g.x(k12) * g.x(k21)) >= kUnityTolerance)
                        continue;
                    std::vector<bool> covered(m, false);
                    covered[k11] = covered[k12] = covered[k21] = covered[k22] = true;
                    if (std::count(covered.begin() + 1, covered.end(), true) != static_cast<long>(m - 1))
                        continue;
                    const Complex a1 = 1.0;
                    const Complex b1 = g.x(k11), b2 = g.x(k12);
                    const Complex a2 = g.x(k21) / b1;
                    found.push_back({k11, k12, k21, k22, a1, a2, b1, b2});
                }
            }
        }
    return found;
}

} // namespace shiftdec

#include "shiftdec/sympoly.hpp"

#include <algorithm>

#include "shiftdec/error.hpp"

namespace shiftdec {

std::vector<Residue> power_sums(const Field & field, std::span<const Residue> xs, std::size_t k)
{
    std::vector<Residue> out(k, 0);
    for (auto x : xs) {
        Residue power = 1;
        for (std::size_t j = 0; j < k; ++j) {
            power = field.mul(power, x % field.p());
            out[j] = field.add(out[j], power);
        }
    }
    return out;
}

std::vector<Residue> elementary_from_roots(const Field & field, std::span<const Residue> xs,
                                           std::size_t k)
{
    std::vector<Residue> e(std::max(k, xs.size()) + 1, 0);
    e[0] = 1;
    std::size_t filled = 0;
    for (auto x : xs) {
        ++filled;
        for (std::size_t j = filled; j >= 1; --j)
            e[j] = field.add(e[j], field.mul(e[j - 1], x % field.p()));
    }
    e.resize(k + 1);
    return e;
}

std::vector<Residue> elementary_from_power_sums(const Field & field, std::span<const Residue> p)
{
    const std::size_t k_max = p.size();
    if (k_max >= field.p())
        throw Error(Errc::NonInvertibleIndex,
                    "Newton recursion needs K < p (K = " + std::to_string(k_max) + ")");
    std::vector<Residue> e(k_max + 1, 0);
    e[0] = 1;
    for (std::size_t k = 1; k <= k_max; ++k) {
        Residue acc = 0;
        for (std::size_t i = 1; i <= k; ++i) {
            const Residue term = field.mul(e[k - i], p[i - 1] % field.p());
            acc = (i % 2 == 1) ? field.add(acc, term) : field.sub(acc, term);
        }
        e[k] = field.div(acc, static_cast<Residue>(k));
    }
    return {e.begin() + 1, e.end()};
}

DensePoly reconstruct_polynomial_from_power_sums(const Field & field, std::span<const Residue> p)
{
    const auto e = elementary_from_power_sums(field, p);
    const std::size_t k = p.size();
    std::vector<Residue> coeffs(k + 1, 0);
    coeffs[k] = 1;
    for (std::size_t j = 1; j <= k; ++j)
        coeffs[k - j] = (j % 2 == 0) ? e[j - 1] : field.neg(e[j - 1]);
    return DensePoly(field.p(), std::move(coeffs));
}

Multiset roots_over_field(const Field & field, const DensePoly & f)
{
    if (f.is_zero())
        throw Error(Errc::ZeroPolynomial, "roots of the zero polynomial");
    Multiset out;
    for (Residue x = 0; x < field.p(); ++x) {
        if (f.eval(x) != 0)
            continue;
        const std::size_t mult = root_multiplicity(f, x);
        out.insert(out.end(), mult, x);
    }
    return out;
}

SymData::SymData(const Field & field, Multiset xs, std::size_t k) : xs_(std::move(xs))
{
    for (auto & x : xs_)
        x %= field.p();
    std::sort(xs_.begin(), xs_.end());
    p_ = shiftdec::power_sums(field, xs_, k);
    e_ = elementary_from_roots(field, xs_, k);
}

bool SymData::newton_consistent(const Field & field) const
{
    for (std::size_t k = 1; k < e_.size(); ++k) {
        Residue acc = 0;
        for (std::size_t i = 1; i <= k; ++i) {
            const Residue term = field.mul(e_[k - i], p_[i - 1]);
            acc = (i % 2 == 1) ? field.add(acc, term) : field.sub(acc, term);
        }
        if (field.mul(static_cast<Residue>(k % field.p()), e_[k]) != acc)
            return false;
    }
    return true;
}

} // namespace shiftdec

#include "shiftdec/poly.hpp"

#include <sstream>

#include "shiftdec/error.hpp"

namespace shiftdec {

namespace {

Residue mulmod(Residue a, Residue b, Residue p) noexcept
{
    return static_cast<Residue>(std::uint64_t{a} * b % p);
}

} // namespace

DensePoly::DensePoly(Residue modulus, std::vector<Residue> coeffs) : p_(modulus), c_(std::move(coeffs))
{
    for (auto & c : c_)
        c %= p_;
    trim();
}

DensePoly DensePoly::constant(Residue modulus, Residue c)
{
    return DensePoly(modulus, {c});
}

DensePoly DensePoly::monomial(Residue modulus, Residue c, std::size_t degree)
{
    std::vector<Residue> coeffs(degree + 1, 0);
    coeffs[degree] = c;
    return DensePoly(modulus, std::move(coeffs));
}

DensePoly DensePoly::linear_factor(Residue modulus, Residue root)
{
    return DensePoly(modulus, {(modulus - root % modulus) % modulus, 1});
}

void DensePoly::trim()
{
    while (!c_.empty() && c_.back() == 0)
        c_.pop_back();
}

void DensePoly::require_same_modulus(const DensePoly & other) const
{
    if (p_ != other.p_)
        throw Error(Errc::ModulusMismatch, "polynomials over different fields");
}

Residue DensePoly::eval(Residue x) const
{
    x %= p_;
    Residue acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = static_cast<Residue>((std::uint64_t{acc} * x + *it) % p_);
    return acc;
}

DensePoly DensePoly::derivative() const
{
    if (c_.size() <= 1)
        return DensePoly(p_);
    std::vector<Residue> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k)
        d[k - 1] = mulmod(c_[k], static_cast<Residue>(k % p_), p_);
    return DensePoly(p_, std::move(d));
}

DensePoly DensePoly::derivative(std::size_t k) const
{
    DensePoly out = *this;
    for (std::size_t i = 0; i < k && !out.is_zero(); ++i)
        out = out.derivative();
    return out;
}

DensePoly DensePoly::pow(std::size_t e) const
{
    DensePoly result = constant(p_, 1);
    DensePoly base = *this;
    while (e) {
        if (e & 1)
            result = result * base;
        e >>= 1;
        if (e)
            base = base * base;
    }
    return result;
}

DensePoly DensePoly::scaled(Residue c) const
{
    std::vector<Residue> out(c_);
    for (auto & v : out)
        v = mulmod(v, c % p_, p_);
    return DensePoly(p_, std::move(out));
}

std::pair<DensePoly, Residue> DensePoly::divide_linear(Residue b) const
{
    b %= p_;
    if (c_.empty())
        return {DensePoly(p_), 0};
    std::vector<Residue> q(c_.size() - 1);
    Residue carry = 0;
    for (std::size_t k = c_.size(); k-- > 0;) {
        Residue v = static_cast<Residue>((std::uint64_t{carry} * b + c_[k]) % p_);
        if (k > 0)
            q[k - 1] = v;
        carry = v;
    }
    return {DensePoly(p_, std::move(q)), carry};
}

DensePoly & DensePoly::operator+=(const DensePoly & other)
{
    require_same_modulus(other);
    if (c_.size() < other.c_.size())
        c_.resize(other.c_.size(), 0);
    for (std::size_t k = 0; k < other.c_.size(); ++k) {
        Residue s = c_[k] + other.c_[k];
        c_[k] = s >= p_ ? s - p_ : s;
    }
    trim();
    return *this;
}

DensePoly & DensePoly::operator-=(const DensePoly & other)
{
    require_same_modulus(other);
    if (c_.size() < other.c_.size())
        c_.resize(other.c_.size(), 0);
    for (std::size_t k = 0; k < other.c_.size(); ++k)
        c_[k] = c_[k] >= other.c_[k] ? c_[k] - other.c_[k] : c_[k] + p_ - other.c_[k];
    trim();
    return *this;
}

DensePoly operator*(const DensePoly & a, const DensePoly & b)
{
    a.require_same_modulus(b);
    if (a.is_zero() || b.is_zero())
        return DensePoly(a.p_);
    const Residue p = a.p_;
    std::vector<std::uint64_t> acc(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            acc[i + j] = (acc[i + j] + std::uint64_t{a.c_[i]} * b.c_[j]) % p;
    }
    std::vector<Residue> out(acc.begin(), acc.end());
    return DensePoly(p, std::move(out));
}

std::string DensePoly::to_string() const
{
    if (c_.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t k = c_.size(); k-- > 0;) {
        if (c_[k] == 0)
            continue;
        if (!first)
            out << " + ";
        first = false;
        if (k == 0 || c_[k] != 1)
            out << c_[k];
        if (k >= 1)
            out << 'x';
        if (k >= 2)
            out << '^' << k;
    }
    return out.str();
}

std::size_t root_multiplicity(const DensePoly & f, Residue b)
{
    if (f.is_zero())
        throw Error(Errc::ZeroPolynomial, "multiplicity of a root of the zero polynomial");
    std::size_t k = 0;
    DensePoly g = f;
    for (;;) {
        auto [q, rem] = g.divide_linear(b);
        if (rem != 0)
            return k;
        ++k;
        g = std::move(q);
    }
}

} // namespace shiftdec

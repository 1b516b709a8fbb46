#include "shiftdec/field.hpp"

#include <array>
#include <sstream>

#include "shiftdec/error.hpp"

namespace shiftdec {

std::string_view errc_name(Errc code) noexcept
{
    switch (code) {
        case Errc::NotPrime: return "NotPrime";
        case Errc::OutOfRange: return "OutOfRange";
        case Errc::NotADivisor: return "NotADivisor";
        case Errc::ZeroElement: return "ZeroElement";
        case Errc::ModulusMismatch: return "ModulusMismatch";
        case Errc::ZeroDivisor: return "ZeroDivisor";
        case Errc::ZeroScale: return "ZeroScale";
        case Errc::ZeroParameter: return "ZeroParameter";
        case Errc::ZeroInProductTarget: return "ZeroInProductTarget";
        case Errc::ZeroInTarget: return "ZeroInTarget";
        case Errc::MissingZero: return "MissingZero";
        case Errc::InternalMismatch: return "InternalMismatch";
        case Errc::DegreeOverflow: return "DegreeOverflow";
        case Errc::ZeroPolynomial: return "ZeroPolynomial";
        case Errc::HypothesisViolated: return "HypothesisViolated";
        case Errc::BoundViolation: return "BoundViolation";
        case Errc::RootOfH: return "RootOfH";
        case Errc::FactorialOverflow: return "FactorialOverflow";
        case Errc::NonInvertibleIndex: return "NonInvertibleIndex";
        case Errc::DegenerateInput: return "DegenerateInput";
        case Errc::TheoremViolation: return "TheoremViolation";
    }
    return "Unknown";
}

namespace {

std::uint64_t mulmod64(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept
{
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod64(std::uint64_t a, std::uint64_t e, std::uint64_t m) noexcept
{
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1)
            r = mulmod64(r, a, m);
        a = mulmod64(a, a, m);
        e >>= 1;
    }
    return r;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n)
{
    std::vector<std::uint64_t> out;
    for (std::uint64_t q = 2; q * q <= n; ++q) {
        if (n % q == 0) {
            out.push_back(q);
            while (n % q == 0)
                n /= q;
        }
    }
    if (n > 1)
        out.push_back(n);
    return out;
}

} // namespace

bool is_prime(std::uint64_t n) noexcept
{
    if (n < 2)
        return false;
    constexpr std::array<std::uint64_t, 12> witnesses{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (auto w : witnesses) {
        if (n == w)
            return true;
        if (n % w == 0)
            return false;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (auto w : witnesses) {
        std::uint64_t x = powmod64(w, d, n);
        if (x == 1 || x == n - 1)
            continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite)
            return false;
    }
    return true;
}

Field Field::make(std::uint64_t p, std::uint64_t bound)
{
    if (p > bound) {
        std::ostringstream msg;
        msg << "p = " << p << " exceeds bound " << bound;
        throw Error(Errc::OutOfRange, msg.str());
    }
    if (p < 3 || !is_prime(p))
        throw Error(Errc::NotPrime, std::to_string(p) + " is not an odd prime");

    auto t = std::make_shared<Tables>();
    const auto q = static_cast<Residue>(p);
    t->order_primes = prime_factors(p - 1);

    for (Residue g = 2; g < q; ++g) {
        bool generator = true;
        for (auto f : t->order_primes)
            if (powmod64(g, (p - 1) / f, p) == 1) {
                generator = false;
                break;
            }
        if (generator) {
            t->primitive_root = g;
            break;
        }
    }

    t->inv.assign(q, 0);
    t->inv[1] = 1;
    for (Residue i = 2; i < q; ++i)
        t->inv[i] = static_cast<Residue>(p - (p / i) * std::uint64_t{t->inv[p % i]} % p);

    t->fact.assign(q, 1);
    for (Residue i = 1; i < q; ++i)
        t->fact[i] = static_cast<Residue>(std::uint64_t{t->fact[i - 1]} * i % p);
    t->inv_fact.assign(q, 1);
    t->inv_fact[q - 1] = t->inv[t->fact[q - 1]];
    for (Residue i = q - 1; i > 0; --i)
        t->inv_fact[i - 1] = static_cast<Residue>(std::uint64_t{t->inv_fact[i]} * i % p);

    return Field(q, std::move(t));
}

Residue Field::reduce(std::int64_t x) const noexcept
{
    auto r = x % static_cast<std::int64_t>(p_);
    return static_cast<Residue>(r < 0 ? r + p_ : r);
}

Residue Field::pow(Residue a, std::uint64_t e) const noexcept
{
    return static_cast<Residue>(powmod64(a, e, p_));
}

Residue Field::inv(Residue a) const
{
    if (a % p_ == 0)
        throw Error(Errc::ZeroDivisor, "inverse of 0 in F_" + std::to_string(p_));
    return tables_->inv[a % p_];
}

Residue Field::binomial(Residue n, Residue k) const
{
    if (n >= p_)
        throw Error(Errc::FactorialOverflow, "binomial top index must be below p");
    if (k > n)
        return 0;
    return mul(factorial(n), mul(inv_factorial(k), inv_factorial(n - k)));
}

std::uint64_t Field::order(Residue a) const
{
    if (a % p_ == 0)
        throw Error(Errc::ZeroElement, "order of 0");
    std::uint64_t ord = p_ - 1;
    for (auto q : tables_->order_primes)
        while (ord % q == 0 && pow(a, ord / q) == 1)
            ord /= q;
    return ord;
}

MultSubgroup::MultSubgroup(Field field, Residue order)
    : field_(std::move(field)), order_(order), generator_(0), elements_(field_.p())
{
    const Residue p = field_.p();
    if (order == 0 || (p - 1) % order != 0)
        throw Error(Errc::NotADivisor,
                    std::to_string(order) + " does not divide " + std::to_string(p - 1));
    generator_ = field_.pow(field_.primitive_root(), (p - 1) / order);
    Residue x = 1;
    for (Residue k = 0; k < order; ++k) {
        elements_.insert(x);
        x = field_.mul(x, generator_);
    }
}

std::vector<Residue> MultSubgroup::coset_representatives() const
{
    std::vector<Residue> reps;
    ElementSet seen(field_.p());
    for (Residue x = 1; x < field_.p(); ++x) {
        if (seen.contains(x))
            continue;
        reps.push_back(x);
        elements_.for_each([&](Residue g) { seen.insert(field_.mul(x, g)); });
    }
    return reps;
}

MultSubgroup subgroup_of_order(const Field & field, Residue d)
{
    return MultSubgroup(field, d);
}

std::vector<MultSubgroup> enumerate_proper_subgroups(const Field & field)
{
    std::vector<MultSubgroup> out;
    const Residue n = field.p() - 1;
    for (Residue d = 1; d < n; ++d)
        if (n % d == 0)
            out.emplace_back(field, d);
    return out;
}

std::optional<CosetInfo> coset_test(const Field & field, const ElementSet & a)
{
    if (a.contains(0))
        throw Error(Errc::ZeroElement, "coset test on a set containing 0");
    if (a.empty())
        return std::nullopt;
    const Residue rep = a.min();
    const Residue rep_inv = field.inv(rep);
    ElementSet h(field.p());
    a.for_each([&](Residue x) { h.insert(field.mul(x, rep_inv)); });
    const auto d = static_cast<Residue>(h.size());
    if ((field.p() - 1) % d != 0)
        return std::nullopt;
    if (h != subgroup_of_order(field, d).elements())
        return std::nullopt;
    return CosetInfo{d, rep};
}

std::vector<Residue> odd_primes_between(std::uint64_t lo, std::uint64_t hi)
{
    std::vector<Residue> out;
    for (std::uint64_t n = std::max<std::uint64_t>(lo, 3); n <= hi; ++n)
        if (is_prime(n))
            out.push_back(static_cast<Residue>(n));
    return out;
}

} // namespace shiftdec

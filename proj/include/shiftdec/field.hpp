#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "shiftdec/element_set.hpp"

namespace shiftdec {


inline constexpr std::uint64_t kDefaultPrimeBound = std::uint64_t{1} << 20;

/// Deterministic Miller-Rabin; exact for every n < 2^64.
bool is_prime(std::uint64_t n) noexcept;

/// Arithmetic in F_p for an odd prime p.
///
/// A Field is a cheap handle onto immutable tables (inverses, factorials,
/// inverse factorials) shared between copies, so it can be passed by value
/// and used concurrently.
class Field {
public:
    /// Throws NotPrime for composite p (or p < 3), OutOfRange for p > bound.
    static Field make(std::uint64_t p, std::uint64_t bound = kDefaultPrimeBound);

    Residue p() const noexcept { return p_; }
    Residue primitive_root() const noexcept { return tables_->primitive_root; }

    Residue reduce(std::int64_t x) const noexcept;
    Residue add(Residue a, Residue b) const noexcept { Residue s = a + b; return s >= p_ ? s - p_ : s; }
    Residue sub(Residue a, Residue b) const noexcept { return a >= b ? a - b : a + p_ - b; }
    Residue neg(Residue a) const noexcept { return a == 0 ? 0 : p_ - a; }
    Residue mul(Residue a, Residue b) const noexcept {
        return static_cast<Residue>(std::uint64_t{a} * b % p_);
    }
    Residue pow(Residue a, std::uint64_t e) const noexcept;
    /// Throws ZeroDivisor for a == 0.
    Residue inv(Residue a) const;
    Residue div(Residue a, Residue b) const { return mul(a, inv(b)); }

    /// k! mod p for 0 <= k < p.
    Residue factorial(Residue k) const { return tables_->fact.at(k); }
    Residue inv_factorial(Residue k) const { return tables_->inv_fact.at(k); }
    /// C(n, k) mod p for n < p; zero when k > n.
    Residue binomial(Residue n, Residue k) const;

    /// Multiplicative order of a nonzero residue.
    std::uint64_t order(Residue a) const;

    /// Prime divisors of p - 1, ascending.
    const std::vector<std::uint64_t> & group_order_primes() const noexcept {
        return tables_->order_primes;
    }

    ElementSet empty_set() const { return ElementSet(p_); }

    friend bool operator==(const Field & a, const Field & b) noexcept { return a.p_ == b.p_; }

private:
    struct Tables {
        Residue primitive_root = 0;
        std::vector<Residue> inv;
        std::vector<Residue> fact;
        std::vector<Residue> inv_fact;
        std::vector<std::uint64_t> order_primes;
    };

    Field(Residue p, std::shared_ptr<const Tables> tables) : p_(p), tables_(std::move(tables)) {}

    Residue p_;
    std::shared_ptr<const Tables> tables_;
};

/// The unique subgroup of F_p^* of a given order d | p - 1.
class MultSubgroup {
public:
    MultSubgroup(Field field, Residue order);

    const Field & field() const noexcept { return field_; }
    Residue order() const noexcept { return order_; }
    Residue index() const noexcept { return (field_.p() - 1) / order_; }
    Residue generator() const noexcept { return generator_; }
    const ElementSet & elements() const noexcept { return elements_; }
    bool contains(Residue x) const { return elements_.contains(x); }
    bool is_proper() const noexcept { return order_ < field_.p() - 1; }

    /// One representative per coset xG, the least element of each coset.
    std::vector<Residue> coset_representatives() const;

private:
    Field field_;
    Residue order_;
    Residue generator_;
    ElementSet elements_;
};

/// Throws NotADivisor when d does not divide p - 1 (or d == 0).
MultSubgroup subgroup_of_order(const Field & field, Residue d);

/// Every subgroup of order d | p - 1 with d < p - 1, ascending in d.
std::vector<MultSubgroup> enumerate_proper_subgroups(const Field & field);

struct CosetInfo {
    Residue order;
    Residue representative;
};

/// If A = a*H for a subgroup H, returns |H| and the least element of A.
/// Throws ZeroElement if 0 is in A.
std::optional<CosetInfo> coset_test(const Field & field, const ElementSet & a);

/// Odd primes in [lo, hi], ascending.
std::vector<Residue> odd_primes_between(std::uint64_t lo, std::uint64_t hi);

} // namespace shiftdec

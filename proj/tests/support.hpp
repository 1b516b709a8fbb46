#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "shiftdec/element_set.hpp"
#include "shiftdec/error.hpp"
#include "shiftdec/field.hpp"

namespace shiftdec::testing {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::size_t uniform(std::size_t lo, std::size_t hi) {
        return std::uniform_int_distribution<std::size_t>(lo, hi)(gen_);
    }
    Residue residue(const Field & f, Residue lo = 0) { return static_cast<Residue>(uniform(lo, f.p() - 1)); }

    /// Random subset of [lo, p - 1] of size k, capped at the range size.
    ElementSet subset(const Field & f, std::size_t k, Residue lo = 0) {
        k = std::min<std::size_t>(k, f.p() - lo);
        ElementSet s(f.p());
        while (s.size() < k)
            s.insert(residue(f, lo));
        return s;
    }

    Residue prime(Residue lo, Residue hi) {
        const auto ps = odd_primes_between(lo, hi);
        return ps[uniform(0, ps.size() - 1)];
    }

private:
    std::mt19937_64 gen_;
};

/// The error code thrown by fn; InternalMismatch stands in for "nothing thrown".
template <typename F>
Errc code_of(F && fn)
{
    try {
        fn();
    } catch (const Error & e) {
        return e.code();
    }
    return Errc::InternalMismatch;
}

inline ElementSet set_of(Residue p, std::initializer_list<Residue> xs) { return ElementSet(p, xs); }

} // namespace shiftdec::testing

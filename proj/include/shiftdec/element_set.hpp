#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace shiftdec {

using Residue = std::uint32_t;

/// A subset of {0, ..., p-1}, stored as a membership bitset.
///
/// Ordering is lexicographic on the ascending element sequences, which is
/// the canonical order used for witness deduplication and reports.
class ElementSet {
public:
    ElementSet() = default;
    explicit ElementSet(Residue modulus) : bits_(modulus) {}
    ElementSet(Residue modulus, std::initializer_list<Residue> xs);
    ElementSet(Residue modulus, std::span<const Residue> xs);

    Residue modulus() const noexcept { return static_cast<Residue>(bits_.size()); }
    std::size_t size() const noexcept { return count_; }
    bool empty() const noexcept { return count_ == 0; }

    bool contains(Residue x) const noexcept { return x < bits_.size() && bits_.test(x); }
    /// Residues are reduced modulo p before insertion.
    void insert(Residue x);
    void erase(Residue x);

    /// Ascending.
    std::vector<Residue> elements() const;
    Residue min() const;

    template <typename F>
    void for_each(F && f) const {
        for (auto i = bits_.find_first(); i != Bits::npos; i = bits_.find_next(i))
            f(static_cast<Residue>(i));
    }

    bool is_subset_of(const ElementSet & other) const;
    bool intersects(const ElementSet & other) const;

    ElementSet & operator&=(const ElementSet & other);
    ElementSet & operator|=(const ElementSet & other);
    ElementSet & operator-=(const ElementSet & other);
    friend ElementSet operator&(ElementSet a, const ElementSet & b) { return a &= b; }
    friend ElementSet operator|(ElementSet a, const ElementSet & b) { return a |= b; }
    friend ElementSet operator-(ElementSet a, const ElementSet & b) { return a -= b; }

    friend bool operator==(const ElementSet & a, const ElementSet & b) noexcept {
        return a.bits_ == b.bits_;
    }
    friend std::strong_ordering operator<=>(const ElementSet & a, const ElementSet & b);

    /// "{1,2,3}"
    std::string to_string() const;

private:
    using Bits = boost::dynamic_bitset<std::uint64_t>;

    void require_same_modulus(const ElementSet & other) const;

    Bits bits_;
    std::size_t count_ = 0;
};

} // namespace shiftdec

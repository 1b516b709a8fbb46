#include "shiftdec/element_set.hpp"

#include <sstream>

#include "shiftdec/error.hpp"

namespace shiftdec {

ElementSet::ElementSet(Residue modulus, std::initializer_list<Residue> xs)
    : ElementSet(modulus, std::span<const Residue>(xs.begin(), xs.size()))
{
}

ElementSet::ElementSet(Residue modulus, std::span<const Residue> xs) : bits_(modulus)
{
    for (auto x : xs)
        insert(x);
}

void ElementSet::insert(Residue x)
{
    x %= modulus();
    if (!bits_.test(x)) {
        bits_.set(x);
        ++count_;
    }
}

void ElementSet::erase(Residue x)
{
    if (contains(x)) {
        bits_.reset(x);
        --count_;
    }
}

std::vector<Residue> ElementSet::elements() const
{
    std::vector<Residue> out;
    out.reserve(count_);
    for_each([&](Residue x) { out.push_back(x); });
    return out;
}

Residue ElementSet::min() const
{
    auto i = bits_.find_first();
    if (i == Bits::npos)
        throw std::out_of_range("min of empty ElementSet");
    return static_cast<Residue>(i);
}

void ElementSet::require_same_modulus(const ElementSet & other) const
{
    if (modulus() != other.modulus())
        throw Error(Errc::ModulusMismatch, "sets over F_" + std::to_string(modulus()) +
                                               " and F_" + std::to_string(other.modulus()));
}

bool ElementSet::is_subset_of(const ElementSet & other) const
{
    require_same_modulus(other);
    return bits_.is_subset_of(other.bits_);
}

bool ElementSet::intersects(const ElementSet & other) const
{
    require_same_modulus(other);
    return bits_.intersects(other.bits_);
}

ElementSet & ElementSet::operator&=(const ElementSet & other)
{
    require_same_modulus(other);
    bits_ &= other.bits_;
    count_ = bits_.count();
    return *this;
}

ElementSet & ElementSet::operator|=(const ElementSet & other)
{
    require_same_modulus(other);
    bits_ |= other.bits_;
    count_ = bits_.count();
    return *this;
}

ElementSet & ElementSet::operator-=(const ElementSet & other)
{
    require_same_modulus(other);
    bits_ -= other.bits_;
    count_ = bits_.count();
    return *this;
}

std::strong_ordering operator<=>(const ElementSet & a, const ElementSet & b)
{
    if (auto c = a.modulus() <=> b.modulus(); c != 0)
        return c;
    auto i = a.bits_.find_first();
    auto j = b.bits_.find_first();
    while (i != ElementSet::Bits::npos && j != ElementSet::Bits::npos) {
        if (i != j)
            return i < j ? std::strong_ordering::less : std::strong_ordering::greater;
        i = a.bits_.find_next(i);
        j = b.bits_.find_next(j);
    }
    if (i == j)
        return std::strong_ordering::equal;
    return i == ElementSet::Bits::npos ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::string ElementSet::to_string() const
{
    std::ostringstream out;
    out << '{';
    bool first = true;
    for_each([&](Residue x) {
        if (!first)
            out << ',';
        out << x;
        first = false;
    });
    out << '}';
    return out.str();
}

} // namespace shiftdec

#include "shiftdec/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "shiftdec/error.hpp"

namespace shiftdec {

namespace {

using Mask = std::uint64_t;

class Enumerator {
public:
    Enumerator(const Field & field, const ElementSet & s, bool additive)
        : field_(field), p_(field.p()), additive_(additive)
    {
        s.for_each([&](Residue x) { s_mask_ |= Mask{1} << x; });
        s_size_ = s.size();
        preimage_.resize(p_);
        for (Residue b = 0; b < p_; ++b)
            for (Residue x = 0; x < p_; ++x)
                if (s_mask_ >> op(x, b) & 1)
                    preimage_[b] |= Mask{1} << x;
        const Residue identity = additive ? 0 : 1;
        for (Residue b = 0; b < p_; ++b)
            if (b != identity && (additive || b != 0))
                universe_.push_back(b);
        chosen_.push_back(identity);
    }

    std::vector<std::pair<Mask, Mask>> run()
    {
        visit(preimage_[chosen_[0]], 0);
        std::sort(found_.begin(), found_.end());
        found_.erase(std::unique(found_.begin(), found_.end()), found_.end());
        return found_;
    }

private:
    Residue op(Residue x, Residue b) const
    {
        return static_cast<Residue>(additive_ ? (x + b) % p_ : std::uint64_t{x} * b % p_);
    }

    Mask image(Mask a, Residue b) const
    {
        Mask out = 0;
        for (Residue x = 0; x < p_; ++x)
            if (a >> x & 1)
                out |= Mask{1} << op(x, b);
        return out;
    }

    void visit(Mask a, std::size_t next)
    {
        if (chosen_.size() >= 2 && std::popcount(a) >= 2) {
            Mask covered = 0;
            for (auto b : chosen_)
                covered |= image(a, b);
            if (covered == s_mask_)
                found_.push_back(canonical(a));
        }
        if (chosen_.size() >= s_size_)
            return;
        for (std::size_t i = next; i < universe_.size(); ++i) {
            chosen_.push_back(universe_[i]);
            visit(a & preimage_[universe_[i]], i + 1);
            chosen_.pop_back();
        }
    }

    static std::vector<Residue> bits_of(Mask m)
    {
        std::vector<Residue> out;
        for (Residue x = 0; x < 64; ++x)
            if (m >> x & 1)
                out.push_back(x);
        return out;
    }

    std::pair<Mask, Mask> canonical(Mask a) const
    {
        Mask b = 0;
        for (auto v : chosen_)
            b |= Mask{1} << v;
        std::pair<std::vector<Residue>, std::vector<Residue>> best;
        std::pair<Mask, Mask> best_masks{0, 0};
        bool have = false;
        for (auto c : chosen_) {
            // (a o c, b o c^{-1}) keeps the product/sum and puts the identity in B.
            const Residue c_inv = additive_ ? (p_ - c) % p_ : field_.inv(c);
            const Mask a2 = image(a, c);
            const Mask b2 = image(b, c_inv);
            auto key = std::make_pair(bits_of(a2), bits_of(b2));
            if (!have || key < best) {
                best = std::move(key);
                best_masks = {a2, b2};
                have = true;
            }
        }
        return best_masks;
    }

    const Field & field_;
    Residue p_;
    bool additive_;
    Mask s_mask_ = 0;
    std::size_t s_size_ = 0;
    std::vector<Mask> preimage_;
    std::vector<Residue> universe_;
    std::vector<Residue> chosen_;
    std::vector<std::pair<Mask, Mask>> found_;
};

ElementSet to_set(Residue p, Mask m)
{
    ElementSet out(p);
    for (Residue x = 0; x < p; ++x)
        if (m >> x & 1)
            out.insert(x);
    return out;
}

} // namespace

std::vector<std::pair<ElementSet, ElementSet>> brute_force_factorizations(const Field & field,
                                                                          const ElementSet & s,
                                                                          WitnessKind kind)
{
    if (field.p() > 61)
        throw Error(Errc::OutOfRange, "brute-force oracle handles p <= 61 only");
    if (kind != WitnessKind::Product && kind != WitnessKind::Sum)
        throw std::invalid_argument("oracle takes Product or Sum");
    if (kind == WitnessKind::Product && s.contains(0))
        throw Error(Errc::ZeroInProductTarget, "product target contains 0");
    std::vector<std::pair<ElementSet, ElementSet>> out;
    for (auto [a, b] : Enumerator(field, s, kind == WitnessKind::Sum).run())
        out.emplace_back(to_set(field.p(), a), to_set(field.p(), b));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<std::pair<ElementSet, ElementSet>> witness_pairs(const SearchReport & report)
{
    std::vector<std::pair<ElementSet, ElementSet>> out;
    for (const auto & w : report.witnesses)
        if (w.b)
            out.emplace_back(w.a, *w.b);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace shiftdec

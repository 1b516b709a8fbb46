#include "shiftdec/decomp.hpp"

#include <set>

#include "shiftdec/clique.hpp"
#include "shiftdec/error.hpp"
#include "shiftdec/setops.hpp"

namespace shiftdec {

std::string_view witness_kind_name(WitnessKind kind) noexcept
{
    switch (kind) {
        case WitnessKind::Product: return "product";
        case WitnessKind::Sum: return "sum";
        case WitnessKind::RatioRep: return "ratio-rep";
        case WitnessKind::DiffRep: return "diff-rep";
    }
    return "?";
}

bool DecompWitness::verify(const Field & field) const
{
    switch (kind) {
        case WitnessKind::Product:
        case WitnessKind::Sum:
            if (!b || a.size() < 2 || b->size() < 2)
                return false;
            return compose_sets(field, a, *b,
                                kind == WitnessKind::Product ? Composition::Product : Composition::Sum) == target;
        case WitnessKind::RatioRep:
            return !a.empty() && compose_sets(field, a, a, Composition::Ratio) == target;
        case WitnessKind::DiffRep:
            return !a.empty() && compose_sets(field, a, a, Composition::Difference) == target;
    }
    return false;
}

namespace {

using Clock = std::chrono::steady_clock;

ElementSet scale_set(const Field & field, const ElementSet & x, Residue c)
{
    ElementSet out(field.p());
    x.for_each([&](Residue v) { out.insert(field.mul(v, c)); });
    return out;
}

ElementSet shift_set(const Field & field, const ElementSet & x, Residue t)
{
    ElementSet out(field.p());
    x.for_each([&](Residue v) { out.insert(field.add(v, t)); });
    return out;
}

/// Depth-first growth of B from the identity, shared by product and sum.
class FactorSearch {
public:
    FactorSearch(const Field & field, const ElementSet & s, bool additive, const SearchOptions & options)
        : field_(field), s_(s), additive_(additive), options_(options),
          identity_(additive ? 0 : 1)
    {
        const Residue p = field.p();
        for (Residue b = additive ? 1 : 2; b < p; ++b) {
            ElementSet pre = preimage(b);
            if ((pre & s_).size() >= options_.min_size) {
                universe_.push_back(b);
                preimages_.push_back(std::move(pre));
            }
        }
    }

    SearchReport run()
    {
        SearchReport report;
        report.task.p = field_.p();
        if (s_.size() >= options_.min_size) {
            std::vector<Residue> b{identity_};
            dfs(b, s_, 0);
        }
        report.nodes = nodes_;
        for (const auto & [a, b] : found_) {
            DecompWitness w;
            w.p = field_.p();
            w.target = s_;
            w.kind = additive_ ? WitnessKind::Sum : WitnessKind::Product;
            w.a = a;
            w.b = b;
            w.canonical = true;
            report.witnesses.push_back(std::move(w));
        }
        return report;
    }

private:
    Residue op(Residue x, Residue b) const { return additive_ ? field_.add(x, b) : field_.mul(x, b); }

    /// {x : x o b in S}
    ElementSet preimage(Residue b) const
    {
        return additive_ ? shift_set(field_, s_, field_.neg(b)) : scale_set(field_, s_, field_.inv(b));
    }

    void add_image(ElementSet & into, const ElementSet & a, Residue b) const
    {
        a.for_each([&](Residue x) { into.insert(op(x, b)); });
    }

    bool potential_covers(const std::vector<Residue> & b, const ElementSet & a_cand, std::size_t next) const
    {
        ElementSet pot(field_.p());
        for (auto v : b)
            add_image(pot, a_cand, v);
        for (std::size_t i = next; i < universe_.size() && !s_.is_subset_of(pot); ++i) {
            const ElementSet a_next = a_cand & preimages_[i];
            if (a_next.size() >= options_.min_size)
                add_image(pot, a_next, universe_[i]);
        }
        return s_.is_subset_of(pot);
    }

    void dfs(std::vector<Residue> & b, const ElementSet & a_cand, std::size_t next)
    {
        ++nodes_;
        const std::size_t remaining = universe_.size() - next;
        if (a_cand.size() * (b.size() + remaining) < s_.size())
            return;
        if (b.size() >= 2 && options_.potential_interval > 0 &&
            (b.size() - 2) % options_.potential_interval == 0 && !potential_covers(b, a_cand, next))
            return;

        if (b.size() >= options_.min_size && a_cand.size() * b.size() >= s_.size()) {
            ElementSet covered(field_.p());
            for (auto v : b)
                add_image(covered, a_cand, v);
            if (covered == s_)
                record(a_cand, b);
        }

        for (std::size_t i = next; i < universe_.size(); ++i) {
            ElementSet a_next = a_cand & preimages_[i];
            if (a_next.size() < options_.min_size)
                continue;
            b.push_back(universe_[i]);
            dfs(b, a_next, i + 1);
            b.pop_back();
        }
    }

    void record(const ElementSet & a, const std::vector<Residue> & b)
    {
        const ElementSet b_set(field_.p(), std::span<const Residue>(b));
        found_.insert(additive_ ? canonical_sum_pair(field_, a, b_set)
                                : canonical_product_pair(field_, a, b_set));
    }

    const Field & field_;
    const ElementSet & s_;
    bool additive_;
    SearchOptions options_;
    Residue identity_;
    std::vector<Residue> universe_;
    std::vector<ElementSet> preimages_;
    std::set<std::pair<ElementSet, ElementSet>> found_;
    std::uint64_t nodes_ = 0;
};

template <typename Compat, typename Finish>
SearchReport clique_representations(const Field & field, const ElementSet & t,
                                    const std::vector<Residue> & vertices, Compat && compatible,
                                    Finish && finish)
{
    BitGraph graph(vertices.size());
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (compatible(vertices[i], vertices[j]))
                graph.add_edge(i, j);

    std::set<ElementSet> found;
    SearchReport report;
    report.task.p = field.p();
    report.nodes = enumerate_maximal_cliques(graph, [&](const std::vector<std::size_t> & clique) {
        ElementSet a(field.p());
        for (auto i : clique)
            a.insert(vertices[i]);
        if (auto canon = finish(a))
            found.insert(std::move(*canon));
    });
    for (const auto & a : found) {
        DecompWitness w;
        w.p = field.p();
        w.target = t;
        w.a = a;
        w.canonical = true;
        report.witnesses.push_back(std::move(w));
    }
    return report;
}

} // namespace

std::pair<ElementSet, ElementSet> canonical_product_pair(const Field & field, const ElementSet & a,
                                                         const ElementSet & b)
{
    std::optional<std::pair<ElementSet, ElementSet>> best;
    b.for_each([&](Residue c) {
        std::pair<ElementSet, ElementSet> cand{scale_set(field, a, c), scale_set(field, b, field.inv(c))};
        if (!best || cand < *best)
            best = std::move(cand);
    });
    return std::move(*best);
}

std::pair<ElementSet, ElementSet> canonical_sum_pair(const Field & field, const ElementSet & a,
                                                     const ElementSet & b)
{
    std::optional<std::pair<ElementSet, ElementSet>> best;
    b.for_each([&](Residue t) {
        std::pair<ElementSet, ElementSet> cand{shift_set(field, a, t), shift_set(field, b, field.neg(t))};
        if (!best || cand < *best)
            best = std::move(cand);
    });
    return std::move(*best);
}

ElementSet canonical_ratio_set(const Field & field, const ElementSet & a)
{
    std::optional<ElementSet> best;
    a.for_each([&](Residue x) {
        ElementSet cand = scale_set(field, a, field.inv(x));
        if (!best || cand < *best)
            best = std::move(cand);
    });
    return std::move(*best);
}

ElementSet canonical_difference_set(const Field & field, const ElementSet & a)
{
    std::optional<ElementSet> best;
    a.for_each([&](Residue x) {
        ElementSet cand = shift_set(field, a, field.neg(x));
        if (!best || cand < *best)
            best = std::move(cand);
    });
    return std::move(*best);
}

SearchReport find_exact_factorizations(const Field & field, const ElementSet & s, WitnessKind kind,
                                       const SearchOptions & options)
{
    if (kind != WitnessKind::Product && kind != WitnessKind::Sum)
        throw std::invalid_argument("factorization search takes Product or Sum");
    if (s.modulus() != field.p())
        throw Error(Errc::ModulusMismatch, "target modulus");
    if (kind == WitnessKind::Product && s.contains(0))
        throw Error(Errc::ZeroInProductTarget, "product target " + s.to_string() + " contains 0");
    const auto start = Clock::now();
    SearchReport report = FactorSearch(field, s, kind == WitnessKind::Sum, options).run();
    report.task.task = kind == WitnessKind::Sum ? "sum-factorization" : "product-factorization";
    report.elapsed = Clock::now() - start;
    return report;
}

SearchReport find_ratio_representations(const Field & field, const ElementSet & t)
{
    if (t.modulus() != field.p())
        throw Error(Errc::ModulusMismatch, "target modulus");
    if (t.contains(0))
        throw Error(Errc::ZeroInTarget, "ratio target " + t.to_string() + " contains 0");
    const auto start = Clock::now();
    SearchReport report;
    if (t.contains(1)) {
        std::vector<Residue> vertices;
        t.for_each([&](Residue x) {
            if (t.contains(field.inv(x)))
                vertices.push_back(x);
        });
        report = clique_representations(
            field, t, vertices,
            [&](Residue x, Residue y) { return t.contains(field.div(x, y)) && t.contains(field.div(y, x)); },
            [&](const ElementSet & a) -> std::optional<ElementSet> {
                if (compose_sets(field, a, a, Composition::Ratio) != t)
                    return std::nullopt;
                return canonical_ratio_set(field, a);
            });
        for (auto & w : report.witnesses)
            w.kind = WitnessKind::RatioRep;
    }
    report.task.p = field.p();
    report.task.task = "ratio-representation";
    report.elapsed = Clock::now() - start;
    return report;
}

SearchReport find_difference_representations(const Field & field, const ElementSet & t)
{
    if (t.modulus() != field.p())
        throw Error(Errc::ModulusMismatch, "target modulus");
    if (!t.contains(0))
        throw Error(Errc::MissingZero, "difference target " + t.to_string() + " lacks 0");
    const auto start = Clock::now();
    std::vector<Residue> vertices;
    t.for_each([&](Residue x) {
        if (t.contains(field.neg(x)))
            vertices.push_back(x);
    });
    SearchReport report = clique_representations(
        field, t, vertices,
        [&](Residue x, Residue y) { return t.contains(field.sub(x, y)) && t.contains(field.sub(y, x)); },
        [&](const ElementSet & a) -> std::optional<ElementSet> {
            if (compose_sets(field, a, a, Composition::Difference) != t)
                return std::nullopt;
            return canonical_difference_set(field, a);
        });
    for (auto & w : report.witnesses)
        w.kind = WitnessKind::DiffRep;
    report.task.task = "difference-representation";
    report.elapsed = Clock::now() - start;
    return report;
}

DifferenceClique max_difference_clique(const Field & field, const MultSubgroup & g)
{
    // Translation invariance lets the clique contain 0; the rest lies in G n -G.
    std::vector<Residue> vertices;
    g.elements().for_each([&](Residue x) {
        if (g.contains(field.neg(x)))
            vertices.push_back(x);
    });
    BitGraph graph(vertices.size());
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j) {
            const Residue d = field.sub(vertices[i], vertices[j]);
            if (g.contains(d) && g.contains(field.neg(d)))
                graph.add_edge(i, j);
        }
    const MaxClique best = maximum_clique(graph);
    DifferenceClique out;
    out.clique = ElementSet(field.p());
    out.clique.insert(0);
    for (auto i : best.vertices)
        out.clique.insert(vertices[i]);
    out.size = out.clique.size();
    out.nodes = best.nodes;
    return out;
}

} // namespace shiftdec

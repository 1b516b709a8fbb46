#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "shiftdec/clique.hpp"
#include "shiftdec/decomp.hpp"
#include "shiftdec/oracle.hpp"
#include "shiftdec/setops.hpp"
#include "support.hpp"

using namespace shiftdec;
using shiftdec::testing::code_of;
using shiftdec::testing::Rng;
using shiftdec::testing::set_of;

namespace {

using Pairs = std::vector<std::pair<ElementSet, ElementSet>>;

Pairs canonical_both_orders(const Field & f, const ElementSet & a, const ElementSet & b)
{
    Pairs out{canonical_product_pair(f, a, b), canonical_product_pair(f, b, a)};
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<ElementSet> rep_sets(const SearchReport & r)
{
    std::vector<ElementSet> out;
    for (const auto & w : r.witnesses)
        out.push_back(w.a);
    return out;
}

} // namespace

TEST(ProductSearch, ElevenCounterexample)
{
    const Field f = Field::make(11);
    const SearchReport r = find_exact_factorizations(f, set_of(11, {1, 2, 3, 7, 10}), WitnessKind::Product);
    EXPECT_TRUE(r.exhaustive);
    EXPECT_EQ(witness_pairs(r), canonical_both_orders(f, set_of(11, {1, 7}), set_of(11, {1, 2, 3})));
    for (const auto & w : r.witnesses) {
        EXPECT_TRUE(w.canonical);
        EXPECT_TRUE(w.verify(f));
        EXPECT_TRUE(w.b->contains(1));
    }
}

TEST(ProductSearch, NineteenCounterexample)
{
    const Field f = Field::make(19);
    const SearchReport r = find_exact_factorizations(f, set_of(19, {5, 6, 9, 10, 16, 18}), WitnessKind::Product);
    EXPECT_EQ(witness_pairs(r), canonical_both_orders(f, set_of(19, {1, 9}), set_of(19, {6, 9, 18})));
    EXPECT_EQ(witness_pairs(r), (Pairs{{set_of(19, {5, 9}), set_of(19, {1, 2, 7})},
                                       {set_of(19, {5, 10, 16}), set_of(19, {1, 17})}}));
}

TEST(ProductSearch, EmptyCases)
{
    const Field f = Field::make(13);
    EXPECT_TRUE(find_exact_factorizations(f, set_of(13, {5}), WitnessKind::Product).witnesses.empty());
    const MultSubgroup g = subgroup_of_order(f, 6);
    const ElementSet s = build_target(g, TargetVariant::ShiftMinusLambda, {1, 0, 0});
    EXPECT_TRUE(find_exact_factorizations(f, s, WitnessKind::Product).witnesses.empty());
    EXPECT_EQ(code_of([&] { find_exact_factorizations(f, set_of(13, {0, 1}), WitnessKind::Product); }),
              Errc::ZeroInProductTarget);
}

TEST(ProductSearch, FullGroupFactorizations)
{
    // S = F_7^*: every B with |B| >= 2 pairs with the maximal A = S
    const Field f = Field::make(7);
    const ElementSet all = set_of(7, {1, 2, 3, 4, 5, 6});
    const SearchReport r = find_exact_factorizations(f, all, WitnessKind::Product);
    const Pairs got = witness_pairs(r);
    for (const ElementSet & b : {set_of(7, {1, 6}), set_of(7, {1, 2, 4}), set_of(7, {1, 3, 5})})
        EXPECT_NE(std::find(got.begin(), got.end(), canonical_product_pair(f, all, b)), got.end()) << b.to_string();
    for (const auto & [a, b] : got)
        EXPECT_EQ(a, all);
    EXPECT_EQ(got, brute_force_factorizations(f, set_of(7, {1, 2, 3, 4, 5, 6}), WitnessKind::Product));
}

TEST(ProductSearch, OracleAgreesOnAllShiftedTargets)
{
    for (Residue p : odd_primes_between(3, kOraclePrimeCap)) {
        const Field f = Field::make(p);
        for (const MultSubgroup & g : enumerate_proper_subgroups(f)) {
            std::vector<ElementSet> targets;
            for (Residue lambda = 1; lambda < p; ++lambda)
                targets.push_back(build_target(g, TargetVariant::ShiftMinusLambda, {lambda, 0, 0}));
            for (Residue xi : g.coset_representatives())
                for (Residue mu = 1; mu < p; ++mu) {
                    targets.push_back(build_target(g, TargetVariant::XiShift, {0, xi, mu}));
                    targets.push_back(build_target(g, TargetVariant::XiShiftWithZero, {0, xi, mu}));
                }
            std::sort(targets.begin(), targets.end());
            targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
            for (const ElementSet & s : targets) {
                const SearchReport r = find_exact_factorizations(f, s, WitnessKind::Product);
                ASSERT_EQ(witness_pairs(r), brute_force_factorizations(f, s, WitnessKind::Product))
                    << "p=" << p << " S=" << s.to_string();
            }
        }
    }
}

TEST(ProductSearch, OracleAgreesOnRandomTargets)
{
    Rng rng(71);
    for (int i = 0; i < 100; ++i) {
        const Field f = Field::make(rng.prime(5, 17));
        const ElementSet s = rng.subset(f, rng.uniform(1, f.p() - 1), 1);
        const SearchReport r = find_exact_factorizations(f, s, WitnessKind::Product);
        ASSERT_EQ(witness_pairs(r), brute_force_factorizations(f, s, WitnessKind::Product)) << s.to_string();
        for (const auto & w : r.witnesses)
            EXPECT_TRUE(w.verify(f));
    }
}

TEST(SumSearch, OracleAgrees)
{
    Rng rng(73);
    for (Residue p : odd_primes_between(3, kOraclePrimeCap))
        for (const MultSubgroup & g : enumerate_proper_subgroups(Field::make(p))) {
            const Field & f = g.field();
            const SearchReport r = find_exact_factorizations(f, g.elements(), WitnessKind::Sum);
            ASSERT_EQ(witness_pairs(r), brute_force_factorizations(f, g.elements(), WitnessKind::Sum))
                << "p=" << p << " |G|=" << g.order();
        }
    for (int i = 0; i < 150; ++i) {
        const Field f = Field::make(rng.prime(5, 13));
        const ElementSet s = rng.subset(f, rng.uniform(1, f.p()));
        const SearchReport r = find_exact_factorizations(f, s, WitnessKind::Sum);
        ASSERT_EQ(witness_pairs(r), brute_force_factorizations(f, s, WitnessKind::Sum)) << s.to_string();
        for (const auto & w : r.witnesses) {
            EXPECT_TRUE(w.verify(f));
            EXPECT_TRUE(w.b->contains(0));
        }
    }
}

TEST(SumSearch, ArithmeticProgressionSplits)
{
    // {0..5} = {0, 1, 2} + {0, 3} = {0, 1} + {0, 2, 4}
    const Field f = Field::make(17);
    const SearchReport r = find_exact_factorizations(f, set_of(17, {0, 1, 2, 3, 4, 5}), WitnessKind::Sum);
    const Pairs got = witness_pairs(r);
    for (const auto & [a, b] : {std::pair{set_of(17, {0, 1, 2}), set_of(17, {0, 3})},
                                std::pair{set_of(17, {0, 1}), set_of(17, {0, 2, 4})}})
        EXPECT_NE(std::find(got.begin(), got.end(), canonical_sum_pair(f, a, b)), got.end());
}

TEST(Canonical, ScalingInvariance)
{
    Rng rng(79);
    const Field f = Field::make(19);
    const SearchReport r = find_exact_factorizations(f, set_of(19, {5, 6, 9, 10, 16, 18}), WitnessKind::Product);
    for (const auto & w : r.witnesses)
        for (int i = 0; i < 20; ++i) {
            const Residue c = rng.residue(f, 1);
            const ElementSet ca = affine_image(f, w.a, c, 0, DropZero::No);
            const ElementSet cb = affine_image(f, *w.b, f.inv(c), 0, DropZero::No);
            EXPECT_EQ(compose_sets(f, ca, cb, Composition::Product), w.target);
            EXPECT_EQ(canonical_product_pair(f, ca, cb), std::pair(w.a, *w.b));
        }
    const ElementSet a = set_of(19, {2, 3, 11});
    for (Residue c = 1; c < 19; ++c)
        EXPECT_EQ(canonical_ratio_set(f, affine_image(f, a, c, 0, DropZero::No)), canonical_ratio_set(f, a));
    for (Residue t = 0; t < 19; ++t)
        EXPECT_EQ(canonical_difference_set(f, affine_image(f, a, 1, t, DropZero::No)), canonical_difference_set(f, a));
}

TEST(Canonical, MonotoneCoverage)
{
    Rng rng(83);
    for (int i = 0; i < 300; ++i) {
        const Field f = Field::make(rng.prime(5, 61));
        const ElementSet a = rng.subset(f, rng.uniform(1, 5), 1);
        ElementSet bigger = a;
        bigger |= rng.subset(f, rng.uniform(0, 4), 1);
        const ElementSet b = rng.subset(f, rng.uniform(1, 5), 1);
        EXPECT_TRUE(compose_sets(f, a, b, Composition::Product).is_subset_of(compose_sets(f, bigger, b, Composition::Product)));
        EXPECT_TRUE(compose_sets(f, a, b, Composition::Sum).is_subset_of(compose_sets(f, bigger, b, Composition::Sum)));
    }
}

TEST(Witness, VerifyRejectsBadWitnesses)
{
    const Field f = Field::make(11);
    DecompWitness w;
    w.p = 11;
    w.target = set_of(11, {1, 2, 3, 7, 10});
    w.a = set_of(11, {1, 7});
    w.b = set_of(11, {1, 2, 3});
    EXPECT_TRUE(w.verify(f));
    w.b = set_of(11, {1, 2});
    EXPECT_FALSE(w.verify(f));
    w.b = set_of(11, {1});
    w.target = set_of(11, {1, 7});
    EXPECT_FALSE(w.verify(f));  // |B| < 2
    w.kind = WitnessKind::DiffRep;
    w.b.reset();
    w.a = set_of(11, {0, 1});
    w.target = set_of(11, {0, 1, 10});
    EXPECT_TRUE(w.verify(f));
}

TEST(RatioRepresentations, Examples)
{
    const Field f7 = Field::make(7);
    const SearchReport one = find_ratio_representations(f7, set_of(7, {1}));
    EXPECT_EQ(rep_sets(one), std::vector<ElementSet>{set_of(7, {1})});

    const MultSubgroup g2 = subgroup_of_order(f7, 2);
    const ElementSet t = build_target(g2, TargetVariant::XiShift, {0, 4, 4});
    EXPECT_EQ(t, set_of(7, {1}));
    EXPECT_EQ(rep_sets(find_ratio_representations(f7, t)), std::vector<ElementSet>{set_of(7, {1})});

    const Field f13 = Field::make(13);
    const MultSubgroup g3 = subgroup_of_order(f13, 3);
    EXPECT_TRUE(find_ratio_representations(f13, build_target(g3, TargetVariant::XiShift, {0, 1, 2})).witnesses.empty());
    EXPECT_TRUE(find_ratio_representations(f13, set_of(13, {2, 7})).witnesses.empty());  // 1 missing
    EXPECT_EQ(code_of([&] { find_ratio_representations(f13, set_of(13, {0, 1})); }), Errc::ZeroInTarget);
}

TEST(RatioRepresentations, MatchBruteForce)
{
    Rng rng(89);
    for (int i = 0; i < 200; ++i) {
        const Field f = Field::make(rng.prime(5, 13));
        const Residue p = f.p();
        // targets that are ratio sets half the time
        ElementSet t = (i % 2) ? rng.subset(f, rng.uniform(1, p - 1), 1)
                               : compose_sets(f, rng.subset(f, rng.uniform(1, 4), 1),
                                              rng.subset(f, 1, 1), Composition::Product);
        if (i % 2 == 0)
            t = compose_sets(f, t, t, Composition::Ratio);
        const SearchReport r = find_ratio_representations(f, t);
        for (const auto & w : r.witnesses)
            EXPECT_EQ(compose_sets(f, w.a, w.a, Composition::Ratio), t);

        // maximal A containing 1 with A/A in T, by exhausting subsets of F_p^*
        std::set<ElementSet> expected;
        bool any = false;
        for (std::uint32_t mask = 0; mask < (1u << (p - 2)); ++mask) {
            ElementSet a(p, {1});
            for (Residue x = 2; x < p; ++x)
                if (mask >> (x - 2) & 1)
                    a.insert(x);
            const ElementSet ra = compose_sets(f, a, a, Composition::Ratio);
            if (!ra.is_subset_of(t))
                continue;
            if (ra == t)
                any = true;
            bool maximal = true;
            for (Residue y = 2; y < p && maximal; ++y) {
                if (a.contains(y))
                    continue;
                ElementSet bigger = a;
                bigger.insert(y);
                maximal = !compose_sets(f, bigger, bigger, Composition::Ratio).is_subset_of(t);
            }
            if (maximal && ra == t)
                expected.insert(canonical_ratio_set(f, a));
        }
        EXPECT_EQ(any, !r.witnesses.empty()) << t.to_string();
        const auto got = rep_sets(r);
        EXPECT_EQ(std::set<ElementSet>(got.begin(), got.end()), expected) << t.to_string();
    }
}

TEST(DifferenceRepresentations, Examples)
{
    const Field f11 = Field::make(11);
    const MultSubgroup g = subgroup_of_order(f11, 2);
    const SearchReport r = find_difference_representations(f11, build_target(g, TargetVariant::GUnionZero, {}));
    EXPECT_EQ(rep_sets(r), std::vector<ElementSet>{set_of(11, {0, 1})});
    EXPECT_EQ(rep_sets(find_difference_representations(f11, set_of(11, {0}))), std::vector<ElementSet>{set_of(11, {0})});
    EXPECT_EQ(code_of([&] { find_difference_representations(f11, set_of(11, {1, 10})); }), Errc::MissingZero);

    // squares mod 13, an excluded order: just record that the search completes
    const Field f13 = Field::make(13);
    const SearchReport sq =
        find_difference_representations(f13, build_target(subgroup_of_order(f13, 6), TargetVariant::GUnionZero, {}));
    for (const auto & w : sq.witnesses)
        EXPECT_TRUE(w.verify(f13));
}

TEST(DifferenceClique, Examples)
{
    auto omega = [](Residue p) {
        const Field f = Field::make(p);
        const DifferenceClique c = max_difference_clique(f, subgroup_of_order(f, (p - 1) / 2));
        EXPECT_EQ(c.clique.size(), c.size);
        EXPECT_TRUE(c.clique.contains(0));
        ElementSet rz = subgroup_of_order(f, (p - 1) / 2).elements();
        rz.insert(0);
        EXPECT_TRUE(compose_sets(f, c.clique, c.clique, Composition::Difference).is_subset_of(rz));
        return c.size;
    };
    EXPECT_EQ(omega(17), 3u);
    EXPECT_EQ(omega(13), 3u);
    EXPECT_EQ(omega(5), 2u);
    EXPECT_EQ(omega(41), 5u);
}

TEST(Clique, MatchesBruteForceOnRandomGraphs)
{
    Rng rng(97);
    for (int i = 0; i < 150; ++i) {
        const std::size_t n = rng.uniform(1, 14);
        BitGraph g(n);
        const std::size_t density = rng.uniform(10, 90);
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t v = u + 1; v < n; ++v)
                if (rng.uniform(1, 100) <= density)
                    g.add_edge(u, v);

        std::set<std::vector<std::size_t>> maximal;
        std::size_t best = 0;
        for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
            std::vector<std::size_t> vs;
            for (std::size_t v = 0; v < n; ++v)
                if (mask >> v & 1)
                    vs.push_back(v);
            bool clique = true;
            for (std::size_t a = 0; a < vs.size() && clique; ++a)
                for (std::size_t b = a + 1; b < vs.size() && clique; ++b)
                    clique = g.adjacent(vs[a], vs[b]);
            if (!clique)
                continue;
            best = std::max(best, vs.size());
            bool is_max = true;
            for (std::size_t w = 0; w < n && is_max; ++w) {
                if (mask >> w & 1)
                    continue;
                is_max = !std::all_of(vs.begin(), vs.end(), [&](std::size_t v) { return g.adjacent(v, w); });
            }
            if (is_max)
                maximal.insert(vs);
        }
        std::set<std::vector<std::size_t>> got;
        enumerate_maximal_cliques(g, [&](const std::vector<std::size_t> & c) { EXPECT_TRUE(got.insert(c).second); });
        EXPECT_EQ(got, maximal);
        EXPECT_EQ(maximum_clique(g).vertices.size(), best);
    }
}

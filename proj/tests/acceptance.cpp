// Acceptance checks, one PASS/FAIL line per criterion.
//
//   acceptance            run all criteria
//   acceptance 2 5        run the listed criteria
//
// Exit status is nonzero if any selected criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>

#include "shiftdec/audit.hpp"
#include "shiftdec/decomp.hpp"
#include "shiftdec/setops.hpp"
#include "shiftdec/suites.hpp"

using namespace shiftdec;

namespace {

// Time budgets in seconds.
constexpr double kBudget[10] = {0, 1.0, 300.0, 300.0, 120.0, 180.0, 120.0, 300.0, 300.0, 120.0};
constexpr std::uint64_t kSeed = 20240601;

struct Verdict {
    bool ok = true;
    std::string detail;

    void fail(const std::string & why)
    {
        if (ok)
            detail = why;
        ok = false;
    }
};

std::size_t workers()
{
    return std::max(1u, std::thread::hardware_concurrency());
}

AuditConfig range(Residue pmin, Residue pmax)
{
    AuditConfig cfg;
    cfg.pmin = pmin;
    cfg.pmax = pmax;
    cfg.workers = workers();
    return cfg;
}

void expect_no_violations(const AuditOutcome & out, Verdict & v)
{
    if (!out.violations.empty())
        v.fail(std::to_string(out.violations.size()) + " violation(s), first: " + out.violations.front().message);
}

std::size_t total_witnesses(const AuditOutcome & out)
{
    std::size_t n = 0;
    for (const auto & r : out.reports)
        n += r.witnesses.size();
    return n;
}

Verdict counterexamples()
{
    Verdict v;
    const AuditOutcome out = reproduce_counterexamples();
    expect_no_violations(out, v);
    if (out.reports.size() != 2) {
        v.fail("expected two records");
        return v;
    }
    const Field f11 = Field::make(11), f19 = Field::make(19);
    if (subgroup_of_order(f11, 5).elements() != ElementSet(11, {1, 3, 4, 5, 9}) ||
        subgroup_of_order(f19, 6).elements() != ElementSet(19, {1, 7, 8, 11, 12, 18}))
        v.fail("subgroups differ from {1,3,4,5,9} / {1,7,8,11,12,18}");
    const std::pair<ElementSet, ElementSet> want[] = {
        canonical_product_pair(f11, ElementSet(11, {1, 7}), ElementSet(11, {1, 2, 3})),
        canonical_product_pair(f19, ElementSet(19, {1, 9}), ElementSet(19, {6, 9, 18})),
    };
    for (std::size_t i = 0; i < 2; ++i) {
        const auto & ws = out.reports[i].witnesses;
        const bool found = std::any_of(ws.begin(), ws.end(), [&](const DecompWitness & w) {
            return w.a == want[i].first && w.b == want[i].second;
        });
        if (!found)
            v.fail("p=" + std::to_string(out.reports[i].task.p) + " witness missing");
    }
    v.detail = v.ok ? "F_11 and F_19 decompositions reproduced up to scaling" : v.detail;
    return v;
}

Verdict sarkozy()
{
    Verdict v;
    AuditConfig cfg = range(3, 61);
    cfg.lambda_scope = LambdaScope::InG;
    cfg.oracle = true;
    const AuditOutcome out = audit_theorems(Theorem::Sarkozy, cfg);
    expect_no_violations(out, v);
    std::size_t oracle_runs = 0;
    for (const auto & r : out.reports) {
        if (!r.witnesses.empty())
            v.fail("product witness at p=" + std::to_string(r.task.p));
        if (r.task.p <= 23) {
            if (!r.oracle_agrees || !*r.oracle_agrees)
                v.fail("oracle missing or disagreeing at p=" + std::to_string(r.task.p));
            ++oracle_runs;
        }
    }
    if (v.ok)
        v.detail = std::to_string(out.reports.size()) + " targets, 0 witnesses, " + std::to_string(oracle_runs) +
                   " oracle cross-checks";
    return v;
}

Verdict ratio()
{
    Verdict v;
    const AuditOutcome out = audit_theorems(Theorem::RatioSet, range(3, 31));
    expect_no_violations(out, v);

    // small-|G| constructions: find the task and check its witnesses
    auto find = [&](Residue p, Residue order, const char * variant, Residue xi, Residue mu) -> const SearchReport * {
        for (const auto & r : out.reports)
            if (r.task.p == p && r.task.subgroup_order == order && r.task.variant == variant &&
                r.task.params == std::vector<std::pair<std::string, std::int64_t>>{{"xi", xi}, {"mu", mu}})
                return &r;
        return nullptr;
    };
    std::size_t constructions = 0;
    for (Residue p : odd_primes_between(3, 31)) {
        const Field f = Field::make(p);
        const Residue half = f.inv(2);
        struct Case {
            Residue order;
            const char * variant;
            Residue xi, mu;
            ElementSet a;
        };
        std::vector<Case> cases{
            {1, "xi-shift", 2, f.neg(1), ElementSet(p, {1})},
            {1, "xi-shift-with-zero", f.neg(1), 1, ElementSet(p, {1})},
        };
        if (p > 3) {
            // xi is taken as the least element of the coset xi G = {xi, -xi}
            const Residue xi_half = std::min(half, f.neg(half));
            const Residue three_halves = f.mul(3, half);
            const Residue xi_32 = std::min(three_halves, f.neg(three_halves));
            cases.push_back({2, "xi-shift", xi_half, half, ElementSet(p, {1})});
            cases.push_back({2, "xi-shift-with-zero", xi_32, f.neg(half), ElementSet(p, {1, f.neg(2)})});
        }
        for (const Case & c : cases) {
            const SearchReport * r = find(p, c.order, c.variant, c.xi, c.mu);
            const ElementSet canon = canonical_ratio_set(f, c.a);
            const bool hit = r && std::any_of(r->witnesses.begin(), r->witnesses.end(),
                                               [&](const DecompWitness & w) { return w.a == canon; });
            if (!hit)
                v.fail("construction A=" + c.a.to_string() + " missing at p=" + std::to_string(p) +
                       " |G|=" + std::to_string(c.order));
            ++constructions;
        }
    }
    std::size_t large = 0;
    for (const auto & r : out.reports)
        if (r.task.subgroup_order >= 3) {
            ++large;
            if (!r.witnesses.empty())
                v.fail("ratio witness for |G| >= 3 at p=" + std::to_string(r.task.p));
        }
    if (v.ok)
        v.detail = std::to_string(large) + " targets with |G| >= 3 and 0 witnesses; " + std::to_string(constructions) +
                   " small-|G| constructions found";
    return v;
}

Verdict levsonn()
{
    Verdict v;
    const AuditOutcome out = audit_theorems(Theorem::LevSonn, range(3, 61));
    expect_no_violations(out, v);
    std::size_t order_two = 0;
    for (const auto & r : out.reports) {
        const Residue d = r.task.subgroup_order;
        if (d != 2 && d != 6 && !r.witnesses.empty())
            v.fail("A - A = G u {0} at p=" + std::to_string(r.task.p));
        if (d == 2) {
            ++order_two;
            const bool hit = std::any_of(r.witnesses.begin(), r.witnesses.end(), [&](const DecompWitness & w) {
                return w.a == ElementSet(r.task.p, {0, 1});
            });
            if (!hit)
                v.fail("A={0,1} missing for |G|=2 at p=" + std::to_string(r.task.p));
        }
    }
    if (v.ok)
        v.detail = std::to_string(out.reports.size()) + " subgroups; {0,1} found for all " +
                   std::to_string(order_two) + " of order 2";
    return v;
}

Verdict kalmynin()
{
    Verdict v;
    const AuditOutcome out = audit_theorems(Theorem::KalmyninSum, range(3, 61));
    expect_no_violations(out, v);
    for (const auto & r : out.reports) {
        const Residue d = r.task.subgroup_order;
        for (const auto & w : r.witnesses)
            if (w.a.size() * w.b->size() != d || w.a.size() != w.b->size())
                v.fail("unbalanced sum witness at p=" + std::to_string(r.task.p));
        if ((r.task.p - 1) / d == 2 && !r.witnesses.empty())
            v.fail("sum witness for the squares at p=" + std::to_string(r.task.p));
    }
    if (v.ok)
        v.detail = std::to_string(out.reports.size()) + " subgroups, " + std::to_string(total_witnesses(out)) +
                   " witnesses, all with |A| = |B| = sqrt|G|";
    return v;
}

Verdict clique()
{
    Verdict v;
    const AuditOutcome out = audit_theorems(Theorem::PaleyClique, range(17, 101));
    std::ostringstream sizes;
    for (const auto & r : out.reports)
        sizes << " " << r.task.p << ":" << *r.clique_number;
    for (const auto & viol : out.violations)
        v.fail(viol.message);
    if (out.reports.empty() || out.reports.front().task.p != 17 || out.reports.front().clique_number != 3u)
        v.fail("clique(Paley 17) != 3");
    v.detail += (v.detail.empty() ? "" : "; ") + std::string("clique numbers") + sizes.str();
    return v;
}

Verdict stepanov()
{
    Verdict v;
    const StepanovSuiteResult res = run_stepanov_suite(kSeed, 1000, 101);
    if (res.tally.cases != 1000)
        v.fail("expected 1000 instances");
    for (const auto & f : res.tally.failures)
        v.fail("audit failed: " + f);

    const Field f11 = Field::make(11);
    const AuxAudit a =
        audit_instance(f11, ElementSet(11, {1, 7}), ElementSet(11, {1, 2, 3}), 2, subgroup_of_order(f11, 5));
    const bool tight = a.f.degree() == 6 && a.degree_lower == 6 && a.degree_upper == 6 && a.equality_basic &&
                       a.factorization_basic.value_or(false) && a.n * a.m == a.g_order + a.r + a.n - 1;
    if (!tight)
        v.fail("F_11 instance is not tight at degree 6");
    if (v.ok)
        v.detail = "1000 instances (" + std::to_string(res.lambda_in_g) + " with lambda in G, " +
                   std::to_string(res.equality_instances) + " equality cases); F_11 deg f = 6 tight";
    return v;
}

Verdict identities()
{
    Verdict v;
    std::ostringstream counts;
    for (const SuiteTally & t : run_identity_suite(kSeed, {500, 500, 200, 200})) {
        counts << " " << t.name << "=" << t.cases;
        if (!t.passed())
            v.fail(t.name + ": " + (t.failures.empty() ? "no cases" : t.failures.front()));
    }
    if (v.ok)
        v.detail = "all exact:" + counts.str();
    return v;
}

Verdict unity()
{
    Verdict v;
    const auto rows = run_unity_suite({100, 50, 8}, workers());
    std::size_t xk = 0, decomp = 0, classify = 0;
    for (const UnityRow & row : rows) {
        xk += row.xk_claim ? 1 : 0;
        decomp += row.decomp_witnesses ? 1 : 0;
        classify += row.survivors ? 1 : 0;
        if (!row.passed())
            v.fail("m=" + std::to_string(row.m) + " failed");
    }
    if (xk != 98 || decomp != 48 || classify != 6)
        v.fail("wrong m coverage");
    if (v.ok)
        v.detail = "x_k claim m<=100, no 2x2 decomposition m<=50, 2m dihedral maps m<=8";
    return v;
}

struct Criterion {
    const char * title;
    std::function<Verdict()> run;
};

} // namespace

int main(int argc, char ** argv)
{
    const Criterion criteria[] = {
        {"", nullptr},
        {"counterexample reproduction", counterexamples},
        {"no product decomposition of (G - lambda) \\ {0}, lambda in G, p <= 61", sarkozy},
        {"no ratio set equals a shifted coset for |G| >= 3, p <= 31", ratio},
        {"A - A != G u {0} for |G| not in {2, 6}, p <= 61", levsonn},
        {"sum decompositions of G are square-balanced, p <= 61", kalmynin},
        {"Paley clique number <= (sqrt(2p - 5) + 1) / 2, 17 <= p <= 101", clique},
        {"auxiliary polynomial audit on sampled instances", stepanov},
        {"exact identity suites", identities},
        {"roots of unity and Mobius maps", unity},
    };

    std::vector<int> selected;
    for (int i = 1; i < argc; ++i) {
        const int c = std::atoi(argv[i]);
        if (c < 1 || c > 9) {
            std::cerr << "usage: acceptance [criterion 1-9 ...]\n";
            return 64;
        }
        selected.push_back(c);
    }
    if (selected.empty())
        for (int c = 1; c <= 9; ++c)
            selected.push_back(c);

    int failures = 0;
    for (int c : selected) {
        const auto start = std::chrono::steady_clock::now();
        Verdict v;
        try {
            v = criteria[c].run();
        } catch (const std::exception & e) {
            v.fail(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (secs >= kBudget[c]) {
            std::ostringstream msg;
            msg << "over budget";
            v.fail(msg.str());
        }
        char timing[64];
        std::snprintf(timing, sizeof timing, "%.2fs / %.0fs", secs, kBudget[c]);
        std::cout << "criterion " << c << ": " << (v.ok ? "PASS" : "FAIL") << "  " << criteria[c].title << "  ["
                  << timing << "]  " << v.detail << std::endl;
        failures += v.ok ? 0 : 1;
    }
    return failures == 0 ? 0 : 1;
}

#include "shiftdec/suites.hpp"

#include <algorithm>
#include <atomic>
#include <random>
#include <sstream>
#include <thread>

#include "shiftdec/setops.hpp"
#include "shiftdec/sympoly.hpp"

namespace shiftdec {

namespace {

class Sampler {
public:
    Sampler(std::uint64_t seed, Residue pmin, Residue pmax) : rng_(seed), primes_(odd_primes_between(pmin, pmax))
    {
        if (primes_.empty())
            throw Error(Errc::OutOfRange, "no odd prime in the sampling range");
    }

    Field field() { return Field::make(primes_[uniform(0, primes_.size() - 1)]); }
    std::size_t uniform(std::size_t lo, std::size_t hi) { return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_); }

    /// Random k-subset of [lo, p - 1].
    ElementSet subset(const Field & f, std::size_t k, Residue lo)
    {
        ElementSet s(f.p());
        while (s.size() < k)
            s.insert(static_cast<Residue>(uniform(lo, f.p() - 1)));
        return s;
    }

private:
    std::mt19937_64 rng_;
    std::vector<Residue> primes_;
};

std::string describe(const Field & f, const std::string & what)
{
    return "p=" + std::to_string(f.p()) + " " + what;
}

} // namespace

std::vector<SuiteTally> run_identity_suite(std::uint64_t seed, const IdentityCounts & counts, Residue pmax)
{
    Sampler s(seed, 5, pmax);
    std::vector<SuiteTally> out{{"gf-identity", 0, {}}, {"newton-roundtrip", 0, {}}, {"derivative-ratio", 0, {}}, {"harmonic-sum", 0, {}}};

    for (std::size_t i = 0; i < counts.gf; ++i) {
        const Field f = s.field();
        const ElementSet a = s.subset(f, s.uniform(1, std::min<std::size_t>(8, f.p() - 1)), 1);
        ++out[0].cases;
        if (!check_gf_identity(f, a))
            out[0].failures.push_back(describe(f, "A=" + a.to_string()));
    }

    for (std::size_t i = 0; i < counts.newton; ++i) {
        const Field f = s.field();
        const std::size_t k = s.uniform(1, std::min<std::size_t>(8, f.p() - 1));
        Multiset xs(k);
        for (auto & x : xs)
            x = static_cast<Residue>(s.uniform(0, f.p() - 1));
        const SymData sym(f, xs, k);
        DensePoly expected = DensePoly::constant(f.p(), 1);
        for (Residue x : xs)
            expected = expected * DensePoly::linear_factor(f.p(), x);
        const DensePoly rebuilt = reconstruct_polynomial_from_power_sums(f, sym.power_sums());
        Multiset sorted = xs;
        std::sort(sorted.begin(), sorted.end());
        ++out[1].cases;
        if (!sym.newton_consistent(f) || rebuilt != expected || roots_over_field(f, rebuilt) != sorted) {
            std::ostringstream msg;
            msg << "multiset";
            for (Residue x : xs)
                msg << ' ' << x;
            out[1].failures.push_back(describe(f, msg.str()));
        }
    }

    for (std::size_t i = 0; i < counts.derivative; ++i) {
        const Field f = s.field();
        const auto b = static_cast<Residue>(s.uniform(0, f.p() - 1));
        const std::size_t n = s.uniform(1, std::min<std::size_t>(4, f.p() - 2));
        std::vector<Residue> hc(s.uniform(1, 7));
        DensePoly h(f.p());
        do {
            for (auto & c : hc)
                c = static_cast<Residue>(s.uniform(0, f.p() - 1));
            h = DensePoly(f.p(), hc);
        } while (h.eval(b) == 0);
        ++out[2].cases;
        if (!check_derivative_ratio(f, h, b, n).holds())
            out[2].failures.push_back(describe(f, "b=" + std::to_string(b) + " n=" + std::to_string(n) +
                                                      " h=" + h.to_string()));
    }

    for (std::size_t i = 0; i < counts.harmonic; ++i) {
        const Field f = s.field();
        const ElementSet b = s.subset(f, s.uniform(1, std::min<std::size_t>(10, f.p() - 1)), 1);
        ++out[3].cases;
        if (!harmonic_sum_identity(f, b).holds())
            out[3].failures.push_back(describe(f, "B=" + b.to_string()));
    }
    return out;
}

StepanovSuiteResult run_stepanov_suite(std::uint64_t seed, std::size_t count, Residue pmax)
{
    StepanovSuiteResult out;
    for (const AuditInput & in : sample_audit_inputs(seed, count, pmax)) {
        const Field & f = in.group.field();
        AuxAudit audit = audit_instance(f, in.a, in.b, in.lambda, in.group);
        ++out.tally.cases;
        out.lambda_in_g += audit.lambda_in_g ? 1 : 0;
        out.equality_instances += (audit.equality_basic || audit.equality_strong) ? 1 : 0;
        if (!audit.all_hold()) {
            std::ostringstream msg;
            msg << "p=" << f.p() << " |G|=" << in.group.order() << " lambda=" << in.lambda
                << " A=" << in.a.to_string() << " B=" << in.b.to_string();
            out.tally.failures.push_back(msg.str());
        }
        out.audits.push_back(std::move(audit));
    }
    return out;
}

bool UnityRow::passed() const noexcept
{
    return xk_claim.value_or(true) && decomp_witnesses.value_or(0) == 0 &&
           (!survivors || *survivors == 2 * m) && dihedral.value_or(true);
}

std::vector<UnityRow> run_unity_suite(const UnityLimits & limits, std::size_t workers)
{
    const std::size_t top = std::max({limits.xk_max, limits.decomp_max, limits.classify_max});
    std::vector<UnityRow> rows;
    for (std::size_t m = 3; m <= top; ++m)
        rows.push_back({m, {}, {}, {}, {}});

    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> failures(rows.size());
    auto worker = [&] {
        // Largest m first; it dominates the running time.
        for (std::size_t i = next++; i < rows.size(); i = next++) {
            UnityRow & row = rows[rows.size() - 1 - i];
            try {
                if (row.m <= limits.xk_max)
                    row.xk_claim = check_xk_product_claim(row.m).passed();
                if (row.m <= limits.decomp_max)
                    row.decomp_witnesses = search_2x2_decomposition(row.m).size();
                if (row.m <= limits.classify_max) {
                    const CircleMapReport r = classify_circle_preserving_maps(row.m);
                    row.survivors = r.survivors.size();
                    row.dihedral = r.non_dihedral == 0;
                }
            } catch (...) {
                failures[rows.size() - 1 - i] = std::current_exception();
            }
        }
    };
    const std::size_t threads = std::clamp<std::size_t>(workers, 1, std::max<std::size_t>(rows.size(), 1));
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t t = 0; t < threads; ++t)
            pool.emplace_back(worker);
    }
    for (const auto & f : failures)
        if (f)
            std::rethrow_exception(f);
    return rows;
}

AuditOutcome reproduce_counterexamples()
{
    struct Known {
        Residue p, order, lambda;
        ElementSet a, b;
    };
    const Known known[] = {
        {11, 5, 2, ElementSet(11, {1, 7}), ElementSet(11, {1, 2, 3})},
        {19, 6, 2, ElementSet(19, {1, 9}), ElementSet(19, {6, 9, 18})},
    };

    AuditOutcome outcome;
    for (const Known & k : known) {
        const Field field = Field::make(k.p);
        const MultSubgroup g = subgroup_of_order(field, k.order);
        const ElementSet s = build_target(g, TargetVariant::ShiftMinusLambda, {k.lambda, 0, 0});
        SearchReport report = find_exact_factorizations(field, s, WitnessKind::Product);
        report.task = {"counterexample", k.p, k.order, std::string(target_variant_name(TargetVariant::ShiftMinusLambda)),
                       {{"lambda", k.lambda}}};

        std::vector<std::pair<ElementSet, ElementSet>> expected{canonical_product_pair(field, k.a, k.b),
                                                                canonical_product_pair(field, k.b, k.a)};
        std::sort(expected.begin(), expected.end());
        expected.erase(std::unique(expected.begin(), expected.end()), expected.end());
        std::vector<std::pair<ElementSet, ElementSet>> got;
        for (const auto & w : report.witnesses)
            got.emplace_back(w.a, *w.b);
        std::sort(got.begin(), got.end());
        if (got != expected)
            outcome.violations.push_back({report.task,
                                          "counterexample p=" + std::to_string(k.p) +
                                              ": search output differs from the known decomposition A=" +
                                              k.a.to_string() + " B=" + k.b.to_string(),
                                          std::nullopt});
        outcome.reports.push_back(std::move(report));
    }
    return outcome;
}

} // namespace shiftdec

#include "shiftdec/audit.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <functional>
#include <sstream>
#include <thread>

#include "shiftdec/oracle.hpp"
#include "shiftdec/setops.hpp"

namespace shiftdec {

std::string_view theorem_name(Theorem which) noexcept
{
    switch (which) {
        case Theorem::Sarkozy: return "sarkozy";
        case Theorem::RatioSet: return "ratio";
        case Theorem::LevSonn: return "levsonn";
        case Theorem::KalmyninSum: return "kalmynin-sum";
        case Theorem::PaleyClique: return "clique";
        case Theorem::CensusLambdaNotInG: return "census-lambda-not-in-g";
    }
    return "?";
}

void AuditOutcome::throw_if_violated() const
{
    if (!violations.empty())
        throw TheoremViolation(violations.front());
}

namespace {

struct Task {
    TaskDescriptor desc;
    std::function<SearchReport()> run;
    /// Appends violations of the theorem's prediction for this task.
    std::function<void(const SearchReport &, std::vector<Violation> &)> check;
};

bool selected(const AuditConfig & config, Residue order)
{
    return config.orders.empty() ||
           std::find(config.orders.begin(), config.orders.end(), order) != config.orders.end();
}

void report_each_witness(const SearchReport & report, const std::string & why, std::vector<Violation> & out)
{
    for (const auto & w : report.witnesses) {
        std::ostringstream msg;
        msg << report.task.task << " p=" << report.task.p << " |G|=" << report.task.subgroup_order << ": "
            << why << " A=" << w.a.to_string();
        if (w.b)
            msg << " B=" << w.b->to_string();
        out.push_back({report.task, msg.str(), w});
    }
}

void check_oracle(const SearchReport & report, std::vector<Violation> & out)
{
    if (report.oracle_agrees && !*report.oracle_agrees)
        out.push_back({report.task, report.task.task + " p=" + std::to_string(report.task.p) +
                                        ": search and brute-force oracle disagree", std::nullopt});
}

SearchReport factor_with_oracle(const Field & field, const ElementSet & s, WitnessKind kind, bool oracle)
{
    SearchReport report = find_exact_factorizations(field, s, kind);
    if (oracle && field.p() <= kOraclePrimeCap)
        report.oracle_agrees = witness_pairs(report) == brute_force_factorizations(field, s, kind);
    return report;
}

void product_tasks(Theorem which, const AuditConfig & config, const Field & field, const MultSubgroup & g,
                   std::vector<Task> & tasks)
{
    LambdaScope scope = which == Theorem::CensusLambdaNotInG ? LambdaScope::NotInG : config.lambda_scope;
    for (Residue lambda = 1; lambda < field.p(); ++lambda) {
        const bool in_g = g.contains(lambda);
        if ((scope == LambdaScope::InG && !in_g) || (scope == LambdaScope::NotInG && in_g))
            continue;
        TaskDescriptor desc{std::string(theorem_name(which)), field.p(), g.order(),
                            std::string(target_variant_name(TargetVariant::ShiftMinusLambda)),
                            {{"lambda", lambda}}};
        const bool oracle = config.oracle;
        tasks.push_back({desc,
                         [=] {
                             const ElementSet s = build_target(g, TargetVariant::ShiftMinusLambda, {lambda, 0, 0});
                             return factor_with_oracle(field, s, WitnessKind::Product, oracle);
                         },
                         [=](const SearchReport & r, std::vector<Violation> & out) {
                             check_oracle(r, out);
                             if (which == Theorem::Sarkozy && in_g)
                                 report_each_witness(r, "product decomposition with lambda in G", out);
                         }});
    }
}

void ratio_tasks(const Field & field, const MultSubgroup & g, std::vector<Task> & tasks)
{
    for (Residue xi : g.coset_representatives())
        for (Residue mu = 1; mu < field.p(); ++mu)
            for (auto variant : {TargetVariant::XiShift, TargetVariant::XiShiftWithZero}) {
                TaskDescriptor desc{"ratio", field.p(), g.order(), std::string(target_variant_name(variant)),
                                    {{"xi", xi}, {"mu", mu}}};
                tasks.push_back({desc,
                                 [=] {
                                     const ElementSet t = build_target(g, variant, {0, xi, mu});
                                     return find_ratio_representations(field, t);
                                 },
                                 [order = g.order()](const SearchReport & r, std::vector<Violation> & out) {
                                     if (order >= 3)
                                         report_each_witness(r, "ratio set equals a shifted coset", out);
                                 }});
            }
}

bool is_square(std::size_t n, std::size_t & root)
{
    root = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(n))));
    return root * root == n;
}

std::vector<Task> build_tasks(Theorem which, const AuditConfig & config)
{
    std::vector<Task> tasks;
    for (Residue p : odd_primes_between(config.pmin, config.pmax)) {
        const Field field = Field::make(p);
        if (which == Theorem::PaleyClique) {
            if (p % 4 != 1 || p < 17)
                continue;
            const MultSubgroup g = subgroup_of_order(field, (p - 1) / 2);
            if (!selected(config, g.order()))
                continue;
            TaskDescriptor desc{"clique", p, g.order(), "paley", {}};
            tasks.push_back({desc,
                             [=] {
                                 const auto start = std::chrono::steady_clock::now();
                                 const DifferenceClique c = max_difference_clique(field, g);
                                 SearchReport r;
                                 r.nodes = c.nodes;
                                 r.clique_number = c.size;
                                 DecompWitness w;
                                 w.p = p;
                                 w.kind = WitnessKind::DiffRep;
                                 w.a = c.clique;
                                 w.target = compose_sets(field, c.clique, c.clique, Composition::Difference);
                                 r.witnesses.push_back(std::move(w));
                                 r.elapsed = std::chrono::steady_clock::now() - start;
                                 return r;
                             },
                             [](const SearchReport & r, std::vector<Violation> & out) {
                                 // omega <= (sqrt(2p - 5) + 1) / 2  <=>  (2 omega - 1)^2 <= 2p - 5
                                 const std::size_t w = *r.clique_number;
                                 if ((2 * w - 1) * (2 * w - 1) > 2 * std::size_t{r.task.p} - 5) {
                                     std::ostringstream msg;
                                     msg << "clique p=" << r.task.p << ": clique number " << w
                                         << " exceeds (sqrt(2p-5)+1)/2 = "
                                         << (std::sqrt(2.0 * r.task.p - 5) + 1) / 2 << ", clique "
                                         << r.witnesses.front().a.to_string();
                                     out.push_back({r.task, msg.str(), r.witnesses.front()});
                                 }
                             }});
            continue;
        }
        for (const MultSubgroup & g : enumerate_proper_subgroups(field)) {
            if (!selected(config, g.order()))
                continue;
            switch (which) {
                case Theorem::Sarkozy:
                case Theorem::CensusLambdaNotInG:
                    product_tasks(which, config, field, g, tasks);
                    break;
                case Theorem::RatioSet:
                    ratio_tasks(field, g, tasks);
                    break;
                case Theorem::LevSonn: {
                    TaskDescriptor desc{"levsonn", p, g.order(), std::string(target_variant_name(TargetVariant::GUnionZero)), {}};
                    tasks.push_back({desc,
                                     [=] {
                                         return find_difference_representations(
                                             field, build_target(g, TargetVariant::GUnionZero, {}));
                                     },
                                     [order = g.order()](const SearchReport & r, std::vector<Violation> & out) {
                                         if (order != 2 && order != 6)
                                             report_each_witness(r, "A - A = G u {0}", out);
                                     }});
                    break;
                }
                case Theorem::KalmyninSum: {
                    TaskDescriptor desc{"kalmynin-sum", p, g.order(), "g", {}};
                    const bool oracle = config.oracle;
                    tasks.push_back({desc,
                                     [=] { return factor_with_oracle(field, g.elements(), WitnessKind::Sum, oracle); },
                                     [order = g.order(), index = g.index()](const SearchReport & r,
                                                                             std::vector<Violation> & out) {
                                         check_oracle(r, out);
                                         if (index == 2) {
                                             report_each_witness(r, "sum decomposition of the squares", out);
                                             return;
                                         }
                                         std::size_t root = 0;
                                         const bool square = is_square(order, root);
                                         for (const auto & w : r.witnesses)
                                             if (!square || w.a.size() != root || w.b->size() != root) {
                                                 SearchReport one = r;
                                                 one.witnesses = {w};
                                                 report_each_witness(one, "sum decomposition with |A|,|B| != sqrt|G|", out);
                                             }
                                     }});
                    break;
                }
                case Theorem::PaleyClique:
                    break;
            }
        }
    }
    return tasks;
}

} // namespace

AuditOutcome audit_theorems(Theorem which, const AuditConfig & config)
{
    if (config.pmin < 3 || config.pmax < config.pmin || config.pmax > kDefaultPrimeBound)
        throw Error(Errc::OutOfRange, "prime range must satisfy 3 <= pmin <= pmax <= bound");
    std::vector<Task> tasks = build_tasks(which, config);

    std::vector<SearchReport> results(tasks.size());
    std::vector<std::exception_ptr> failures(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) {
            try {
                results[i] = tasks[i].run();
                results[i].task = tasks[i].desc;
            } catch (...) {
                failures[i] = std::current_exception();
            }
        }
    };
    const std::size_t threads = std::clamp<std::size_t>(config.workers, 1, std::max<std::size_t>(tasks.size(), 1));
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

    AuditOutcome outcome;
    for (std::size_t i = 0; i < tasks.size(); ++i)
        tasks[i].check(results[i], outcome.violations);
    outcome.reports = std::move(results);
    return outcome;
}

} // namespace shiftdec

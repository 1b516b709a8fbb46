#include "shiftdec/cli.hpp"

#include <fstream>
#include <functional>
#include <memory>
#include <thread>

#include <CLI11.hpp>

#include "shiftdec/audit.hpp"
#include "shiftdec/report.hpp"
#include "shiftdec/suites.hpp"

namespace shiftdec::cli {

namespace {

struct RunConfig {
    Residue pmin = 3;
    Residue pmax = 0;  ///< 0: the command's default
    std::vector<Residue> orders;
    LambdaScope lambda_scope = LambdaScope::InG;
    bool oracle = true;
    std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
    std::string out_path;
    bool timing = true;
    std::uint64_t seed = 1;
    std::size_t samples = 1000;
    UnityLimits unity;
};

const std::map<std::string, bool> kOnOff{{"on", true}, {"off", false}};

void add_range(CLI::App & cmd, RunConfig & cfg)
{
    cmd.add_option("--pmin", cfg.pmin, "smallest prime")->capture_default_str();
    cmd.add_option("--pmax", cfg.pmax, "largest prime");
}

void add_common(CLI::App & cmd, RunConfig & cfg)
{
    cmd.add_option("--workers", cfg.workers, "worker threads")->check(CLI::PositiveNumber);
    cmd.add_option("--out", cfg.out_path, "write records here instead of stdout");
    cmd.add_option("--timing", cfg.timing, "record elapsed_ms (off writes 0)")
        ->transform(CLI::CheckedTransformer(kOnOff));
}

void add_search(CLI::App & cmd, RunConfig & cfg, bool with_lambda, bool with_oracle)
{
    add_range(cmd, cfg);
    add_common(cmd, cfg);
    cmd.add_option("--orders", cfg.orders, "subgroup orders (default: all proper)")->delimiter(',');
    if (with_lambda)
        cmd.add_option("--lambda-scope", cfg.lambda_scope, "lambda range")
            ->transform(CLI::CheckedTransformer(std::map<std::string, LambdaScope>{
                {"in-g", LambdaScope::InG}, {"not-in-g", LambdaScope::NotInG}, {"all", LambdaScope::All}}));
    if (with_oracle)
        cmd.add_option("--oracle", cfg.oracle, "brute-force cross-check for p <= 23")
            ->transform(CLI::CheckedTransformer(kOnOff));
}

void require_primes(const RunConfig & cfg)
{
    if (cfg.pmin < 3)
        throw Error(Errc::OutOfRange, "--pmin must be at least 3");
    if (cfg.pmax > kDefaultPrimeBound)
        throw Error(Errc::OutOfRange, "--pmax exceeds the prime bound " + std::to_string(kDefaultPrimeBound));
    if (cfg.pmax < cfg.pmin || odd_primes_between(cfg.pmin, cfg.pmax).empty())
        throw Error(Errc::OutOfRange, "empty prime range [" + std::to_string(cfg.pmin) + ", " +
                                          std::to_string(cfg.pmax) + "]");
}

int report_outcome(const AuditOutcome & outcome, const RunConfig & cfg, std::ostream & out, std::ostream & err)
{
    for (const auto & r : outcome.reports)
        write_line(out, report_record(r, cfg.timing));
    for (const auto & v : outcome.violations) {
        err << "violation: " << v.message << '\n';
        if (v.witness) {
            SearchReport one;
            one.task = v.task;
            one.witnesses = {*v.witness};
            err << "witness: " << report_record(one, false)["witnesses"].dump() << '\n';
        }
    }
    return outcome.violations.empty() ? Ok : Violation;
}

int audit_command(Theorem which, RunConfig cfg, Residue default_pmax, std::ostream & out, std::ostream & err)
{
    if (cfg.pmax == 0)
        cfg.pmax = default_pmax;
    require_primes(cfg);
    AuditConfig ac;
    ac.pmin = cfg.pmin;
    ac.pmax = cfg.pmax;
    ac.orders = cfg.orders;
    ac.lambda_scope = cfg.lambda_scope;
    ac.oracle = cfg.oracle;
    ac.workers = cfg.workers;
    return report_outcome(audit_theorems(which, ac), cfg, out, err);
}

int stepanov_command(RunConfig cfg, std::ostream & out, std::ostream & err)
{
    if (cfg.pmax == 0)
        cfg.pmax = 101;
    require_primes(cfg);
    const StepanovSuiteResult res = run_stepanov_suite(cfg.seed, cfg.samples, cfg.pmax);
    for (const AuxAudit & a : res.audits) {
        Json rec = Json::object();
        rec["task"] = "stepanov-audit";
        rec["p"] = a.a.modulus();
        rec["subgroup_order"] = a.g_order;
        rec["params"] = Json{{"lambda", a.lambda}};
        rec["A"] = a.a.elements();
        rec["B"] = a.b.elements();
        rec["lambda_in_g"] = a.lambda_in_g;
        rec["degree"] = a.f.degree();
        rec["degree_lower"] = a.degree_lower;
        rec["degree_upper"] = a.degree_upper;
        rec["equality"] = a.equality_basic || a.equality_strong;
        rec["holds"] = a.all_hold();
        write_line(out, rec);
    }
    for (const auto & f : res.tally.failures)
        err << "violation: stepanov " << f << '\n';
    return res.tally.passed() ? Ok : Violation;
}

int identities_command(const RunConfig & cfg, std::ostream & out, std::ostream & err)
{
    const Residue pmax = cfg.pmax == 0 ? 101 : cfg.pmax;
    if (odd_primes_between(5, pmax).empty())
        throw Error(Errc::OutOfRange, "--pmax must admit a prime >= 5");
    int code = Ok;
    for (const SuiteTally & t : run_identity_suite(cfg.seed, {}, pmax)) {
        Json rec = Json::object();
        rec["task"] = "identities";
        rec["suite"] = t.name;
        rec["cases"] = t.cases;
        rec["failures"] = t.failures.size();
        write_line(out, rec);
        for (const auto & f : t.failures)
            err << "violation: " << t.name << ' ' << f << '\n';
        if (!t.passed())
            code = Violation;
    }
    return code;
}

int unity_command(const RunConfig & cfg, std::ostream & out, std::ostream & err)
{
    if (cfg.unity.classify_max > 12)
        throw Error(Errc::OutOfRange, "--classify-max is at most 12");
    int code = Ok;
    for (const UnityRow & row : run_unity_suite(cfg.unity, cfg.workers)) {
        Json rec = Json::object();
        rec["task"] = "unity";
        rec["m"] = row.m;
        if (row.xk_claim)
            rec["xk_claim"] = *row.xk_claim;
        if (row.decomp_witnesses)
            rec["decomp_2x2_witnesses"] = *row.decomp_witnesses;
        if (row.survivors)
            rec["circle_maps"] = *row.survivors;
        if (row.dihedral)
            rec["dihedral"] = *row.dihedral;
        write_line(out, rec);
        if (!row.passed()) {
            err << "violation: unity m=" << row.m << '\n';
            code = Violation;
        }
    }
    return code;
}

} // namespace

int run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err)
{
    CLI::App app{"Product decompositions of shifted multiplicative subgroups over F_p"};
    app.require_subcommand(1);
    RunConfig cfg;
    std::function<int(std::ostream &)> action;

    auto bind = [&](CLI::App * cmd, std::function<int(std::ostream &)> fn) {
        cmd->callback([&action, fn] { action = fn; });
    };

    CLI::App * verify = app.add_subcommand("verify", "exhaustive theorem audits");
    verify->require_subcommand(1);
    const std::pair<const char *, std::pair<Theorem, Residue>> audits[] = {
        {"sarkozy", {Theorem::Sarkozy, 61}},  {"ratio", {Theorem::RatioSet, 31}},
        {"levsonn", {Theorem::LevSonn, 61}},  {"kalmynin-sum", {Theorem::KalmyninSum, 61}},
        {"clique", {Theorem::PaleyClique, 101}},
    };
    for (const auto & [name, entry] : audits) {
        CLI::App * cmd = verify->add_subcommand(name);
        const bool product = entry.first == Theorem::Sarkozy;
        add_search(*cmd, cfg, product, product || entry.first == Theorem::KalmyninSum);
        const auto [which, pmax] = entry;
        bind(cmd, [&, which, pmax](std::ostream & o) { return audit_command(which, cfg, pmax, o, err); });
    }

    CLI::App * census = app.add_subcommand("census", "searches without a theorem expectation");
    census->require_subcommand(1);
    CLI::App * lnig = census->add_subcommand("lambda-not-in-g");
    add_search(*lnig, cfg, false, true);
    bind(lnig, [&](std::ostream & o) { return audit_command(Theorem::CensusLambdaNotInG, cfg, 31, o, err); });

    CLI::App * reproduce = app.add_subcommand("reproduce");
    reproduce->require_subcommand(1);
    CLI::App * counter = reproduce->add_subcommand("counterexamples");
    add_common(*counter, cfg);
    bind(counter, [&](std::ostream & o) { return report_outcome(reproduce_counterexamples(), cfg, o, err); });

    CLI::App * stepanov = app.add_subcommand("stepanov");
    stepanov->require_subcommand(1);
    CLI::App * saudit = stepanov->add_subcommand("audit", "auxiliary polynomial audit on sampled instances");
    add_range(*saudit, cfg);
    add_common(*saudit, cfg);
    saudit->add_option("--seed", cfg.seed)->capture_default_str();
    saudit->add_option("--samples", cfg.samples)->capture_default_str();
    bind(saudit, [&](std::ostream & o) { return stepanov_command(cfg, o, err); });

    CLI::App * identities = app.add_subcommand("identities");
    identities->require_subcommand(1);
    CLI::App * fuzz = identities->add_subcommand("fuzz", "randomized exact identity checks");
    fuzz->add_option("--pmax", cfg.pmax, "largest prime");
    add_common(*fuzz, cfg);
    fuzz->add_option("--seed", cfg.seed)->capture_default_str();
    bind(fuzz, [&](std::ostream & o) { return identities_command(cfg, o, err); });

    CLI::App * unity = app.add_subcommand("unity");
    unity->require_subcommand(1);
    CLI::App * uaudit = unity->add_subcommand("audit", "roots-of-unity and Mobius checks");
    add_common(*uaudit, cfg);
    uaudit->add_option("--mmax", cfg.unity.xk_max, "largest m for the x_k product claim")->capture_default_str();
    uaudit->add_option("--decomp-max", cfg.unity.decomp_max, "largest m for the 2x2 search")->capture_default_str();
    uaudit->add_option("--classify-max", cfg.unity.classify_max, "largest m for the Mobius classification")
        ->capture_default_str();
    bind(uaudit, [&](std::ostream & o) { return unity_command(cfg, o, err); });

    try {
        app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
    } catch (const CLI::CallForHelp &) {
        err << app.help();
        return Ok;
    } catch (const CLI::CallForAllHelp &) {
        err << app.help("", CLI::AppFormatMode::All);
        return Ok;
    } catch (const CLI::ParseError & e) {
        err << "error: " << e.what() << '\n';
        return UsageError;
    }

    try {
        std::unique_ptr<std::ofstream> file;
        if (!cfg.out_path.empty()) {
            file = std::make_unique<std::ofstream>(cfg.out_path);
            if (!*file) {
                err << "error: cannot open " << cfg.out_path << '\n';
                return UsageError;
            }
        }
        return action(file ? *file : out);
    } catch (const Error & e) {
        err << "error: " << e.what() << '\n';
        return e.code() == Errc::OutOfRange || e.code() == Errc::NotPrime ? UsageError : Violation;
    }
}

} // namespace shiftdec::cli

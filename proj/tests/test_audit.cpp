#include <gtest/gtest.h>

#include "shiftdec/audit.hpp"
#include "shiftdec/oracle.hpp"
#include "shiftdec/suites.hpp"

using namespace shiftdec;

namespace {

bool same_reports(const AuditOutcome & x, const AuditOutcome & y)
{
    if (x.reports.size() != y.reports.size())
        return false;
    for (std::size_t i = 0; i < x.reports.size(); ++i) {
        const auto & a = x.reports[i];
        const auto & b = y.reports[i];
        if (a.task.p != b.task.p || a.task.subgroup_order != b.task.subgroup_order || a.task.params != b.task.params ||
            a.nodes != b.nodes || witness_pairs(a) != witness_pairs(b))
            return false;
    }
    return true;
}

} // namespace

TEST(Audit, SarkozySmallRangeHasNoWitnesses)
{
    AuditConfig cfg;
    cfg.pmax = 23;
    cfg.oracle = true;
    const AuditOutcome out = audit_theorems(Theorem::Sarkozy, cfg);
    EXPECT_TRUE(out.violations.empty());
    for (const auto & r : out.reports) {
        EXPECT_TRUE(r.witnesses.empty());
        ASSERT_TRUE(r.oracle_agrees);
        EXPECT_TRUE(*r.oracle_agrees);
    }
    EXPECT_NO_THROW(out.throw_if_violated());
}

TEST(Audit, CanonicalTaskOrder)
{
    AuditConfig cfg;
    cfg.pmax = 31;
    cfg.lambda_scope = LambdaScope::All;
    const AuditOutcome out = audit_theorems(Theorem::CensusLambdaNotInG, cfg);
    for (std::size_t i = 1; i < out.reports.size(); ++i) {
        const auto & a = out.reports[i - 1].task;
        const auto & b = out.reports[i].task;
        EXPECT_LT(std::tie(a.p, a.subgroup_order, a.params), std::tie(b.p, b.subgroup_order, b.params));
    }
}

TEST(Audit, DeterministicAcrossWorkerCounts)
{
    AuditConfig cfg;
    cfg.pmax = 29;
    cfg.lambda_scope = LambdaScope::All;
    const AuditOutcome one = audit_theorems(Theorem::Sarkozy, cfg);
    cfg.workers = 4;
    const AuditOutcome four = audit_theorems(Theorem::Sarkozy, cfg);
    EXPECT_TRUE(same_reports(one, four));
}

TEST(Audit, LambdaOutsideGroupFindsTheKnownDecompositions)
{
    AuditConfig cfg;
    cfg.pmin = 11;
    cfg.pmax = 19;
    cfg.lambda_scope = LambdaScope::NotInG;
    const AuditOutcome out = audit_theorems(Theorem::Sarkozy, cfg);
    EXPECT_TRUE(out.violations.empty());
    bool eleven = false, nineteen = false;
    for (const auto & r : out.reports)
        if (!r.witnesses.empty()) {
            const auto lambda = r.task.params.front().second;
            eleven = eleven || (r.task.p == 11 && r.task.subgroup_order == 5 && lambda == 2);
            nineteen = nineteen || (r.task.p == 19 && r.task.subgroup_order == 6 && lambda == 2);
        }
    EXPECT_TRUE(eleven);
    EXPECT_TRUE(nineteen);
}

TEST(Audit, CliqueBoundViolationIsReported)
{
    AuditConfig cfg;
    cfg.pmin = 41;
    cfg.pmax = 41;
    const AuditOutcome out = audit_theorems(Theorem::PaleyClique, cfg);
    ASSERT_EQ(out.reports.size(), 1u);
    EXPECT_EQ(out.reports[0].clique_number, 5u);
    ASSERT_EQ(out.violations.size(), 1u);
    ASSERT_TRUE(out.violations[0].witness);
    EXPECT_EQ(out.violations[0].witness->a.size(), 5u);
    try {
        out.throw_if_violated();
        FAIL() << "expected a TheoremViolation";
    } catch (const TheoremViolation & v) {
        EXPECT_EQ(v.code(), Errc::TheoremViolation);
        EXPECT_EQ(v.violation().task.p, 41u);
    }
}

TEST(Audit, LevSonnFindsTheOrderTwoWitness)
{
    AuditConfig cfg;
    cfg.pmax = 23;
    cfg.orders = {2};
    const AuditOutcome out = audit_theorems(Theorem::LevSonn, cfg);
    EXPECT_TRUE(out.violations.empty());
    for (const auto & r : out.reports) {
        ASSERT_EQ(r.witnesses.size(), 1u) << r.task.p;
        EXPECT_EQ(r.witnesses[0].a, ElementSet(r.task.p, {0, 1}));
    }
}

TEST(Audit, RejectsBadRanges)
{
    AuditConfig cfg;
    cfg.pmin = 3;
    cfg.pmax = 2;
    EXPECT_THROW(audit_theorems(Theorem::Sarkozy, cfg), Error);
}

TEST(Suites, IdentitiesPass)
{
    for (const SuiteTally & t : run_identity_suite(5, {50, 50, 20, 20}))
        EXPECT_TRUE(t.passed()) << t.name;
}

TEST(Suites, StepanovPass)
{
    const StepanovSuiteResult r = run_stepanov_suite(5, 100, 61);
    EXPECT_TRUE(r.tally.passed());
    EXPECT_EQ(r.tally.cases, 100u);
    EXPECT_GT(r.equality_instances, 0u);
}

TEST(Suites, CounterexamplesReproduce)
{
    const AuditOutcome out = reproduce_counterexamples();
    EXPECT_TRUE(out.violations.empty());
    ASSERT_EQ(out.reports.size(), 2u);
    EXPECT_EQ(out.reports[0].task.p, 11u);
    EXPECT_EQ(out.reports[1].task.p, 19u);
}

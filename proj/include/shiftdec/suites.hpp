#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "shiftdec/audit.hpp"
#include "shiftdec/stepanov.hpp"
#include "shiftdec/unity.hpp"

namespace shiftdec {

struct SuiteTally {
    std::string name;
    std::size_t cases = 0;
    std::vector<std::string> failures;

    bool passed() const noexcept { return cases > 0 && failures.empty(); }
};

struct IdentityCounts {
    std::size_t gf = 500;
    std::size_t newton = 500;
    std::size_t derivative = 200;
    std::size_t harmonic = 200;
};

/// Randomized exact checks over primes up to pmax: the cross-multiplied
/// generating-function identity, Newton roundtrips, the derivative ratio for
/// f = (x - b)^n h, and sum_b b H(b) = m(m+1)/2.
std::vector<SuiteTally> run_identity_suite(std::uint64_t seed, const IdentityCounts & counts = {},
                                           Residue pmax = 101);

struct StepanovSuiteResult {
    std::vector<AuxAudit> audits;
    SuiteTally tally{"stepanov", 0, {}};
    std::size_t lambda_in_g = 0;
    std::size_t equality_instances = 0;
};

/// Audits `count` sampled instances with AB + lambda in G u {0}.
StepanovSuiteResult run_stepanov_suite(std::uint64_t seed, std::size_t count = 1000, Residue pmax = 101);

struct UnityLimits {
    std::size_t xk_max = 100;
    std::size_t decomp_max = 50;
    std::size_t classify_max = 8;
};

struct UnityRow {
    std::size_t m = 0;
    std::optional<bool> xk_claim;
    std::optional<std::size_t> decomp_witnesses;
    std::optional<std::size_t> survivors;
    std::optional<bool> dihedral;

    bool passed() const noexcept;
};

/// One row per m in [3, max limit]; work is spread over `workers` threads.
std::vector<UnityRow> run_unity_suite(const UnityLimits & limits = {}, std::size_t workers = 1);

/// The two small product decompositions of shifted subgroups: p = 11 with
/// |G| = 5 and p = 19 with |G| = 6, both at lambda = 2. A violation is
/// recorded if the search output differs from the canonical forms of the
/// known pairs.
AuditOutcome reproduce_counterexamples();

} // namespace shiftdec

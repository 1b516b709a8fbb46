#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "shiftdec/decomp.hpp"
#include "shiftdec/error.hpp"

namespace shiftdec {

enum class Theorem {
    Sarkozy,            ///< AB = (G - lambda) \ {0} has no solution for lambda in G
    RatioSet,           ///< A/A avoids both shifted-coset targets for |G| >= 3
    LevSonn,            ///< A - A != G u {0} for |G| not in {2, 6}
    KalmyninSum,        ///< A + B = G forces |A| = |B| = sqrt|G|, impossible for squares
    PaleyClique,        ///< Paley clique number <= (sqrt(2p - 5) + 1) / 2
    CensusLambdaNotInG, ///< product decompositions for lambda outside G, no expectation
};

std::string_view theorem_name(Theorem which) noexcept;

enum class LambdaScope { InG, NotInG, All };

struct AuditConfig {
    Residue pmin = 3;
    Residue pmax = 3;
    /// Restrict to these subgroup orders; empty means all proper subgroups.
    std::vector<Residue> orders;
    LambdaScope lambda_scope = LambdaScope::InG;
    /// Cross-check product/sum searches against the brute-force oracle for p <= 23.
    bool oracle = false;
    std::size_t workers = 1;
};

struct Violation {
    TaskDescriptor task;
    std::string message;
    std::optional<DecompWitness> witness;
};

class TheoremViolation : public Error {
public:
    explicit TheoremViolation(Violation v)
        : Error(Errc::TheoremViolation, v.message), violation_(std::move(v)) {}

    const Violation & violation() const noexcept { return violation_; }

private:
    Violation violation_;
};

struct AuditOutcome {
    /// Canonical task order: p, subgroup order, then parameters, all ascending.
    std::vector<SearchReport> reports;
    std::vector<Violation> violations;

    void throw_if_violated() const;
};

/// Runs one theorem audit over every odd prime in [pmin, pmax]. Tasks fan out to
/// `workers` threads; the outcome does not depend on the worker count.
AuditOutcome audit_theorems(Theorem which, const AuditConfig & config);

} // namespace shiftdec

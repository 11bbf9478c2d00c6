#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pbmo/landscape.hpp"
#include "pbmo/problems.hpp"

namespace pbmo {

enum class ClaimKind { pareto_set, local_optima, claimed_front, ratio_formula };
enum class Outcome { match, mismatch, not_applicable };

std::string_view to_string(ClaimKind k);
std::string_view to_string(Outcome o);

struct Counterexample {
    std::string item;      // bit-string literal or objective vector
    std::string claimed;   // what the closed form says
    std::string computed;  // what enumeration says
};

struct ClaimResult {
    ClaimKind kind = ClaimKind::pareto_set;
    Outcome outcome = Outcome::not_applicable;
    bool must_match = false;
    std::size_t mismatches = 0;  // total, even when counterexamples are truncated
    std::vector<Counterexample> counterexamples;
};

struct VerificationReport {
    std::string instance;
    std::vector<ClaimResult> claims;
    std::vector<std::string> notes;

    bool must_match_ok() const;
    const ClaimResult& claim(ClaimKind kind) const;
};

struct VerifyOptions {
    std::size_t max_counterexamples = 5;
    EnumerationOptions enumeration{};
};

// Whether a claim is held to exact agreement. OJZR claims are informational.
bool is_must_match(Family family, ClaimKind kind);

VerificationReport verify(const LandscapeReport& landscape, const VerifyOptions& opts = {});
VerificationReport verify(const ProblemInstance& inst, const VerifyOptions& opts = {});

// Every valid instance with even n in [6, n_max]: all valid k, every l >= 2
// dividing n with b > 1. Ordered by family, n, k, l.
std::vector<ProblemInstance> verification_grid(std::optional<Family> scope, int n_max = 14);

// Instances are verified in parallel; the result order matches the input.
std::vector<VerificationReport> verify_all(const std::vector<ProblemInstance>& instances,
                                           const VerifyOptions& opts = {}, unsigned threads = 1);

std::string serialize(const VerificationReport& report);
std::string serialize(const std::vector<VerificationReport>& reports);

}  // namespace pbmo

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pbmo/bitstring.hpp"
#include "pbmo/problems.hpp"

namespace pbmo {

// Portable random stream: std::mt19937_64 (its output sequence is fixed by
// the standard) seeded through SplitMix64 from (seed, stream). Only raw
// 64-bit outputs are consumed; bounded draws use rejection sampling, so no
// library-specific distribution code is involved.
class Rng {
public:
    Rng(std::uint64_t seed, std::uint64_t stream = 0);
    std::uint64_t next() { return engine_(); }
    std::uint64_t below(std::uint64_t bound);  // uniform in [0, bound), bound >= 1

private:
    std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t& state);

enum class Algorithm { semo, gsemo };
std::string_view to_string(Algorithm a);
std::optional<Algorithm> algorithm_from_name(std::string_view name);

struct Target {
    enum class Kind { full_front, front_point, coverage };
    Kind kind = Kind::full_front;
    ObjectiveVector point{};   // front_point
    double fraction = 1.0;     // coverage, in (0, 1]

    // "full_front", "front_point:F1,F2" or "coverage:FRACTION".
    static Target parse(std::string_view text);
    std::string to_string() const;
};

struct RunConfig {
    Algorithm algorithm = Algorithm::semo;
    ProblemInstance instance;
    std::uint64_t seed = 0;
    std::uint64_t budget = 1;
    Target target{};
};

struct ArchiveEntry {
    BitString x;
    ObjectiveVector f;
    bool operator==(const ArchiveEntry&) const = default;
};

struct RunResult {
    std::uint64_t evaluations_used = 0;
    bool hit = false;
    std::optional<std::uint64_t> hitting_time;
    std::vector<ArchiveEntry> archive;
    bool operator==(const RunResult&) const = default;
};

// Called after every evaluation with the evaluation count and the archive.
using StepObserver = std::function<void(std::uint64_t, const std::vector<ArchiveEntry>&)>;

struct RunOptions {
    // Reference front for hit detection; computed from the instance if null.
    const std::vector<ObjectiveVector>* front = nullptr;
    StepObserver observer;
};

// Exact Pareto front used as the hitting target: the oracle front for
// families whose closed form is verified, brute force otherwise.
std::vector<ObjectiveVector> target_front(const ProblemInstance& inst);

// Archive update: a newcomer enters unless some member weakly dominates it;
// members it dominates leave. Returns whether the newcomer entered.
bool archive_insert(std::vector<ArchiveEntry>& archive, const ArchiveEntry& candidate);

RunResult semo_run(const RunConfig& cfg, const RunOptions& opts = {});
RunResult gsemo_run(const RunConfig& cfg, const RunOptions& opts = {});
RunResult run(const RunConfig& cfg, const RunOptions& opts = {});

struct SeedOutcome {
    std::uint64_t seed = 0;
    bool hit = false;
    std::optional<std::uint64_t> hitting_time;
    std::uint64_t evaluations_used = 0;
};

struct ExperimentSummary {
    std::vector<SeedOutcome> runs;  // in seed-list order
    double success_fraction = 0.0;
    // Over successful runs only; absent when nothing hit.
    std::optional<double> median_hitting_time;
    std::optional<double> mean_hitting_time;
};

ExperimentSummary hitting_time_experiment(const RunConfig& tmpl, std::span<const std::uint64_t> seeds,
                                          unsigned threads = 1);

// Tab-separated rows: seed, hit, hitting_time, evaluations_used.
std::string to_table(const ExperimentSummary& s);
std::string summary_line(const ExperimentSummary& s);

}  // namespace pbmo

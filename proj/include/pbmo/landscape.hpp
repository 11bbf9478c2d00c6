#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pbmo/bitstring.hpp"
#include "pbmo/dominance.hpp"
#include "pbmo/problems.hpp"
#include "pbmo/rational.hpp"

namespace pbmo {

inline constexpr const char* enumeration_cap_env = "PBMO_ENUM_CAP";
inline constexpr int builtin_enumeration_cap = 24;

// Cap from the environment variable when set to a valid integer, else 24.
int default_enumeration_cap();

struct EnumerationOptions {
    int cap = default_enumeration_cap();
    unsigned threads = 1;
};

struct FrontPoint {
    ObjectiveVector vector;
    std::uint64_t multiplicity = 0;  // number of preimages
    bool operator==(const FrontPoint&) const = default;
};

// Everything the figure exporter needs about solutions with a given number
// of ones.
struct OnesSummary {
    int ones = 0;
    std::uint64_t solutions = 0;
    std::vector<ObjectiveValue> f1_values;  // ascending, distinct
    std::vector<ObjectiveValue> f2_values;
    std::map<int, std::uint64_t> level_counts;  // level -> solutions
};

struct LandscapeReport {
    ProblemInstance instance;
    std::vector<ObjectiveVector> values;       // indexed by solution index
    std::vector<std::uint16_t> level_by_index; // 1-based
    LevelAssignment levels;
    std::vector<BitString> pareto_set;         // ascending index
    std::vector<FrontPoint> pareto_front;      // ascending f1
    std::vector<BitString> local_optima;       // non-global, ascending index
    int components = 0;
    ExactRational ratio;
    std::vector<OnesSummary> per_ones;         // ones = 0..n

    bool is_pareto_optimal(std::uint64_t idx) const { return level_by_index[idx] == 1; }
};

LandscapeReport enumerate_landscape(const ProblemInstance& inst, const EnumerationOptions& opts = {});

// Structured text with stable key order.
std::string serialize(const LandscapeReport& report);

enum class FrontShape { linear, nonlinear_concave, nonlinear_convex, degenerate };
std::string_view to_string(FrontShape s);

struct SeparabilityWitness {
    int position = 0;  // 1-based bit whose flip delta is context-dependent
    BitString context_a;
    BitString context_b;  // both have the bit at 0
    int delta_a = 0;
    int delta_b = 0;
};

struct SeparabilityReport {
    int objective = 1;  // 1 or 2
    bool separable = false;
    // contributions[i] = (g_{i+1}(0), g_{i+1}(1)) when separable.
    std::vector<std::pair<int, int>> contributions;
    std::optional<SeparabilityWitness> witness;
};

struct CharacteristicProfile {
    bool non_symmetric = false;
    bool non_completely_conflicting = false;
    bool disjoint_optima = false;
    bool not_fully_separable = false;
    bool low_ratio_witness = false;
    bool nonlinear_front = false;
    bool has_local_optima = false;
    bool operator==(const CharacteristicProfile&) const = default;
};

std::string to_string(const CharacteristicProfile& p);

// Analyses of an existing report.
bool is_completely_conflicting(const LandscapeReport& r);
bool is_symmetric_pair(const LandscapeReport& r);
std::pair<bool, int> is_disjoint_pareto(const LandscapeReport& r);
SeparabilityReport is_fully_separable(const LandscapeReport& r, int which_objective);
FrontShape front_shape(const LandscapeReport& r);
const ExactRational& ratio_pareto(const LandscapeReport& r);
CharacteristicProfile characteristic_profile(const LandscapeReport& r,
                                             const ExactRational& low_ratio_threshold = ExactRational(1, 2));

// Convenience forms that enumerate first.
std::vector<BitString> local_optima(const ProblemInstance& inst, const EnumerationOptions& opts = {});
bool is_completely_conflicting(const ProblemInstance& inst, const EnumerationOptions& opts = {});
bool is_symmetric_pair(const ProblemInstance& inst, const EnumerationOptions& opts = {});
std::pair<bool, int> is_disjoint_pareto(const ProblemInstance& inst, const EnumerationOptions& opts = {});
SeparabilityReport is_fully_separable(const ProblemInstance& inst, int which_objective,
                                      const EnumerationOptions& opts = {});
FrontShape front_shape(const ProblemInstance& inst, const EnumerationOptions& opts = {});
ExactRational ratio_pareto(const ProblemInstance& inst, const EnumerationOptions& opts = {});
CharacteristicProfile characteristic_profile(const ProblemInstance& inst, const EnumerationOptions& opts = {});

// Runs fn(begin, end, chunk) over [0, total) split into contiguous chunks,
// one per worker. Chunk c always covers the same range for a given
// (total, workers), which keeps merges deterministic.
template <class Fn>
void for_each_chunk(std::uint64_t total, unsigned workers, Fn&& fn);

}  // namespace pbmo

#include "pbmo/detail/parallel.hpp"

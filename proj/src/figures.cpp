#include "pbmo/figures.hpp"

#include <bit>
#include <map>
#include <tuple>

#include <fmt/format.h>
#include <fmt/ranges.h>

namespace pbmo {

std::string_view to_string(FigureKind k) {
    switch (k) {
        case FigureKind::objectives_vs_ones: return "objectives_vs_ones";
        case FigureKind::objective_space: return "objective_space";
        case FigureKind::levels_vs_ones: return "levels_vs_ones";
    }
    return "unknown";
}

std::optional<FigureKind> figure_kind_from_name(std::string_view name) {
    for (auto k : {FigureKind::objectives_vs_ones, FigureKind::objective_space, FigureKind::levels_vs_ones}) {
        if (to_string(k) == name) return k;
    }
    return std::nullopt;
}

namespace {

// Rank of a class label; used as the third sort key.
enum SolutionClass { pareto = 0, local_optimum = 1, other = 2 };
constexpr std::string_view class_names[] = {"pareto", "local_optimum", "other"};

std::vector<std::string> row(std::initializer_list<std::string> cells) { return cells; }

}  // namespace

FigureDataset build_figure(const LandscapeReport& r, FigureKind kind) {
    FigureDataset d{kind, r.instance.descriptor(), {}, {}};
    const std::uint64_t total = r.values.size();
    switch (kind) {
        case FigureKind::objectives_vs_ones: {
            d.header = {"ones", "f1", "f2", "count"};
            std::map<std::tuple<int, int, int>, std::uint64_t> cells;
            for (std::uint64_t idx = 0; idx < total; ++idx) {
                ++cells[{std::popcount(idx), r.values[idx].f1, r.values[idx].f2}];
            }
            for (const auto& [key, count] : cells) {
                const auto& [ones, f1, f2] = key;
                d.rows.push_back(row({std::to_string(ones), std::to_string(f1), std::to_string(f2),
                                      std::to_string(count)}));
            }
            break;
        }
        case FigureKind::objective_space: {
            d.header = {"f1", "f2", "multiplicity", "class"};
            std::vector<char> is_lo(total, 0);
            for (const auto& x : r.local_optima) is_lo[x.index()] = 1;
            std::map<std::tuple<int, int, int>, std::uint64_t> cells;
            for (std::uint64_t idx = 0; idx < total; ++idx) {
                const int cls = r.is_pareto_optimal(idx) ? pareto : is_lo[idx] ? local_optimum : other;
                ++cells[{r.values[idx].f1, r.values[idx].f2, cls}];
            }
            for (const auto& [key, count] : cells) {
                const auto& [f1, f2, cls] = key;
                d.rows.push_back(row({std::to_string(f1), std::to_string(f2), std::to_string(count),
                                      std::string(class_names[cls])}));
            }
            break;
        }
        case FigureKind::levels_vs_ones: {
            d.header = {"ones", "level", "count"};
            for (const auto& summary : r.per_ones) {
                for (const auto& [level, count] : summary.level_counts) {
                    d.rows.push_back(
                        row({std::to_string(summary.ones), std::to_string(level), std::to_string(count)}));
                }
            }
            break;
        }
    }
    return d;
}

std::string to_csv(const FigureDataset& d) {
    std::string out = fmt::format("# instance={} kind={}\n{}\n", d.instance, to_string(d.kind),
                                  fmt::join(d.header, ","));
    for (const auto& r : d.rows) out += fmt::format("{}\n", fmt::join(r, ","));
    return out;
}

}  // namespace pbmo

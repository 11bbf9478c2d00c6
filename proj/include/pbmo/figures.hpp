#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pbmo/landscape.hpp"

namespace pbmo {

enum class FigureKind { objectives_vs_ones, objective_space, levels_vs_ones };
std::string_view to_string(FigureKind k);
std::optional<FigureKind> figure_kind_from_name(std::string_view name);

// Rows are numeric tuples except the objective_space class column.
struct FigureDataset {
    FigureKind kind;
    std::string instance;
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

// objectives_vs_ones: ones,f1,f2,count sorted by (ones, f1, f2).
// objective_space:    f1,f2,multiplicity,class sorted by (f1, f2, class) with
//                     class in {pareto, local_optimum, other}.
// levels_vs_ones:     ones,level,count sorted by (ones, level).
FigureDataset build_figure(const LandscapeReport& r, FigureKind kind);

// Comma-separated, "# instance=..., kind=..." first line, then the header.
std::string to_csv(const FigureDataset& d);

}  // namespace pbmo

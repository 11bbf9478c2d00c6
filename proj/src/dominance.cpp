#include "pbmo/dominance.hpp"

#include <algorithm>
#include <limits>

namespace pbmo {

namespace {

std::vector<ObjectiveVector> distinct_sorted(std::span<const ObjectiveVector> points) {
    std::vector<ObjectiveVector> v(points.begin(), points.end());
    std::sort(v.begin(), v.end(), level_order);
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

// Splits distinct level-ordered vectors into (non-dominated, rest). Every
// earlier vector has f1 at least as large, so a vector is dominated exactly
// when some earlier one reaches its f2.
void peel(const std::vector<ObjectiveVector>& sorted, std::vector<ObjectiveVector>& front,
          std::vector<ObjectiveVector>& rest) {
    int best_f2 = std::numeric_limits<int>::min();
    for (const auto& v : sorted) {
        if (v.f2 > best_f2) {
            front.push_back(v);
            best_f2 = v.f2;
        } else {
            rest.push_back(v);
        }
    }
}

}  // namespace

std::vector<ObjectiveVector> nondominated_filter(std::span<const ObjectiveVector> points) {
    std::vector<ObjectiveVector> front, rest;
    peel(distinct_sorted(points), front, rest);
    return front;
}

LevelAssignment::LevelAssignment(std::vector<std::vector<ObjectiveVector>> levels)
    : levels_(std::move(levels)) {
    for (std::size_t i = 0; i < levels_.size(); ++i) {
        for (const auto& v : levels_[i]) index_.emplace(v, static_cast<int>(i) + 1);
    }
}

int LevelAssignment::level_of(const ObjectiveVector& v) const {
    const auto it = index_.find(v);
    return it == index_.end() ? 0 : it->second;
}

LevelAssignment nondominated_sort(std::span<const ObjectiveVector> points) {
    std::vector<std::vector<ObjectiveVector>> levels;
    std::vector<ObjectiveVector> remaining = distinct_sorted(points);
    while (!remaining.empty()) {
        std::vector<ObjectiveVector> front, rest;
        peel(remaining, front, rest);
        levels.push_back(std::move(front));
        remaining = std::move(rest);
    }
    return LevelAssignment(std::move(levels));
}

}  // namespace pbmo

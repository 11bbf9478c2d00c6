#pragma once

#include <map>
#include <span>
#include <vector>

#include "pbmo/problems.hpp"

namespace pbmo {

// Maximisation in both objectives.
constexpr bool weakly_dominates(const ObjectiveVector& u, const ObjectiveVector& v) noexcept {
    return u.f1 >= v.f1 && u.f2 >= v.f2;
}

constexpr bool dominates(const ObjectiveVector& u, const ObjectiveVector& v) noexcept {
    return weakly_dominates(u, v) && u != v;
}

// Sort key used for every level: f1 descending, then f2 descending.
constexpr bool level_order(const ObjectiveVector& a, const ObjectiveVector& b) noexcept {
    return a.f1 != b.f1 ? a.f1 > b.f1 : a.f2 > b.f2;
}

// Distinct input vectors not dominated by any input vector, in level order.
std::vector<ObjectiveVector> nondominated_filter(std::span<const ObjectiveVector> points);

class LevelAssignment {
public:
    LevelAssignment() = default;
    explicit LevelAssignment(std::vector<std::vector<ObjectiveVector>> levels);

    // levels()[0] is level 1.
    const std::vector<std::vector<ObjectiveVector>>& levels() const noexcept { return levels_; }
    int level_count() const noexcept { return static_cast<int>(levels_.size()); }
    // 1-based level of a vector that occurred in the sorted input; 0 if absent.
    int level_of(const ObjectiveVector& v) const;

private:
    std::vector<std::vector<ObjectiveVector>> levels_;
    std::map<ObjectiveVector, int> index_;
};

// Repeated non-dominated peeling over the distinct vectors of a multiset.
LevelAssignment nondominated_sort(std::span<const ObjectiveVector> points);

}  // namespace pbmo

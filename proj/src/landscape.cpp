#include "pbmo/landscape.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <numeric>
#include <set>
#include <string_view>

#include <fmt/format.h>
#include <json.hpp>

namespace pbmo {

int default_enumeration_cap() {
    if (const char* env = std::getenv(enumeration_cap_env)) {
        const std::string_view s(env);
        int value = 0;
        const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
        if (ec == std::errc{} && ptr == s.data() + s.size() && value >= 1 &&
            value <= BitString::max_length) {
            return value;
        }
    }
    return builtin_enumeration_cap;
}

namespace {

std::uint64_t bit_of(int n, int position) { return std::uint64_t{1} << (n - position); }

struct DisjointSets {
    std::vector<std::size_t> parent;
    explicit DisjointSets(std::size_t size) : parent(size) {
        std::iota(parent.begin(), parent.end(), std::size_t{0});
    }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[std::max(a, b)] = std::min(a, b);
        return true;
    }
};

int count_components(const std::vector<BitString>& ps) {
    if (ps.empty()) return 0;
    std::vector<std::uint64_t> ids(ps.size());
    std::transform(ps.begin(), ps.end(), ids.begin(), [](const BitString& b) { return b.index(); });
    DisjointSets sets(ids.size());
    int components = static_cast<int>(ids.size());
    const int n = ps.front().length();
    for (std::size_t i = 0; i < ids.size(); ++i) {
        for (int j = 0; j < n; ++j) {
            const std::uint64_t nb = ids[i] ^ (std::uint64_t{1} << j);
            if (nb < ids[i]) continue;  // each edge once
            const auto it = std::lower_bound(ids.begin(), ids.end(), nb);
            if (it != ids.end() && *it == nb &&
                sets.unite(i, static_cast<std::size_t>(it - ids.begin()))) {
                --components;
            }
        }
    }
    return components;
}

}  // namespace

LandscapeReport enumerate_landscape(const ProblemInstance& inst, const EnumerationOptions& opts) {
    const int n = inst.n();
    if (n > opts.cap) {
        throw DomainError(fmt::format("{}: n={} exceeds the enumeration cap {} (set --cap or {})",
                                      inst.descriptor(), n, opts.cap, enumeration_cap_env));
    }
    const std::uint64_t total = space_size(n);
    const unsigned workers = std::max(1U, opts.threads);

    LandscapeReport r{inst, {}, {}, {}, {}, {}, {}, 0, {}, {}};
    r.values.resize(total);

    // Pass 1: evaluate, and histogram distinct vectors per chunk.
    std::vector<std::map<ObjectiveVector, std::uint64_t>> partial(workers);
    for_each_chunk(total, workers, [&](std::uint64_t b, std::uint64_t e, unsigned c) {
        auto& hist = partial[c];
        for (std::uint64_t idx = b; idx < e; ++idx) {
            r.values[idx] = inst.evaluate_index(idx);
            ++hist[r.values[idx]];
        }
    });
    std::map<ObjectiveVector, std::uint64_t> histogram;
    for (const auto& h : partial) {
        for (const auto& [v, m] : h) histogram[v] += m;
    }

    std::vector<ObjectiveVector> distinct;
    distinct.reserve(histogram.size());
    for (const auto& [v, m] : histogram) distinct.push_back(v);
    r.levels = nondominated_sort(distinct);

    for (const auto& v : r.levels.levels().front()) r.pareto_front.push_back({v, histogram.at(v)});
    std::sort(r.pareto_front.begin(), r.pareto_front.end(),
              [](const FrontPoint& a, const FrontPoint& b) { return a.vector < b.vector; });

    // Pass 2: levels per solution, then local optima (needs every level).
    r.level_by_index.resize(total);
    for_each_chunk(total, workers, [&](std::uint64_t b, std::uint64_t e, unsigned) {
        for (std::uint64_t idx = b; idx < e; ++idx) {
            r.level_by_index[idx] = static_cast<std::uint16_t>(r.levels.level_of(r.values[idx]));
        }
    });

    std::vector<std::vector<std::uint64_t>> lo_parts(workers), ps_parts(workers);
    for_each_chunk(total, workers, [&](std::uint64_t b, std::uint64_t e, unsigned c) {
        for (std::uint64_t idx = b; idx < e; ++idx) {
            if (r.level_by_index[idx] == 1) {
                ps_parts[c].push_back(idx);
                continue;
            }
            const ObjectiveVector& v = r.values[idx];
            bool dominated = false;
            for (int j = 0; j < n && !dominated; ++j) {
                dominated = dominates(r.values[idx ^ (std::uint64_t{1} << j)], v);
            }
            if (!dominated) lo_parts[c].push_back(idx);
        }
    });
    for (unsigned c = 0; c < workers; ++c) {
        for (auto idx : ps_parts[c]) r.pareto_set.emplace_back(n, idx);
        for (auto idx : lo_parts[c]) r.local_optima.emplace_back(n, idx);
    }

    r.components = count_components(r.pareto_set);
    r.ratio = ExactRational(BigInt(r.pareto_set.size()), BigInt(total));

    // Per-#ones tables; sets are tiny so a sequential pass is fine.
    std::vector<std::set<int>> f1s(n + 1), f2s(n + 1);
    r.per_ones.resize(static_cast<std::size_t>(n) + 1);
    for (int c = 0; c <= n; ++c) r.per_ones[c].ones = c;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        const int c = std::popcount(idx);
        auto& row = r.per_ones[c];
        ++row.solutions;
        f1s[c].insert(r.values[idx].f1);
        f2s[c].insert(r.values[idx].f2);
        ++row.level_counts[r.level_by_index[idx]];
    }
    for (int c = 0; c <= n; ++c) {
        r.per_ones[c].f1_values.assign(f1s[c].begin(), f1s[c].end());
        r.per_ones[c].f2_values.assign(f2s[c].begin(), f2s[c].end());
    }
    return r;
}

std::string serialize(const LandscapeReport& r) {
    using json = nlohmann::ordered_json;
    json doc;
    doc["instance"] = r.instance.descriptor();
    doc["n"] = r.instance.n();
    doc["solutions"] = r.values.size();
    doc["pareto_set_size"] = r.pareto_set.size();
    doc["ratio"] = r.ratio.to_string();
    doc["components"] = r.components;
    doc["level_count"] = r.levels.level_count();
    doc["local_optima_count"] = r.local_optima.size();
    json front = json::array();
    for (const auto& p : r.pareto_front) {
        front.push_back(json{{"f1", p.vector.f1}, {"f2", p.vector.f2}, {"multiplicity", p.multiplicity}});
    }
    doc["pareto_front"] = std::move(front);
    json lo = json::array();
    for (const auto& x : r.local_optima) lo.push_back(x.to_string());
    doc["local_optima"] = std::move(lo);
    json ones = json::array();
    for (const auto& row : r.per_ones) {
        json levels = json::array();
        for (const auto& [level, count] : row.level_counts) {
            levels.push_back(json{{"level", level}, {"count", count}});
        }
        ones.push_back(json{{"ones", row.ones},
                            {"solutions", row.solutions},
                            {"f1_values", row.f1_values},
                            {"f2_values", row.f2_values},
                            {"levels", std::move(levels)}});
    }
    doc["per_ones"] = std::move(ones);
    return doc.dump(2) + "\n";
}

std::string_view to_string(FrontShape s) {
    switch (s) {
        case FrontShape::linear: return "linear";
        case FrontShape::nonlinear_concave: return "nonlinear_concave";
        case FrontShape::nonlinear_convex: return "nonlinear_convex";
        case FrontShape::degenerate: return "degenerate";
    }
    return "unknown";
}

std::string to_string(const CharacteristicProfile& p) {
    return fmt::format(
        "non_symmetric={} non_completely_conflicting={} disjoint_optima={} not_fully_separable={} "
        "low_ratio={} nonlinear_front={} has_local_optima={}",
        p.non_symmetric, p.non_completely_conflicting, p.disjoint_optima, p.not_fully_separable,
        p.low_ratio_witness, p.nonlinear_front, p.has_local_optima);
}

bool is_completely_conflicting(const LandscapeReport& r) {
    std::vector<ObjectiveVector> image;
    for (const auto& level : r.levels.levels()) image.insert(image.end(), level.begin(), level.end());
    std::sort(image.begin(), image.end());  // by f1, then f2
    for (std::size_t i = 1; i < image.size(); ++i) {
        // Either equal f1 with different f2, or f2 failing to drop.
        if (image[i].f2 >= image[i - 1].f2) return false;
    }
    return true;
}

bool is_symmetric_pair(const LandscapeReport& r) {
    const int n = r.instance.n();
    for (std::uint64_t idx = 0; idx < r.values.size(); ++idx) {
        const std::uint64_t mirror = complement(reverse(BitString(n, idx))).index();
        const auto& v = r.values[idx];
        const auto& w = r.values[mirror];
        if (v.f1 != w.f2 || v.f2 != w.f1) return false;
    }
    return true;
}

std::pair<bool, int> is_disjoint_pareto(const LandscapeReport& r) {
    return {r.components > 1, r.components};
}

SeparabilityReport is_fully_separable(const LandscapeReport& r, int which) {
    if (which != 1 && which != 2) throw DomainError(fmt::format("objective index {} not in {{1,2}}", which));
    const int n = r.instance.n();
    const auto f = [&](std::uint64_t idx) { return which == 1 ? r.values[idx].f1 : r.values[idx].f2; };

    SeparabilityReport out;
    out.objective = which;
    std::vector<int> delta(static_cast<std::size_t>(n));
    for (int pos = 1; pos <= n; ++pos) {
        const std::uint64_t mask = bit_of(n, pos);
        delta[pos - 1] = f(mask) - f(0);
        for (std::uint64_t idx = 0; idx < r.values.size(); ++idx) {
            if (idx & mask) continue;
            const int d = f(idx | mask) - f(idx);
            if (d != delta[pos - 1]) {
                out.witness = SeparabilityWitness{pos, BitString(n, 0), BitString(n, idx), delta[pos - 1], d};
                return out;
            }
        }
    }
    // Constant deltas: f is affine, f(x) = f(0) + sum delta_i x_i.
    out.separable = true;
    for (int i = 0; i < n; ++i) {
        const int g0 = i == 0 ? f(0) : 0;
        out.contributions.emplace_back(g0, g0 + delta[i]);
    }
    return out;
}

FrontShape front_shape(const LandscapeReport& r) {
    const auto& pts = r.pareto_front;  // ascending f1, hence descending f2
    if (pts.size() < 2) return FrontShape::degenerate;
    bool below = false, above = false;
    for (std::size_t i = 1; i + 1 < pts.size(); ++i) {
        const auto& a = pts[i - 1].vector;
        const auto& b = pts[i].vector;
        const auto& c = pts[i + 1].vector;
        // Positive: b lies to the left of a->c, which for a descending chain
        // means above the chord.
        const long long cross = static_cast<long long>(c.f1 - a.f1) * (b.f2 - a.f2) -
                                static_cast<long long>(c.f2 - a.f2) * (b.f1 - a.f1);
        if (cross < 0) below = true;
        if (cross > 0) above = true;
    }
    if (below) return FrontShape::nonlinear_concave;
    if (above) return FrontShape::nonlinear_convex;
    return FrontShape::linear;
}

const ExactRational& ratio_pareto(const LandscapeReport& r) { return r.ratio; }

CharacteristicProfile characteristic_profile(const LandscapeReport& r, const ExactRational& threshold) {
    CharacteristicProfile p;
    p.non_symmetric = !is_symmetric_pair(r);
    p.non_completely_conflicting = !is_completely_conflicting(r);
    p.disjoint_optima = is_disjoint_pareto(r).first;
    p.not_fully_separable = !(is_fully_separable(r, 1).separable && is_fully_separable(r, 2).separable);
    p.low_ratio_witness = r.ratio <= threshold;
    const FrontShape shape = front_shape(r);
    p.nonlinear_front = shape == FrontShape::nonlinear_concave || shape == FrontShape::nonlinear_convex;
    p.has_local_optima = !r.local_optima.empty();
    return p;
}

std::vector<BitString> local_optima(const ProblemInstance& inst, const EnumerationOptions& opts) {
    return enumerate_landscape(inst, opts).local_optima;
}
bool is_completely_conflicting(const ProblemInstance& inst, const EnumerationOptions& opts) {
    return is_completely_conflicting(enumerate_landscape(inst, opts));
}
bool is_symmetric_pair(const ProblemInstance& inst, const EnumerationOptions& opts) {
    return is_symmetric_pair(enumerate_landscape(inst, opts));
}
std::pair<bool, int> is_disjoint_pareto(const ProblemInstance& inst, const EnumerationOptions& opts) {
    return is_disjoint_pareto(enumerate_landscape(inst, opts));
}
SeparabilityReport is_fully_separable(const ProblemInstance& inst, int which, const EnumerationOptions& opts) {
    return is_fully_separable(enumerate_landscape(inst, opts), which);
}
FrontShape front_shape(const ProblemInstance& inst, const EnumerationOptions& opts) {
    return front_shape(enumerate_landscape(inst, opts));
}
ExactRational ratio_pareto(const ProblemInstance& inst, const EnumerationOptions& opts) {
    return enumerate_landscape(inst, opts).ratio;
}
CharacteristicProfile characteristic_profile(const ProblemInstance& inst, const EnumerationOptions& opts) {
    return characteristic_profile(enumerate_landscape(inst, opts));
}

}  // namespace pbmo

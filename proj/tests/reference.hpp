#pragma once

// Deliberately naive re-implementations used as independent oracles. They
// work on '0'/'1' strings straight from the textbook formulas and share no
// code with the library beyond the instance parameters.

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "pbmo/problems.hpp"

namespace ref {

inline std::string bits(int n, std::uint64_t idx) {
    std::string s(static_cast<std::size_t>(n), '0');
    for (int i = 0; i < n; ++i) {
        if (idx & (std::uint64_t{1} << (n - 1 - i))) s[static_cast<std::size_t>(i)] = '1';
    }
    return s;
}

inline int ones(const std::string& x) { return static_cast<int>(std::count(x.begin(), x.end(), '1')); }
inline int zeroes(const std::string& x) { return static_cast<int>(x.size()) - ones(x); }

inline int leading_ones(const std::string& x) {
    int i = 0;
    while (i < static_cast<int>(x.size()) && x[static_cast<std::size_t>(i)] == '1') ++i;
    return i;
}

inline int trailing_zeroes(const std::string& x) {
    int t = 0;
    for (auto it = x.rbegin(); it != x.rend() && *it == '0'; ++it) ++t;
    return t;
}

inline int jump(int n, int count, int k) { return (count <= n - k || count == n) ? k + count : n - count; }

inline int royal_road(const std::string& x, int l, char c) {
    int total = 0;
    for (std::size_t s = 0; s < x.size(); s += static_cast<std::size_t>(l)) {
        const std::string blk = x.substr(s, static_cast<std::size_t>(l));
        if (blk == std::string(static_cast<std::size_t>(l), c)) total += l;
    }
    return total;
}

inline int count_ones_mix(const std::string& x) {
    const std::size_t h = x.size() / 2;
    int v = 0;
    for (std::size_t i = 0; i < x.size(); ++i) v += i < h ? x[i] == '1' : x[i] == '0';
    return v;
}

inline std::pair<int, int> evaluate(const pbmo::ProblemInstance& inst, const std::string& x) {
    using F = pbmo::Family;
    const int n = inst.n(), k = inst.jump(), l = inst.block_length();
    switch (inst.family()) {
        case F::OMM: return {ones(x), zeroes(x)};
        case F::LOTZ: return {leading_ones(x), trailing_zeroes(x)};
        case F::OJZJ: return {jump(n, ones(x), k), jump(n, zeroes(x), k)};
        case F::COCZ: return {ones(x), count_ones_mix(x)};
        case F::ORZR: return {royal_road(x, l, '1'), royal_road(x, l, '0')};
        case F::OMTZ: return {ones(x), trailing_zeroes(x)};
        case F::OMZJ: return {ones(x), jump(n, zeroes(x), k)};
        case F::OMZR: return {ones(x), royal_road(x, l, '0')};
        case F::LOZJ: return {leading_ones(x), jump(n, zeroes(x), k)};
        case F::LOZR: return {leading_ones(x), royal_road(x, l, '0')};
        case F::OJZR: return {jump(n, ones(x), k), royal_road(x, l, '0')};
    }
    return {-1, -1};
}

inline bool dom(std::pair<int, int> a, std::pair<int, int> b) {
    return a.first >= b.first && a.second >= b.second && a != b;
}

struct Brute {
    std::vector<std::pair<int, int>> f;
    std::vector<std::string> pareto;  // ascending index
    std::vector<std::string> local;   // non-global, ascending index
};

// O(4^n) pairwise dominance; only for n <= 10.
inline Brute brute(const pbmo::ProblemInstance& inst) {
    const int n = inst.n();
    const std::uint64_t total = std::uint64_t{1} << n;
    Brute b;
    for (std::uint64_t i = 0; i < total; ++i) b.f.push_back(evaluate(inst, bits(n, i)));
    std::vector<bool> in_ps(total, true);
    for (std::uint64_t i = 0; i < total; ++i) {
        for (std::uint64_t j = 0; j < total && in_ps[i]; ++j) {
            if (dom(b.f[j], b.f[i])) in_ps[i] = false;
        }
        if (in_ps[i]) b.pareto.push_back(bits(n, i));
    }
    for (std::uint64_t i = 0; i < total; ++i) {
        if (in_ps[i]) continue;
        bool any = false;
        for (int p = 0; p < n; ++p) any = any || dom(b.f[i ^ (std::uint64_t{1} << p)], b.f[i]);
        if (!any) b.local.push_back(bits(n, i));
    }
    return b;
}

}  // namespace ref

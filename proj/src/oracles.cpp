#include "pbmo/oracles.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <fmt/format.h>

namespace pbmo {

namespace {

struct View {
    int n;
    std::uint64_t idx;
    int ones() const { return std::popcount(idx); }
    int lo() const { return detail::leading_ones(n, idx); }
    int tz() const { return detail::trailing_zeroes(n, idx); }
    // 1^i 0^(n-i) for some i.
    bool ones_then_zeroes() const { return lo() + tz() == n; }
    int one_blocks(int l) const { return detail::full_blocks(n, idx, l); }
    int zero_blocks(int l) const { return detail::full_blocks(n, detail::flip_all(n, idx), l); }
    bool blocks_complete(int l) const { return one_blocks(l) + zero_blocks(l) == n / l; }
};

// Every block that is neither 1^l nor 0^l holds at least two ones and two zeroes.
bool mixed_blocks_deep(const BitString& x, int l) {
    for (const auto& blk : blocks(x, l)) {
        const bool complete = blk.ones == 0 || blk.zeroes == 0;
        if (!complete && (blk.ones < 2 || blk.zeroes < 2)) return false;
    }
    return true;
}

void check_cap(const ProblemInstance& inst, int cap) {
    if (inst.n() > cap) {
        throw DomainError(fmt::format("{}: n={} exceeds the enumeration cap {}", inst.descriptor(),
                                      inst.n(), cap));
    }
}

template <class Pred>
std::vector<BitString> materialise(const ProblemInstance& inst, int cap, Pred pred) {
    check_cap(inst, cap);
    std::vector<BitString> out;
    const std::uint64_t total = space_size(inst.n());
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        BitString x(inst.n(), idx);
        if (pred(inst, x)) out.push_back(x);
    }
    return out;
}

}  // namespace

bool in_oracle_pareto_set(const ProblemInstance& inst, const BitString& x) {
    const View v{inst.n(), x.index()};
    const int n = inst.n();
    const int k = inst.jump();
    const int l = inst.block_length();
    switch (inst.family()) {
        case Family::OMM: return true;
        case Family::LOTZ:
        case Family::OMTZ: return v.ones_then_zeroes();
        case Family::OJZJ: {
            const int ones = v.ones();
            return ones == 0 || ones == n || (k <= ones && ones <= n - k);
        }
        case Family::COCZ: return v.lo() >= n / 2;
        case Family::ORZR:
        case Family::OMZR: return v.blocks_complete(l);
        case Family::OMZJ: return v.ones() == 0 || n - v.ones() <= n - k;
        case Family::LOZJ: return v.idx == 0 || (v.ones_then_zeroes() && v.ones() >= k);
        case Family::LOZR: return v.ones_then_zeroes() && v.ones() % l == 0;
        case Family::OJZR: {
            const int ones = v.ones();
            if (ones == n) return true;
            if ((n - k) % l == 0) return ones <= n - k && v.blocks_complete(l);
            if (ones < n - k) return v.blocks_complete(l);
            return ones == n - k && v.zero_blocks(l) == k / l;
        }
    }
    return false;
}

bool in_oracle_local_optima(const ProblemInstance& inst, const BitString& x) {
    const View v{inst.n(), x.index()};
    const int n = inst.n();
    const int k = inst.jump();
    const int l = inst.block_length();
    switch (inst.family()) {
        case Family::OMM:
        case Family::LOTZ:
        case Family::OJZJ:
        case Family::COCZ:
        case Family::OMTZ:
        case Family::OMZJ:
        case Family::OMZR: return false;
        case Family::ORZR:
            return l > 3 && !v.blocks_complete(l) && mixed_blocks_deep(x, l);
        case Family::LOZJ:
            // 1^i s with i < k and |s|_0 = n-k means exactly k ones overall.
            return v.ones() == k && !in_oracle_pareto_set(inst, x);
        case Family::LOZR: {
            const int lead = v.lo();
            if (lead % l != 0 || lead >= n) return false;
            const auto blk = blocks(x, l);
            const std::size_t next = static_cast<std::size_t>(lead / l);
            if (blk[next].ones != 0) return false;
            for (std::size_t j = next + 1; j < blk.size(); ++j) {
                if (blk[j].ones == 1) return false;
            }
            return !in_oracle_pareto_set(inst, x);
        }
        case Family::OJZR: return v.ones() == n - k && v.zero_blocks(l) < k / l;
    }
    return false;
}

std::vector<BitString> oracle_pareto_set(const ProblemInstance& inst, int cap) {
    return materialise(inst, cap, in_oracle_pareto_set);
}

std::vector<BitString> oracle_local_optima(const ProblemInstance& inst, int cap) {
    return materialise(inst, cap, in_oracle_local_optima);
}

std::vector<ObjectiveVector> oracle_front(const ProblemInstance& inst, int cap) {
    std::vector<ObjectiveVector> out;
    for (const auto& x : oracle_pareto_set(inst, cap)) out.push_back(inst.evaluate(x));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::optional<std::vector<ObjectiveVector>> claimed_front_tuples(const ProblemInstance& inst) {
    const int n = inst.n();
    const int k = inst.jump();
    const int l = inst.block_length();
    const int b = inst.block_count();
    std::vector<ObjectiveVector> out;
    switch (inst.family()) {
        case Family::ORZR:
        case Family::LOZR:
        case Family::OMZR:
            for (int i = 0; i <= b; ++i) out.push_back({i * l, (b - i) * l});
            break;
        case Family::LOZJ:
        case Family::OMZJ:
            out.push_back({0, n + k});
            for (int i = k; i <= n; ++i) out.push_back({i, n + k - i});
            break;
        case Family::OMTZ:
            for (int i = 0; i <= n; ++i) out.push_back({i, n - i});
            break;
        case Family::OJZR:
            out.push_back({n + k, 0});
            for (int i = 0; i <= k / l; ++i) out.push_back({i * l + k, n - i * l});
            if ((n - k) % l != 0) out.push_back({n - k, (k / l) * l});
            break;
        default: return std::nullopt;
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

ExactRational ratio_ojzj(int n, int k) {
    if (n < 3 || k < 1 || 2 * k >= n) {
        throw DomainError(fmt::format("ratio_ojzj: need 1 <= k < n/2, got n={}, k={}", n, k));
    }
    BigInt valley = 0;
    for (int s = n - k + 1; s <= n - 1; ++s) valley += binomial(n, s);
    const BigInt total = pow2(n);
    return ExactRational(total - 2 * valley, total);
}

int ojzj_threshold_k(int n) {
    if (n < 4) throw DomainError(fmt::format("ojzj_threshold_k: need n >= 4, got {}", n));
    using Big = boost::multiprecision::cpp_bin_float_100;
    const Big rhs = 4 * Big(n) * boost::multiprecision::log(Big(2));  // (n - 2k)^2 >= 4 n ln 2
    const auto ok = [&](int k) {
        const long long gap = static_cast<long long>(n) - 2LL * k;
        return gap >= 0 && Big(gap * gap) >= rhs;
    };
    int k = static_cast<int>(std::floor(n / 2.0 - std::sqrt(n * std::numbers::ln2)));
    while (!ok(k)) --k;
    while (ok(k + 1)) ++k;
    return k;
}

double ojzj_asymptote(int n) {
    if (n < 4) throw DomainError(fmt::format("ojzj_asymptote: need n >= 4, got {}", n));
    const double c = n % 2 == 0 ? 3.0 : 4.0;
    return c * std::numbers::sqrt2 / std::sqrt(std::numbers::pi * n);
}

OjzrTerms ojzr_terms(int n, int k, int l) {
    if (l < 1 || n % l != 0 || n / l < 2) {
        throw DomainError(fmt::format("ratio_ojzr: need l | n and b > 1, got n={}, l={}", n, l));
    }
    if (k <= 1 || k >= n / 2) {
        throw DomainError(fmt::format("ratio_ojzr: need 1 < k < floor(n/2), got n={}, k={}", n, k));
    }
    if ((n - k) % l == 0) {
        throw DomainError(fmt::format("ratio_ojzr: need (n-k) mod l != 0, got n={}, k={}, l={}", n, k, l));
    }
    const int b = n / l;
    const int q = k / l;
    const int ceil_q = (k + l - 1) / l;
    OjzrTerms t{1, 0, 0};
    for (int i = ceil_q; i <= b; ++i) t.blockwise += binomial(b, i);
    t.column = binomial(b, q) * binomial(n - q * l, n - k);
    return t;
}

ExactRational ratio_ojzr(int n, int k, int l) {
    const OjzrTerms t = ojzr_terms(n, k, l);
    return ExactRational(t.boundary + t.blockwise + t.column, pow2(n));
}

bool ojzr_bound_holds(const ExactRational& r, int n, int l) {
    if (l < 1 || n % l != 0) throw DomainError("ojzr_bound_holds: l must divide n");
    if (r < ExactRational(0)) return true;
    // Twice the exponent is an integer: 2(-1 + b - n/2) = 2b - n - 2.
    const int e2 = 2 * (n / l) - n - 2;
    const ExactRational bound_sq = e2 >= 0 ? ExactRational(pow2(e2), 1) : ExactRational(1, pow2(-e2));
    return r * r <= bound_sq;
}

}  // namespace pbmo

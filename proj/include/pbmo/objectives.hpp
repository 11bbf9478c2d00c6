#pragma once

#include <bit>
#include <cstdint>

#include "pbmo/bitstring.hpp"

namespace pbmo {

using ObjectiveValue = int;

// Checked single-objective functions (maximisation). Parameter violations
// raise DomainError.
ObjectiveValue one_max(const BitString& x) noexcept;
ObjectiveValue leading_ones(const BitString& x) noexcept;
ObjectiveValue trailing_zeroes(const BitString& x) noexcept;
ObjectiveValue one_jump(const BitString& x, int k);
ObjectiveValue zero_jump(const BitString& x, int k);
ObjectiveValue one_royal_road(const BitString& x, int block_length);
ObjectiveValue zero_royal_road(const BitString& x, int block_length);
ObjectiveValue count_ones_mix(const BitString& x);

namespace detail {

// Unchecked kernels on (length, index); callers guarantee the preconditions.

inline int jump_value(int n, int ones, int k) noexcept {
    return (ones <= n - k || ones == n) ? k + ones : n - ones;
}

inline int leading_ones(int n, std::uint64_t idx) noexcept {
    const int lo = std::countl_one(idx << (64 - n));
    return lo < n ? lo : n;
}

inline int trailing_zeroes(int n, std::uint64_t idx) noexcept {
    const int tz = std::countr_zero(idx);
    return tz < n ? tz : n;
}

// Number of all-ones blocks of width l in the low n bits of idx.
inline int full_blocks(int n, std::uint64_t idx, int l) noexcept {
    const std::uint64_t mask = (std::uint64_t{1} << l) - 1;
    int count = 0;
    for (int shift = 0; shift < n; shift += l) count += ((idx >> shift) & mask) == mask;
    return count;
}

inline std::uint64_t flip_all(int n, std::uint64_t idx) noexcept {
    return ~idx & ((std::uint64_t{1} << n) - 1);
}

inline int count_ones_mix(int n, std::uint64_t idx) noexcept {
    const int half = n / 2;
    const std::uint64_t low = (std::uint64_t{1} << half) - 1;
    return std::popcount(idx >> half) + (half - std::popcount(idx & low));
}

}  // namespace detail

}  // namespace pbmo

#include "pbmo/objectives.hpp"

#include <fmt/format.h>

namespace pbmo {

namespace {

void check_jump(const BitString& x, int k) {
    if (k < 1 || k > x.length()) {
        throw DomainError(fmt::format("jump parameter k={} outside [1, {}]", k, x.length()));
    }
}

void check_blocks(const BitString& x, int l) {
    const int n = x.length();
    if (l < 1 || n % l != 0) {
        throw DomainError(fmt::format("length {} is not divisible by block length {}", n, l));
    }
    if (n / l < 2) {
        throw DomainError(fmt::format("block length {} leaves b = {} blocks; need b > 1", l, n / l));
    }
}

}  // namespace

ObjectiveValue one_max(const BitString& x) noexcept { return count_ones(x); }

ObjectiveValue leading_ones(const BitString& x) noexcept {
    return detail::leading_ones(x.length(), x.index());
}

ObjectiveValue trailing_zeroes(const BitString& x) noexcept {
    return detail::trailing_zeroes(x.length(), x.index());
}

ObjectiveValue one_jump(const BitString& x, int k) {
    check_jump(x, k);
    return detail::jump_value(x.length(), count_ones(x), k);
}

ObjectiveValue zero_jump(const BitString& x, int k) {
    check_jump(x, k);
    return detail::jump_value(x.length(), count_zeroes(x), k);
}

ObjectiveValue one_royal_road(const BitString& x, int block_length) {
    check_blocks(x, block_length);
    return block_length * detail::full_blocks(x.length(), x.index(), block_length);
}

ObjectiveValue zero_royal_road(const BitString& x, int block_length) {
    check_blocks(x, block_length);
    const std::uint64_t c = detail::flip_all(x.length(), x.index());
    return block_length * detail::full_blocks(x.length(), c, block_length);
}

ObjectiveValue count_ones_mix(const BitString& x) {
    if (x.length() % 2 != 0) {
        throw DomainError(fmt::format("count_ones_mix needs an even length, got {}", x.length()));
    }
    return detail::count_ones_mix(x.length(), x.index());
}

}  // namespace pbmo

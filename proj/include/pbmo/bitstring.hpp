#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "pbmo/error.hpp"

namespace pbmo {

// Fixed-length binary vector. Position 1 is the leftmost bit and the most
// significant bit of the integer index, so "100" has index 4.
class BitString {
public:
    static constexpr int max_length = 63;

    BitString() = default;
    BitString(int length, std::uint64_t index);

    static BitString parse(std::string_view text);
    static BitString all_ones(int length);
    static BitString all_zeroes(int length);

    int length() const noexcept { return length_; }
    std::uint64_t index() const noexcept { return index_; }

    // 1-based position, leftmost first.
    bool bit(int position) const;
    BitString flipped(int position) const;

    std::string to_string() const;

    // Length first, then index: ascending index within a fixed length.
    auto operator<=>(const BitString&) const = default;

private:
    int length_ = 0;
    std::uint64_t index_ = 0;
};

struct BlockCount {
    int ones = 0;
    int zeroes = 0;
    auto operator<=>(const BlockCount&) const = default;
};

// Number of distinct strings of the given length (2^n).
std::uint64_t space_size(int length);

int count_ones(const BitString& x) noexcept;
int count_zeroes(const BitString& x) noexcept;
BitString complement(const BitString& x) noexcept;
BitString reverse(const BitString& x) noexcept;
std::vector<BitString> neighbors(const BitString& x);
std::vector<BlockCount> blocks(const BitString& x, int block_length);
int hamming_distance(const BitString& a, const BitString& b);

}  // namespace pbmo

#include "pbmo/bitstring.hpp"

#include <bit>

#include <fmt/format.h>

namespace pbmo {

namespace {

std::uint64_t low_mask(int length) {
    return length == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << length) - 1;
}

void check_length(int length) {
    if (length < 1 || length > BitString::max_length) {
        throw DomainError(fmt::format("bit-string length {} outside [1, {}]", length,
                                      BitString::max_length));
    }
}

}  // namespace

BitString::BitString(int length, std::uint64_t index) : length_(length), index_(index) {
    check_length(length);
    if ((index & ~low_mask(length)) != 0) {
        throw DomainError(fmt::format("index {} does not fit in {} bits", index, length));
    }
}

BitString BitString::parse(std::string_view text) {
    check_length(static_cast<int>(text.size()));
    std::uint64_t index = 0;
    for (char c : text) {
        if (c != '0' && c != '1') {
            throw DomainError(fmt::format("invalid character '{}' in bit-string \"{}\"", c, text));
        }
        index = (index << 1) | static_cast<std::uint64_t>(c == '1');
    }
    return BitString(static_cast<int>(text.size()), index);
}

BitString BitString::all_ones(int length) {
    check_length(length);
    return BitString(length, low_mask(length));
}

BitString BitString::all_zeroes(int length) { return BitString(length, 0); }

bool BitString::bit(int position) const {
    if (position < 1 || position > length_) {
        throw DomainError(fmt::format("position {} outside [1, {}]", position, length_));
    }
    return ((index_ >> (length_ - position)) & 1U) != 0;
}

BitString BitString::flipped(int position) const {
    if (position < 1 || position > length_) {
        throw DomainError(fmt::format("position {} outside [1, {}]", position, length_));
    }
    BitString out = *this;
    out.index_ ^= std::uint64_t{1} << (length_ - position);
    return out;
}

std::string BitString::to_string() const {
    std::string s(static_cast<std::size_t>(length_), '0');
    for (int i = 0; i < length_; ++i) {
        if ((index_ >> (length_ - 1 - i)) & 1U) s[static_cast<std::size_t>(i)] = '1';
    }
    return s;
}

std::uint64_t space_size(int length) {
    check_length(length);
    return std::uint64_t{1} << length;
}

int count_ones(const BitString& x) noexcept { return std::popcount(x.index()); }

int count_zeroes(const BitString& x) noexcept { return x.length() - count_ones(x); }

BitString complement(const BitString& x) noexcept {
    return BitString(x.length(), ~x.index() & low_mask(x.length()));
}

BitString reverse(const BitString& x) noexcept {
    std::uint64_t in = x.index();
    std::uint64_t out = 0;
    for (int i = 0; i < x.length(); ++i) {
        out = (out << 1) | (in & 1U);
        in >>= 1;
    }
    return BitString(x.length(), out);
}

std::vector<BitString> neighbors(const BitString& x) {
    std::vector<BitString> out;
    out.reserve(static_cast<std::size_t>(x.length()));
    for (int pos = 1; pos <= x.length(); ++pos) out.push_back(x.flipped(pos));
    return out;
}

std::vector<BlockCount> blocks(const BitString& x, int block_length) {
    const int n = x.length();
    if (block_length < 1 || n % block_length != 0) {
        throw DomainError(fmt::format("length {} is not divisible by block length {}", n, block_length));
    }
    const std::uint64_t mask = low_mask(block_length);
    std::vector<BlockCount> out;
    out.reserve(static_cast<std::size_t>(n / block_length));
    for (int end = block_length; end <= n; end += block_length) {
        const int ones = std::popcount((x.index() >> (n - end)) & mask);
        out.push_back({ones, block_length - ones});
    }
    return out;
}

int hamming_distance(const BitString& a, const BitString& b) {
    if (a.length() != b.length()) {
        throw DomainError(fmt::format("length mismatch: {} vs {}", a.length(), b.length()));
    }
    return std::popcount(a.index() ^ b.index());
}

}  // namespace pbmo

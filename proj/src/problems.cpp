#include "pbmo/problems.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>

#include <fmt/format.h>

namespace pbmo {

std::string to_string(const ObjectiveVector& v) { return fmt::format("({},{})", v.f1, v.f2); }

std::string_view to_string(ParameterError e) {
    switch (e) {
        case ParameterError::length_out_of_range: return "length_out_of_range";
        case ParameterError::odd_length: return "odd_length";
        case ParameterError::jump_missing: return "jump_missing";
        case ParameterError::jump_unexpected: return "jump_unexpected";
        case ParameterError::jump_too_small: return "jump_too_small";
        case ParameterError::jump_too_large: return "jump_too_large";
        case ParameterError::block_length_missing: return "block_length_missing";
        case ParameterError::block_length_unexpected: return "block_length_unexpected";
        case ParameterError::block_length_too_small: return "block_length_too_small";
        case ParameterError::length_not_divisible: return "length_not_divisible";
        case ParameterError::too_few_blocks: return "too_few_blocks";
    }
    return "unknown";
}

ParameterViolation::ParameterViolation(ParameterError code, const std::string& detail)
    : DomainError(fmt::format("{}: {}", to_string(code), detail)), code_(code) {}

const std::vector<FamilyDescriptor>& family_catalog() {
    static const std::vector<FamilyDescriptor> catalog = {
        {Family::OMM, "omm", "one_max", "one_max(complement)", false, false, "1 <= n <= 63"},
        {Family::LOTZ, "lotz", "leading_ones", "trailing_zeroes", false, false, "1 <= n <= 63"},
        {Family::OJZJ, "ojzj", "one_jump", "zero_jump", true, false, "1 <= k < n/2"},
        {Family::COCZ, "cocz", "one_max", "count_ones_mix", false, false, "n even"},
        {Family::ORZR, "orzr", "one_royal_road", "zero_royal_road", false, true,
         "l >= 2, n mod l = 0, b = n/l > 1"},
        {Family::OMTZ, "omtz", "one_max", "trailing_zeroes", false, false, "1 <= n <= 63"},
        {Family::OMZJ, "omzj", "one_max", "zero_jump", true, false, "1 < k < n/2"},
        {Family::OMZR, "omzr", "one_max", "zero_royal_road", false, true,
         "l >= 2, n mod l = 0, b = n/l > 1"},
        {Family::LOZJ, "lozj", "leading_ones", "zero_jump", true, false, "1 < k < n/2"},
        {Family::LOZR, "lozr", "leading_ones", "zero_royal_road", false, true,
         "l >= 2, n mod l = 0, b = n/l > 1"},
        {Family::OJZR, "ojzr", "one_jump", "zero_royal_road", true, true,
         "1 < k < floor(n/2), l >= 2, n mod l = 0, b = n/l > 1"},
    };
    return catalog;
}

namespace {

const FamilyDescriptor& descriptor_of(Family f) {
    for (const auto& d : family_catalog()) {
        if (d.family == f) return d;
    }
    throw DomainError("unknown family");
}

}  // namespace

std::string_view family_name(Family f) { return descriptor_of(f).name; }

std::optional<Family> family_from_name(std::string_view name) {
    std::string lower(name);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    for (const auto& d : family_catalog()) {
        if (d.name == lower) return d.family;
    }
    return std::nullopt;
}

bool uses_jump(Family f) { return descriptor_of(f).needs_jump; }
bool uses_blocks(Family f) { return descriptor_of(f).needs_blocks; }

ProblemInstance ProblemInstance::validate(Family family, int n, std::optional<int> k,
                                          std::optional<int> l, Bounds bounds) {
    using E = ParameterError;
    const auto name = family_name(family);
    if (n < 1 || n > BitString::max_length) {
        throw ParameterViolation(E::length_out_of_range,
                                 fmt::format("{}: n={} outside [1, {}]", name, n, BitString::max_length));
    }
    if (family == Family::COCZ && n % 2 != 0) {
        throw ParameterViolation(E::odd_length, fmt::format("cocz: n={} must be even", n));
    }

    int kv = 0;
    if (uses_jump(family)) {
        if (!k) throw ParameterViolation(E::jump_missing, fmt::format("{} requires k", name));
        kv = *k;
        // OJZJ admits k = 1; the mixed jump families need k > 1.
        const int k_min = family == Family::OJZJ ? 1 : 2;
        if (kv < k_min) {
            throw ParameterViolation(E::jump_too_small,
                                     fmt::format("{}: k={} violates k >= {}", name, kv, k_min));
        }
        if (bounds == Bounds::figure) {
            if (2 * kv > n) {
                throw ParameterViolation(E::jump_too_large,
                                         fmt::format("{}: k={} violates k <= n/2 with n={}", name, kv, n));
            }
        } else if (family == Family::OJZR) {
            if (kv >= n / 2) {
                throw ParameterViolation(
                    E::jump_too_large, fmt::format("{}: k={} violates k < floor(n/2) = {}", name, kv, n / 2));
            }
        } else if (2 * kv >= n) {
            throw ParameterViolation(E::jump_too_large,
                                     fmt::format("{}: k={} violates k < n/2 with n={}", name, kv, n));
        }
    } else if (k) {
        throw ParameterViolation(E::jump_unexpected, fmt::format("{} takes no k", name));
    }

    int lv = 0;
    if (uses_blocks(family)) {
        if (!l) throw ParameterViolation(E::block_length_missing, fmt::format("{} requires l", name));
        lv = *l;
        if (lv < 2) {
            throw ParameterViolation(E::block_length_too_small,
                                     fmt::format("{}: l={} violates l >= 2", name, lv));
        }
        if (n % lv != 0) {
            throw ParameterViolation(E::length_not_divisible,
                                     fmt::format("{}: n={} mod l={} != 0", name, n, lv));
        }
        if (n / lv < 2) {
            throw ParameterViolation(E::too_few_blocks,
                                     fmt::format("{}: b = n/l = {} violates b > 1", name, n / lv));
        }
    } else if (l) {
        throw ParameterViolation(E::block_length_unexpected, fmt::format("{} takes no l", name));
    }
    return ProblemInstance(family, n, kv, lv);
}

std::optional<int> ProblemInstance::k() const {
    return uses_jump(family_) ? std::optional<int>(k_) : std::nullopt;
}

std::optional<int> ProblemInstance::l() const {
    return uses_blocks(family_) ? std::optional<int>(l_) : std::nullopt;
}

ObjectiveVector ProblemInstance::evaluate_index(std::uint64_t idx) const noexcept {
    const int ones = std::popcount(idx);
    const int zeroes = n_ - ones;
    const auto lo = [&] { return detail::leading_ones(n_, idx); };
    const auto tz = [&] { return detail::trailing_zeroes(n_, idx); };
    const auto oj = [&] { return detail::jump_value(n_, ones, k_); };
    const auto zj = [&] { return detail::jump_value(n_, zeroes, k_); };
    const auto orr = [&] { return l_ * detail::full_blocks(n_, idx, l_); };
    const auto zrr = [&] { return l_ * detail::full_blocks(n_, detail::flip_all(n_, idx), l_); };

    switch (family_) {
        case Family::OMM: return {ones, zeroes};
        case Family::LOTZ: return {lo(), tz()};
        case Family::OJZJ: return {oj(), zj()};
        case Family::COCZ: return {ones, detail::count_ones_mix(n_, idx)};
        case Family::ORZR: return {orr(), zrr()};
        case Family::OMTZ: return {ones, tz()};
        case Family::OMZJ: return {ones, zj()};
        case Family::OMZR: return {ones, zrr()};
        case Family::LOZJ: return {lo(), zj()};
        case Family::LOZR: return {lo(), zrr()};
        case Family::OJZR: return {oj(), zrr()};
    }
    return {};
}

ObjectiveVector ProblemInstance::evaluate(const BitString& x) const {
    if (x.length() != n_) {
        throw DomainError(fmt::format("{}: bit-string length {} does not match n={}", descriptor(),
                                      x.length(), n_));
    }
    return evaluate_index(x.index());
}

ObjectiveVector evaluate(const ProblemInstance& inst, const BitString& x) { return inst.evaluate(x); }

std::string ProblemInstance::descriptor() const {
    std::string out = fmt::format("{}:n={}", family_name(family_), n_);
    if (uses_jump(family_)) out += fmt::format(",k={}", k_);
    if (uses_blocks(family_)) out += fmt::format(",l={}", l_);
    return out;
}

DescriptorFields parse_descriptor_fields(std::string_view text) {
    const auto colon = text.find(':');
    const auto family = family_from_name(text.substr(0, colon));
    if (!family) {
        throw DomainError(fmt::format("unknown family in descriptor \"{}\"", text));
    }
    std::optional<int> n, k, l;
    if (colon != std::string_view::npos) {
        std::string_view rest = text.substr(colon + 1);
        while (!rest.empty()) {
            const auto comma = rest.find(',');
            const std::string_view item = rest.substr(0, comma);
            rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
            const auto eq = item.find('=');
            if (eq == std::string_view::npos) {
                throw DomainError(fmt::format("malformed descriptor item \"{}\"", item));
            }
            const std::string_view key = item.substr(0, eq);
            const std::string_view value = item.substr(eq + 1);
            int parsed = 0;
            const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), parsed);
            if (ec != std::errc{} || ptr != value.data() + value.size()) {
                throw DomainError(fmt::format("non-integer value in descriptor item \"{}\"", item));
            }
            std::optional<int>* slot = key == "n" ? &n : key == "k" ? &k : key == "l" ? &l : nullptr;
            if (!slot) throw DomainError(fmt::format("unknown descriptor key \"{}\"", key));
            if (slot->has_value()) throw DomainError(fmt::format("repeated descriptor key \"{}\"", key));
            *slot = parsed;
        }
    }
    return {*family, n, k, l};
}

ProblemInstance parse_descriptor(std::string_view text, Bounds bounds) {
    const DescriptorFields f = parse_descriptor_fields(text);
    if (!f.n) throw DomainError(fmt::format("descriptor \"{}\" lacks n", text));
    return ProblemInstance::validate(f.family, *f.n, f.k, f.l, bounds);
}

}  // namespace pbmo

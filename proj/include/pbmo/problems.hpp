#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pbmo/bitstring.hpp"
#include "pbmo/error.hpp"
#include "pbmo/objectives.hpp"

namespace pbmo {

enum class Family { OMM, LOTZ, OJZJ, COCZ, ORZR, OMTZ, OMZJ, OMZR, LOZJ, LOZR, OJZR };

inline constexpr Family all_families[] = {Family::OMM,  Family::LOTZ, Family::OJZJ, Family::COCZ,
                                          Family::ORZR, Family::OMTZ, Family::OMZJ, Family::OMZR,
                                          Family::LOZJ, Family::LOZR, Family::OJZR};

struct ObjectiveVector {
    ObjectiveValue f1 = 0;
    ObjectiveValue f2 = 0;
    auto operator<=>(const ObjectiveVector&) const = default;
};

std::string to_string(const ObjectiveVector& v);

// One enumerator per bound that validation can reject.
enum class ParameterError {
    length_out_of_range,
    odd_length,
    jump_missing,
    jump_unexpected,
    jump_too_small,
    jump_too_large,
    block_length_missing,
    block_length_unexpected,
    block_length_too_small,
    length_not_divisible,
    too_few_blocks,
};

std::string_view to_string(ParameterError e);

class ParameterViolation : public DomainError {
public:
    ParameterViolation(ParameterError code, const std::string& detail);
    ParameterError code() const noexcept { return code_; }

private:
    ParameterError code_;
};

std::string_view family_name(Family f);  // lower case, e.g. "ojzr"
std::optional<Family> family_from_name(std::string_view name);  // case-insensitive
bool uses_jump(Family f);
bool uses_blocks(Family f);

// strict: the bounds stated with each definition.
// figure: additionally admits k = n/2 for the jump families, as the
// OJZR(n=12, k=6) plot requires.
enum class Bounds { strict, figure };

class ProblemInstance {
public:
    static ProblemInstance validate(Family family, int n, std::optional<int> k = std::nullopt,
                                    std::optional<int> l = std::nullopt, Bounds bounds = Bounds::strict);

    Family family() const noexcept { return family_; }
    int n() const noexcept { return n_; }
    std::optional<int> k() const;
    std::optional<int> l() const;
    int jump() const noexcept { return k_; }           // 0 when absent
    int block_length() const noexcept { return l_; }   // 0 when absent
    int block_count() const noexcept { return l_ ? n_ / l_ : 0; }

    ObjectiveVector evaluate(const BitString& x) const;
    // Hot path for enumeration: idx must be < 2^n.
    ObjectiveVector evaluate_index(std::uint64_t idx) const noexcept;

    // Canonical descriptor, e.g. "ojzr:n=12,k=5,l=3".
    std::string descriptor() const;

    bool operator==(const ProblemInstance&) const = default;

private:
    ProblemInstance(Family family, int n, int k, int l) : family_(family), n_(n), k_(k), l_(l) {}

    Family family_;
    int n_;
    int k_;
    int l_;
};

ObjectiveVector evaluate(const ProblemInstance& inst, const BitString& x);

struct DescriptorFields {
    Family family;
    std::optional<int> n, k, l;
};

// Syntax only: "family:n=..,k=..,l=..", family case-insensitive. Unknown and
// repeated keys are rejected; parameter ranges are not checked.
DescriptorFields parse_descriptor_fields(std::string_view text);

// parse_descriptor_fields followed by ProblemInstance::validate.
ProblemInstance parse_descriptor(std::string_view text, Bounds bounds = Bounds::strict);

struct FamilyDescriptor {
    Family family;
    std::string_view name;
    std::string_view first_objective;
    std::string_view second_objective;
    bool needs_jump;
    bool needs_blocks;
    std::string_view constraints;
};

const std::vector<FamilyDescriptor>& family_catalog();

}  // namespace pbmo

#include "pbmo/verification.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>

#include <fmt/format.h>
#include <json.hpp>

#include "pbmo/oracles.hpp"

namespace pbmo {

std::string_view to_string(ClaimKind k) {
    switch (k) {
        case ClaimKind::pareto_set: return "pareto_set";
        case ClaimKind::local_optima: return "local_optima";
        case ClaimKind::claimed_front: return "claimed_front";
        case ClaimKind::ratio_formula: return "ratio_formula";
    }
    return "unknown";
}

std::string_view to_string(Outcome o) {
    switch (o) {
        case Outcome::match: return "match";
        case Outcome::mismatch: return "mismatch";
        case Outcome::not_applicable: return "not_applicable";
    }
    return "unknown";
}

bool VerificationReport::must_match_ok() const {
    return std::none_of(claims.begin(), claims.end(),
                        [](const ClaimResult& c) { return c.must_match && c.outcome == Outcome::mismatch; });
}

const ClaimResult& VerificationReport::claim(ClaimKind kind) const {
    for (const auto& c : claims) {
        if (c.kind == kind) return c;
    }
    throw DomainError(fmt::format("report for {} has no {} claim", instance, to_string(kind)));
}

bool is_must_match(Family family, ClaimKind kind) {
    if (family == Family::OJZR) return false;
    if (kind == ClaimKind::ratio_formula) return family == Family::OJZJ;
    return true;
}

namespace {

void record(ClaimResult& c, const VerifyOptions& opts, Counterexample ce) {
    ++c.mismatches;
    if (c.counterexamples.size() < opts.max_counterexamples) c.counterexamples.push_back(std::move(ce));
}

ClaimResult make_claim(ClaimKind kind, Family fam) {
    ClaimResult c;
    c.kind = kind;
    c.must_match = is_must_match(fam, kind);
    return c;
}

void finish(ClaimResult& c) { c.outcome = c.mismatches == 0 ? Outcome::match : Outcome::mismatch; }

// Both inputs ascending; walks the symmetric difference.
void compare_sets(ClaimResult& c, const LandscapeReport& r, const std::vector<BitString>& claimed,
                  const std::vector<BitString>& computed, const VerifyOptions& opts) {
    std::vector<BitString> only_claimed, only_computed;
    std::set_difference(claimed.begin(), claimed.end(), computed.begin(), computed.end(),
                        std::back_inserter(only_claimed));
    std::set_difference(computed.begin(), computed.end(), claimed.begin(), claimed.end(),
                        std::back_inserter(only_computed));
    // Merge the two lists by index so counterexamples come out in order.
    std::size_t i = 0, j = 0;
    while (i < only_claimed.size() || j < only_computed.size()) {
        const bool take_claimed =
            j == only_computed.size() || (i < only_claimed.size() && only_claimed[i] < only_computed[j]);
        const BitString& x = take_claimed ? only_claimed[i++] : only_computed[j++];
        const std::string vec = to_string(r.values[x.index()]);
        record(c, opts,
               {x.to_string(), take_claimed ? "member" : "non-member",
                fmt::format("{} f={}", take_claimed ? "non-member" : "member", vec)});
    }
    finish(c);
}

}  // namespace

VerificationReport verify(const LandscapeReport& r, const VerifyOptions& opts) {
    const ProblemInstance& inst = r.instance;
    const Family fam = inst.family();
    VerificationReport rep;
    rep.instance = inst.descriptor();

    ClaimResult ps = make_claim(ClaimKind::pareto_set, fam);
    compare_sets(ps, r, oracle_pareto_set(inst, opts.enumeration.cap), r.pareto_set, opts);
    rep.claims.push_back(std::move(ps));

    ClaimResult lo = make_claim(ClaimKind::local_optima, fam);
    compare_sets(lo, r, oracle_local_optima(inst, opts.enumeration.cap), r.local_optima, opts);
    rep.claims.push_back(std::move(lo));

    ClaimResult front = make_claim(ClaimKind::claimed_front, fam);
    if (const auto claimed = claimed_front_tuples(inst)) {
        const std::vector<ObjectiveVector> actual = oracle_front(inst, opts.enumeration.cap);
        std::vector<ObjectiveVector> a, b;
        std::set_difference(claimed->begin(), claimed->end(), actual.begin(), actual.end(),
                            std::back_inserter(a));
        std::set_difference(actual.begin(), actual.end(), claimed->begin(), claimed->end(),
                            std::back_inserter(b));
        for (const auto& v : a) record(front, opts, {to_string(v), "on front", "not on oracle front"});
        for (const auto& v : b) record(front, opts, {to_string(v), "not listed", "on oracle front"});
        finish(front);
    }
    rep.claims.push_back(std::move(front));

    ClaimResult ratio = make_claim(ClaimKind::ratio_formula, fam);
    std::optional<ExactRational> formula;
    if (fam == Family::OJZJ) formula = ratio_ojzj(inst.n(), inst.jump());
    if (fam == Family::OJZR && (inst.n() - inst.jump()) % inst.block_length() != 0) {
        formula = ratio_ojzr(inst.n(), inst.jump(), inst.block_length());
    }
    if (formula) {
        if (*formula != r.ratio) record(ratio, opts, {"ratio", formula->to_string(), r.ratio.to_string()});
        finish(ratio);
    }
    rep.claims.push_back(std::move(ratio));

    if (fam == Family::OJZR && inst.block_length() >= inst.jump()) {
        rep.notes.push_back(fmt::format(
            "l={} >= k={}: outside the l < k range where the OJZR closed forms hold", inst.block_length(),
            inst.jump()));
    }
    if (fam == Family::LOZJ) {
        rep.notes.push_back(
            "values follow the shifted jump k + |x|_0; figure captions that quote (1,7) for 10010010 "
            "at n=8 correspond to k=2, this convention gives (1,8) at k=3");
    }
    if (fam == Family::OJZR && (inst.n() - inst.jump()) % inst.block_length() != 0) {
        rep.notes.push_back(fmt::format(
            "the printed extra front point (n-k, floor(k/l) l) = ({},{}) evaluates to ({},{}) under the "
            "shifted jump",
            inst.n() - inst.jump(), (inst.jump() / inst.block_length()) * inst.block_length(), inst.n(),
            (inst.jump() / inst.block_length()) * inst.block_length()));
    }
    return rep;
}

VerificationReport verify(const ProblemInstance& inst, const VerifyOptions& opts) {
    return verify(enumerate_landscape(inst, opts.enumeration), opts);
}

std::vector<ProblemInstance> verification_grid(std::optional<Family> scope, int n_max) {
    std::vector<ProblemInstance> out;
    for (Family fam : all_families) {
        if (scope && *scope != fam) continue;
        for (int n = 6; n <= n_max; n += 2) {
            std::vector<std::optional<int>> ks{std::nullopt}, ls{std::nullopt};
            if (uses_jump(fam)) {
                ks.clear();
                for (int k = 1; k < n; ++k) ks.emplace_back(k);
            }
            if (uses_blocks(fam)) {
                ls.clear();
                for (int l = 2; l < n; ++l) {
                    if (n % l == 0) ls.emplace_back(l);
                }
            }
            for (const auto& k : ks) {
                for (const auto& l : ls) {
                    try {
                        out.push_back(ProblemInstance::validate(fam, n, k, l));
                    } catch (const ParameterViolation&) {
                        // outside the family's valid range
                    }
                }
            }
        }
    }
    return out;
}

std::vector<VerificationReport> verify_all(const std::vector<ProblemInstance>& instances,
                                           const VerifyOptions& opts, unsigned threads) {
    std::vector<VerificationReport> out(instances.size());
    std::vector<std::exception_ptr> errors(instances.size());
    std::atomic<std::size_t> next{0};
    const auto worker = [&] {
        for (std::size_t i = next++; i < instances.size(); i = next++) {
            try {
                out[i] = verify(instances[i], opts);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 1; t < std::max(1U, threads); ++t) pool.emplace_back(worker);
        worker();
    }
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    return out;
}

namespace {

nlohmann::ordered_json to_json(const VerificationReport& r) {
    using json = nlohmann::ordered_json;
    json doc;
    doc["instance"] = r.instance;
    doc["must_match_ok"] = r.must_match_ok();
    json claims = json::array();
    for (const auto& c : r.claims) {
        json ces = json::array();
        for (const auto& ce : c.counterexamples) {
            ces.push_back(json{{"item", ce.item}, {"claimed", ce.claimed}, {"computed", ce.computed}});
        }
        claims.push_back(json{{"claim", to_string(c.kind)},
                              {"outcome", to_string(c.outcome)},
                              {"must_match", c.must_match},
                              {"mismatches", c.mismatches},
                              {"counterexamples", std::move(ces)}});
    }
    doc["claims"] = std::move(claims);
    doc["notes"] = r.notes;
    return doc;
}

}  // namespace

std::string serialize(const VerificationReport& report) { return to_json(report).dump(2) + "\n"; }

std::string serialize(const std::vector<VerificationReport>& reports) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : reports) arr.push_back(to_json(r));
    return arr.dump(2) + "\n";
}

}  // namespace pbmo

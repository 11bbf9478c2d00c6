// Acceptance checks. Each criterion prints exactly one PASS/FAIL line;
// supporting detail goes to indented lines underneath.
#include <CLI11.hpp>
#include <fmt/core.h>

#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "pbmo/pbmo.hpp"

using namespace pbmo;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Check {
    bool ok = true;
    std::vector<std::string> details;

    void expect(bool cond, std::string what) {
        if (!cond) {
            ok = false;
            details.push_back("violated: " + std::move(what));
        }
    }
    void info(std::string what) { details.push_back(std::move(what)); }
};

ProblemInstance inst(const char* desc) { return parse_descriptor(desc); }

ExactRational half() { return ExactRational(BigInt(1), BigInt(2)); }

// 1. Closed forms against exhaustive enumeration on the whole grid.
Check oracle_equivalence() {
    Check c;
    const auto t0 = Clock::now();
    const auto grid = verification_grid(std::nullopt, 14);
    const auto reports = verify_all(grid, {}, std::max(1U, std::thread::hardware_concurrency()));
    std::size_t failures = 0, ojzr_mismatches = 0, silent = 0;
    for (std::size_t i = 0; i < reports.size(); ++i) {
        const auto& r = reports[i];
        if (!r.must_match_ok()) {
            ++failures;
            c.expect(false, "must-match claim failed on " + r.instance);
        }
        if (grid[i].family() != Family::OJZR) continue;
        for (ClaimKind kind : {ClaimKind::pareto_set, ClaimKind::local_optima}) {
            const auto& claim = r.claim(kind);
            if (claim.outcome != Outcome::mismatch) continue;
            ++ojzr_mismatches;
            if (claim.counterexamples.empty()) ++silent;
        }
    }
    const double secs = seconds_since(t0);
    c.expect(silent == 0, fmt::format("{} OJZR mismatches without counterexamples", silent));
    c.expect(secs < 300.0, fmt::format("runtime {:.1f} s", secs));
    c.info(fmt::format("{} instances, {} must-match failures, {} OJZR set-level mismatches (all with "
                       "counterexamples: {}), {:.2f} s",
                       grid.size(), failures, ojzr_mismatches, silent == 0, secs));
    return c;
}

// 2. Characteristic profiles: one representative per family plus the edge rules.
Check table_reproduction() {
    Check c;
    using P = CharacteristicProfile;
    struct Row {
        const char* desc;
        P expected;
        bool low_ratio_by_rule;  // low-ratio cell is checked against R <= 1/2 instead
    };
    const std::vector<Row> rows = {
        {"omm:n=8", P{false, false, false, false, false, false, false}, false},
        {"lotz:n=8", P{false, true, false, true, true, false, false}, false},
        {"ojzj:n=12,k=3", P{false, true, true, true, false, false, false}, true},
        {"cocz:n=8", P{true, true, false, false, true, false, false}, false},
        {"orzr:n=12,l=4", P{false, true, true, true, true, false, true}, false},
        {"omtz:n=8", P{true, true, false, true, true, false, false}, false},
        {"omzj:n=12,k=3", P{true, true, true, true, false, false, false}, false},
        {"omzr:n=12,l=3", P{true, true, true, true, true, false, false}, false},
        {"lozj:n=12,k=3", P{true, true, true, true, true, false, true}, false},
        {"lozr:n=12,l=3", P{true, true, true, true, true, false, true}, false},
        {"ojzr:n=12,k=5,l=3", P{true, true, true, true, true, true, true}, false},
    };
    for (const auto& row : rows) {
        const auto report = enumerate_landscape(inst(row.desc));
        auto got = characteristic_profile(report);
        auto want = row.expected;
        if (row.low_ratio_by_rule) {
            c.expect(got.low_ratio_witness == (report.ratio <= half()),
                     fmt::format("{}: low-ratio flag disagrees with R <= 1/2", row.desc));
            want.low_ratio_witness = got.low_ratio_witness;
        }
        c.expect(got == want, fmt::format("{}: got {}, want {}", row.desc, to_string(got), to_string(want)));
    }

    // OJZJ ratio turns low only for large k; at or below the threshold it stays >= 1/2.
    for (const auto& i : verification_grid(Family::OJZJ, 14)) {
        const auto r = enumerate_landscape(i);
        const bool flag = characteristic_profile(r).low_ratio_witness;
        c.expect(flag == (r.ratio <= half()), i.descriptor() + ": flag vs ratio");
        if (i.jump() <= ojzj_threshold_k(i.n())) c.expect(!flag, i.descriptor() + ": flag below threshold");
    }
    const auto r32 = ratio_ojzj(32, 15);
    c.expect(r32 <= half(), "OJZJ n=32, k=15 should fall to <= 1/2");
    c.info(fmt::format("OJZJ low ratio: n=32,k=15 R={} ({})", r32.to_string(), r32.to_decimal()));

    // Footnote 2: ORZR local optima iff l > 3.
    for (int n = 6; n <= 16; n += 2)
        for (const auto& i : verification_grid(Family::ORZR, n)) {
            if (i.n() != n) continue;
            const bool has = characteristic_profile(i).has_local_optima;
            c.expect(has == (i.block_length() > 3), i.descriptor() + ": local optima iff l > 3");
        }

    // Footnote 3: OJZR front nonlinear iff (n-k) mod l != 0, under l < k.
    std::size_t outside = 0;
    for (const auto& i : verification_grid(Family::OJZR, 14)) {
        const bool nonlinear = front_shape(i) != FrontShape::linear;
        const bool unaligned = (i.n() - i.jump()) % i.block_length() != 0;
        if (i.block_length() < i.jump()) {
            c.expect(nonlinear == unaligned, i.descriptor() + ": nonlinear iff unaligned");
        } else if (nonlinear != unaligned) {
            ++outside;
        }
    }
    c.info(fmt::format("OJZR shape rule checked for l < k; {} grid instances with l >= k deviate (see notes)", outside));
    return c;
}

// 3. Counts quoted in the text.
Check named_counts() {
    Check c;
    const auto omm = enumerate_landscape(inst("omm:n=8"));
    c.expect(omm.pareto_set.size() == 256 && omm.ratio == ExactRational(1), "OMM n=8");
    const auto lotz = enumerate_landscape(inst("lotz:n=8"));
    bool front_ok = lotz.pareto_front.size() == 9;
    for (int i = 0; front_ok && i <= 8; ++i) front_ok = lotz.pareto_front[i].vector == ObjectiveVector{i, 8 - i};
    c.expect(lotz.pareto_set.size() == 9 && front_ok, "LOTZ n=8");
    const auto ojzj = enumerate_landscape(inst("ojzj:n=8,k=2"));
    const ExactRational r1516(BigInt(15), BigInt(16));
    c.expect(ojzj.pareto_set.size() == 240 && ojzj.ratio == r1516 && ratio_ojzj(8, 2) == r1516, "OJZJ n=8,k=2");
    const auto ojzr = enumerate_landscape(inst("ojzr:n=8,k=3,l=2"));
    const ExactRational r964(BigInt(9), BigInt(64));
    c.expect(ratio_ojzr(8, 3, 2) == r964 && ojzr.ratio == r964, "OJZR n=8,k=3,l=2");
    c.info(fmt::format("OMM {} {}; LOTZ {}; OJZJ {} {}; OJZR formula {} enumerated {}", omm.pareto_set.size(),
                       omm.ratio.to_string(), lotz.pareto_set.size(), ojzj.pareto_set.size(),
                       ojzj.ratio.to_string(), ratio_ojzr(8, 3, 2).to_string(), ojzr.ratio.to_string()));
    return c;
}

// 4. Small jumps keep at least half of the space Pareto optimal.
Check ojzj_small_k() {
    Check c;
    const auto t0 = Clock::now();
    std::size_t pairs = 0;
    for (int n = 20; n <= 200; ++n) {
        const int top = ojzj_threshold_k(n);
        for (int k = 1; k <= top && 2 * k < n; ++k, ++pairs)
            c.expect(ratio_ojzj(n, k) >= half(), fmt::format("R({},{}) < 1/2", n, k));
    }
    const double secs = seconds_since(t0);
    c.expect(secs < 60.0, fmt::format("runtime {:.1f} s", secs));
    c.info(fmt::format("{} (n,k) pairs, {:.2f} s", pairs, secs));
    return c;
}

// 5. Largest jump: strict decrease and closeness to the central-binomial asymptote.
Check ojzj_large_k() {
    Check c;
    constexpr double lo = 0.8, hi = 1.25;
    double min_ratio = 1e9, max_ratio = 0;
    for (int parity : {0, 1}) {
        std::optional<ExactRational> prev;
        for (int m = 8; m <= 1024; m *= 2) {
            const int n = 2 * m + parity;
            const auto r = ratio_ojzj(n, m - 1);
            if (prev) c.expect(r < *prev, fmt::format("no strict decrease at n={}", n));
            prev = r;
            if (n < 512) continue;
            const double q = static_cast<double>(r.to_long_double()) / ojzj_asymptote(n);
            min_ratio = std::min(min_ratio, q);
            max_ratio = std::max(max_ratio, q);
            c.expect(q >= lo && q <= hi, fmt::format("n={}: R/asymptote = {:.6f}", n, q));
        }
    }
    c.info(fmt::format("R/asymptote over n >= 512 in [{:.6f}, {:.6f}], window [{}, {}]", min_ratio, max_ratio, lo,
                       hi));
    return c;
}

// 6. OJZR ratio bound, literally on the grid, plus the l = 2 argument.
Check ojzr_bound() {
    Check c;
    std::vector<std::string> violations;
    std::size_t checked = 0, restricted_bad = 0, enumerated_bad = 0;
    for (const auto& i : verification_grid(Family::OJZR, 14)) {
        const int n = i.n(), k = i.jump(), l = i.block_length();
        if ((n - k) % l == 0) continue;
        if (l > 2) {
            ++checked;
            const auto r = ratio_ojzr(n, k, l);
            if (!ojzr_bound_holds(r, n, l)) {
                violations.push_back(fmt::format("{} R={}", i.descriptor(), r.to_string()));
                if (l < k) ++restricted_bad;
            }
            if (!ojzr_bound_holds(ratio_pareto(i), n, l)) ++enumerated_bad;
            continue;
        }
        // l = 2 needs odd k = 2p+1; the straddling column has C(n/2, p)(n-2p) members.
        const int p = (k - 1) / 2;
        const auto terms = ojzr_terms(n, k, l);
        const auto enumerated = ratio_pareto(i);
        c.expect(terms.column == binomial(n / 2, p) * (n - 2 * p), i.descriptor() + ": l=2 column count");
        c.expect(ratio_ojzr(n, k, l) == enumerated, i.descriptor() + ": l=2 formula vs enumeration");
        c.expect(enumerated <= half(), i.descriptor() + ": l=2 ratio above 1/2");
    }
    for (const auto& v : violations) c.expect(false, "bound exceeded by formula: " + v);
    c.info(fmt::format("{} grid instances with l > 2 and unaligned column; formula exceeds the bound on {} "
                       "({} of them with l < k); enumerated ratio exceeds it on {}",
                       checked, violations.size(), restricted_bad, enumerated_bad));
    return c;
}

// 7. Front shapes with integer cross products.
Check front_shapes() {
    Check c;
    c.expect(front_shape(inst("ojzr:n=12,k=5,l=3")) == FrontShape::nonlinear_concave, "OJZR(12,5,3) concave");
    const auto k6 = ProblemInstance::validate(Family::OJZR, 12, 6, 3, Bounds::figure);
    c.expect(front_shape(k6) == FrontShape::linear, "OJZR(12,6,3) linear");
    std::size_t n_checked = 0;
    for (Family f : {Family::LOTZ, Family::ORZR, Family::OMZR})
        for (const auto& i : verification_grid(f, 14)) {
            ++n_checked;
            c.expect(front_shape(i) == FrontShape::linear, i.descriptor() + " linear");
        }
    c.info(fmt::format("{} LOTZ/ORZR/OMZR grid instances checked; OJZR(12,6,3) built with figure bounds",
                       n_checked));
    return c;
}

RunConfig make_config(Algorithm a, const char* desc, std::uint64_t seed, std::uint64_t budget) {
    return RunConfig{a, inst(desc), seed, budget, Target{}};
}

// 8. Evolutionary algorithm properties.
Check ea_properties() {
    Check c;
    for (Algorithm a : {Algorithm::semo, Algorithm::gsemo}) {
        for (const char* desc : {"lozj:n=20,k=4", "orzr:n=20,l=5"}) {
            auto cfg = make_config(a, desc, 12345, 100000);
            cfg.target.kind = Target::Kind::coverage;
            bool clean = true;
            std::uint64_t steps = 0;
            RunOptions opts;
            opts.observer = [&](std::uint64_t evals, const std::vector<ArchiveEntry>& archive) {
                steps = evals;
                for (std::size_t x = 0; x < archive.size(); ++x)
                    for (std::size_t y = 0; y < archive.size(); ++y)
                        if (x != y && weakly_dominates(archive[x].f, archive[y].f)) clean = false;
            };
            const auto res = run(cfg, opts);
            c.expect(clean, fmt::format("{} on {}: archive lost mutual non-dominance", to_string(a), desc));
            c.expect(steps == res.evaluations_used, "observer missed steps");
            c.info(fmt::format("{} on {}: {} observed steps", to_string(a), desc, steps));
            c.expect(run(cfg) == res, fmt::format("{} on {}: seeded rerun differs", to_string(a), desc));
        }
    }

    std::vector<std::uint64_t> seeds(50);
    std::iota(seeds.begin(), seeds.end(), 1);
    const unsigned threads = std::max(1U, std::thread::hardware_concurrency());
    const auto lotz = hitting_time_experiment(make_config(Algorithm::semo, "lotz:n=10", 0, 1000000), seeds, threads);
    c.expect(lotz.success_fraction >= 0.95, "SEMO on LOTZ n=10 below 95%");
    c.info("SEMO LOTZ n=10, 1e6: " + summary_line(lotz));

    constexpr std::uint64_t budget = 1000000;  // calibrated: GSEMO hits all 50 seeds, SEMO none
    const auto semo = hitting_time_experiment(make_config(Algorithm::semo, "orzr:n=12,l=4", 0, budget), seeds, threads);
    const auto gsemo =
        hitting_time_experiment(make_config(Algorithm::gsemo, "orzr:n=12,l=4", 0, budget), seeds, threads);
    c.expect(gsemo.success_fraction >= semo.success_fraction, "GSEMO below SEMO on ORZR n=12,l=4");
    c.info(fmt::format("ORZR n=12,l=4, budget {}: SEMO {} | GSEMO {}", budget, summary_line(semo),
                       summary_line(gsemo)));
    return c;
}

// 9. Figure datasets.
Check figure_pipeline() {
    Check c;
    const auto omm = build_figure(enumerate_landscape(inst("omm:n=8")), FigureKind::objective_space);
    std::uint64_t total = 0;
    bool binomials = omm.rows.size() == 9;
    for (const auto& row : omm.rows) {
        total += std::stoull(row[2]);
        binomials = binomials && BigInt(row[2]) == binomial(8, std::stoi(row[0]));
    }
    c.expect(binomials && total == 256, "OMM n=8 multiplicities");

    std::vector<ProblemInstance> instances;
    for (const char* d : {"omm:n=8", "lotz:n=8", "ojzj:n=8,k=2", "cocz:n=8", "orzr:n=8,l=4", "omtz:n=8",
                          "omzj:n=8,k=3", "omzr:n=8,l=2", "lozj:n=8,k=3", "lozr:n=8,l=2", "ojzr:n=12,k=5,l=3"})
        instances.push_back(inst(d));
    instances.push_back(ProblemInstance::validate(Family::OJZR, 12, 6, 3, Bounds::figure));
    EnumerationOptions two;
    two.threads = 2;
    for (const auto& i : instances) {
        const auto a = enumerate_landscape(i);
        const auto b = enumerate_landscape(i, two);
        for (FigureKind k : {FigureKind::objectives_vs_ones, FigureKind::objective_space, FigureKind::levels_vs_ones}) {
            const auto csv = to_csv(build_figure(a, k));
            c.expect(csv == to_csv(build_figure(a, k)) && csv == to_csv(build_figure(b, k)),
                     fmt::format("{} {}: rerun not byte-identical", i.descriptor(), to_string(k)));
        }
        const auto levels = build_figure(a, FigureKind::levels_vs_ones);
        std::map<int, BigInt> per_ones;
        BigInt sum = 0;
        for (const auto& row : levels.rows) {
            per_ones[std::stoi(row[0])] += BigInt(row[2]);
            sum += BigInt(row[2]);
        }
        bool partition = sum == pow2(i.n());
        for (int s = 0; s <= i.n(); ++s) partition = partition && per_ones[s] == binomial(i.n(), s);
        c.expect(partition, i.descriptor() + ": levels_vs_ones is not a partition");
    }
    c.info(fmt::format("{} instances x 3 figure kinds", instances.size()));
    return c;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"acceptance checks"};
    std::vector<int> selected;
    app.add_option("--criterion", selected, "criterion number(s); all when omitted")->check(CLI::Range(1, 9));
    CLI11_PARSE(app, argc, argv);

    const std::vector<std::pair<const char*, std::function<Check()>>> criteria = {
        {"oracle/brute-force equivalence on the grid", oracle_equivalence},
        {"characteristic profiles", table_reproduction},
        {"named counts", named_counts},
        {"OJZJ ratio >= 1/2 below the threshold k", ojzj_small_k},
        {"OJZJ largest-jump decrease and asymptote", ojzj_large_k},
        {"OJZR ratio bound", ojzr_bound},
        {"front-shape fidelity", front_shapes},
        {"SEMO/GSEMO properties", ea_properties},
        {"figure pipeline", figure_pipeline},
    };
    if (selected.empty()) {
        selected.resize(criteria.size());
        std::iota(selected.begin(), selected.end(), 1);
    }
    bool all_ok = true;
    for (int id : selected) {
        const auto& [name, fn] = criteria[id - 1];
        Check result;
        try {
            result = fn();
        } catch (const std::exception& e) {
            result.ok = false;
            result.details.push_back(std::string("exception: ") + e.what());
        }
        all_ok = all_ok && result.ok;
        fmt::print("criterion {}: {} - {}\n", id, result.ok ? "PASS" : "FAIL", name);
        for (const auto& d : result.details) fmt::print("    {}\n", d);
    }
    return all_ok ? 0 : 1;
}

#include "cli.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>

#include "pbmo/pbmo.hpp"

namespace pbmo::cli {

namespace {

struct InstanceArgs {
    std::string descriptor;
    std::string family;
    std::optional<int> n, k, l;

    void attach(CLI::App& cmd) {
        cmd.add_option("descriptor", descriptor, "instance descriptor, e.g. ojzr:n=12,k=5,l=3");
        cmd.add_option("--family", family, "problem family (alternative to the descriptor)");
        cmd.add_option("--n", n, "bit-string length");
        cmd.add_option("--k", k, "jump parameter");
        cmd.add_option("--l", l, "block length");
    }

    // Descriptor fields, with explicit flags taking precedence.
    DescriptorFields fields() const {
        std::optional<DescriptorFields> f;
        if (!descriptor.empty()) f = parse_descriptor_fields(descriptor);
        if (!family.empty()) {
            const auto fam = family_from_name(family);
            if (!fam) throw DomainError(fmt::format("unknown family \"{}\"", family));
            if (f && f->family != *fam) throw DomainError("--family disagrees with the descriptor");
            if (!f) f = DescriptorFields{*fam, {}, {}, {}};
        }
        if (!f) throw DomainError("no instance given: pass a descriptor or --family/--n/--k/--l");
        if (n) f->n = n;
        if (k) f->k = k;
        if (l) f->l = l;
        return *f;
    }

    ProblemInstance instance(Bounds bounds) const {
        const DescriptorFields f = fields();
        if (!f.n) throw DomainError("instance lacks n");
        return ProblemInstance::validate(f.family, *f.n, f.k, f.l, bounds);
    }
};

void write_file(const std::string& path, const std::string& content) {
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os) throw DomainError(fmt::format("cannot open \"{}\" for writing", path));
    os << content;
    if (!os.flush()) throw DomainError(fmt::format("failed writing \"{}\"", path));
}

std::uint64_t parse_count(const std::string& text, std::string_view what) {
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec == std::errc{} && ptr == text.data() + text.size()) return v;
    // Scientific shorthand such as 1e6 must denote an exact integer.
    std::size_t used = 0;
    double d = 0;
    try {
        d = std::stod(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != text.size() || !(d >= 0) || d > 1.8e19 || std::floor(d) != d) {
        throw DomainError(fmt::format("{} \"{}\" is not a non-negative integer", what, text));
    }
    return static_cast<std::uint64_t>(d);
}

// "A..B", "a,b,c" or a single value.
std::vector<std::uint64_t> parse_seeds(const std::string& text) {
    std::vector<std::uint64_t> seeds;
    if (const auto dots = text.find(".."); dots != std::string::npos) {
        const std::uint64_t a = parse_count(text.substr(0, dots), "seed");
        const std::uint64_t b = parse_count(text.substr(dots + 2), "seed");
        if (b < a) throw DomainError(fmt::format("empty seed range \"{}\"", text));
        if (b - a >= 10'000'000) throw DomainError("seed range too large");
        for (std::uint64_t s = a; s <= b; ++s) seeds.push_back(s);
        return seeds;
    }
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto comma = text.find(',', start);
        seeds.push_back(parse_count(text.substr(start, comma - start), "seed"));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return seeds;
}

EnumerationOptions enumeration(std::optional<int> cap, unsigned threads) {
    EnumerationOptions o;
    if (cap) {
        if (*cap < 1 || *cap > BitString::max_length) {
            throw DomainError(fmt::format("--cap {} outside [1, {}]", *cap, BitString::max_length));
        }
        o.cap = *cap;
    }
    o.threads = std::max(1U, threads);
    return o;
}

std::string exponent_text(int twice) {
    return twice % 2 == 0 ? std::to_string(twice / 2) : fmt::format("{}/2", twice);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Bi-objective pseudo-Boolean benchmark toolkit"};
    app.require_subcommand(1);
    std::optional<int> cap;
    unsigned threads = 1;
    app.add_option("--cap", cap, fmt::format("enumeration cap on n (default {} or ${})",
                                             builtin_enumeration_cap, enumeration_cap_env));
    app.add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);
    bool relaxed = false;
    app.add_flag("--figure-bounds", relaxed, "admit k = n/2 for jump families (plot settings)");

    auto* eval = app.add_subcommand("eval", "evaluate one bit-string");
    InstanceArgs eval_inst;
    std::string bits;
    eval_inst.attach(*eval);
    eval->add_option("--x", bits, "bit-string, leftmost bit first")->required();

    auto* land = app.add_subcommand("landscape", "exhaustive landscape report");
    InstanceArgs land_inst;
    std::string land_out;
    land_inst.attach(*land);
    land->add_option("--out", land_out, "write the structured report here");

    auto* ver = app.add_subcommand("verify", "check closed forms against brute force");
    std::string scope = "all";
    int n_max = 14;
    std::string ver_out;
    ver->add_option("--family", scope, "family name or 'all'");
    ver->add_option("--n-max", n_max, "largest (even) n on the grid");
    ver->add_option("--out", ver_out, "write the structured report here");

    auto* rat = app.add_subcommand("ratio", "exact Pareto ratio formulas (ojzj, ojzr)");
    InstanceArgs rat_inst;
    rat_inst.attach(*rat);

    auto* fig = app.add_subcommand("figure", "export a figure dataset");
    InstanceArgs fig_inst;
    std::string kind_name, fig_out;
    fig_inst.attach(*fig);
    fig->add_option("--kind", kind_name, "objectives_vs_ones | objective_space | levels_vs_ones")->required();
    fig->add_option("--out", fig_out, "output file (stdout if omitted)");

    auto* runc = app.add_subcommand("run", "seeded SEMO/GSEMO experiment");
    InstanceArgs run_inst;
    std::string algo_name, seeds_text = "1", budget_text = "1e6", target_text = "full_front", run_out;
    run_inst.attach(*runc);
    runc->add_option("--algorithm", algo_name, "semo | gsemo")->required();
    runc->add_option("--seeds", seeds_text, "range A..B or list a,b,c");
    runc->add_option("--budget", budget_text, "maximum evaluations per run");
    runc->add_option("--target", target_text, "full_front | front_point:F1,F2 | coverage:FRACTION");
    runc->add_option("--out", run_out, "write the per-seed table here (stdout if omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        const EnumerationOptions enum_opts = enumeration(cap, threads);
        const Bounds bounds = relaxed ? Bounds::figure : Bounds::strict;

        if (*eval) {
            const ProblemInstance inst = eval_inst.instance(bounds);
            fmt::print(out, "{}\n", to_string(inst.evaluate(BitString::parse(bits))));
            return exit_ok;
        }

        if (*land) {
            const LandscapeReport r = enumerate_landscape(land_inst.instance(bounds), enum_opts);
            if (!land_out.empty()) write_file(land_out, serialize(r));
            fmt::print(out, "|PS|={} ratio={} components={} |LO|={}\n", r.pareto_set.size(), r.ratio.to_string(),
                       r.components, r.local_optima.size());
            return exit_ok;
        }

        if (*ver) {
            std::optional<Family> fam;
            if (scope != "all") {
                fam = family_from_name(scope);
                if (!fam) throw DomainError(fmt::format("unknown family \"{}\"", scope));
            }
            if (n_max > enum_opts.cap) {
                throw DomainError(fmt::format("--n-max {} exceeds the enumeration cap {}", n_max, enum_opts.cap));
            }
            VerifyOptions vopts;
            vopts.enumeration = enum_opts;
            vopts.enumeration.threads = 1;  // parallelism is across instances
            const auto reports = verify_all(verification_grid(fam, n_max), vopts, enum_opts.threads);
            std::size_t failed = 0, informational = 0;
            for (const auto& r : reports) {
                std::string line = r.instance;
                for (const auto& c : r.claims) {
                    line += fmt::format(" {}={}", to_string(c.kind), to_string(c.outcome));
                    if (c.outcome == Outcome::mismatch) {
                        line += c.must_match ? "[must-match]" : "[informational]";
                        (c.must_match ? failed : informational) += 1;
                    }
                }
                fmt::print(out, "{}\n", line);
                for (const auto& c : r.claims) {
                    if (c.outcome != Outcome::mismatch) continue;
                    for (const auto& ce : c.counterexamples) {
                        fmt::print(out, "  {} {}: claimed {}, computed {}\n", to_string(c.kind), ce.item,
                                   ce.claimed, ce.computed);
                    }
                }
            }
            if (!ver_out.empty()) write_file(ver_out, serialize(reports));
            fmt::print(out, "instances={} must_match_failures={} informational_mismatches={}\n", reports.size(),
                       failed, informational);
            return failed == 0 ? exit_ok : exit_claim_failed;
        }

        if (*rat) {
            const DescriptorFields f = rat_inst.fields();
            if (!f.n || !f.k) throw DomainError("ratio needs n and k");
            if (f.family == Family::OJZJ) {
                const ExactRational r = ratio_ojzj(*f.n, *f.k);
                const int t = ojzj_threshold_k(*f.n);
                fmt::print(out, "{} ({}) threshold_k={} k_within_threshold={} ratio_at_least_half={}\n",
                           r.to_string(), r.to_decimal(6), t, *f.k <= t, r >= ExactRational(1, 2));
                return exit_ok;
            }
            if (f.family == Family::OJZR) {
                if (!f.l) throw DomainError("ratio for ojzr needs l");
                const ExactRational r = ratio_ojzr(*f.n, *f.k, *f.l);
                fmt::print(out, "{} ({}) bound=2^({}) bound_holds={}\n", r.to_string(), r.to_decimal(6),
                           exponent_text(2 * (*f.n / *f.l) - *f.n - 2), ojzr_bound_holds(r, *f.n, *f.l));
                return exit_ok;
            }
            throw DomainError(fmt::format("no ratio formula for family {}", family_name(f.family)));
        }

        if (*fig) {
            const auto kind = figure_kind_from_name(kind_name);
            if (!kind) throw DomainError(fmt::format("unknown figure kind \"{}\"", kind_name));
            const std::string csv = to_csv(build_figure(enumerate_landscape(fig_inst.instance(bounds), enum_opts), *kind));
            if (fig_out.empty()) {
                out << csv;
            } else {
                write_file(fig_out, csv);
            }
            return exit_ok;
        }

        if (*runc) {
            const auto algo = algorithm_from_name(algo_name);
            if (!algo) throw DomainError(fmt::format("unknown algorithm \"{}\"", algo_name));
            const ProblemInstance inst = run_inst.instance(bounds);
            if (inst.n() > enum_opts.cap) {
                throw DomainError(fmt::format("n={} exceeds the enumeration cap {} needed for the target front",
                                              inst.n(), enum_opts.cap));
            }
            const std::uint64_t budget = parse_count(budget_text, "budget");
            if (budget < 1) throw DomainError("budget must be at least 1");
            const RunConfig tmpl{*algo, inst, 0, budget, Target::parse(target_text)};
            const auto seeds = parse_seeds(seeds_text);
            const ExperimentSummary s = hitting_time_experiment(tmpl, seeds, enum_opts.threads);
            if (run_out.empty()) {
                out << to_table(s);
            } else {
                write_file(run_out, to_table(s));
            }
            fmt::print(out, "{} {} target={} budget={} {}\n", to_string(*algo), inst.descriptor(),
                       tmpl.target.to_string(), budget, summary_line(s));
            return exit_ok;
        }
    } catch (const DomainError& e) {
        fmt::print(err, "error: {}\n", e.what());
        return exit_domain_error;
    } catch (const std::domain_error& e) {
        fmt::print(err, "error: {}\n", e.what());
        return exit_domain_error;
    }
    return exit_ok;
}

}  // namespace pbmo::cli

#include "pbmo/evolve.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <exception>
#include <numeric>
#include <thread>

#include <fmt/format.h>

#include "pbmo/dominance.hpp"
#include "pbmo/landscape.hpp"
#include "pbmo/oracles.hpp"
#include "pbmo/verification.hpp"

namespace pbmo {

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

namespace {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t state = seed;
    const std::uint64_t a = splitmix64(state);
    state = a ^ stream;
    return splitmix64(state);
}

}  // namespace

Rng::Rng(std::uint64_t seed, std::uint64_t stream) : engine_(derive_seed(seed, stream)) {}

std::uint64_t Rng::below(std::uint64_t bound) {
    if (bound == 0) throw DomainError("Rng::below needs a positive bound");
    // Reject the lowest (2^64 mod bound) outputs so every residue is equally likely.
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
        const std::uint64_t r = engine_();
        if (r >= threshold) return r % bound;
    }
}

std::string_view to_string(Algorithm a) { return a == Algorithm::semo ? "semo" : "gsemo"; }

std::optional<Algorithm> algorithm_from_name(std::string_view name) {
    std::string lower(name);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (lower == "semo") return Algorithm::semo;
    if (lower == "gsemo") return Algorithm::gsemo;
    return std::nullopt;
}

Target Target::parse(std::string_view text) {
    Target t;
    if (text == "full_front") return t;
    const auto colon = text.find(':');
    const std::string_view head = text.substr(0, colon);
    const std::string_view body = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
    if (head == "front_point") {
        const auto comma = body.find(',');
        int f1 = 0, f2 = 0;
        const auto a = body.substr(0, comma);
        const auto b = comma == std::string_view::npos ? std::string_view{} : body.substr(comma + 1);
        const auto r1 = std::from_chars(a.data(), a.data() + a.size(), f1);
        const auto r2 = std::from_chars(b.data(), b.data() + b.size(), f2);
        if (b.empty() || r1.ec != std::errc{} || r1.ptr != a.data() + a.size() || r2.ec != std::errc{} ||
            r2.ptr != b.data() + b.size()) {
            throw DomainError(fmt::format("malformed front_point target \"{}\"", text));
        }
        t.kind = Kind::front_point;
        t.point = {f1, f2};
        return t;
    }
    if (head == "coverage") {
        double f = 0;
        const auto r = std::from_chars(body.data(), body.data() + body.size(), f);
        if (body.empty() || r.ec != std::errc{} || r.ptr != body.data() + body.size() || !(f > 0.0) ||
            f > 1.0) {
            throw DomainError(fmt::format("coverage target needs a fraction in (0,1], got \"{}\"", text));
        }
        t.kind = Kind::coverage;
        t.fraction = f;
        return t;
    }
    throw DomainError(fmt::format("unknown target \"{}\"", text));
}

std::string Target::to_string() const {
    switch (kind) {
        case Kind::full_front: return "full_front";
        case Kind::front_point: return fmt::format("front_point:{},{}", point.f1, point.f2);
        case Kind::coverage: return fmt::format("coverage:{}", fraction);
    }
    return "unknown";
}

std::vector<ObjectiveVector> target_front(const ProblemInstance& inst) {
    if (is_must_match(inst.family(), ClaimKind::pareto_set)) return oracle_front(inst);
    std::vector<ObjectiveVector> out;
    for (const auto& p : enumerate_landscape(inst).pareto_front) out.push_back(p.vector);
    return out;
}

bool archive_insert(std::vector<ArchiveEntry>& archive, const ArchiveEntry& candidate) {
    for (const auto& e : archive) {
        if (weakly_dominates(e.f, candidate.f)) return false;
    }
    std::erase_if(archive, [&](const ArchiveEntry& e) { return dominates(candidate.f, e.f); });
    archive.push_back(candidate);
    return true;
}

namespace {

class HitTracker {
public:
    HitTracker(const Target& target, const std::vector<ObjectiveVector>& front) : target_(target), front_(front) {
        std::sort(front_.begin(), front_.end());
        if (target.kind == Target::Kind::front_point &&
            !std::binary_search(front_.begin(), front_.end(), target.point)) {
            throw DomainError(fmt::format("target point {} is not on the Pareto front", pbmo::to_string(target.point)));
        }
        // Smallest count c with c / |front| >= fraction, guarding against
        // representation error in the product.
        const double raw = target.fraction * static_cast<double>(front_.size());
        required_ = static_cast<std::size_t>(std::ceil(raw - 1e-9));
        required_ = std::clamp<std::size_t>(required_, 1, front_.size());
    }

    bool reached(const std::vector<ArchiveEntry>& archive) const {
        if (target_.kind == Target::Kind::front_point) {
            return std::any_of(archive.begin(), archive.end(),
                               [&](const ArchiveEntry& e) { return e.f == target_.point; });
        }
        std::size_t covered = 0;
        for (const auto& e : archive) covered += std::binary_search(front_.begin(), front_.end(), e.f);
        return target_.kind == Target::Kind::full_front ? covered == front_.size() : covered >= required_;
    }

private:
    Target target_;
    std::vector<ObjectiveVector> front_;
    std::size_t required_ = 1;
};

template <class Mutate>
RunResult evolve(const RunConfig& cfg, const RunOptions& opts, Mutate mutate) {
    if (cfg.budget < 1) throw DomainError("budget must be at least 1");
    const ProblemInstance& inst = cfg.instance;
    const int n = inst.n();
    std::vector<ObjectiveVector> computed;
    if (!opts.front) computed = target_front(inst);
    const HitTracker tracker(cfg.target, opts.front ? *opts.front : computed);

    Rng rng(cfg.seed, static_cast<std::uint64_t>(cfg.algorithm));
    RunResult res;

    const BitString first(n, rng.next() >> (64 - n));
    res.archive.push_back({first, inst.evaluate(first)});
    res.evaluations_used = 1;
    if (opts.observer) opts.observer(res.evaluations_used, res.archive);
    if (tracker.reached(res.archive)) {
        res.hit = true;
        res.hitting_time = res.evaluations_used;
        return res;
    }
    while (res.evaluations_used < cfg.budget) {
        const ArchiveEntry& parent = res.archive[rng.below(res.archive.size())];
        const BitString child = mutate(parent.x, rng);
        const ArchiveEntry cand{child, inst.evaluate(child)};
        ++res.evaluations_used;
        const bool entered = archive_insert(res.archive, cand);
        if (opts.observer) opts.observer(res.evaluations_used, res.archive);
        if (entered && tracker.reached(res.archive)) {
            res.hit = true;
            res.hitting_time = res.evaluations_used;
            break;
        }
    }
    return res;
}

}  // namespace

RunResult semo_run(const RunConfig& cfg, const RunOptions& opts) {
    RunConfig c = cfg;
    c.algorithm = Algorithm::semo;
    return evolve(c, opts, [n = cfg.instance.n()](const BitString& x, Rng& rng) {
        return x.flipped(static_cast<int>(rng.below(static_cast<std::uint64_t>(n))) + 1);
    });
}

RunResult gsemo_run(const RunConfig& cfg, const RunOptions& opts) {
    RunConfig c = cfg;
    c.algorithm = Algorithm::gsemo;
    return evolve(c, opts, [n = cfg.instance.n()](const BitString& x, Rng& rng) {
        std::uint64_t mask = 0;
        for (int j = 0; j < n; ++j) {
            if (rng.below(static_cast<std::uint64_t>(n)) == 0) mask |= std::uint64_t{1} << j;
        }
        return BitString(n, x.index() ^ mask);
    });
}

RunResult run(const RunConfig& cfg, const RunOptions& opts) {
    return cfg.algorithm == Algorithm::semo ? semo_run(cfg, opts) : gsemo_run(cfg, opts);
}

ExperimentSummary hitting_time_experiment(const RunConfig& tmpl, std::span<const std::uint64_t> seeds,
                                          unsigned threads) {
    if (seeds.empty()) throw DomainError("hitting_time_experiment needs at least one seed");
    const std::vector<ObjectiveVector> front = target_front(tmpl.instance);
    ExperimentSummary s;
    s.runs.resize(seeds.size());
    for_each_chunk(seeds.size(), threads, [&](std::uint64_t b, std::uint64_t e, unsigned) {
        for (std::uint64_t i = b; i < e; ++i) {
            RunConfig cfg = tmpl;
            cfg.seed = seeds[i];
            const RunResult r = run(cfg, RunOptions{&front, {}});
            s.runs[i] = {seeds[i], r.hit, r.hitting_time, r.evaluations_used};
        }
    });

    std::vector<double> times;
    for (const auto& r : s.runs) {
        if (r.hitting_time) times.push_back(static_cast<double>(*r.hitting_time));
    }
    s.success_fraction = static_cast<double>(times.size()) / static_cast<double>(s.runs.size());
    if (!times.empty()) {
        std::sort(times.begin(), times.end());
        const std::size_t m = times.size();
        s.median_hitting_time = m % 2 ? times[m / 2] : (times[m / 2 - 1] + times[m / 2]) / 2.0;
        s.mean_hitting_time = std::accumulate(times.begin(), times.end(), 0.0) / static_cast<double>(m);
    }
    return s;
}

std::string to_table(const ExperimentSummary& s) {
    std::string out = "seed\thit\thitting_time\tevaluations_used\n";
    for (const auto& r : s.runs) {
        out += fmt::format("{}\t{}\t{}\t{}\n", r.seed, r.hit ? 1 : 0,
                           r.hitting_time ? std::to_string(*r.hitting_time) : "NA", r.evaluations_used);
    }
    return out;
}

std::string summary_line(const ExperimentSummary& s) {
    const auto fmt_opt = [](const std::optional<double>& v) {
        return v ? fmt::format("{:.1f}", *v) : std::string("NA");
    };
    const std::size_t hits = static_cast<std::size_t>(std::llround(s.success_fraction * static_cast<double>(s.runs.size())));
    return fmt::format("runs={} hits={} success_fraction={:.4f} median_hitting_time={} mean_hitting_time={}",
                       s.runs.size(), hits, s.success_fraction, fmt_opt(s.median_hitting_time),
                       fmt_opt(s.mean_hitting_time));
}

}  // namespace pbmo

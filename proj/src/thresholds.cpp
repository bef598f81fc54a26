#include "twcst/thresholds.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>
#include <random>
#include <thread>

#include "twcst/core.hpp"
#include "twcst/optimal.hpp"
#include "twcst/transform.hpp"

namespace twcst {

Rational::Rational(Weight p, Weight q) {
    if (q <= 0 || p < 0) throw std::invalid_argument("rational needs p >= 0, q > 0");
    const Weight g = std::gcd(p, q);
    p_ = p / g;
    q_ = q / g;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const __int128 lhs = static_cast<__int128>(a.p_) * b.q_;
    const __int128 rhs = static_cast<__int128>(b.p_) * a.q_;
    return lhs <=> rhs;
}

std::string to_string(const Rational& r) { return std::to_string(r.num()) + "/" + std::to_string(r.den()); }

Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(std::stoll(text), 1);
    return Rational(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
}

Rational max_ratio(const Instance& inst) {
    if (inst.total() == 0) return Rational(1, 1);
    return Rational(inst.max_weight(), inst.total());
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::EqStrict: return "eq-strict";
        case Verdict::LtStrict: return "lt-strict";
        case Verdict::Tie: return "tie";
    }
    return "?";
}

ThresholdReport evaluate(const Instance& inst, Engine engine) {
    if (inst.size() < 2) throw InvalidInstance("root types need at least two keys");
    Weight e = 0;
    Weight l = 0;
    if (engine == Engine::Oracle) {
        Oracle oracle(inst);
        const KeyMask all = full_mask(inst.size());
        e = oracle.rooted_cost(all, RootType::Eq);
        l = oracle.rooted_cost(all, RootType::Lt);
    } else {
        HeaviestFirstDp dp(inst);
        e = dp.rooted_cost(RootType::Eq);
        l = dp.rooted_cost(RootType::Lt);
    }
    const Verdict v = e < l ? Verdict::EqStrict : l < e ? Verdict::LtStrict : Verdict::Tie;
    return {inst, max_ratio(inst), e, l, v};
}

TheoremCheck verify_theorem(const Instance& inst, Engine engine) {
    ThresholdReport report = evaluate(inst, engine);
    const bool applicable = report.ratio >= kLambdaPlus;
    const bool holds = !applicable || report.eq_optimal();
    return {holds, applicable, std::move(report)};
}

std::uint64_t mix_seed(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

namespace {

/// Uniform integer in [lo, hi] by rejection on raw 64-bit draws, so the
/// stream does not depend on the standard library's distributions.
Weight uniform(std::mt19937_64& rng, Weight lo, Weight hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) return lo + static_cast<Weight>(rng());
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return lo + static_cast<Weight>(x % span);
}

void check_range(int n, Weight lo, Weight hi) {
    if (n < 1 || lo < 0 || hi < lo) {
        throw InvalidRange("need n >= 1 and 0 <= lo <= hi, got n=" + std::to_string(n) + " [" +
                           std::to_string(lo) + "," + std::to_string(hi) + "]");
    }
}

unsigned worker_count(unsigned jobs) {
    if (jobs != 0) return jobs;
    return std::max(1u, std::thread::hardware_concurrency());
}

/// Runs body(chunk) for chunk in [0, chunks) on a pool of threads. The first
/// exception thrown by any worker is rethrown.
template <class Body>
void parallel_chunks(std::size_t chunks, unsigned jobs, Body body) {
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::atomic<bool> failed{false};
    auto worker = [&] {
        for (std::size_t c; !failed && (c = next++) < chunks;) {
            try {
                body(c);
            } catch (...) {
                if (!failed.exchange(true)) failure = std::current_exception();
            }
        }
    };
    const unsigned count = std::min<std::size_t>(worker_count(jobs), std::max<std::size_t>(chunks, 1));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < count; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
}

/// Scan direction: lambda+ maximizes the ratio over lt-strict instances,
/// lambda- minimizes it over eq-optimal ones.
struct Goal {
    bool plus;

    bool admissible(const ThresholdReport& r) const { return plus ? r.verdict == Verdict::LtStrict : r.eq_optimal(); }
    bool violates(const ThresholdReport& r) const {
        return plus ? r.verdict == Verdict::LtStrict && r.ratio >= kLambdaPlus
                    : r.eq_optimal() && r.ratio < kLambdaMinus;
    }
    /// a ranks before b: better ratio, then lexicographically smaller weights.
    bool better(const ThresholdReport& a, const ThresholdReport& b) const {
        if (a.ratio != b.ratio) return plus ? a.ratio > b.ratio : a.ratio < b.ratio;
        const auto wa = a.instance.weights();
        const auto wb = b.instance.weights();
        return std::lexicographical_compare(wa.begin(), wa.end(), wb.begin(), wb.end());
    }
};

constexpr std::size_t kKeepViolations = 8;

struct Partial {
    std::uint64_t evaluated = 0;
    std::uint64_t violations = 0;
    std::vector<ThresholdReport> frontier;
    std::vector<ThresholdReport> violating;
};

void insert_frontier(std::vector<ThresholdReport>& frontier, const Goal& goal, const ThresholdReport& r,
                     std::size_t keep) {
    const auto same = [&](const ThresholdReport& x) { return x.instance == r.instance; };
    if (std::any_of(frontier.begin(), frontier.end(), same)) return;
    auto pos = std::find_if(frontier.begin(), frontier.end(),
                            [&](const ThresholdReport& x) { return goal.better(r, x); });
    if (pos == frontier.end() && frontier.size() >= keep) return;
    frontier.insert(pos, r);
    if (frontier.size() > keep) frontier.pop_back();
}

void offer(Partial& p, const Goal& goal, const ThresholdReport& r, std::size_t keep) {
    ++p.evaluated;
    if (goal.violates(r)) {
        ++p.violations;
        if (p.violating.size() < kKeepViolations) p.violating.push_back(r);
    }
    if (goal.admissible(r)) insert_frontier(p.frontier, goal, r, keep);
}

/// Parts are combined in index order, so the result does not depend on
/// which worker ran which part.
ScanSummary merge(const Goal& goal, const ScanOptions& opt, bool exhaustive, const std::vector<Partial>& parts) {
    ScanSummary out;
    out.bound = goal.plus ? "lambda+" : "lambda-";
    out.n = opt.n;
    out.exhaustive = exhaustive;
    for (const auto& p : parts) {
        out.evaluated += p.evaluated;
        out.violations += p.violations;
        for (const auto& r : p.violating) {
            if (out.violating.size() < kKeepViolations) out.violating.push_back(r);
        }
        for (const auto& r : p.frontier) insert_frontier(out.frontier, goal, r, opt.keep);
    }
    if (!out.frontier.empty()) out.best = out.frontier.front();
    return out;
}

bool is_canonical(const std::vector<Weight>& w) {
    return !std::lexicographical_compare(w.rbegin(), w.rend(), w.begin(), w.end());
}

ScanSummary scan_exhaustive(const Goal& goal, const ScanOptions& opt) {
    const std::uint64_t base = static_cast<std::uint64_t>(opt.max_weight - opt.min_weight + 1);
    std::uint64_t total = 1;
    for (int i = 0; i < opt.n; ++i) total *= base;
    constexpr std::uint64_t kChunk = 4096;
    const std::size_t chunks = static_cast<std::size_t>((total + kChunk - 1) / kChunk);
    std::vector<Partial> parts(chunks);
    parallel_chunks(chunks, opt.jobs, [&](std::size_t c) {
        Partial& part = parts[c];
        std::vector<Weight> w(static_cast<std::size_t>(opt.n));
        const std::uint64_t end = std::min(total, (c + 1) * kChunk);
        for (std::uint64_t idx = c * kChunk; idx < end; ++idx) {
            std::uint64_t x = idx;
            for (int i = opt.n - 1; i >= 0; --i) {
                w[static_cast<std::size_t>(i)] = opt.min_weight + static_cast<Weight>(x % base);
                x /= base;
            }
            if (!is_canonical(w)) continue;
            offer(part, goal, evaluate(Instance(w), opt.engine), opt.keep);
        }
    });
    return merge(goal, opt, true, parts);
}

ScanSummary scan_climb(const Goal& goal, const ScanOptions& opt) {
    constexpr int kSteps = 300;
    std::vector<Partial> parts(static_cast<std::size_t>(std::max<long>(opt.samples, 0)));
    parallel_chunks(parts.size(), opt.jobs, [&](std::size_t restart) {
        Partial& part = parts[restart];
        std::mt19937_64 rng(mix_seed(opt.seed ^ mix_seed(restart)));
        // Uniform weights are lt-strict for n >= 4; one heavy key is eq-strict.
        std::vector<Weight> w(static_cast<std::size_t>(opt.n), uniform(rng, opt.min_weight, opt.max_weight));
        if (!goal.plus) {
            w.assign(w.size(), opt.min_weight);
            w[static_cast<std::size_t>(uniform(rng, 0, opt.n - 1))] = opt.max_weight;
        }
        if (std::all_of(w.begin(), w.end(), [](Weight x) { return x == 0; })) w.front() = 1;
        ThresholdReport current = evaluate(Instance(w), opt.engine);
        offer(part, goal, current, opt.keep);
        if (!goal.admissible(current)) return;
        for (int step = 0; step < kSteps; ++step) {
            std::vector<Weight> cand(current.instance.weights().begin(), current.instance.weights().end());
            const auto at = static_cast<std::size_t>(uniform(rng, 0, opt.n - 1));
            if (uniform(rng, 0, 1) == 0) {
                cand[at] = uniform(rng, opt.min_weight, opt.max_weight);
            } else {
                cand[at] = std::clamp<Weight>(cand[at] + (uniform(rng, 0, 1) ? 1 : -1), opt.min_weight, opt.max_weight);
            }
            if (std::all_of(cand.begin(), cand.end(), [](Weight x) { return x == 0; })) continue;
            ThresholdReport next = evaluate(Instance(cand), opt.engine);
            offer(part, goal, next, opt.keep);
            if (!goal.admissible(next)) continue;
            // Worse moves pass with a probability that shrinks over time.
            const double gap = std::abs(static_cast<double>(next.ratio.num()) / next.ratio.den() -
                                        static_cast<double>(current.ratio.num()) / current.ratio.den());
            const double temperature = 0.02 * (1.0 - static_cast<double>(step) / kSteps) + 1e-9;
            const bool accept = !goal.better(current, next) ||
                                std::generate_canonical<double, 53>(rng) < std::exp(-gap / temperature);
            if (accept) current = std::move(next);
        }
    });
    return merge(goal, opt, false, parts);
}

ScanSummary scan(const Goal& goal, const ScanOptions& opt) {
    if (opt.n < 2) throw InvalidRange("scans need n >= 2");
    check_range(opt.n, opt.min_weight, opt.max_weight);
    const double grid = std::pow(static_cast<double>(opt.max_weight - opt.min_weight + 1), opt.n);
    if (grid <= static_cast<double>(opt.exhaustive_limit)) return scan_exhaustive(goal, opt);
    return scan_climb(goal, opt);
}

}  // namespace

Instance gen_random_instance(int n, Weight lo, Weight hi, std::uint64_t seed) {
    check_range(n, lo, hi);
    std::mt19937_64 rng(mix_seed(seed));
    std::vector<Weight> w(static_cast<std::size_t>(n));
    for (auto& x : w) x = uniform(rng, lo, hi);
    return Instance(std::move(w));
}

Instance gen_heavy_instance(int n, Weight lo, Weight hi, std::uint64_t seed) {
    const Instance base = gen_random_instance(n, lo, hi, seed);
    std::vector<Weight> w(base.weights().begin(), base.weights().end());
    const Key m = base.max_weight_key();
    const Weight rest = base.total() - base.max_weight();
    const Weight need = std::max<Weight>((3 * rest + 3) / 4, 1);
    if (w[static_cast<std::size_t>(m - 1)] < need) {
        std::mt19937_64 rng(mix_seed(~seed));
        w[static_cast<std::size_t>(m - 1)] = need + uniform(rng, 0, 2);
    }
    return Instance(std::move(w));
}

ScanSummary scan_lambda_plus(const ScanOptions& opt) { return scan(Goal{true}, opt); }
ScanSummary scan_lambda_minus(const ScanOptions& opt) { return scan(Goal{false}, opt); }

SweepSummary theorem_sweep(const SweepOptions& opt) {
    if (opt.min_n < 2 || opt.max_n < opt.min_n || opt.max_n > kDpMaxKeys) {
        throw InvalidRange("sweep needs 2 <= min_n <= max_n");
    }
    constexpr long kChunk = 256;
    const long samples = std::max<long>(opt.samples, 0);
    const std::size_t chunks = static_cast<std::size_t>((samples + kChunk - 1) / kChunk);
    std::vector<SweepSummary> parts(chunks);
    parallel_chunks(chunks, opt.jobs, [&](std::size_t c) {
        SweepSummary& part = parts[c];
        const long end = std::min(samples, static_cast<long>(c + 1) * kChunk);
        for (long s = static_cast<long>(c) * kChunk; s < end; ++s) {
            const int n = opt.min_n + static_cast<int>(s % (opt.max_n - opt.min_n + 1));
            const Weight hi = s % 2 == 0 ? 100 : 5;
            const Instance inst = gen_heavy_instance(n, 1, hi, opt.seed + static_cast<std::uint64_t>(s) * 0x100000001b3ULL);
            const TheoremCheck check = verify_theorem(inst);
            ++part.checked;
            if (!check.holds) {
                ++part.failures;
                if (part.failing.size() < kKeepViolations) part.failing.push_back(check.report);
            }
            if (check.report.verdict != Verdict::Tie) continue;
            ++part.ties;
            if (!opt.transform) continue;
            ++part.transformed;
            std::string error;
            try {
                const Tree lt_tree = HeaviestFirstDp(inst).rooted_tree(RootType::Lt);
                const TransformResult r = transform_to_eq_root(lt_tree, inst);
                for (const auto& st : r.trace.steps) ++part.cases[to_string(st.label)];
                const bool bounded = std::all_of(r.trace.steps.begin(), r.trace.steps.end(),
                                                 [](const TraceStep& st) { return st.within_bound(); });
                if (r.tree.kind() != NodeKind::Eq || !is_valid(r.tree, all_keys(inst)) ||
                    r.trace.output_cost != check.report.optimum() || !bounded) {
                    error = "transform result not optimal or out of bound";
                }
            } catch (const std::exception& e) {
                error = e.what();
            }
            if (!error.empty()) {
                ++part.transform_failures;
                if (part.transform_errors.size() < kKeepViolations) part.transform_errors.push_back(error);
            }
        }
    });
    SweepSummary out;
    for (auto& p : parts) {
        out.checked += p.checked;
        out.failures += p.failures;
        out.ties += p.ties;
        out.transformed += p.transformed;
        out.transform_failures += p.transform_failures;
        for (const auto& [label, count] : p.cases) out.cases[label] += count;
        for (auto& r : p.failing) {
            if (out.failing.size() < kKeepViolations) out.failing.push_back(r);
        }
        for (auto& e : p.transform_errors) {
            if (out.transform_errors.size() < kKeepViolations) out.transform_errors.push_back(e);
        }
    }
    return out;
}

}  // namespace twcst

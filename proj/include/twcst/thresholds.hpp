#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "twcst/instance.hpp"

namespace twcst {

/// Non-negative fraction p/q in lowest terms, q > 0. Ordered exactly.
class Rational {
public:
    Rational(Weight p, Weight q);

    Weight num() const noexcept { return p_; }
    Weight den() const noexcept { return q_; }

    friend bool operator==(const Rational&, const Rational&) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

private:
    Weight p_;
    Weight q_;
};

std::string to_string(const Rational& r);
Rational parse_rational(const std::string& text);

inline const Rational kLambdaPlus{3, 7};
inline const Rational kLambdaMinus{1, 4};

/// w_max / W. An all-zero instance counts as ratio 1.
Rational max_ratio(const Instance& inst);

enum class Verdict { EqStrict, LtStrict, Tie };
std::string to_string(Verdict v);

struct ThresholdReport {
    Instance instance;
    Rational ratio;
    Weight eq_cost;
    Weight lt_cost;
    Verdict verdict;

    Weight optimum() const { return std::min(eq_cost, lt_cost); }
    bool eq_optimal() const { return verdict != Verdict::LtStrict; }
};

enum class Engine { Dp, Oracle };

/// Both root-restricted optima of an instance with n >= 2.
ThresholdReport evaluate(const Instance& inst, Engine engine = Engine::Dp);

struct TheoremCheck {
    bool holds;
    bool applicable;  // false: w_max < 3/7 W, holds vacuously
    ThresholdReport report;
};

TheoremCheck verify_theorem(const Instance& inst, Engine engine = Engine::Dp);

/// splitmix64 step; used to derive independent streams from one seed.
std::uint64_t mix_seed(std::uint64_t x);

/// n weights uniform in [lo, hi] from mt19937_64 seeded with mix_seed(seed),
/// each drawn by rejection sampling on the raw 64-bit output.
Instance gen_random_instance(int n, Weight lo, Weight hi, std::uint64_t seed);

/// A random instance whose heaviest key is raised (if needed) to at least
/// 3/7 of the total: w_max >= ceil(3R/4) where R is the rest, plus a small
/// random bump.
Instance gen_heavy_instance(int n, Weight lo, Weight hi, std::uint64_t seed);

struct ScanOptions {
    int n = 4;
    Weight min_weight = 1;
    Weight max_weight = 8;
    /// Hill-climbing restarts when the grid is too large to enumerate.
    long samples = 64;
    std::uint64_t seed = 1;
    unsigned jobs = 0;  // 0: hardware concurrency
    /// Enumerate every vector when at most this many exist.
    std::uint64_t exhaustive_limit = 1u << 21;
    Engine engine = Engine::Dp;
    std::size_t keep = 16;  // frontier size
};

struct ScanSummary {
    std::string bound;  // "lambda+" or "lambda-"
    int n = 0;
    bool exhaustive = false;
    std::uint64_t evaluated = 0;
    /// lambda+: lt-strict instances with ratio >= 3/7.
    /// lambda-: eq-optimal instances with ratio < 1/4.
    std::uint64_t violations = 0;
    std::optional<ThresholdReport> best;
    std::vector<ThresholdReport> frontier;  // best first
    std::vector<ThresholdReport> violating; // first few, for reporting
};

/// Largest ratio among lt-strict instances.
ScanSummary scan_lambda_plus(const ScanOptions& opt);
/// Smallest ratio among eq-optimal instances; also counts eq-optimal
/// instances below 1/4.
ScanSummary scan_lambda_minus(const ScanOptions& opt);

struct SweepOptions {
    long samples = 10000;
    int min_n = 2;
    int max_n = 9;
    std::uint64_t seed = 7;
    unsigned jobs = 0;
    bool transform = true;  // run the constructive transform on ties
};

struct SweepSummary {
    long checked = 0;
    long failures = 0;            // E > optimum with w_max >= 3/7 W
    long ties = 0;
    long transformed = 0;
    long transform_failures = 0;  // exception, wrong cost or bound violated
    std::map<std::string, long> cases;  // trace labels seen
    std::vector<ThresholdReport> failing;
    std::vector<std::string> transform_errors;
};

/// Random heavy instances, alternating weight ranges [1,100] and [1,5];
/// sample s has n = min_n + s mod (max_n - min_n + 1).
SweepSummary theorem_sweep(const SweepOptions& opt);

}  // namespace twcst

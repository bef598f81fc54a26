#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "twcst/instance.hpp"
#include "twcst/tree.hpp"

namespace twcst {

enum class RootKind { Leaf, Eq, Lt, Both };
enum class RootType { Eq, Lt };

std::string to_string(RootKind kind);
std::string to_string(RootType type);

/// Root kinds attaining the optimum, given the eq-rooted and lt-rooted costs.
RootKind root_kind_of(Weight eq_cost, Weight lt_cost);

struct OptResult {
    Weight cost = 0;
    Tree tree;
    RootKind root_kind = RootKind::Leaf;
};

/// Bit k-1 set <=> key k present.
using KeyMask = std::uint32_t;

inline constexpr int kOracleMaxKeys = 15;
inline constexpr int kDpMaxKeys = 64;

KeyMask full_mask(int n);
std::vector<Key> mask_keys(KeyMask mask);

/// Exhaustive minimum over all irreducible trees for every key subset,
/// memoized on the subset bitmask. Ground truth for small instances.
class Oracle {
public:
    explicit Oracle(const Instance& inst);

    Weight cost(KeyMask set);
    /// Minimum over trees whose root is the given test type (|set| >= 2).
    Weight rooted_cost(KeyMask set, RootType type);
    RootKind root_kind(KeyMask set);
    /// An optimal tree. Ties prefer an equal-to root, then the heavier key or
    /// the smaller threshold.
    Tree tree(KeyMask set);
    Tree rooted_tree(KeyMask set, RootType type);
    /// Every optimal irreducible tree with canonical thresholds. Exponential;
    /// intended for tests on tiny instances.
    std::vector<Tree> all_optimal_trees(KeyMask set);

private:
    struct Entry {
        Weight eq = -1;
        Weight lt = -1;
        Key eq_key = 0;
        Key lt_threshold = 0;
    };

    const Entry& solve(KeyMask set);
    Weight set_weight(KeyMask set) const;
    Tree build(KeyMask set, int forced);

    Instance inst_;
    std::vector<Entry> memo_;
    std::vector<char> done_;
};

OptResult oracle_opt(KeyMask set, const Instance& inst);
OptResult oracle_opt(const Instance& inst);
Weight oracle_opt_rooted(KeyMask set, const Instance& inst, RootType type);

/// Dynamic program over subproblems "keys of [i, j] minus the h heaviest of
/// [i, j]" (heaviest = weight descending, then index ascending). Equal-to
/// transitions only test the heaviest remaining key.
///
/// The root-restricted equal-to cost is the exception: with tied maximum
/// weights the heaviest-first choice can miss the best equal-to root when that
/// root is not optimal overall, so the top-level equal-to transition tries
/// every key k and solves the instance with k deleted.
class HeaviestFirstDp {
public:
    explicit HeaviestFirstDp(const Instance& inst);

    Weight cost() const { return std::min(heaviest_eq_cost(), lt_cost()); }
    Weight rooted_cost(RootType type) const { return type == RootType::Eq ? eq_cost() : lt_cost(); }
    RootKind root_kind() const;
    Tree tree() const;
    Tree rooted_tree(RootType type) const;

    int size() const noexcept { return n_; }
    Weight value(Key i, Key j, int h) const;
    /// Keys of [i, j] removed in subproblem (i, j, h).
    std::vector<Key> removed(Key i, Key j, int h) const;
    std::vector<Key> remaining(Key i, Key j, int h) const;

private:
    struct State {
        Weight value = 0;
        Weight eq = 0;   // only meaningful with >= 2 remaining keys
        Weight lt = 0;
        Key split = 0;   // best split point t: left [i, t-1], right [t, j]
        int left_h = 0;
    };

    Weight heaviest_eq_cost() const;
    Weight eq_cost() const;
    Weight lt_cost() const;
    std::size_t index(Key i, Key j, int h) const;
    const std::vector<Key>& order(Key i, Key j) const;
    Tree build(Key i, Key j, int h, int forced) const;

    Instance inst_;
    int n_;
    mutable Weight exact_eq_ = -1;
    mutable Key exact_eq_key_ = 0;
    std::vector<State> states_;
    std::vector<std::vector<Key>> order_;  // per interval, keys heaviest first
};

OptResult dp_opt(const Instance& inst);
OptResult dp_opt_rooted(const Instance& inst, RootType type);

}  // namespace twcst

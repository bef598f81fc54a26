#include "twcst/optimal.hpp"

#include <algorithm>
#include <bit>
#include <limits>

namespace twcst {

namespace {

constexpr int kFree = -1;
constexpr int kForceEq = 0;
constexpr int kForceLt = 1;

}  // namespace

std::string to_string(RootKind kind) {
    switch (kind) {
        case RootKind::Leaf: return "leaf";
        case RootKind::Eq: return "eq";
        case RootKind::Lt: return "lt";
        case RootKind::Both: return "both";
    }
    return "?";
}

std::string to_string(RootType type) { return type == RootType::Eq ? "eq" : "lt"; }

RootKind root_kind_of(Weight eq_cost, Weight lt_cost) {
    if (eq_cost < lt_cost) return RootKind::Eq;
    if (lt_cost < eq_cost) return RootKind::Lt;
    return RootKind::Both;
}

KeyMask full_mask(int n) {
    if (n < 1 || n > 31) throw TooManyKeys("bitmask key sets hold 1..31 keys");
    return (KeyMask{1} << n) - 1;
}

std::vector<Key> mask_keys(KeyMask mask) {
    std::vector<Key> keys;
    while (mask) {
        keys.push_back(std::countr_zero(mask) + 1);
        mask &= mask - 1;
    }
    return keys;
}

Oracle::Oracle(const Instance& inst) : inst_(inst) {
    if (inst.size() > kOracleMaxKeys) {
        throw TooManyKeys("the exhaustive oracle handles at most " + std::to_string(kOracleMaxKeys) + " keys, got " +
                          std::to_string(inst.size()));
    }
    const std::size_t states = std::size_t{1} << inst.size();
    memo_.resize(states);
    done_.assign(states, 0);
}

Weight Oracle::set_weight(KeyMask set) const {
    Weight sum = 0;
    for (KeyMask m = set; m; m &= m - 1) sum += inst_.weight(std::countr_zero(m) + 1);
    return sum;
}

const Oracle::Entry& Oracle::solve(KeyMask set) {
    if (set == 0) throw EmptySet("oracle called on an empty key set");
    if (set > full_mask(inst_.size())) throw std::out_of_range("key set mentions keys beyond n");
    Entry& e = memo_[set];
    if (done_[set]) return e;
    if (std::popcount(set) == 1) {
        e.eq = e.lt = 0;
        done_[set] = 1;
        return e;
    }
    const Weight total = set_weight(set);

    Weight best_eq = std::numeric_limits<Weight>::max();
    Key best_key = 0;
    for (KeyMask m = set; m; m &= m - 1) {
        const Key k = std::countr_zero(m) + 1;
        const Weight c = cost(set & ~(KeyMask{1} << (k - 1)));
        if (c < best_eq || (c == best_eq && heavier_first(inst_, k, best_key))) {
            best_eq = c;
            best_key = k;
        }
    }

    // Thresholds t are the keys of `set` other than its smallest; the lower
    // part is every key below t.
    Weight best_lt = std::numeric_limits<Weight>::max();
    Key best_t = 0;
    for (KeyMask m = set & (set - 1); m; m &= m - 1) {
        const Key t = std::countr_zero(m) + 1;
        const KeyMask below = set & ((KeyMask{1} << (t - 1)) - 1);
        const Weight c = cost(below) + cost(set & ~below);
        if (c < best_lt) {
            best_lt = c;
            best_t = t;
        }
    }

    e.eq = total + best_eq;
    e.eq_key = best_key;
    e.lt = total + best_lt;
    e.lt_threshold = best_t;
    done_[set] = 1;
    return e;
}

Weight Oracle::cost(KeyMask set) {
    const Entry& e = solve(set);
    return std::min(e.eq, e.lt);
}

Weight Oracle::rooted_cost(KeyMask set, RootType type) {
    if (std::popcount(set) < 2) {
        if (set == 0) throw EmptySet("oracle called on an empty key set");
        throw NoSuchTree("a single key admits no root test");
    }
    const Entry& e = solve(set);
    return type == RootType::Eq ? e.eq : e.lt;
}

RootKind Oracle::root_kind(KeyMask set) {
    if (std::popcount(set) == 1) return RootKind::Leaf;
    const Entry& e = solve(set);
    return root_kind_of(e.eq, e.lt);
}

Tree Oracle::build(KeyMask set, int forced) {
    if (std::popcount(set) == 1) return Tree::leaf(std::countr_zero(set) + 1);
    const Entry e = solve(set);
    const bool use_eq = forced == kFree ? e.eq <= e.lt : forced == kForceEq;
    if (use_eq) {
        return Tree::eq(e.eq_key, Tree::leaf(e.eq_key), build(set & ~(KeyMask{1} << (e.eq_key - 1)), kFree));
    }
    const KeyMask below = set & ((KeyMask{1} << (e.lt_threshold - 1)) - 1);
    return Tree::lt(e.lt_threshold, build(below, kFree), build(set & ~below, kFree));
}

Tree Oracle::tree(KeyMask set) { return build(set, kFree); }

Tree Oracle::rooted_tree(KeyMask set, RootType type) {
    rooted_cost(set, type);
    return build(set, type == RootType::Eq ? kForceEq : kForceLt);
}

std::vector<Tree> Oracle::all_optimal_trees(KeyMask set) {
    if (std::popcount(set) == 1) return {Tree::leaf(std::countr_zero(set) + 1)};
    const Weight best = cost(set);
    const Weight total = set_weight(set);
    std::vector<Tree> out;
    for (KeyMask m = set; m; m &= m - 1) {
        const Key k = std::countr_zero(m) + 1;
        const KeyMask rest = set & ~(KeyMask{1} << (k - 1));
        if (total + cost(rest) != best) continue;
        for (const Tree& sub : all_optimal_trees(rest)) out.push_back(Tree::eq(k, Tree::leaf(k), sub));
    }
    for (KeyMask m = set & (set - 1); m; m &= m - 1) {
        const Key t = std::countr_zero(m) + 1;
        const KeyMask below = set & ((KeyMask{1} << (t - 1)) - 1);
        if (total + cost(below) + cost(set & ~below) != best) continue;
        const auto lows = all_optimal_trees(below);
        const auto highs = all_optimal_trees(set & ~below);
        for (const Tree& lo : lows) {
            for (const Tree& hi : highs) out.push_back(Tree::lt(t, lo, hi));
        }
    }
    return out;
}

OptResult oracle_opt(KeyMask set, const Instance& inst) {
    Oracle oracle(inst);
    return {oracle.cost(set), oracle.tree(set), oracle.root_kind(set)};
}

OptResult oracle_opt(const Instance& inst) { return oracle_opt(full_mask(inst.size()), inst); }

Weight oracle_opt_rooted(KeyMask set, const Instance& inst, RootType type) {
    Oracle oracle(inst);
    return oracle.rooted_cost(set, type);
}

}  // namespace twcst

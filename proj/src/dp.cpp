#include <algorithm>
#include <limits>

#include "twcst/optimal.hpp"

namespace twcst {

namespace {

constexpr int kFree = -1;
constexpr int kForceEq = 0;
constexpr int kForceLt = 1;

}  // namespace

HeaviestFirstDp::HeaviestFirstDp(const Instance& inst) : inst_(inst), n_(inst.size()) {
    if (n_ > kDpMaxKeys) {
        throw TooManyKeys("the dynamic program handles at most " + std::to_string(kDpMaxKeys) + " keys");
    }
    const auto nn = static_cast<std::size_t>(n_);
    order_.resize(nn * nn);
    for (Key i = 1; i <= n_; ++i) {
        std::vector<Key> cur;
        for (Key j = i; j <= n_; ++j) {
            const auto pos = std::lower_bound(cur.begin(), cur.end(), j,
                                              [&](Key a, Key b) { return heavier_first(inst, a, b); });
            cur.insert(pos, j);
            order_[static_cast<std::size_t>(i - 1) * nn + static_cast<std::size_t>(j - 1)] = cur;
        }
    }
    states_.resize(nn * nn * (nn + 1));

    std::vector<Weight> prefix(nn + 1, 0);
    for (Key k = 1; k <= n_; ++k) prefix[static_cast<std::size_t>(k)] = prefix[static_cast<std::size_t>(k - 1)] + inst.weight(k);

    std::vector<char> removed_flag(nn + 2, 0);
    for (int len = 1; len <= n_; ++len) {
        for (Key i = 1; i + len - 1 <= n_; ++i) {
            const Key j = i + len - 1;
            const auto& ord = order(i, j);
            // Remaining weight for h = 0, reduced as h grows.
            Weight removed_weight = 0;
            std::vector<Weight> remaining_weight(static_cast<std::size_t>(len + 1));
            for (int h = 0; h <= len; ++h) {
                remaining_weight[static_cast<std::size_t>(h)] =
                    prefix[static_cast<std::size_t>(j)] - prefix[static_cast<std::size_t>(i - 1)] - removed_weight;
                if (h < len) removed_weight += inst.weight(ord[static_cast<std::size_t>(h)]);
            }
            for (int h = len; h >= 0; --h) {
                State& s = states_[index(i, j, h)];
                if (len - h <= 1) {
                    s = State{};
                    continue;
                }
                const Weight w = remaining_weight[static_cast<std::size_t>(h)];
                s.eq = w + states_[index(i, j, h + 1)].value;

                for (Key k = i; k <= j; ++k) removed_flag[static_cast<std::size_t>(k)] = 0;
                for (int r = 0; r < h; ++r) removed_flag[static_cast<std::size_t>(ord[static_cast<std::size_t>(r)])] = 1;
                Weight best = std::numeric_limits<Weight>::max();
                Key best_t = 0;
                int best_left_h = 0;
                int left_h = 0;
                for (Key t = i + 1; t <= j; ++t) {
                    left_h += removed_flag[static_cast<std::size_t>(t - 1)];
                    const int left_len = t - i;
                    const int right_len = j - t + 1;
                    if (left_len - left_h < 1 || right_len - (h - left_h) < 1) continue;
                    const Weight c = states_[index(i, t - 1, left_h)].value + states_[index(t, j, h - left_h)].value;
                    if (c < best) {
                        best = c;
                        best_t = t;
                        best_left_h = left_h;
                    }
                }
                s.lt = w + best;
                s.split = best_t;
                s.left_h = best_left_h;
                s.value = std::min(s.eq, s.lt);
            }
        }
    }
}

std::size_t HeaviestFirstDp::index(Key i, Key j, int h) const {
    const auto nn = static_cast<std::size_t>(n_);
    return (static_cast<std::size_t>(i - 1) * nn + static_cast<std::size_t>(j - 1)) * (nn + 1) +
           static_cast<std::size_t>(h);
}

const std::vector<Key>& HeaviestFirstDp::order(Key i, Key j) const {
    return order_[static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j - 1)];
}

Weight HeaviestFirstDp::value(Key i, Key j, int h) const {
    if (i < 1 || j > n_ || i > j || h < 0 || h > j - i + 1) throw std::out_of_range("no such subproblem");
    return states_[index(i, j, h)].value;
}

std::vector<Key> HeaviestFirstDp::removed(Key i, Key j, int h) const {
    value(i, j, h);
    const auto& ord = order(i, j);
    std::vector<Key> out(ord.begin(), ord.begin() + h);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Key> HeaviestFirstDp::remaining(Key i, Key j, int h) const {
    value(i, j, h);
    const auto& ord = order(i, j);
    std::vector<Key> out(ord.begin() + h, ord.end());
    std::sort(out.begin(), out.end());
    return out;
}

Weight HeaviestFirstDp::heaviest_eq_cost() const {
    if (n_ < 2) return 0;
    return states_[index(1, n_, 0)].eq;
}

namespace {

Instance without_key(const Instance& inst, Key k) {
    std::vector<Weight> w(inst.weights().begin(), inst.weights().end());
    w.erase(w.begin() + (k - 1));
    return Instance(std::move(w));
}

Tree shift_keys_from(const Tree& t, Key from) {
    const Key key = t.key() >= from ? t.key() + 1 : t.key();
    if (t.is_leaf()) return Tree::leaf(key);
    return Tree::node(t.kind(), key, shift_keys_from(t.yes(), from), shift_keys_from(t.no(), from));
}

}  // namespace

Weight HeaviestFirstDp::eq_cost() const {
    if (n_ < 2) return 0;
    if (exact_eq_ < 0) {
        for (Key k = 1; k <= n_; ++k) {
            const Weight c = inst_.total() + HeaviestFirstDp(without_key(inst_, k)).cost();
            if (exact_eq_ < 0 || c < exact_eq_ || (c == exact_eq_ && heavier_first(inst_, k, exact_eq_key_))) {
                exact_eq_ = c;
                exact_eq_key_ = k;
            }
        }
    }
    return exact_eq_;
}

Weight HeaviestFirstDp::lt_cost() const {
    if (n_ < 2) return 0;
    return states_[index(1, n_, 0)].lt;
}

RootKind HeaviestFirstDp::root_kind() const { return n_ < 2 ? RootKind::Leaf : root_kind_of(eq_cost(), lt_cost()); }

Tree HeaviestFirstDp::build(Key i, Key j, int h, int forced) const {
    const auto& ord = order(i, j);
    if (j - i + 1 - h <= 1) return Tree::leaf(ord[static_cast<std::size_t>(h)]);
    const State& s = states_[index(i, j, h)];
    const bool use_eq = forced == kFree ? s.eq <= s.lt : forced == kForceEq;
    if (use_eq) {
        const Key k = ord[static_cast<std::size_t>(h)];
        return Tree::eq(k, Tree::leaf(k), build(i, j, h + 1, kFree));
    }
    const int right_h = h - s.left_h;
    // Canonical threshold: the smallest key present on the right.
    const auto right = remaining(s.split, j, right_h);
    return Tree::lt(right.front(), build(i, s.split - 1, s.left_h, kFree), build(s.split, j, right_h, kFree));
}

Tree HeaviestFirstDp::tree() const { return build(1, n_, 0, kFree); }

Tree HeaviestFirstDp::rooted_tree(RootType type) const {
    if (n_ < 2) throw NoSuchTree("a single key admits no root test");
    if (type == RootType::Lt) return build(1, n_, 0, kForceLt);
    eq_cost();
    const Key k = exact_eq_key_;
    const Tree rest = HeaviestFirstDp(without_key(inst_, k)).tree();
    return Tree::eq(k, Tree::leaf(k), shift_keys_from(rest, k));
}

OptResult dp_opt(const Instance& inst) {
    HeaviestFirstDp dp(inst);
    return {dp.cost(), dp.tree(), dp.root_kind()};
}

OptResult dp_opt_rooted(const Instance& inst, RootType type) {
    HeaviestFirstDp dp(inst);
    return {dp.rooted_cost(type), dp.rooted_tree(type), type == RootType::Eq ? RootKind::Eq : RootKind::Lt};
}

}  // namespace twcst

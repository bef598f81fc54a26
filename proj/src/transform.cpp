#include "twcst/transform.hpp"

#include <algorithm>
#include <stdexcept>

#include "twcst/core.hpp"

namespace twcst {

std::string to_string(CaseLabel label) {
    switch (label) {
        case CaseLabel::BaseLeafChild: return "base-r∈{2,n}";
        case CaseLabel::InductiveDescent: return "inductive-descent";
        case CaseLabel::Case1: return "case1";
        case CaseLabel::Case2T4Leaf: return "case2-T4leaf";
        case CaseLabel::Case2_1_1: return "case2-2.1.1";
        case CaseLabel::Case2_1_2: return "case2-2.1.2";
        case CaseLabel::Case2_2_1: return "case2-2.2.1";
        case CaseLabel::Case2_2_2: return "case2-2.2.2";
        case CaseLabel::Case2_2_3: return "case2-2.2.3";
        case CaseLabel::Case2_2_4: return "case2-2.2.4";
        case CaseLabel::Splice: return "splice";
    }
    return "?";
}

bool TraceStep::within_bound() const {
    if (!bound) return true;
    return exact ? cost_delta == *bound : cost_delta <= *bound;
}

namespace {

const Path kLeft = {Branch::Yes};
const Path kRight = {Branch::No};

/// Internal node with `hit` on its =/>= branch and `miss` on the other one.
Tree make_test(NodeKind kind, Key key, Tree hit, Tree miss) {
    return kind == NodeKind::Lt ? Tree::lt(key, std::move(miss), std::move(hit))
                                : Tree::eq(key, std::move(hit), std::move(miss));
}

std::string describe(const char* what, Weight lhs, const char* op, Weight rhs) {
    return std::string(what) + " (" + std::to_string(lhs) + " " + op + " " + std::to_string(rhs) + ")";
}

/// Depth shift of each key in `keys` between two trees.
std::vector<int> shifts(const Tree& before, const Tree& after, const std::vector<Key>& keys) {
    std::vector<int> out;
    out.reserve(keys.size());
    for (Key q : keys) out.push_back(search(after, q).depth - search(before, q).depth);
    return out;
}

/// The common shift of a subtree that moved as a whole.
int uniform_shift(const Tree& before, const Tree& after, const std::vector<Key>& keys, const char* name) {
    const auto s = shifts(before, after, keys);
    if (s.empty()) return 0;
    if (std::any_of(s.begin(), s.end(), [&](int d) { return d != s.front(); })) {
        throw SubcaseUnreachable(std::string(name) + " did not move as a whole");
    }
    return s.front();
}

CaseOutcome case1_rotations(const Tree& tree, const Instance& inst, CaseLabel label, Weight predicted) {
    const int n = inst.size();
    const Path eq_m = kLeft;
    const Path inner = {Branch::No, Branch::No};
    CaseOutcome out{tree, label, 0, predicted, true, {}};
    out.tree = rotate_up(tree, eq_m, n);
    out.rotations.push_back({"rotate-up", eq_m});
    out.tree = rotate_up(out.tree, inner, n);
    out.rotations.push_back({"rotate-up", inner});
    out.cost_delta = cost(out.tree, inst) - cost(tree, inst);
    if (out.cost_delta != predicted) {
        throw std::logic_error("case 1 rotations changed the cost by " + std::to_string(out.cost_delta) +
                               ", expected " + std::to_string(predicted));
    }
    return out;
}

}  // namespace

ProofContext make_context(const Tree& tree, const Instance& inst) {
    if (tree.kind() != NodeKind::Lt) throw std::invalid_argument("context needs a less-than root");
    const Tree& left = tree.yes();
    if (left.kind() != NodeKind::Eq || !left.yes().is_leaf() || left.yes().key() != left.key()) {
        throw std::invalid_argument("context needs an equal-to test with its leaf below the root's <-branch");
    }
    const Tree& t2 = tree.no();
    if (t2.is_leaf()) throw std::invalid_argument("context needs a test at the root's >=-branch");

    ProofContext ctx;
    ctx.r = tree.key();
    ctx.m = left.key();
    ctx.i = t2.key();
    ctx.kind_i = t2.kind();
    ctx.t1 = {Branch::Yes, Branch::No};
    ctx.t2 = kRight;
    ctx.t3 = {Branch::No, t2.hit_branch()};
    ctx.t4 = {Branch::No, opposite(t2.hit_branch())};
    ctx.total = subtree_weight(tree, inst);
    ctx.w_m = inst.weight(ctx.m);
    ctx.w_t1 = subtree_weight(tree.at(ctx.t1), inst);
    ctx.w_t2 = subtree_weight(t2, inst);
    ctx.w_t3 = subtree_weight(tree.at(ctx.t3), inst);
    ctx.w_t4 = subtree_weight(tree.at(ctx.t4), inst);

    const Tree& t4 = tree.at(ctx.t4);
    if (!t4.is_leaf() && !t4.miss().is_leaf()) {
        ctx.j = t4.key();
        ctx.kind_j = t4.kind();
        ctx.t5 = child_path(ctx.t4, t4.hit_branch());
        const Path below_j = child_path(ctx.t4, opposite(t4.hit_branch()));
        const Tree& kt = tree.at(below_j);
        ctx.k = kt.key();
        ctx.kind_k = kt.kind();
        ctx.t6 = child_path(below_j, kt.hit_branch());
        ctx.t7 = child_path(below_j, opposite(kt.hit_branch()));
        ctx.b = {ctx.i, ctx.j, ctx.k};
        std::sort(ctx.b.begin(), ctx.b.end());
    }
    return ctx;
}

CaseOutcome apply_case1(const ProofContext& ctx, const Tree& tree, const Instance& inst) {
    if (3 * ctx.w_t3 < ctx.w_t2) {
        throw PreconditionViolated(describe("3 w(T3) >= w(T2)", 3 * ctx.w_t3, "<", ctx.w_t2), "case 1");
    }
    return case1_rotations(tree, inst, CaseLabel::Case1, ctx.w_t1 + ctx.w_t4 - ctx.w_m);
}

CaseOutcome apply_case2(const ProofContext& given, const Tree& input, const Instance& inst) {
    if (3 * given.w_t3 >= given.w_t2) {
        throw PreconditionViolated(describe("3 w(T3) < w(T2)", 3 * given.w_t3, ">=", given.w_t2), "case 2");
    }
    const Weight bound = given.w_t1 - given.w_m + 2 * given.w_t3;
    const Tree& t4 = input.at(given.t4);

    if (t4.is_leaf()) {
        // ?i becomes =j with T3 on its != side; then the case 1 rotations.
        const Key j = t4.key();
        const Tree swapped =
            input.replaced(given.t2, Tree::eq(j, Tree::leaf(j), input.at(given.t3)));
        CaseOutcome out = case1_rotations(swapped, inst, CaseLabel::Case2T4Leaf,
                                          given.w_t1 + given.w_t3 - given.w_m);
        return out;
    }
    if (t4.leaf_count() == 2) {
        throw PreconditionViolated("T4 has exactly two leaves, so w_j, w_k <= w(T3) would give w(T2) <= 3 w(T3) < w(T2)",
                                   to_string(given.t4));
    }

    // A less-than root of T4 with a leaf child acts as an equal-to test on
    // that leaf's key.
    Tree tree = input;
    if (t4.kind() == NodeKind::Lt && (t4.yes().is_leaf() || t4.no().is_leaf())) {
        const Branch leaf_side = t4.yes().is_leaf() ? Branch::Yes : Branch::No;
        const Key x = t4.child(leaf_side).key();
        tree = tree.replaced(given.t4, Tree::eq(x, Tree::leaf(x), t4.child(opposite(leaf_side))));
    }
    const ProofContext ctx = make_context(tree, inst);
    if (ctx.j == 0) throw SubcaseUnreachable("the !=/< branch of the root of T4 is a leaf");
    if (ctx.i == ctx.j || ctx.j == ctx.k || ctx.i == ctx.k) {
        throw SubcaseUnreachable("tests i, j, k share a key; thresholds are not canonical");
    }
    const auto [b1, b2, b3] = ctx.b;
    if (!(ctx.r < b2)) throw SubcaseUnreachable("central cut coincides with the root test");

    const Tree leaf_m = Tree::leaf(ctx.m);
    const Tree& t1 = tree.at(ctx.t1);
    const Tree& t3 = tree.at(ctx.t3);
    const Tree& t5 = tree.at(ctx.t5);
    const Tree& t6 = tree.at(ctx.t6);
    const Tree& t7 = tree.at(ctx.t7);
    const auto kind_of = [&](Key key) {
        return key == ctx.i ? ctx.kind_i : key == ctx.j ? ctx.kind_j : ctx.kind_k;
    };
    const Tree test_k = make_test(ctx.kind_k, ctx.k, t6, t7);
    // The one of T6 / T7 that receives queries lying entirely above (or
    // below) k, other than k itself.
    const auto residual = [&](bool above_k) -> const Tree& {
        return ctx.kind_k == NodeKind::Lt && above_k ? t6 : t7;
    };
    const auto frame = [&](Tree lower, Tree upper) {
        return Tree::eq(ctx.m, leaf_m,
                        Tree::lt(b2, Tree::lt(ctx.r, t1, std::move(lower)), std::move(upper)));
    };
    const auto require_eq = [&](Key key, const char* why) {
        if (kind_of(key) != NodeKind::Eq) throw SubcaseUnreachable(why);
    };

    CaseLabel label;
    Tree rebuilt;
    if (kind_of(b2) == NodeKind::Lt) {
        if (b2 == ctx.j) {
            label = CaseLabel::Case2_1_1;
            rebuilt = frame(test_k, make_test(ctx.kind_i, ctx.i, t3, t5));
        } else if (b2 == ctx.k) {
            label = CaseLabel::Case2_1_2;
            require_eq(b1, "smallest of i, j, k is not an equal-to test");
            if (b1 == ctx.i) {
                rebuilt = frame(Tree::eq(ctx.i, t3, t7), make_test(ctx.kind_j, ctx.j, t5, t6));
            } else {
                rebuilt = frame(Tree::eq(ctx.j, t5, t7), make_test(ctx.kind_i, ctx.i, t3, t6));
            }
        } else {
            throw SubcaseUnreachable("less-than test on i is the middle key");
        }
    } else if (b2 == ctx.i) {
        if (ctx.kind_j == NodeKind::Eq) {
            label = CaseLabel::Case2_2_1;
            if (b1 == ctx.j) {
                rebuilt = frame(Tree::eq(ctx.j, t5, residual(false)), Tree::eq(ctx.i, t3, test_k));
            } else {
                rebuilt = frame(test_k, Tree::eq(ctx.i, t3, Tree::eq(ctx.j, t5, residual(true))));
            }
        } else {
            label = CaseLabel::Case2_2_2;
            if (b1 != ctx.k || b3 != ctx.j) throw SubcaseUnreachable("case 2.2.2 needs k < i < j");
            rebuilt = frame(test_k, Tree::lt(ctx.j, Tree::eq(ctx.i, t3, residual(true)), t5));
        }
    } else if (b2 == ctx.j) {
        label = CaseLabel::Case2_2_3;
        if (ctx.kind_i == NodeKind::Eq && b1 == ctx.i) {
            rebuilt = frame(Tree::eq(ctx.i, t3, residual(false)), Tree::eq(ctx.j, t5, test_k));
        } else {
            if (b1 != ctx.k) throw SubcaseUnreachable("case 2.2.3 needs k < j");
            const Tree rest = Tree::eq(ctx.j, t5, residual(true));
            rebuilt = ctx.kind_i == NodeKind::Eq ? frame(test_k, Tree::eq(ctx.i, t3, rest))
                                                 : frame(test_k, Tree::lt(ctx.i, rest, t3));
        }
    } else {
        label = CaseLabel::Case2_2_4;
        require_eq(b1, "smallest of i, j, k is not an equal-to test");
        const Tree eq_k = Tree::eq(ctx.k, t6, t7);
        if (b1 == ctx.i) {
            rebuilt = frame(Tree::eq(ctx.i, t3, t7), make_test(ctx.kind_j, ctx.j, t5, eq_k));
        } else {
            rebuilt = frame(Tree::eq(ctx.j, t5, t7), make_test(ctx.kind_i, ctx.i, t3, eq_k));
        }
    }

    const auto keys = all_keys(inst);
    if (!is_valid(rebuilt, keys)) {
        throw SubcaseUnreachable(to_string(label) + " construction misroutes a key: " + to_string(rebuilt));
    }

    // Depth bookkeeping: no key of T6 or T7 (or of their fractured copies)
    // goes deeper; T3 and T5 satisfy one of the two allowed patterns.
    for (const Path* p : {&ctx.t6, &ctx.t7}) {
        const auto s = shifts(tree, rebuilt, leaf_keys(tree.at(*p)));
        if (std::any_of(s.begin(), s.end(), [](int d) { return d > 0; })) {
            throw SubcaseUnreachable(to_string(label) + " moved a key of T6/T7 down");
        }
    }
    const int shift3 = uniform_shift(tree, rebuilt, leaf_keys(t3), "T3");
    const int shift5 = uniform_shift(tree, rebuilt, leaf_keys(t5), "T5");
    const bool down_two = shift3 <= 2 && shift5 == 0;
    const bool down_one_each = ctx.kind_j == NodeKind::Eq && shift3 <= 1 && shift5 <= 1;
    if (!down_two && !down_one_each) {
        throw SubcaseUnreachable(to_string(label) + " moved T3 by " + std::to_string(shift3) + " and T5 by " +
                                 std::to_string(shift5));
    }
    if (!down_two) {
        const Weight w_j = inst.weight(ctx.j);
        if (w_j > ctx.w_t3) {
            throw PreconditionViolated(describe("w_j <= w(T3)", w_j, ">", ctx.w_t3), to_string(ctx.t4));
        }
    }

    CaseOutcome out{rebuilt, label, cost(rebuilt, inst) - cost(input, inst), bound, false, {}};
    out.rotations.push_back({"insert-or-rebuild", kRight});
    if (out.cost_delta > bound) {
        throw std::logic_error(to_string(label) + " exceeded its cost bound");
    }
    return out;
}

namespace {

struct Frame {
    std::string location;
    bool mirrored;
};

void push_splice_if_cheaper(TransformTrace& trace, Weight before, Weight after, const Frame& f) {
    if (after != before) trace.steps.push_back({CaseLabel::Splice, after - before, std::nullopt, false, f.location, f.mirrored, {}});
}

/// `tree`: canonical, irreducible, less-than root, over all keys of `inst`.
/// Returns an equal-to-rooted tree of no greater cost whose root tests a key
/// of maximum weight.
Tree transform_level(const Tree& tree, const Instance& inst, TransformTrace& trace, const Frame& f) {
    const int n = inst.size();
    const Tree& left = tree.yes();
    const Tree& right = tree.no();

    if (left.is_leaf() || right.is_leaf()) {
        Branch side = left.is_leaf() ? Branch::Yes : Branch::No;
        if (left.is_leaf() && right.is_leaf() && heavier_first(inst, right.key(), left.key())) side = Branch::No;
        const Key x = tree.child(side).key();
        const Tree& other = tree.child(opposite(side));
        trace.steps.push_back({CaseLabel::BaseLeafChild, 0, 0, true, f.location, f.mirrored, {}});
        return Tree::eq(x, Tree::leaf(x), other);
    }

    const Key r = tree.key();
    const Weight w_max = inst.max_weight();
    bool heavy_on_left = false;
    for (Key q = 1; q < r; ++q) heavy_on_left = heavy_on_left || inst.weight(q) == w_max;
    if (!heavy_on_left) {
        const Tree reflected = canonicalize_thresholds(mirror(tree, n), all_keys(inst));
        const Tree out = transform_level(reflected, inst.mirrored(), trace, Frame{f.location, !f.mirrored});
        return mirror(out, n);
    }

    // Left subtree over keys 1..r-1 becomes rooted at =m for a heaviest m.
    const Instance sub = inst.prefix(r - 1);
    const Frame below{f.location + "y", f.mirrored};
    Tree new_left = left;
    if (left.kind() == NodeKind::Lt) {
        trace.steps.push_back({CaseLabel::InductiveDescent, 0, std::nullopt, false, below.location, below.mirrored, {}});
        new_left = transform_level(left, sub, trace, below);
    } else if (sub.size() == 2 && inst.weight(left.key()) != sub.max_weight()) {
        const Key y = left.no().key();
        trace.steps.push_back({CaseLabel::InductiveDescent, 0, std::nullopt, false, below.location, below.mirrored, {}});
        new_left = Tree::eq(y, Tree::leaf(y), Tree::leaf(left.key()));
    }
    if (inst.weight(new_left.key()) != w_max) {
        throw PreconditionViolated(
            describe("equal-to root of the left subtree tests a heaviest key", inst.weight(new_left.key()), "<", w_max),
            below.location);
    }
    const Tree current = tree.with_child(Branch::Yes, new_left);

    const ProofContext ctx = make_context(current, inst);
    if (ctx.w_t2 < ctx.w_m) {
        throw PreconditionViolated(describe("w(T2) >= w_m", ctx.w_t2, "<", ctx.w_m), f.location);
    }
    const CaseOutcome outcome =
        3 * ctx.w_t3 >= ctx.w_t2 ? apply_case1(ctx, current, inst) : apply_case2(ctx, current, inst);
    if (outcome.cost_delta > 0) {
        throw PreconditionViolated(describe((to_string(outcome.label) + " cost delta <= 0").c_str(), outcome.cost_delta, ">", 0),
                                   f.location);
    }
    trace.steps.push_back(
        {outcome.label, outcome.cost_delta, outcome.bound, outcome.exact, f.location, f.mirrored, outcome.rotations});

    const auto keys = all_keys(inst);
    const Tree spliced = splice_redundant(outcome.tree, keys);
    push_splice_if_cheaper(trace, cost(outcome.tree, inst), cost(spliced, inst), f);
    return spliced;
}

}  // namespace

TransformResult transform_to_eq_root(const Tree& tree, const Instance& inst) {
    const auto keys = all_keys(inst);
    const Weight input_cost = cost(tree, inst);
    if (tree.is_leaf()) throw PreconditionViolated("the tree has at least one test", "root");
    TransformResult result{tree, {{}, input_cost, input_cost}};
    if (tree.kind() == NodeKind::Eq) return result;
    if (7 * inst.max_weight() < 3 * inst.total()) {
        throw MaxWeightTooSmall("heaviest key weighs " + std::to_string(inst.max_weight()) + ", below 3/7 of " +
                                std::to_string(inst.total()));
    }

    const Frame top{"", false};
    const Tree normalized = canonicalize_thresholds(splice_redundant(tree, keys), keys);
    push_splice_if_cheaper(result.trace, input_cost, cost(normalized, inst), top);
    Tree out = normalized;
    if (normalized.kind() == NodeKind::Lt) out = transform_level(normalized, inst, result.trace, top);

    const Tree cleaned = canonicalize_thresholds(splice_redundant(out, keys), keys);
    push_splice_if_cheaper(result.trace, cost(out, inst), cost(cleaned, inst), top);
    out = cleaned;
    result.tree = out;
    result.trace.output_cost = cost(out, inst);
    Weight sum = 0;
    for (const auto& s : result.trace.steps) sum += s.cost_delta;
    if (sum != result.trace.output_cost - input_cost || out.kind() != NodeKind::Eq) {
        throw std::logic_error("transform trace does not account for the cost change");
    }
    return result;
}

}  // namespace twcst

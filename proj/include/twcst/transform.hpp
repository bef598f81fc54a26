#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "twcst/instance.hpp"
#include "twcst/rotations.hpp"
#include "twcst/tree.hpp"

namespace twcst {

enum class CaseLabel {
    BaseLeafChild,     // root less-than test on 2 or n: one child is a leaf
    InductiveDescent,  // left subtree replaced by an equal-to-rooted tree
    Case1,
    Case2T4Leaf,
    Case2_1_1,
    Case2_1_2,
    Case2_2_1,
    Case2_2_2,
    Case2_2_3,
    Case2_2_4,
    Splice,            // redundant branches removed
};

std::string to_string(CaseLabel label);

struct TraceStep {
    CaseLabel label;
    Weight cost_delta = 0;
    /// Case 1 and its T4-leaf variant: the predicted delta, which must match
    /// exactly. Case 2: the upper bound w(T1) - w_m + 2 w(T3).
    std::optional<Weight> bound;
    bool exact = false;
    std::string location;  // path of the rewritten subtree, in the current frame
    bool mirrored = false; // frame is the reflected key order
    std::vector<RotationStep> rotations;

    bool within_bound() const;
};

struct TransformTrace {
    std::vector<TraceStep> steps;
    Weight input_cost = 0;
    Weight output_cost = 0;
};

struct TransformResult {
    Tree tree;
    TransformTrace trace;
};

/// Named pieces of a tree of the form
///
///     <r  ─ <: =m ─ =: m
///       │          └ !=: T1
///       └ >=: T2 = ?i ─ =/>=: T3
///                     └ !=/<: T4 = ?j ─ =/>=: T5
///                                     └ !=/<: ?k ─ =/>=: T6
///                                                 └ !=/<: T7
///
/// The ?j / ?k part is only filled when T4 has that shape.
struct ProofContext {
    Key m = 0;
    Key r = 0;
    Key i = 0, j = 0, k = 0;
    NodeKind kind_i = NodeKind::Leaf, kind_j = NodeKind::Leaf, kind_k = NodeKind::Leaf;
    std::array<Key, 3> b{};  // sorted {i, j, k}
    Path t1, t2, t3, t4, t5, t6, t7;
    Weight total = 0;
    Weight w_m = 0, w_t1 = 0, w_t2 = 0, w_t3 = 0, w_t4 = 0;
};

/// Reads the context off `tree`, which must be over all keys of `inst`,
/// irreducible, and shaped as above down to ?i.
ProofContext make_context(const Tree& tree, const Instance& inst);

struct CaseOutcome {
    Tree tree;  // before splicing
    CaseLabel label;
    Weight cost_delta = 0;
    Weight bound = 0;
    bool exact = false;
    std::vector<RotationStep> rotations;
};

/// w(T3) >= w(T2)/3: rotate =m to the root, then ?i below it. The cost
/// changes by exactly w(T1) + w(T4) - w_m.
CaseOutcome apply_case1(const ProofContext& ctx, const Tree& tree, const Instance& inst);

/// w(T3) < w(T2)/3: rebuild around a central cut <b2 so that the cost grows
/// by at most w(T1) - w_m + 2 w(T3).
CaseOutcome apply_case2(const ProofContext& ctx, const Tree& tree, const Instance& inst);

/// Turns a valid tree whose heaviest key weighs at least 3/7 of the total
/// into an equal-to-rooted tree of no greater cost. The input must be optimal
/// for the inequalities the construction relies on; when one of them fails
/// the call throws PreconditionViolated instead of returning a worse tree.
TransformResult transform_to_eq_root(const Tree& tree, const Instance& inst);

}  // namespace twcst

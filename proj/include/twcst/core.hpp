#pragma once

#include <optional>
#include <span>
#include <vector>

#include "twcst/instance.hpp"
#include "twcst/tree.hpp"

namespace twcst {

struct SearchOutcome {
    Key key;
    int depth;          // tests executed before reaching a leaf
    Key terminal_leaf;  // label of that leaf
};

SearchOutcome search(const Tree& tree, Key query);

/// True iff every key in `keys` ends at its own leaf.
bool is_valid(const Tree& tree, std::span<const Key> keys);

/// Cost by per-key search simulation; throws InvalidTree if some key ends at
/// the wrong leaf. Reducible trees are fine.
Weight cost(const Tree& tree, const Instance& inst);
Weight cost(const Tree& tree, const Instance& inst, std::span<const Key> keys);

/// Same quantity computed as the sum, over internal nodes, of the weight of
/// the queries passing through the node. Does not check validity.
Weight cost_by_internal_nodes(const Tree& tree, const Instance& inst, std::span<const Key> keys);

/// Per-key depth for every key in `keys` (index i -> depth of keys[i]).
std::vector<int> key_depths(const Tree& tree, std::span<const Key> keys);

/// Keys among `keys` whose search passes through the node at `path`.
std::vector<Key> reaching_keys(const Tree& tree, const Path& path, std::span<const Key> keys);

/// Keys among `keys` that take branch `b` at the root of `tree`.
std::vector<Key> keys_on_branch(const Tree& tree, Branch b, std::span<const Key> keys);

bool is_irreducible(const Tree& tree, std::span<const Key> keys);

/// Removes every branch no query traverses by linking its sibling to the
/// grandparent. Search results for `keys` are unchanged; cost never grows.
Tree splice_redundant(const Tree& tree, const Instance& inst);
Tree splice_redundant(const Tree& tree, std::span<const Key> keys);

/// Moves every less-than threshold up to the smallest reaching key of its
/// ">=" side. Search results and cost are unchanged. Expects an irreducible
/// tree. Afterwards no two tests on one root-to-leaf path share a key unless
/// the second one sits on the ">=" side of the first.
Tree canonicalize_thresholds(const Tree& tree, std::span<const Key> keys);

/// Total weight of the leaves below this node.
Weight subtree_weight(const Tree& node, const Instance& inst);

/// 0 for a leaf, w_k for an equal-to test on k, and the lighter subtree weight
/// for a less-than test.
Weight side_weight(const Tree& node, const Instance& inst);

struct MonotonicityReport {
    bool holds = true;
    std::optional<Path> parent;  // first violating edge (pre-order)
    std::optional<Path> child;
    Weight parent_side_weight = 0;
    Weight child_side_weight = 0;
};

/// Checks sw(parent) >= sw(child) on every edge.
MonotonicityReport check_side_weight_monotonicity(const Tree& tree, const Instance& inst);

/// True iff the root is not an equal-to test or tests a key of maximum weight.
bool check_eq_root_max_weight(const Tree& tree, const Instance& inst);

/// Reflects the key order: key k becomes n + 1 - k. A less-than test on k
/// becomes a less-than test on n + 2 - k with its branches swapped.
Tree mirror(const Tree& tree, int n);

std::vector<Key> leaf_keys(const Tree& tree);

}  // namespace twcst

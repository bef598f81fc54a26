#include "twcst/core.hpp"

#include <algorithm>

namespace twcst {

SearchOutcome search(const Tree& tree, Key query) {
    const Tree* cur = &tree;
    int depth = 0;
    while (!cur->is_leaf()) {
        cur = &cur->child(cur->route(query));
        ++depth;
    }
    return {query, depth, cur->key()};
}

bool is_valid(const Tree& tree, std::span<const Key> keys) {
    return std::all_of(keys.begin(), keys.end(), [&](Key k) { return search(tree, k).terminal_leaf == k; });
}

Weight cost(const Tree& tree, const Instance& inst) { return cost(tree, inst, all_keys(inst)); }

Weight cost(const Tree& tree, const Instance& inst, std::span<const Key> keys) {
    Weight total = 0;
    for (Key k : keys) {
        const SearchOutcome out = search(tree, k);
        if (out.terminal_leaf != k) {
            throw InvalidTree("key " + std::to_string(k) + " ends at leaf " + std::to_string(out.terminal_leaf) +
                              " in " + to_string(tree));
        }
        total += inst.weight(k) * out.depth;
    }
    return total;
}

std::vector<Key> keys_on_branch(const Tree& tree, Branch b, std::span<const Key> keys) {
    std::vector<Key> out;
    for (Key k : keys) {
        if (tree.route(k) == b) out.push_back(k);
    }
    return out;
}

Weight cost_by_internal_nodes(const Tree& tree, const Instance& inst, std::span<const Key> keys) {
    if (tree.is_leaf() || keys.empty()) return 0;
    const auto yes_keys = keys_on_branch(tree, Branch::Yes, keys);
    const auto no_keys = keys_on_branch(tree, Branch::No, keys);
    return inst.weight_of(keys) + cost_by_internal_nodes(tree.yes(), inst, yes_keys) +
           cost_by_internal_nodes(tree.no(), inst, no_keys);
}

std::vector<int> key_depths(const Tree& tree, std::span<const Key> keys) {
    std::vector<int> depths;
    depths.reserve(keys.size());
    for (Key k : keys) depths.push_back(search(tree, k).depth);
    return depths;
}

std::vector<Key> reaching_keys(const Tree& tree, const Path& path, std::span<const Key> keys) {
    std::vector<Key> cur(keys.begin(), keys.end());
    const Tree* node = &tree;
    for (Branch b : path) {
        cur = keys_on_branch(*node, b, cur);
        node = &node->child(b);
    }
    return cur;
}

bool is_irreducible(const Tree& tree, std::span<const Key> keys) {
    if (tree.is_leaf()) return true;
    const auto yes_keys = keys_on_branch(tree, Branch::Yes, keys);
    const auto no_keys = keys_on_branch(tree, Branch::No, keys);
    if (yes_keys.empty() || no_keys.empty()) return false;
    return is_irreducible(tree.yes(), yes_keys) && is_irreducible(tree.no(), no_keys);
}

Tree splice_redundant(const Tree& tree, const Instance& inst) { return splice_redundant(tree, all_keys(inst)); }

Tree splice_redundant(const Tree& tree, std::span<const Key> keys) {
    if (tree.is_leaf() || keys.empty()) return tree;
    const auto yes_keys = keys_on_branch(tree, Branch::Yes, keys);
    const auto no_keys = keys_on_branch(tree, Branch::No, keys);
    if (yes_keys.empty()) return splice_redundant(tree.no(), no_keys);
    if (no_keys.empty()) return splice_redundant(tree.yes(), yes_keys);
    Tree yes = splice_redundant(tree.yes(), yes_keys);
    Tree no = splice_redundant(tree.no(), no_keys);
    if (yes == tree.yes() && no == tree.no()) return tree;
    return Tree::node(tree.kind(), tree.key(), std::move(yes), std::move(no));
}

Tree canonicalize_thresholds(const Tree& tree, std::span<const Key> keys) {
    if (tree.is_leaf()) return tree;
    const auto yes_keys = keys_on_branch(tree, Branch::Yes, keys);
    const auto no_keys = keys_on_branch(tree, Branch::No, keys);
    Key key = tree.key();
    if (tree.kind() == NodeKind::Lt && !no_keys.empty()) {
        key = *std::min_element(no_keys.begin(), no_keys.end());
    }
    Tree yes = canonicalize_thresholds(tree.yes(), yes_keys);
    Tree no = canonicalize_thresholds(tree.no(), no_keys);
    if (key == tree.key() && yes == tree.yes() && no == tree.no()) return tree;
    return Tree::node(tree.kind(), key, std::move(yes), std::move(no));
}

Weight subtree_weight(const Tree& node, const Instance& inst) {
    if (node.is_leaf()) return inst.weight(node.key());
    return subtree_weight(node.yes(), inst) + subtree_weight(node.no(), inst);
}

Weight side_weight(const Tree& node, const Instance& inst) {
    switch (node.kind()) {
        case NodeKind::Leaf: return 0;
        case NodeKind::Eq: return inst.weight(node.key());
        case NodeKind::Lt: return std::min(subtree_weight(node.yes(), inst), subtree_weight(node.no(), inst));
    }
    return 0;
}

namespace {

void find_violation(const Tree& node, const Instance& inst, Path& path, MonotonicityReport& report) {
    if (!report.holds || node.is_leaf()) return;
    const Weight sw = side_weight(node, inst);
    for (Branch b : {Branch::Yes, Branch::No}) {
        const Weight child_sw = side_weight(node.child(b), inst);
        if (child_sw > sw) {
            report.holds = false;
            report.parent = path;
            report.child = child_path(path, b);
            report.parent_side_weight = sw;
            report.child_side_weight = child_sw;
            return;
        }
    }
    for (Branch b : {Branch::Yes, Branch::No}) {
        path.push_back(b);
        find_violation(node.child(b), inst, path, report);
        path.pop_back();
    }
}

}  // namespace

MonotonicityReport check_side_weight_monotonicity(const Tree& tree, const Instance& inst) {
    MonotonicityReport report;
    Path path;
    find_violation(tree, inst, path, report);
    return report;
}

bool check_eq_root_max_weight(const Tree& tree, const Instance& inst) {
    if (tree.kind() != NodeKind::Eq) return true;
    return inst.weight(tree.key()) == inst.max_weight();
}

Tree mirror(const Tree& tree, int n) {
    switch (tree.kind()) {
        case NodeKind::Leaf: return Tree::leaf(n + 1 - tree.key());
        case NodeKind::Eq: return Tree::eq(n + 1 - tree.key(), mirror(tree.yes(), n), mirror(tree.no(), n));
        case NodeKind::Lt: return Tree::lt(n + 2 - tree.key(), mirror(tree.no(), n), mirror(tree.yes(), n));
    }
    return tree;
}

std::vector<Key> leaf_keys(const Tree& tree) {
    if (tree.is_leaf()) return {tree.key()};
    auto out = leaf_keys(tree.yes());
    auto rest = leaf_keys(tree.no());
    out.insert(out.end(), rest.begin(), rest.end());
    return out;
}

}  // namespace twcst

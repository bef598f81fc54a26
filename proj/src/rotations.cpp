#include "twcst/rotations.hpp"

#include <algorithm>

#include "twcst/types.hpp"

namespace twcst {

GeneralTest GeneralTest::explicit_set(std::vector<Key> keys) {
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    return GeneralTest(Shape::Explicit, 0, std::move(keys));
}

GeneralTest GeneralTest::of_branch(const Tree& node, Branch b) {
    switch (node.kind()) {
        case NodeKind::Eq: return b == Branch::Yes ? singleton(node.key()) : co_singleton(node.key());
        case NodeKind::Lt: return b == Branch::Yes ? below(node.key()) : at_least(node.key());
        case NodeKind::Leaf: break;
    }
    throw std::logic_error("a leaf is not a test");
}

bool GeneralTest::contains(Key q) const {
    switch (shape_) {
        case Shape::Singleton: return q == key_;
        case Shape::CoSingleton: return q != key_;
        case Shape::Below: return q < key_;
        case Shape::AtLeast: return q >= key_;
        case Shape::Explicit: return std::binary_search(keys_.begin(), keys_.end(), q);
    }
    return false;
}

GeneralTest GeneralTest::complement(int n) const {
    switch (shape_) {
        case Shape::Singleton: return co_singleton(key_);
        case Shape::CoSingleton: return singleton(key_);
        case Shape::Below: return at_least(key_);
        case Shape::AtLeast: return below(key_);
        case Shape::Explicit: break;
    }
    std::vector<Key> rest;
    for (Key q = 1; q <= n; ++q) {
        if (!contains(q)) rest.push_back(q);
    }
    return explicit_set(std::move(rest));
}

std::vector<Key> GeneralTest::members(int n) const {
    std::vector<Key> out;
    for (Key q = 1; q <= n; ++q) {
        if (contains(q)) out.push_back(q);
    }
    return out;
}

bool containment_holds(const GeneralTest& outer, const GeneralTest& inner, int n) {
    for (Key q = 1; q <= n; ++q) {
        if (inner.contains(q) && !outer.contains(q)) return false;
    }
    return true;
}

Tree rotate_up(const Tree& tree, const Path& child_path, int n) {
    if (child_path.empty()) throw ContainmentViolation("the root has no parent to rotate above");
    Path parent_path(child_path.begin(), child_path.end() - 1);
    const Branch side = child_path.back();
    const Tree& parent = tree.at(parent_path);
    const Tree& child = parent.child(side);
    if (child.is_leaf()) throw ContainmentViolation("cannot rotate a leaf at " + to_string(child_path));

    const GeneralTest outer = GeneralTest::of_branch(parent, side);
    for (Branch inner_side : {Branch::Yes, Branch::No}) {
        if (!containment_holds(outer, GeneralTest::of_branch(child, inner_side), n)) continue;
        const Tree& x = child.child(inner_side);
        const Tree& y = child.child(opposite(inner_side));
        const Tree& z = parent.child(opposite(side));
        Tree lowered = parent.with_child(side, y).with_child(opposite(side), z);
        Tree raised = child.with_child(inner_side, x).with_child(opposite(inner_side), std::move(lowered));
        return tree.replaced(parent_path, std::move(raised));
    }
    throw ContainmentViolation("neither branch set of the test at " + to_string(child_path) +
                               " is contained in its parent's branch set");
}

Tree insert_lt_test(const Tree& tree, Key key, const Path& position) {
    const Tree& sub = tree.at(position);
    return tree.replaced(position, Tree::lt(key, sub, sub));
}

}  // namespace twcst

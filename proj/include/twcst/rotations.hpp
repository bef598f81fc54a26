#pragma once

#include <string>
#include <vector>

#include "twcst/tree.hpp"

namespace twcst {

/// A binary test identified by the set of keys that answer "yes".
class GeneralTest {
public:
    enum class Shape { Singleton, CoSingleton, Below, AtLeast, Explicit };

    static GeneralTest singleton(Key k) { return GeneralTest(Shape::Singleton, k, {}); }
    static GeneralTest co_singleton(Key k) { return GeneralTest(Shape::CoSingleton, k, {}); }
    static GeneralTest below(Key k) { return GeneralTest(Shape::Below, k, {}); }      // (-inf, k)
    static GeneralTest at_least(Key k) { return GeneralTest(Shape::AtLeast, k, {}); }  // [k, inf)
    static GeneralTest explicit_set(std::vector<Key> keys);

    /// Set of keys sent to branch `b` by the internal node `node`.
    static GeneralTest of_branch(const Tree& node, Branch b);

    Shape shape() const noexcept { return shape_; }
    Key key() const noexcept { return key_; }
    bool contains(Key q) const;
    GeneralTest complement(int n) const;
    std::vector<Key> members(int n) const;

    /// True iff the test is one a tree node can implement.
    bool implementable() const noexcept { return shape_ != Shape::Explicit; }

private:
    GeneralTest(Shape shape, Key key, std::vector<Key> keys) : shape_(shape), key_(key), keys_(std::move(keys)) {}

    Shape shape_;
    Key key_;
    std::vector<Key> keys_;  // sorted; Explicit only
};

/// True iff every key of 1..n in `inner` also lies in `outer`. `outer` must
/// already be oriented to the branch that holds the inner test.
bool containment_holds(const GeneralTest& outer, const GeneralTest& inner, int n);

/// One logged rewrite: {rule, path}.
struct RotationStep {
    std::string rule;
    Path path;
};

/// Rotates the node at `child_path` above its parent. Semantics are preserved
/// for every key in 1..n; throws ContainmentViolation otherwise. The child's
/// branch whose key set lies inside the parent's branch (X) moves up one
/// level, the child's other branch (Y) keeps its depth, and the parent's
/// other branch (Z) moves down one level.
Tree rotate_up(const Tree& tree, const Path& child_path, int n);

/// Puts a less-than test on `key` at `position` with a copy of the subtree
/// on each side. The result may be reducible; splice_redundant cleans it up.
Tree insert_lt_test(const Tree& tree, Key key, const Path& position);

}  // namespace twcst

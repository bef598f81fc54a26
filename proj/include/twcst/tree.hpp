#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "twcst/types.hpp"

namespace twcst {

enum class NodeKind : std::uint8_t { Leaf, Eq, Lt };

/// Outcome branch of a test. For an equal-to test "yes" means query == key;
/// for a less-than test "yes" means query < key.
enum class Branch : char { Yes = 'y', No = 'n' };

inline Branch opposite(Branch b) { return b == Branch::Yes ? Branch::No : Branch::Yes; }

/// Branch labels from the root, e.g. "yn" = yes-child, then its no-child.
using Path = std::vector<Branch>;

std::string to_string(const Path& path);
Path parse_path(std::string_view text);
Path child_path(Path path, Branch b);

/// Immutable 2-way comparison search tree. Subtrees are shared between
/// copies, so rewriting a path only allocates the nodes along it.
class Tree {
public:
    Tree() = default;

    static Tree leaf(Key key);
    static Tree eq(Key key, Tree yes, Tree no);
    static Tree lt(Key key, Tree less, Tree at_least);
    static Tree node(NodeKind kind, Key key, Tree yes, Tree no);

    bool empty() const noexcept { return !node_; }
    NodeKind kind() const;
    Key key() const;
    bool is_leaf() const { return kind() == NodeKind::Leaf; }

    const Tree& yes() const;
    const Tree& no() const;
    const Tree& child(Branch b) const { return b == Branch::Yes ? yes() : no(); }

    /// Branch taken by queries that hit the key: "=" for equal-to, ">=" for
    /// less-than. The other branch is the miss ("!=" or "<") branch.
    Branch hit_branch() const { return kind() == NodeKind::Lt ? Branch::No : Branch::Yes; }
    const Tree& hit() const { return child(hit_branch()); }
    const Tree& miss() const { return child(opposite(hit_branch())); }

    /// Which branch a query takes at this (internal) node.
    Branch route(Key query) const;

    Tree with_child(Branch b, Tree subtree) const;
    Tree with_test(NodeKind kind, Key key) const;

    /// Subtree at `path`; throws std::out_of_range if the path leaves the tree.
    const Tree& at(const Path& path) const;
    Tree replaced(const Path& path, Tree subtree) const;

    std::size_t node_count() const;
    std::size_t leaf_count() const;
    int height() const;

    friend bool operator==(const Tree& a, const Tree& b);

private:
    struct Node;
    explicit Tree(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    const Node& get() const;

    std::shared_ptr<const Node> node_;
};

struct Tree::Node {
    NodeKind kind;
    Key key;
    Tree yes;
    Tree no;
};

/// Compact text form, e.g. "(=2 2 (<3 1 3))". Used in diagnostics and tests.
std::string to_string(const Tree& tree);
/// Inverse of to_string: "(=2 2 (<3 1 3))".
Tree parse_tree(std::string_view text);

}  // namespace twcst

#include "twcst/tree.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace twcst {

std::string to_string(const Path& path) {
    std::string out;
    out.reserve(path.size());
    for (Branch b : path) out.push_back(static_cast<char>(b));
    return out;
}

Path parse_path(std::string_view text) {
    Path path;
    path.reserve(text.size());
    for (char c : text) {
        if (c == 'y') path.push_back(Branch::Yes);
        else if (c == 'n') path.push_back(Branch::No);
        else throw std::invalid_argument("path labels must be 'y' or 'n'");
    }
    return path;
}

Path child_path(Path path, Branch b) {
    path.push_back(b);
    return path;
}

Tree Tree::leaf(Key key) { return Tree(std::make_shared<const Node>(Node{NodeKind::Leaf, key, {}, {}})); }

Tree Tree::eq(Key key, Tree yes, Tree no) { return node(NodeKind::Eq, key, std::move(yes), std::move(no)); }

Tree Tree::lt(Key key, Tree less, Tree at_least) {
    return node(NodeKind::Lt, key, std::move(less), std::move(at_least));
}

Tree Tree::node(NodeKind kind, Key key, Tree yes, Tree no) {
    if (kind == NodeKind::Leaf) return leaf(key);
    if (yes.empty() || no.empty()) throw std::invalid_argument("test node needs two subtrees");
    return Tree(std::make_shared<const Node>(Node{kind, key, std::move(yes), std::move(no)}));
}

const Tree::Node& Tree::get() const {
    if (!node_) throw std::logic_error("empty tree handle");
    return *node_;
}

NodeKind Tree::kind() const { return get().kind; }
Key Tree::key() const { return get().key; }

const Tree& Tree::yes() const {
    const Node& n = get();
    if (n.kind == NodeKind::Leaf) throw std::logic_error("leaf has no children");
    return n.yes;
}

const Tree& Tree::no() const {
    const Node& n = get();
    if (n.kind == NodeKind::Leaf) throw std::logic_error("leaf has no children");
    return n.no;
}

Branch Tree::route(Key query) const {
    const Node& n = get();
    switch (n.kind) {
        case NodeKind::Eq: return query == n.key ? Branch::Yes : Branch::No;
        case NodeKind::Lt: return query < n.key ? Branch::Yes : Branch::No;
        case NodeKind::Leaf: break;
    }
    throw std::logic_error("cannot route at a leaf");
}

Tree Tree::with_child(Branch b, Tree subtree) const {
    const Node& n = get();
    return b == Branch::Yes ? node(n.kind, n.key, std::move(subtree), n.no)
                            : node(n.kind, n.key, n.yes, std::move(subtree));
}

Tree Tree::with_test(NodeKind kind, Key key) const {
    const Node& n = get();
    return node(kind, key, n.yes, n.no);
}

const Tree& Tree::at(const Path& path) const {
    const Tree* cur = this;
    for (Branch b : path) {
        if (cur->empty() || cur->is_leaf()) throw std::out_of_range("path " + to_string(path) + " leaves the tree");
        cur = &cur->child(b);
    }
    return *cur;
}

namespace {

Tree replace_from(const Tree& t, const Path& path, std::size_t depth, Tree subtree) {
    if (depth == path.size()) return subtree;
    if (t.is_leaf()) throw std::out_of_range("path " + to_string(path) + " leaves the tree");
    const Branch b = path[depth];
    return t.with_child(b, replace_from(t.child(b), path, depth + 1, std::move(subtree)));
}

}  // namespace

Tree Tree::replaced(const Path& path, Tree subtree) const { return replace_from(*this, path, 0, std::move(subtree)); }

std::size_t Tree::node_count() const { return is_leaf() ? 1 : 1 + yes().node_count() + no().node_count(); }

std::size_t Tree::leaf_count() const { return is_leaf() ? 1 : yes().leaf_count() + no().leaf_count(); }

int Tree::height() const { return is_leaf() ? 0 : 1 + std::max(yes().height(), no().height()); }

bool operator==(const Tree& a, const Tree& b) {
    if (a.node_ == b.node_) return true;
    if (a.empty() || b.empty()) return false;
    if (a.kind() != b.kind() || a.key() != b.key()) return false;
    if (a.is_leaf()) return true;
    return a.yes() == b.yes() && a.no() == b.no();
}

std::string to_string(const Tree& tree) {
    if (tree.empty()) return "()";
    if (tree.is_leaf()) return std::to_string(tree.key());
    const char* op = tree.kind() == NodeKind::Eq ? "=" : "<";
    return "(" + std::string(op) + std::to_string(tree.key()) + " " + to_string(tree.yes()) + " " +
           to_string(tree.no()) + ")";
}

namespace {

struct Reader {
    std::string_view text;
    std::size_t pos = 0;

    void skip() {
        while (pos < text.size() && text[pos] == ' ') ++pos;
    }
    [[noreturn]] void fail(const char* what) const {
        throw InvalidTree(std::string(what) + " at offset " + std::to_string(pos) + " in \"" + std::string(text) + "\"");
    }
    Key number() {
        skip();
        const std::size_t start = pos;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
        if (start == pos) fail("expected a key");
        return std::stoi(std::string(text.substr(start, pos - start)));
    }
    Tree tree() {
        skip();
        if (pos >= text.size()) fail("unexpected end");
        if (text[pos] != '(') return Tree::leaf(number());
        ++pos;
        if (pos >= text.size() || (text[pos] != '=' && text[pos] != '<')) fail("expected = or <");
        const NodeKind kind = text[pos++] == '=' ? NodeKind::Eq : NodeKind::Lt;
        const Key key = number();
        Tree yes = tree();
        Tree no = tree();
        skip();
        if (pos >= text.size() || text[pos] != ')') fail("expected )");
        ++pos;
        return Tree::node(kind, key, std::move(yes), std::move(no));
    }
};

}  // namespace

Tree parse_tree(std::string_view text) {
    Reader r{text};
    Tree t = r.tree();
    r.skip();
    if (r.pos != text.size()) r.fail("trailing text");
    return t;
}

}  // namespace twcst

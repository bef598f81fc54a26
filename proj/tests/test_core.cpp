#include "doctest.h"
#include "twcst/core.hpp"

using namespace twcst;

namespace {

const Instance kEight({8, 3, 4, 3, 2, 9, 8, 7});
const Tree kEightTree = parse_tree("(<6 (=1 1 (<4 (<3 2 3) (<5 4 5))) (=6 6 (<8 7 8)))");

}  // namespace

TEST_SUITE("core") {

TEST_CASE("instance validation and totals") {
    CHECK_THROWS_AS(Instance({}), InvalidInstance);
    CHECK_THROWS_AS(Instance({1, -1}), InvalidInstance);
    const Instance inst({2, 7, 7, 1});
    CHECK(inst.total() == 17);
    CHECK(inst.max_weight_key() == 2);
    CHECK(inst.mirrored() == Instance({1, 7, 7, 2}));
    CHECK(inst.prefix(2) == Instance({2, 7}));
}

TEST_CASE("tree text round trip") {
    const std::string text = "(=2 2 (<3 1 3))";
    CHECK(to_string(parse_tree(text)) == text);
    CHECK_THROWS_AS(parse_tree("(=2 2"), InvalidTree);
    CHECK_THROWS_AS(parse_tree("(?2 1 2)"), InvalidTree);
}

TEST_CASE("eight-key depth profile costs 127") {
    const auto keys = all_keys(kEight);
    CHECK(key_depths(kEightTree, keys) == std::vector<int>{2, 4, 4, 4, 4, 2, 3, 3});
    CHECK(cost(kEightTree, kEight) == 127);
    CHECK(cost_by_internal_nodes(kEightTree, kEight, keys) == 127);
}

TEST_CASE("small costs") {
    CHECK(cost(parse_tree("(=1 1 2)"), Instance({5, 3})) == 8);
    CHECK(cost(Tree::leaf(1), Instance({7})) == 0);
    const SearchOutcome s = search(parse_tree("(<2 1 (=2 2 3))"), 3);
    CHECK(s.depth == 2);
    CHECK(s.terminal_leaf == 3);
}

TEST_CASE("invalid tree is rejected") {
    CHECK_THROWS_AS(cost(parse_tree("(<2 2 1)"), Instance({1, 1})), InvalidTree);
    CHECK_FALSE(is_valid(parse_tree("(=1 2 1)"), std::vector<Key>{1, 2}));
}

TEST_CASE("less-than sends the key itself to >=") {
    const Tree t = parse_tree("(<2 1 2)");
    CHECK(search(t, 2).terminal_leaf == 2);
    CHECK(keys_on_branch(t, Branch::No, std::vector<Key>{1, 2}) == std::vector<Key>{2});
}

TEST_CASE("splice removes dead branches") {
    const Instance inst({1, 1});
    const Tree t = parse_tree("(<2 1 (<2 1 2))");
    CHECK_FALSE(is_irreducible(t, all_keys(inst)));
    const Tree s = splice_redundant(t, inst);
    CHECK(to_string(s) == "(<2 1 2)");
    CHECK(is_irreducible(s, all_keys(inst)));
    CHECK(splice_redundant(s, inst) == s);
    CHECK(cost(s, inst) <= cost(t, inst));
    CHECK(splice_redundant(kEightTree, kEight) == kEightTree);
}

TEST_CASE("splice of a fractured subtree keeps the cost") {
    const Instance inst({2, 3, 5, 1});
    // T7 = (<3 (=1 1 2) (=3 3 4)) copied under a new <3.
    const Tree whole = parse_tree("(<3 (=1 1 2) (=3 3 4))");
    const Tree fractured = Tree::lt(3, whole, whole);
    CHECK(cost(fractured, inst) == cost(whole, inst) + inst.total());
    const Tree spliced = splice_redundant(fractured, inst);
    CHECK(cost(spliced, inst) == cost(whole, inst));
}

TEST_CASE("side weights") {
    CHECK(side_weight(Tree::leaf(1), kEight) == 0);
    CHECK(side_weight(parse_tree("(=6 6 (<8 7 8))"), kEight) == 9);
    const Instance inst({4, 6, 3, 4});
    CHECK(side_weight(parse_tree("(<3 (=1 1 2) (<4 3 4))"), inst) == 7);
}

TEST_CASE("side-weight monotonicity") {
    CHECK(check_side_weight_monotonicity(Tree::leaf(1), Instance({1})).holds);
    const auto r = check_side_weight_monotonicity(parse_tree("(=1 1 (=3 3 2))"), Instance({1, 1, 5}));
    CHECK_FALSE(r.holds);
    REQUIRE(r.parent);
    CHECK(r.parent->empty());
    CHECK(*r.child == Path{Branch::No});
    CHECK(r.parent_side_weight == 1);
    CHECK(r.child_side_weight == 5);
}

TEST_CASE("eq root must test a heaviest key") {
    CHECK_FALSE(check_eq_root_max_weight(parse_tree("(=2 2 (=1 1 3))"), Instance({5, 1, 1})));
    CHECK(check_eq_root_max_weight(parse_tree("(=1 1 (=2 2 3))"), Instance({5, 1, 1})));
    CHECK(check_eq_root_max_weight(parse_tree("(<2 1 (=2 2 3))"), Instance({5, 1, 1})));
}

TEST_CASE("canonical thresholds") {
    const auto keys = std::vector<Key>{1, 2, 3, 4};
    // <4 on {2,3,4} after =3 was taken out: smallest >= key is 4 already.
    const Tree t = parse_tree("(=3 3 (<3 (=1 1 2) 4))");
    CHECK(to_string(canonicalize_thresholds(t, keys)) == "(=3 3 (<4 (=1 1 2) 4))");
    CHECK(cost(canonicalize_thresholds(t, keys), Instance({1, 2, 3, 4})) == cost(t, Instance({1, 2, 3, 4})));
}

TEST_CASE("mirror reflects keys and keeps the cost") {
    const Tree m = mirror(kEightTree, 8);
    CHECK(is_valid(m, all_keys(kEight)));
    CHECK(cost(m, kEight.mirrored()) == 127);
    CHECK(mirror(m, 8) == kEightTree);
}

}  // TEST_SUITE

#include <algorithm>

#include "doctest.h"
#include "twcst/core.hpp"
#include "twcst/optimal.hpp"
#include "twcst/thresholds.hpp"

using namespace twcst;

namespace {

Weight oracle_rooted(const std::vector<Weight>& w, RootType t) {
    const Instance inst(w);
    return oracle_opt_rooted(full_mask(inst.size()), inst, t);
}

}  // namespace

TEST_SUITE("optimal") {

TEST_CASE("oracle small cases") {
    CHECK(oracle_opt(Instance({1, 1})).cost == 2);
    CHECK(oracle_opt(Instance({1, 1, 1})).cost == 5);
    const OptResult four = oracle_opt(Instance({1, 1, 1, 1}));
    CHECK(four.cost == 8);
    CHECK(four.root_kind == RootKind::Lt);
    CHECK(oracle_rooted({1, 1, 1, 1}, RootType::Eq) == 9);
    CHECK_THROWS_AS(oracle_opt(0, Instance({1})), EmptySet);
    CHECK_THROWS_AS(Oracle(Instance(std::vector<Weight>(16, 1))), TooManyKeys);
}

TEST_CASE("pinned root-restricted costs") {
    CHECK(oracle_rooted({3, 4, 3}, RootType::Eq) == 16);
    CHECK(oracle_rooted({3, 4, 3}, RootType::Lt) == 17);
    CHECK(oracle_rooted({3, 2, 2}, RootType::Eq) == 11);
    CHECK(oracle_rooted({3, 2, 2}, RootType::Lt) == 11);
    CHECK(oracle_rooted({1, 1, 1, 1, 1}, RootType::Lt) == 12);
    CHECK(oracle_rooted({1, 1, 1, 1, 1}, RootType::Eq) == 13);
    CHECK(dp_opt_rooted(Instance({3, 4, 3}), RootType::Eq).cost == 16);
    CHECK(dp_opt_rooted(Instance({1, 1, 1, 1}), RootType::Lt).cost == 8);
    CHECK(dp_opt_rooted(Instance({1, 1, 1, 1}), RootType::Eq).cost == 9);
    CHECK(dp_opt_rooted(Instance({5, 5}), RootType::Eq).cost == 10);
    CHECK(dp_opt_rooted(Instance({5, 5}), RootType::Lt).cost == 10);
}

TEST_CASE("eight-key instance and a heavy instance") {
    const Instance eight({8, 3, 4, 3, 2, 9, 8, 7});
    CHECK(oracle_opt(eight).cost == 127);
    CHECK(dp_opt(eight).cost == 127);
    const OptResult heavy = dp_opt(Instance({9, 1, 1, 1, 1, 1, 1}));
    CHECK(heavy.cost == 31);
    CHECK((heavy.root_kind == RootKind::Eq || heavy.root_kind == RootKind::Both));
    const OptResult one = dp_opt(Instance({4}));
    CHECK(one.cost == 0);
    CHECK(one.tree.is_leaf());
}

TEST_CASE("dp equals oracle on {1,2,3}^n, n <= 5") {
    long count = 0;
    for (int n = 1; n <= 5; ++n) {
        std::vector<Weight> w(static_cast<std::size_t>(n), 1);
        while (true) {
            const Instance inst(w);
            Oracle o(inst);
            const KeyMask all = full_mask(n);
            const OptResult d = dp_opt(inst);
            CHECK(d.cost == o.cost(all));
            CHECK(cost(d.tree, inst) == d.cost);
            CHECK(is_irreducible(d.tree, all_keys(inst)));
            if (n >= 2) {
                CHECK(dp_opt_rooted(inst, RootType::Eq).cost == o.rooted_cost(all, RootType::Eq));
                CHECK(dp_opt_rooted(inst, RootType::Lt).cost == o.rooted_cost(all, RootType::Lt));
            }
            ++count;
            std::size_t i = 0;
            while (i < w.size() && w[i] == 3) w[i++] = 1;
            if (i == w.size()) break;
            ++w[i];
        }
    }
    CHECK(count == 3 + 9 + 27 + 81 + 243);
}

TEST_CASE("dp equals oracle on random instances") {
    for (int n = 6; n <= 9; ++n) {
        for (std::uint64_t s = 0; s < 40; ++s) {
            const Instance inst = gen_random_instance(n, 1, 100, 1000 * n + s);
            const OptResult o = oracle_opt(inst);
            const OptResult d = dp_opt(inst);
            CHECK(d.cost == o.cost);
            CHECK(d.root_kind == o.root_kind);
            CHECK(check_side_weight_monotonicity(d.tree, inst).holds);
            CHECK(check_eq_root_max_weight(d.tree, inst));
        }
    }
}

TEST_CASE("dp subproblems remove the h heaviest keys") {
    const Instance inst({4, 9, 4, 1, 9, 2});
    const HeaviestFirstDp dp(inst);
    for (Key i = 1; i <= 6; ++i) {
        for (Key j = i; j <= 6; ++j) {
            std::vector<Key> order;
            for (Key k = i; k <= j; ++k) order.push_back(k);
            std::sort(order.begin(), order.end(), [&](Key a, Key b) { return heavier_first(inst, a, b); });
            for (int h = 0; h <= j - i + 1; ++h) {
                std::vector<Key> expect(order.begin(), order.begin() + h);
                std::sort(expect.begin(), expect.end());
                auto got = dp.removed(i, j, h);
                std::sort(got.begin(), got.end());
                CHECK(got == expect);
                CHECK(dp.remaining(i, j, h).size() == static_cast<std::size_t>(j - i + 1 - h));
            }
        }
    }
}

TEST_CASE("optimal trees from the oracle satisfy both lemmas") {
    for (const auto& w : std::vector<std::vector<Weight>>{{3, 4, 3}, {1, 2, 3, 2, 1}, {5, 1, 1, 1, 5}, {2, 2, 2, 2}}) {
        const Instance inst(w);
        for (const Tree& t : Oracle(inst).all_optimal_trees(full_mask(inst.size()))) {
            CHECK(cost(t, inst) == oracle_opt(inst).cost);
            CHECK(check_side_weight_monotonicity(t, inst).holds);
            CHECK(check_eq_root_max_weight(t, inst));
        }
    }
}

TEST_CASE("reversing the key order keeps both root costs") {
    for (std::uint64_t s = 0; s < 30; ++s) {
        const Instance inst = gen_random_instance(2 + static_cast<int>(s % 7), 1, 20, s);
        const HeaviestFirstDp a(inst);
        const HeaviestFirstDp b(inst.mirrored());
        CHECK(a.rooted_cost(RootType::Eq) == b.rooted_cost(RootType::Eq));
        CHECK(a.rooted_cost(RootType::Lt) == b.rooted_cost(RootType::Lt));
    }
}

TEST_CASE("min of rooted costs is the optimum") {
    for (std::uint64_t s = 0; s < 50; ++s) {
        const Instance inst = gen_random_instance(2 + static_cast<int>(s % 10), 1, 9, 77 + s);
        const HeaviestFirstDp dp(inst);
        CHECK(std::min(dp.rooted_cost(RootType::Eq), dp.rooted_cost(RootType::Lt)) == dp.cost());
        CHECK(cost(dp.rooted_tree(RootType::Eq), inst) == dp.rooted_cost(RootType::Eq));
        CHECK(cost(dp.rooted_tree(RootType::Lt), inst) == dp.rooted_cost(RootType::Lt));
    }
}

}  // TEST_SUITE

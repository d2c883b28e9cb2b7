#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "posetprob/corpus.hpp"
#include "posetprob/ideal_lattice.hpp"
#include "posetprob/poset.hpp"
#include "support/fixtures.hpp"

using namespace posetprob;

TEST_CASE("from_covers basics") {
    SECTION("antichain has empty closure") {
        Poset p = Poset::antichain(3);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                REQUIRE(p.less(i, j) == false);
        REQUIRE(p.covers().empty());
    }
    SECTION("five-element sample") {
        Poset p = fixtures::sample5();
        REQUIRE(p.size() == 5);
        REQUIRE(p.less(0, 4));
        REQUIRE(p.less(2, 4));
        REQUIRE(p.incomparable(1, 2));
        REQUIRE(p.incomparable(1, 3));
        REQUIRE(p.covers().size() == 5);
    }
    SECTION("duplicate edges collapse") {
        Poset p = Poset::from_covers(
            2, std::vector<std::pair<int, int>>{{0, 1}, {0, 1}});
        REQUIRE(p.covers() == std::vector<std::pair<int, int>>{{0, 1}});
    }
    SECTION("implied edges are reduced away") {
        Poset p = Poset::from_covers(
            3, std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {0, 2}});
        REQUIRE(p.covers() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
    }
    SECTION("cycles are rejected") {
        auto cyc = std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 0}};
        REQUIRE_THROWS_MATCHES(Poset::from_covers(3, cyc), Error,
                               Catch::Matchers::MessageMatches(
                                   Catch::Matchers::StartsWith("CycleDetected")));
        REQUIRE_THROWS_AS(
            Poset::from_covers(2, std::vector<std::pair<int, int>>{{0, 0}}), Error);
    }
    SECTION("endpoints outside range are rejected") {
        REQUIRE_THROWS_AS(
            Poset::from_covers(2, std::vector<std::pair<int, int>>{{0, 2}}), Error);
    }
}

TEST_CASE("leq and incomparable") {
    Poset chain = Poset::chain(3);
    REQUIRE(chain.leq(0, 2));
    REQUIRE(chain.leq(1, 1));
    REQUIRE(!chain.leq(2, 0));
    REQUIRE(!chain.incomparable(0, 2));

    Poset anti = Poset::antichain(2);
    REQUIRE(!anti.leq(0, 1));
    REQUIRE(anti.incomparable(0, 1));
    REQUIRE_THROWS_AS(anti.incomparable(1, 1), Error);

    Poset cells = cell_poset(Partition({4, 3, 3}));
    Partition lam({4, 3, 3});
    REQUIRE(cells.incomparable(cell_index(lam, {1, 2}), cell_index(lam, {2, 1})));
    REQUIRE(cells.incomparable(cell_index(lam, {2, 3}), cell_index(lam, {3, 2})));
}

TEST_CASE("principal ideals and filters") {
    Poset anti = Poset::antichain(4);
    REQUIRE(anti.principal_ideal(2).members == std::vector<int>{2});

    Poset chain = Poset::chain(3);
    REQUIRE(chain.principal_ideal(2).members == std::vector<int>{0, 1, 2});
    REQUIRE(chain.principal_filter(0) == std::vector<int>{0, 1, 2});

    Partition lam({4, 2, 1});
    Poset cells = cell_poset(lam);
    std::vector<int> expected{cell_index(lam, {1, 1}), cell_index(lam, {1, 2}),
                              cell_index(lam, {2, 1}), cell_index(lam, {2, 2})};
    std::sort(expected.begin(), expected.end());
    REQUIRE(cells.principal_ideal(cell_index(lam, {2, 2})).members == expected);
}

TEST_CASE("is_order_ideal") {
    Poset p = fixtures::sample7();
    REQUIRE(p.is_order_ideal(std::vector<int>{}));
    REQUIRE(p.is_order_ideal(std::vector<int>{0, 1, 2, 3, 4, 5, 6}));
    REQUIRE(p.is_order_ideal(std::vector<int>{0, 5}));
    REQUIRE(p.is_order_ideal(std::vector<int>{0, 5, 6}));
    REQUIRE(!p.is_order_ideal(std::vector<int>{1}));
}

TEST_CASE("add_relation") {
    SECTION("two-element antichain becomes a chain") {
        auto [q, changed] = Poset::antichain(2).add_relation(0, 1);
        REQUIRE(changed);
        REQUIRE(q.less(0, 1));
        REQUIRE(q.same_order_as(Poset::chain(2)));
    }
    SECTION("already comparable is a flagged no-op") {
        Poset chain = Poset::chain(3);
        auto [q, changed] = chain.add_relation(0, 2);
        REQUIRE(!changed);
        REQUIRE(q.same_order_as(chain));
    }
    SECTION("contradicting the order is an error") {
        REQUIRE_THROWS_MATCHES(Poset::chain(2).add_relation(1, 0), Error,
                               Catch::Matchers::MessageMatches(
                                   Catch::Matchers::StartsWith("WouldCreateCycle")));
    }
    SECTION("cell poset of (4,2,1) plus (2,1) < (1,2)") {
        Partition lam({4, 2, 1});
        Poset p = cell_poset(lam);
        auto at = [&](int r, int c) { return cell_index(lam, {r, c}); };
        auto [q, changed] = p.add_relation(at(2, 1), at(1, 2));
        REQUIRE(changed);
        std::vector<std::pair<int, int>> expected{
            {at(1, 1), at(2, 1)}, {at(2, 1), at(1, 2)}, {at(2, 1), at(3, 1)},
            {at(1, 2), at(1, 3)}, {at(1, 2), at(2, 2)}, {at(1, 3), at(1, 4)}};
        std::sort(expected.begin(), expected.end());
        REQUIRE(q.covers() == expected);
    }
    SECTION("forcing 1 before 2 in the five-element sample leaves one extension") {
        auto [q, changed] = fixtures::sample5().add_relation(1, 2);
        REQUIRE(changed);
        REQUIRE(count_linear_extensions(q) == 1);
    }
}

TEST_CASE("order axioms hold on random posets") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        Poset p = random_poset(8, rng);
        for (int x = 0; x < 8; ++x) {
            REQUIRE(p.leq(x, x));
            for (int y = 0; y < 8; ++y) {
                if (x != y && p.leq(x, y) && p.leq(y, x)) FAIL("antisymmetry violated");
                for (int z = 0; z < 8; ++z)
                    if (p.leq(x, y) && p.leq(y, z)) REQUIRE(p.leq(x, z));
            }
            REQUIRE(p.is_order_ideal(p.principal_ideal(x)));
        }
    }
}

TEST_CASE("add_relation grows the closure and keeps the size") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        Poset p = random_poset(7, rng);
        std::vector<std::pair<int, int>> incomparable;
        for (int x = 0; x < 7; ++x)
            for (int y = 0; y < 7; ++y)
                if (x != y && p.incomparable(x, y)) incomparable.emplace_back(x, y);
        if (incomparable.empty()) continue;
        auto [a, b] = incomparable[rng() % incomparable.size()];
        auto [q, changed] = p.add_relation(a, b);
        REQUIRE(changed);
        REQUIRE(q.size() == p.size());
        long before = 0, after = 0;
        for (int x = 0; x < 7; ++x) {
            before += p.above(x).count();
            after += q.above(x).count();
        }
        REQUIRE(after > before);
    }
}

TEST_CASE("covers round-trip through from_covers") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 40; ++trial) {
        Poset p = random_poset(8, rng, 0.4);
        Poset q = Poset::from_covers(p.size(), p.covers());
        REQUIRE(q.same_order_as(p));
        REQUIRE(q.covers() == p.covers());
    }
}

#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "posetprob/corpus.hpp"
#include "posetprob/ideal_lattice.hpp"
#include "support/fixtures.hpp"

using namespace posetprob;

TEST_CASE("all_order_ideals") {
    SECTION("chain has n+1 ideals, the prefixes") {
        auto ideals = all_order_ideals(Poset::chain(5));
        REQUIRE(ideals.size() == 6);
        for (int k = 0; k <= 5; ++k) {
            std::vector<int> prefix;
            for (int i = 0; i < k; ++i) prefix.push_back(i);
            REQUIRE(ideals[k].members == prefix);
        }
    }
    SECTION("antichain has 2^n ideals") {
        REQUIRE(all_order_ideals(Poset::antichain(6)).size() == 64);
    }
    SECTION("cell poset of (2,2) has 6 ideals") {
        REQUIRE(all_order_ideals(cell_poset(Partition({2, 2}))).size() == 6);
    }
    SECTION("every result is an ideal, empty and full included") {
        Poset p = fixtures::sample7();
        auto ideals = all_order_ideals(p);
        REQUIRE(ideals.front().members.empty());
        REQUIRE(ideals.back().size() == 7);
        for (const OrderIdeal& u : ideals) REQUIRE(p.is_order_ideal(u));
    }
    SECTION("ideal-count cap") {
        REQUIRE_THROWS_MATCHES(all_order_ideals(Poset::antichain(20), 1000), Error,
                               Catch::Matchers::MessageMatches(
                                   Catch::Matchers::StartsWith("SizeLimitExceeded")));
    }
}

TEST_CASE("linear extension stream") {
    SECTION("three extensions of the extremal poset, lexicographic") {
        auto exts = linear_extensions(fixtures::extremal3());
        std::vector<std::vector<int>> expected{{0, 1, 2}, {0, 2, 1}, {2, 0, 1}};
        REQUIRE(exts == expected);
    }
    SECTION("antichain yields n! extensions") {
        REQUIRE(linear_extensions(Poset::antichain(4)).size() == 24);
    }
    SECTION("empty poset has the empty extension") {
        auto exts = linear_extensions(Poset::antichain(0));
        REQUIRE(exts == std::vector<std::vector<int>>{{}});
    }
    SECTION("enlarged sample splits 8 + 18") {
        Poset p = fixtures::sample7();
        REQUIRE(linear_extensions(p).size() == 26);
        REQUIRE(e_with_constraint(p, 1, 2) == 8);
        REQUIRE(e_with_constraint(p, 2, 1) == 18);
    }
    SECTION("output is strictly increasing lexicographically") {
        auto exts = linear_extensions(fixtures::sample7());
        for (size_t i = 1; i < exts.size(); ++i) REQUIRE(exts[i - 1] < exts[i]);
    }
}

TEST_CASE("count_linear_extensions") {
    REQUIRE(count_linear_extensions(Poset::chain(9)) == 1);
    REQUIRE(count_linear_extensions(cell_poset(Partition({4, 3, 3}))) == 210);
    REQUIRE(count_linear_extensions(cell_poset(Partition({4, 4}))) == 14);
    REQUIRE(count_linear_extensions(Poset::antichain(0)) == 1);

    SECTION("matches the enumeration length exhaustively") {
        for (int n = 1; n <= 6; ++n)
            for (const Poset& p : all_posets_up_to_iso(n))
                REQUIRE(count_linear_extensions(p) ==
                        static_cast<long>(linear_extensions(p).size()));
    }
    SECTION("matches the enumeration length on random larger posets") {
        std::mt19937 rng(5);
        for (int trial = 0; trial < 25; ++trial)
            for (int n : {7, 8}) {
                Poset p = random_poset(n, rng);
                REQUIRE(count_linear_extensions(p) ==
                        static_cast<long>(linear_extensions(p).size()));
            }
    }
}

TEST_CASE("e_with_constraint") {
    Poset p = fixtures::sample5();
    REQUIRE(e_with_constraint(p, 1, 2) == 1);
    REQUIRE(e_with_constraint(p, 2, 1) == 2);
    SECTION("comparable pair counts every extension") {
        REQUIRE(e_with_constraint(p, 0, 4) == count_linear_extensions(p));
    }
    SECTION("same element is rejected") {
        REQUIRE_THROWS_MATCHES(e_with_constraint(p, 3, 3), Error,
                               Catch::Matchers::MessageMatches(
                                   Catch::Matchers::StartsWith("SameElement")));
    }
    SECTION("the enumeration cap is enforced") {
        REQUIRE_THROWS_MATCHES(e_with_constraint(Poset::antichain(13), 0, 1), Error,
                               Catch::Matchers::MessageMatches(
                                   Catch::Matchers::StartsWith("SizeLimitExceeded")));
    }
    SECTION("partition of the extension set") {
        std::mt19937 rng(3);
        for (int trial = 0; trial < 20; ++trial) {
            Poset q = random_poset(7, rng);
            BigInt total = count_linear_extensions(q);
            for (int x = 0; x < 7; ++x)
                for (int y = x + 1; y < 7; ++y)
                    if (q.incomparable(x, y))
                        REQUIRE(e_with_constraint(q, x, y) + e_with_constraint(q, y, x) ==
                                total);
        }
    }
    SECTION("agrees with counting after forcing the relation") {
        std::mt19937 rng(9);
        for (int trial = 0; trial < 20; ++trial) {
            Poset q = random_poset(7, rng);
            for (int x = 0; x < 7; ++x)
                for (int y = 0; y < 7; ++y)
                    if (x != y && q.incomparable(x, y))
                        REQUIRE(e_with_constraint(q, x, y) ==
                                count_linear_extensions(q.add_relation(x, y).poset));
        }
    }
}

TEST_CASE("chain_count_interval") {
    Poset p = cell_poset(Partition({4, 3, 3}));
    Partition lam({4, 3, 3});
    OrderIdeal whole(std::vector<int>(p.full_mask().to_vector()));

    SECTION("degenerate intervals") {
        REQUIRE(chain_count_interval(p, whole, whole) == 1);
        REQUIRE(chain_count_interval(p, OrderIdeal{}, whole) == 210);
    }
    SECTION("interval above the subpartition (3,3)") {
        std::vector<int> lower;
        for (Cell c : cells_of(Partition({3, 3}))) lower.push_back(cell_index(lam, c));
        REQUIRE(chain_count_interval(p, OrderIdeal(std::move(lower)), whole) == 4);
    }
    SECTION("misnested input is rejected") {
        OrderIdeal lower(std::vector<int>{0});
        REQUIRE_THROWS_MATCHES(chain_count_interval(p, whole, lower), Error,
                               Catch::Matchers::MessageMatches(
                                   Catch::Matchers::StartsWith("NotNested")));
        REQUIRE_THROWS_AS(chain_count_interval(p, OrderIdeal(std::vector<int>{1}), whole),
                          Error);
    }
}

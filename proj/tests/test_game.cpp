#include <doctest.h>

#include "oracles.hpp"
#include "votedim/error.hpp"
#include "votedim/game.hpp"

#include <random>

using namespace votedim;

namespace {

WeightedGame weights(std::vector<int> w, int quota)
{
    std::vector<Rational> r(w.begin(), w.end());
    return WeightedGame(std::move(r), quota);
}

Coalition co(std::initializer_list<int> ix, int n) { return coalition_from_indices(ix, n); }

SimpleGameExpr two_pairs_game()
{
    return Intersection{{weights({1, 1, 0, 0}, 1), weights({0, 0, 1, 1}, 1)}};
}

}  // namespace

TEST_CASE("weighted_contains with unit weights")
{
    const auto g = WeightedGame::uniform(5, 3);
    CHECK(weighted_contains(g, co({1, 2, 3}, 5)));
    CHECK_FALSE(weighted_contains(g, co({1, 2}, 5)));
    CHECK(weighted_contains(g, Coalition::full(5)));
}

TEST_CASE("weighted game validation")
{
    CHECK_THROWS_AS(WeightedGame({Rational(-1), Rational(1)}, 1), InvalidArgument);
    const auto g = weights({1, 1}, 1);
    CHECK_THROWS_AS((void)weighted_contains(g, co({1}, 3)), DimensionMismatch);
}

TEST_CASE("rational weights compare exactly")
{
    const WeightedGame g({Rational(1, 3), Rational(1, 3), Rational(1, 3)}, 1);
    CHECK(weighted_contains(g, Coalition::full(3)));
    CHECK_FALSE(weighted_contains(g, co({1, 2}, 3)));
}

TEST_CASE("union and intersection semantics")
{
    const SimpleGameExpr a = weights({1, 0, 0}, 1);
    const SimpleGameExpr b = weights({0, 1, 0}, 1);
    const auto only_b = co({2}, 3);
    CHECK(simple_contains(Union{{a, b}}, only_b));
    CHECK_FALSE(simple_contains(Intersection{{a, b}}, only_b));
    CHECK(simple_contains(Intersection{{a, b}}, co({1, 2}, 3)));
}

TEST_CASE("compositions must be nonempty and agree on member count")
{
    CHECK_THROWS_AS(SimpleGameExpr(Intersection{}), InvalidArgument);
    CHECK_THROWS_AS(SimpleGameExpr(Union{{weights({1}, 1), weights({1, 1}, 1)}}),
                    DimensionMismatch);
}

TEST_CASE("check_monotone on explicit games")
{
    std::vector<Coalition> at_least_two;
    for (std::uint64_t m = 0; m < 16; ++m)
        if (std::popcount(m) >= 2)
            at_least_two.push_back(Coalition::from_mask(m, 4));
    CHECK(check_monotone(ExplicitGame(4, at_least_two)));
    CHECK_FALSE(check_monotone(ExplicitGame(2, {co({1}, 2)})));
    CHECK(check_monotone(ExplicitGame(2, {co({1}, 2), co({1, 2}, 2)})));
}

TEST_CASE("check_monotone guards")
{
    CHECK_THROWS_AS((void)check_monotone(weights({1, 1}, 1)), InvalidArgument);
    CHECK_THROWS_AS((void)check_monotone(ExplicitGame(21, {Coalition::full(21)})), ResourceGuard);
}

TEST_CASE("explicit game keeps minimal sets and answers by upward closure")
{
    const ExplicitGame g(3, {co({1, 2}, 3), co({1, 2, 3}, 3), co({3}, 3)});
    CHECK(g.minimal_winning() == std::vector<Coalition>{co({1, 2}, 3), co({3}, 3)});
    CHECK(g.contains(co({2, 3}, 3)));
    CHECK_FALSE(g.contains(co({2}, 3)));
    CHECK_THROWS_AS(ExplicitGame(3, {co({1}, 4)}), DimensionMismatch);
}

TEST_CASE("minimal_winning examples")
{
    CHECK(minimal_winning(WeightedGame::uniform(3, 3)) == std::vector<Coalition>{Coalition::full(3)});

    const auto pairs = minimal_winning(WeightedGame::uniform(4, 2));
    CHECK(pairs.size() == 6);
    for (const auto& c : pairs)
        CHECK(c.size() == 2);

    const auto oracle = oracle::minimal_winning(
        [](std::uint64_t m) { return (m & 0b0011) != 0 && (m & 0b1100) != 0; }, 4);
    const auto got = minimal_winning(two_pairs_game());
    CHECK(got == oracle);
    CHECK(got == std::vector<Coalition>{co({1, 3}, 4), co({1, 4}, 4), co({2, 3}, 4), co({2, 4}, 4)});
}

TEST_CASE("exhaustive operations refuse large member counts")
{
    const SimpleGameExpr big = WeightedGame::uniform(28, 16);
    CHECK_THROWS_AS((void)minimal_winning(big), ResourceGuard);
    CHECK_THROWS_AS((void)winning_table(big), ResourceGuard);
    CHECK_THROWS_AS((void)to_explicit(big), ResourceGuard);
}

TEST_CASE("property: weighted games are monotone" * doctest::description("exhaustive n <= 12"))
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 12);
        std::vector<Rational> w;
        for (int i = 0; i < n; ++i)
            w.push_back(oracle::frac(static_cast<long>(rng() % 7), static_cast<long>(1 + rng() % 3)));
        const WeightedGame g(w, oracle::frac(static_cast<long>(rng() % (2 * n + 1)), 2));
        const auto table = winning_table(g);
        for (std::uint64_t m = 0; m < table.size(); ++m) {
            if (!table[m])
                continue;
            for (int i = 0; i < n; ++i)
                CHECK(table[m | (std::uint64_t{1} << i)]);
        }
    }
}

TEST_CASE("property: winning_table agrees with direct evaluation")
{
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 10);
        const SimpleGameExpr g = trial % 2 ? SimpleGameExpr(oracle::random_intersection_game(rng, n))
                                           : SimpleGameExpr(oracle::random_explicit_game(rng, n));
        const auto table = winning_table(g);
        REQUIRE(table.size() == (std::size_t{1} << n));
        for (std::uint64_t m = 0; m < table.size(); ++m)
            CHECK(table[m] == simple_contains(g, Coalition::from_mask(m, n)));
    }
}

TEST_CASE("property: explicit membership equals listed lookup plus upward closure")
{
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 12);
        std::vector<Coalition> listed;
        for (int k = 0; k < 1 + static_cast<int>(rng() % 6); ++k)
            listed.push_back(Coalition::from_mask(rng() & ((std::uint64_t{1} << n) - 1), n));
        const ExplicitGame g(n, listed);
        for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
            bool expected = false;
            for (const auto& l : listed)
                expected = expected || (l.mask() & m) == l.mask();
            CHECK(g.contains(Coalition::from_mask(m, n)) == expected);
        }
    }
}

TEST_CASE("property: minimal_winning matches exhaustive scan")
{
    std::mt19937_64 rng(14);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 9);
        const SimpleGameExpr g = oracle::random_intersection_game(rng, n);
        const auto expected = oracle::minimal_winning(
            [&](std::uint64_t m) { return simple_contains(g, Coalition::from_mask(m, n)); }, n);
        CHECK(minimal_winning(g) == expected);
        CHECK(to_explicit(g).minimal_winning() == expected);
    }
}

TEST_CASE("property: scaling weights and quota preserves membership")
{
    std::mt19937_64 rng(15);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 12);
        std::vector<Rational> w;
        for (int i = 0; i < n; ++i)
            w.push_back(oracle::frac(static_cast<long>(rng() % 9), static_cast<long>(1 + rng() % 4)));
        const Rational q = oracle::frac(static_cast<long>(rng() % (3 * n + 1)), 3);
        const Rational k = oracle::frac(static_cast<long>(1 + rng() % 50), static_cast<long>(1 + rng() % 7));
        std::vector<Rational> ws;
        for (const auto& x : w)
            ws.push_back(x * k);
        const WeightedGame g(w, q);
        const WeightedGame gs(ws, q * k);
        CHECK(winning_table(g) == winning_table(gs));
    }
}

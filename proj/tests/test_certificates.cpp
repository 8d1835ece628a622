#include <doctest.h>

#include "oracles.hpp"
#include "votedim/certificates.hpp"
#include "votedim/error.hpp"
#include "votedim/separation.hpp"

#include <algorithm>
#include <random>
#include <set>

using namespace votedim;

namespace {

const eu::EuGame& eu_game()
{
    static const eu::EuGame g = eu::build_eu_game(eu::default_members());
    return g;
}

const Coalition& L(int i) { return eu::named_coalitions().losing.at(static_cast<std::size_t>(i - 1)); }
const Coalition& W(int i) { return eu::named_coalitions().winning.at(static_cast<std::size_t>(i - 1)); }

// Per-member incidence recomputed from scratch.
bool balanced_by_count(const BalanceCertificate& c)
{
    for (int m = 1; m <= 28; ++m) {
        auto count = [m](const std::vector<Coalition>& v) {
            return std::count_if(v.begin(), v.end(), [m](const Coalition& x) { return x.contains(m); });
        };
        if (count(c.losing_set) != count(c.winning_set))
            return false;
    }
    return true;
}

std::vector<Coalition> sorted(std::vector<Coalition> v)
{
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace

TEST_CASE("verify_balance on listed certificates")
{
    const auto& g = eu_game().game();
    CHECK(verify_balance({{L(1), L(2), L(12)}, {W(2), W(7), W(11)}}, g));
    CHECK(verify_balance({{L(5), L(10), L(12)}, {W(1), W(2), W(6)}}, g));
    CHECK_FALSE(verify_balance({{L(1)}, {W(1)}}, g));
}

TEST_CASE("verify_balance rejects each broken condition")
{
    const auto& g = eu_game().game();
    // balanced but too few winners
    CHECK_FALSE(verify_balance({{L(1), L(1)}, {}}, g));
    // a winning coalition posing as losing: W with itself is balanced
    CHECK_FALSE(verify_balance({{W(1)}, {W(1)}}, g));
    // a losing coalition posing as winning
    CHECK_FALSE(verify_balance({{L(1)}, {L(1)}}, g));
    CHECK_THROWS_AS((void)verify_balance({{}, {W(1)}}, g), InvalidArgument);
    CHECK_THROWS_AS((void)verify_balance({{coalition_from_indices({1}, 5)}, {W(1)}}, g),
                    DimensionMismatch);
}

TEST_CASE("pair certificates")
{
    const auto& g = eu_game();
    for (auto [i, j] : {std::pair{1, 5}, std::pair{13, 14}}) {
        CAPTURE(i);
        CAPTURE(j);
        const auto c = build_pair_certificate(L(i), L(j), g);
        CHECK(verify_balance(c, g.game()));
        CHECK(balanced_by_count(c));
        CHECK(sorted(c.losing_set) == sorted({L(i), L(j)}));
        CHECK(c.winning_set.size() == 2);
    }
    CHECK_THROWS_AS((void)build_pair_certificate(L(1), L(1), g), InvalidArgument);
    CHECK_THROWS_AS((void)build_pair_certificate(L(1), L(15), g), InvalidArgument);
    CHECK_THROWS_AS((void)build_pair_certificate(L(1), W(1), g), InvalidArgument);
}

TEST_CASE("pair certificate uses the least populous exchange set")
{
    const auto& g = eu_game();
    const auto c = build_pair_certificate(L(1), L(5), g);
    const Coalition common = L(1) & L(5);
    const Coalition spread = L(1) ^ L(5);
    const int need = std::max(0, 25 - common.size());
    const Coalition a = c.winning_set[0] - common;
    CHECK(a.size() == need);
    CHECK(a.is_subset_of(spread));
    // brute force over all subsets of the spread of the right size
    const auto pool = spread.indices();
    std::int64_t best = -1;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << pool.size()); ++m) {
        if (std::popcount(m) != need)
            continue;
        std::int64_t pop = 0;
        for (std::size_t k = 0; k < pool.size(); ++k)
            if ((m >> k) & 1U)
                pop += g.table().population(pool[k]);
        if (best < 0 || pop < best)
            best = pop;
    }
    CHECK(g.population_of(a) == best);
}

TEST_CASE("anchor certificates")
{
    const auto& g = eu_game();
    for (int i : {14, 3}) {
        CAPTURE(i);
        const auto c = build_anchor_certificate(L(i), g);
        CHECK(verify_balance(c, g.game()));
        CHECK(sorted(c.losing_set) == sorted({L(i), L(15)}));
    }
    CHECK_THROWS_AS((void)build_anchor_certificate(L(15), g), InvalidArgument);
    CHECK_THROWS_AS((void)build_anchor_certificate(W(1), g), InvalidArgument);
}

TEST_CASE("nonseparable family structure")
{
    const auto family = nonseparable_family(eu_game());
    const auto& h = family.graph;
    CHECK(h.node_count() == 15);
    CHECK(h.edges().size() == 80);
    CHECK(h.dropped_edges().empty());
    REQUIRE(family.certificates.size() == h.edges().size());

    std::size_t pairs = 0;
    std::size_t triples = 0;
    NodeSet covered(15);
    std::set<std::vector<int>> triple_set;
    for (std::size_t e = 0; e < h.edges().size(); ++e) {
        const auto& edge = h.edges()[e];
        covered = covered | edge;
        pairs += edge.size() == 2;
        triples += edge.size() == 3;
        if (edge.size() == 3)
            triple_set.insert(edge.indices());
        const auto& cert = family.certificates[e];
        CHECK(sorted(cert.losing_set) == sorted(edge_coalitions(family, edge)));
        CHECK(cert.winning_set.size() >= cert.losing_set.size());
        CHECK(balanced_by_count(cert));
        CHECK(verify_balance(cert, eu_game().game()));
    }
    CHECK(pairs == 75);
    CHECK(triples == 5);
    CHECK(covered == h.all_nodes());
    CHECK(triple_set == std::set<std::vector<int>>{
                            {1, 2, 12}, {1, 4, 7}, {1, 6, 12}, {4, 5, 10}, {5, 10, 12}});
    for (const auto& t : triple_set)
        for (std::size_t a = 0; a < 3; ++a)
            for (std::size_t b = a + 1; b < 3; ++b)
                CHECK(std::find(h.edges().begin(), h.edges().end(), h.node_set({t[a], t[b]})) ==
                      h.edges().end());
    CHECK(std::find(h.edges().begin(), h.edges().end(), h.node_set({1, 2})) == h.edges().end());
    CHECK(h == listed_family_hypergraph());
}

TEST_CASE("family construction fails loudly on altered data")
{
    auto rows = eu::default_members().entries();
    rows[0].population /= 2;
    const eu::EuGame halved(eu::MemberTable{rows});
    CHECK_THROWS_AS((void)nonseparable_family(halved), ConstructionError);
}

TEST_CASE("property: pair certificate is symmetric in its arguments")
{
    const auto& g = eu_game();
    for (auto [i, j] : listed_pair_edges()) {
        if (i == 15 || j == 15)
            continue;
        const auto a = build_pair_certificate(L(i), L(j), g);
        const auto b = build_pair_certificate(L(j), L(i), g);
        CHECK(sorted(a.losing_set) == sorted(b.losing_set));
        CHECK(sorted(a.winning_set) == sorted(b.winning_set));
    }
}

TEST_CASE("property: pair construction is balanced on random inputs")
{
    const auto& g = eu_game();
    std::mt19937_64 rng(31);
    // a named coalition with one member swapped in or out
    auto perturbed = [&] {
        Coalition c = L(1 + static_cast<int>(rng() % 14));
        const int m = 1 + static_cast<int>(rng() % 28);
        return c.contains(m) ? c.without(m) : c.with(m);
    };
    int built = 0;
    for (int trial = 0; built < 200 && trial < 5000; ++trial) {
        const auto a = perturbed();
        const auto b = perturbed();
        const auto ra = eu::classify(g, a);
        const auto rb = eu::classify(g, b);
        if (a == b || ra.winning || rb.winning || !ra.rule55 || !rb.rule55)
            continue;
        try {
            const auto c = build_pair_certificate(a, b, g);
            ++built;
            CHECK(balanced_by_count(c));
            CHECK(incidence_balanced(c));
            CHECK(verify_balance(c, g.game()));
        } catch (const ConstructionError&) {
        } catch (const ResourceGuard&) {
        }
    }
    CHECK(built > 50);
}

TEST_CASE("property: verified certificates are non-separable on small games")
{
    std::mt19937_64 rng(32);
    int confirmed = 0;
    for (int trial = 0; trial < 150; ++trial) {
        const int n = 4 + static_cast<int>(rng() % 7);
        const SimpleGameExpr g = trial % 2 ? SimpleGameExpr(oracle::random_explicit_game(rng, n))
                                           : oracle::random_intersection_game(rng, n);
        for (const auto& cert : oracle::split_certificates(g, 3)) {
            REQUIRE(verify_balance(cert, g));
            CHECK(is_nonseparable_exhaustive(g, cert.losing_set));
            ++confirmed;
        }
    }
    CHECK(confirmed > 50);
}

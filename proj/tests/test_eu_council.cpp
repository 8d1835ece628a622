#include <doctest.h>

#include "votedim/error.hpp"
#include "votedim/eu_council.hpp"

#include <random>
#include <sstream>

using namespace votedim;
using namespace votedim::eu;

namespace {

// Table 1 re-keyed by hand, independent of the embedded copy.
const std::vector<std::int64_t> kPopulations = {
    80780000, 65856609, 64308261, 60782668, 46507760, 38495659, 19942642,
    16829289, 11203992, 10992589, 10512419, 10427301, 9879000,  9644864,
    8507786,  7245677,  5627235,  5451270,  5415949,  4604029,  4246700,
    2943472,  2061085,  2001468,  1315819,  858000,   549680,   425384,
};

const EuGame& eu_game()
{
    static const EuGame g = build_eu_game(default_members());
    return g;
}

std::string csv_without_row(int dropped)
{
    std::istringstream in(default_members_csv());
    std::ostringstream out;
    std::string line;
    // line 0 is the header, line k holds member k
    for (int k = 0; std::getline(in, line); ++k)
        if (k != dropped)
            out << line << '\n';
    return out.str();
}

}  // namespace

TEST_CASE("embedded table")
{
    const auto& t = default_members();
    REQUIRE(t.entries().size() == 28);
    CHECK(t.at(1).name == "Germany");
    CHECK(t.population(1) == 80780000);
    CHECK(t.at(28).name == "Malta");
    CHECK(t.population(28) == 425384);
    for (int i = 1; i <= 28; ++i) {
        CHECK(t.population(i) == kPopulations[static_cast<std::size_t>(i - 1)]);
        CHECK(t.population(i) <= t.population(1));
    }
}

TEST_CASE("csv round trip")
{
    std::istringstream in(default_members_csv());
    const auto t = load_members(in);
    CHECK(t.entries().size() == 28);
    CHECK(t.total_population() == default_members().total_population());
}

TEST_CASE("csv validation")
{
    std::istringstream missing(csv_without_row(17));
    CHECK_THROWS_WITH_AS(load_members(missing), doctest::Contains("wrong row count"), ParseError);

    std::istringstream bad_header("idx,name,population\n");
    CHECK_THROWS_AS(load_members(bad_header), ParseError);

    std::string dup = default_members_csv();
    dup.replace(dup.find("\n2,"), 3, "\n1,");
    std::istringstream dup_in(dup);
    CHECK_THROWS_WITH_AS(load_members(dup_in), doctest::Contains("duplicate"), ParseError);

    std::string zero = default_members_csv();
    zero.replace(zero.find("425384"), 6, "0");
    std::istringstream zero_in(zero);
    CHECK_THROWS_AS(load_members(zero_in), ParseError);

    std::string junk = default_members_csv();
    junk.replace(junk.find("425384"), 6, "12abc");
    std::istringstream junk_in(junk);
    CHECK_THROWS_AS(load_members(junk_in), ParseError);

    CHECK_THROWS_AS(load_members_file("/nonexistent/members.csv"), ParseError);
}

TEST_CASE("csv tolerates CRLF line endings")
{
    std::string crlf;
    for (char ch : default_members_csv()) {
        if (ch == '\n')
            crlf += '\r';
        crlf += ch;
    }
    std::istringstream in(crlf);
    CHECK(load_members(in).population(28) == 425384);
}

TEST_CASE("quotas")
{
    const auto& g = eu_game();
    CHECK(g.member_quota() == 16);
    std::int64_t total = 0;
    for (auto p : kPopulations)
        total += p;
    CHECK(g.table().total_population() == total);
    CHECK(g.population_quota() == Rational(13 * total, 20));
    CHECK(simple_contains(g.game(), Coalition::full(28)));
    CHECK_FALSE(simple_contains(g.game(), Coalition(28)));
}

TEST_CASE("named coalitions")
{
    const auto& nc = named_coalitions();
    REQUIRE(nc.losing.size() == 15);
    REQUIRE(nc.winning.size() == 12);
    CHECK(nc.losing[0].size() == 23);
    CHECK(nc.losing[1].size() == 24);
    CHECK(nc.losing[14] == coalition_from_indices({1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15}, 28));
    CHECK(nc.winning[11] == coalition_from_indices({2, 3, 4, 5, 6, 8, 9, 12, 15, 16, 19, 20, 21, 22,
                                                    23, 24, 25, 26, 27, 28},
                                                   28));
}

TEST_CASE("classification of the named coalitions")
{
    const auto& g = eu_game();
    const auto& nc = named_coalitions();
    for (std::size_t i = 0; i < nc.losing.size(); ++i) {
        CAPTURE(i + 1);
        const auto r = classify(g, nc.losing[i]);
        CHECK_FALSE(r.winning);
        CHECK_FALSE(r.rule25);
        CHECK(r.rule55 == (nc.losing[i].size() >= 16));
        if (r.rule55)
            CHECK_FALSE(r.rule65);
    }
    CHECK_FALSE(classify(g, nc.losing[14]).rule55);
    CHECK_FALSE(weighted_contains(g.population_rule(), nc.losing[0]));

    for (std::size_t i = 0; i < nc.winning.size(); ++i) {
        CAPTURE(i + 1);
        const auto r = classify(g, nc.winning[i]);
        CHECK(r.winning);
        CHECK((r.rule25 || (r.rule55 && r.rule65)));
        CHECK(simple_contains(g.game(), nc.winning[i]));
    }
}

TEST_CASE("report is coherent with cardinality and population")
{
    const auto& g = eu_game();
    const auto total = g.table().total_population();
    std::mt19937_64 rng(21);
    auto check_one = [&](const Coalition& c) {
        const auto r = classify(g, c);
        std::int64_t pop = 0;
        for (int i : c.indices())
            pop += kPopulations[static_cast<std::size_t>(i - 1)];
        CHECK(r.population_sum == pop);
        CHECK(r.rule55 == (c.size() >= 16));
        CHECK(r.rule25 == (c.size() >= 25));
        CHECK(r.rule65 == (20 * pop >= 13 * total));
        CHECK(r.winning == ((r.rule55 && r.rule65) || r.rule25));
        CHECK(r.winning == simple_contains(g.game(), c));
        if (r.rule25)
            CHECK(r.winning);
    };
    for (int trial = 0; trial < 3000; ++trial) {
        // bias toward the interesting sizes 14..26
        const int size = 14 + static_cast<int>(rng() % 13);
        std::vector<int> ix(28);
        for (int i = 0; i < 28; ++i)
            ix[static_cast<std::size_t>(i)] = i + 1;
        std::shuffle(ix.begin(), ix.end(), rng);
        ix.resize(static_cast<std::size_t>(size));
        check_one(coalition_from_indices(ix, 28));
    }
    for (const auto& c : named_coalitions().losing)
        check_one(c);
    for (const auto& c : named_coalitions().winning)
        check_one(c);
}

TEST_CASE("dropping the most populous member of a 16-member winner")
{
    const auto& g = eu_game();
    for (const auto& w : named_coalitions().winning) {
        if (w.size() != 16)
            continue;
        const auto smaller = w.without(w.indices().front());
        const auto r = classify(g, smaller);
        CHECK_FALSE(r.rule55);
        CHECK_FALSE(r.winning);
    }
}

TEST_CASE("member table invariants")
{
    std::vector<Member> rows = default_members().entries();
    rows.pop_back();
    CHECK_THROWS_AS(MemberTable{rows}, ParseError);
    rows = default_members().entries();
    rows[3].population = -5;
    CHECK_THROWS_AS(MemberTable{rows}, ParseError);
    rows = default_members().entries();
    rows[4].index = 29;
    CHECK_THROWS_AS(MemberTable{rows}, ParseError);
}

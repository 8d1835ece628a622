#pragma once

#include "votedim/game.hpp"

#include <cstdint>
#include <istream>
#include <string>
#include <vector>

namespace votedim::eu {

inline constexpr int kMemberCount = 28;

struct Member {
    int index = 0;
    std::string name;
    std::int64_t population = 0;
};

// Validated table of the 28 member states, ordered by index.
class MemberTable {
public:
    // Throws ParseError on a table that is not exactly indices 1..28 with
    // positive populations.
    explicit MemberTable(std::vector<Member> entries);

    const std::vector<Member>& entries() const { return entries_; }
    const Member& at(int index) const { return entries_.at(static_cast<std::size_t>(index - 1)); }
    std::int64_t population(int index) const { return at(index).population; }
    std::int64_t total_population() const;

private:
    std::vector<Member> entries_;
};

// CSV with header "index,name,population".
MemberTable load_members(std::istream& in);
MemberTable load_members_file(const std::string& path);

// Populations on 01.01.2014.
const MemberTable& default_members();
// The embedded table rendered in the CSV format accepted by load_members.
std::string default_members_csv();

struct RuleReport {
    bool winning = false;
    bool rule55 = false;
    bool rule65 = false;
    bool rule25 = false;
    std::int64_t population_sum = 0;
};

// Council rule: (at least 16 members and at least 65% of the population) or
// at least 25 members.
class EuGame {
public:
    explicit EuGame(MemberTable table);

    const MemberTable& table() const { return table_; }
    const SimpleGameExpr& game() const { return game_; }
    int member_quota() const { return member_quota_; }
    const Rational& population_quota() const { return population_quota_; }

    const WeightedGame& member_rule() const { return member_rule_; }
    const WeightedGame& population_rule() const { return population_rule_; }
    const WeightedGame& supermajority_rule() const { return supermajority_rule_; }

    std::int64_t population_of(const Coalition& c) const;

private:
    MemberTable table_;
    int member_quota_;
    Rational population_quota_;
    WeightedGame member_rule_;
    WeightedGame population_rule_;
    WeightedGame supermajority_rule_;
    SimpleGameExpr game_;
};

EuGame build_eu_game(MemberTable table);

RuleReport classify(const EuGame& g, const Coalition& c);

struct NamedCoalitions {
    std::vector<Coalition> losing;   // L1..L15
    std::vector<Coalition> winning;  // W1..W12
};

// The fifteen losing and twelve winning coalitions used in the lower-bound
// construction, indexed from 0 (losing[0] is L1).
const NamedCoalitions& named_coalitions();

}  // namespace votedim::eu

#include "votedim/eu_council.hpp"

#include "votedim/error.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace votedim::eu {

namespace {

const std::vector<Member>& embedded_entries()
{
    static const std::vector<Member> entries = {
        {1, "Germany", 80780000},        {2, "France", 65856609},
        {3, "United Kingdom", 64308261}, {4, "Italy", 60782668},
        {5, "Spain", 46507760},          {6, "Poland", 38495659},
        {7, "Romania", 19942642},        {8, "Netherlands", 16829289},
        {9, "Belgium", 11203992},        {10, "Greece", 10992589},
        {11, "Czech Republic", 10512419}, {12, "Portugal", 10427301},
        {13, "Hungary", 9879000},        {14, "Sweden", 9644864},
        {15, "Austria", 8507786},        {16, "Bulgaria", 7245677},
        {17, "Denmark", 5627235},        {18, "Finland", 5451270},
        {19, "Slovakia", 5415949},       {20, "Ireland", 4604029},
        {21, "Croatia", 4246700},        {22, "Lithuania", 2943472},
        {23, "Slovenia", 2061085},       {24, "Latvia", 2001468},
        {25, "Estonia", 1315819},        {26, "Cyprus", 858000},
        {27, "Luxembourg", 549680},      {28, "Malta", 425384},
    };
    return entries;
}

std::string trim(std::string s)
{
    auto not_space = [](unsigned char c) { return !std::isspace(c); };
    s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
    s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
    return s;
}

std::vector<std::string> split_fields(const std::string& line)
{
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ','))
        fields.push_back(trim(field));
    if (!line.empty() && line.back() == ',')
        fields.emplace_back();
    return fields;
}

std::int64_t parse_integer(const std::string& text, int line_no)
{
    if (text.empty() || !std::all_of(text.begin(), text.end(), [](unsigned char c) {
            return std::isdigit(c) || c == '-' || c == '+';
        }))
        throw ParseError("malformed row at line " + std::to_string(line_no) + ": '" + text +
                         "' is not an integer");
    try {
        std::size_t used = 0;
        long long v = std::stoll(text, &used);
        if (used != text.size())
            throw ParseError("malformed row at line " + std::to_string(line_no));
        return v;
    } catch (const std::logic_error&) {
        throw ParseError("malformed row at line " + std::to_string(line_no) + ": '" + text +
                         "' is not an integer");
    }
}

Coalition listed(std::initializer_list<int> indices)
{
    return Coalition::from_indices(indices, kMemberCount);
}

}  // namespace

MemberTable::MemberTable(std::vector<Member> entries) : entries_(std::move(entries))
{
    if (entries_.size() != static_cast<std::size_t>(kMemberCount))
        throw ParseError("wrong row count: expected " + std::to_string(kMemberCount) +
                         " members, got " + std::to_string(entries_.size()));
    std::vector<bool> seen(kMemberCount + 1, false);
    for (const auto& m : entries_) {
        if (m.index < 1 || m.index > kMemberCount)
            throw ParseError("member index " + std::to_string(m.index) + " outside 1..28");
        if (seen[static_cast<std::size_t>(m.index)])
            throw ParseError("duplicate index " + std::to_string(m.index));
        seen[static_cast<std::size_t>(m.index)] = true;
        if (m.population <= 0)
            throw ParseError("nonpositive population for member " + std::to_string(m.index));
    }
    std::sort(entries_.begin(), entries_.end(),
              [](const Member& a, const Member& b) { return a.index < b.index; });
}

std::int64_t MemberTable::total_population() const
{
    std::int64_t total = 0;
    for (const auto& m : entries_)
        total += m.population;
    return total;
}

MemberTable load_members(std::istream& in)
{
    std::string line;
    int line_no = 0;
    bool header_seen = false;
    std::vector<Member> entries;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line_no == 1 && line.rfind("\xEF\xBB\xBF", 0) == 0)
            line.erase(0, 3);
        if (trim(line).empty())
            continue;
        auto fields = split_fields(line);
        if (!header_seen) {
            if (fields != std::vector<std::string>{"index", "name", "population"})
                throw ParseError("expected header 'index,name,population', got '" + line + "'");
            header_seen = true;
            continue;
        }
        if (fields.size() != 3 || fields[1].empty())
            throw ParseError("malformed row at line " + std::to_string(line_no) + ": '" + line + "'");
        Member m;
        m.index = static_cast<int>(parse_integer(fields[0], line_no));
        m.name = fields[1];
        m.population = parse_integer(fields[2], line_no);
        entries.push_back(std::move(m));
    }
    if (!header_seen)
        throw ParseError("empty member table");
    return MemberTable(std::move(entries));
}

MemberTable load_members_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open member table '" + path + "'");
    return load_members(in);
}

const MemberTable& default_members()
{
    static const MemberTable table(embedded_entries());
    return table;
}

std::string default_members_csv()
{
    std::string out = "index,name,population\n";
    for (const auto& m : default_members().entries())
        out += std::to_string(m.index) + "," + m.name + "," + std::to_string(m.population) + "\n";
    return out;
}

namespace {

std::vector<Rational> population_weights(const MemberTable& table)
{
    std::vector<Rational> w;
    for (const auto& m : table.entries())
        w.emplace_back(static_cast<long>(m.population));
    return w;
}

// Smallest integer >= 55% of the member count.
int member_threshold()
{
    return (55 * kMemberCount + 99) / 100;
}

// 65% of the total population, as the exact fraction 13T/20.
Rational population_threshold(const MemberTable& table)
{
    Rational q(static_cast<long>(13 * table.total_population()), 20);
    q.canonicalize();
    return q;
}

}  // namespace

EuGame::EuGame(MemberTable table)
    : table_(std::move(table)),
      member_quota_(member_threshold()),
      population_quota_(population_threshold(table_)),
      member_rule_(WeightedGame::uniform(kMemberCount, member_quota_)),
      population_rule_(population_weights(table_), population_quota_),
      supermajority_rule_(WeightedGame::uniform(kMemberCount, 25)),
      game_(Union{{SimpleGameExpr(Intersection{{member_rule_, population_rule_}}),
                   SimpleGameExpr(supermajority_rule_)}})
{
}

std::int64_t EuGame::population_of(const Coalition& c) const
{
    if (c.capacity() != kMemberCount)
        throw DimensionMismatch("coalition over " + std::to_string(c.capacity()) +
                                " members used with the 28-member council");
    std::int64_t sum = 0;
    for (int i : c.indices())
        sum += table_.population(i);
    return sum;
}

EuGame build_eu_game(MemberTable table)
{
    return EuGame(std::move(table));
}

RuleReport classify(const EuGame& g, const Coalition& c)
{
    RuleReport r;
    r.population_sum = g.population_of(c);
    r.rule55 = c.size() >= g.member_quota();
    // 20 * population >= 13 * total, exactly.
    r.rule65 = Rational(static_cast<long>(r.population_sum)) >= g.population_quota();
    r.rule25 = c.size() >= 25;
    r.winning = (r.rule55 && r.rule65) || r.rule25;
    return r;
}

const NamedCoalitions& named_coalitions()
{
    static const NamedCoalitions sets = [] {
        NamedCoalitions s;
        s.losing = {
            listed({2, 3, 5, 6, 8, 9, 10, 11, 12, 15, 16, 17, 18, 19, 20, 21, 22, 23, 24, 25, 26, 27, 28}),
            listed({1, 4, 5, 7, 8, 9, 10, 11, 12, 14, 15, 16, 17, 18, 19, 20, 21, 22, 23, 24, 25, 26, 27, 28}),
            listed({2, 3, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18, 19, 20, 21, 22, 23, 24, 25, 26, 27}),
            listed({3, 4, 5, 6, 7, 8, 9, 12, 13, 15, 16, 17, 18, 19, 20, 21, 22, 23, 24, 25, 26, 27, 28}),
            listed({2, 4, 5, 6, 7, 9, 10, 12, 13, 14, 16, 17, 18, 19, 20, 21, 22, 23, 24, 25, 26, 27, 28}),
            listed({2, 3, 5, 6, 7, 10, 11, 13, 14, 15, 16, 17, 18, 19, 20, 21, 22, 23, 24, 25, 26, 27, 28}),
            listed({3, 4, 5, 6, 8, 9, 10, 11, 12, 13, 14, 15, 16, 19, 20, 21, 22, 23, 24, 25, 26, 27, 28}),
            listed({2, 3, 4, 7, 8, 9, 10, 11, 12, 13, 14, 15, 17, 19, 20, 21, 22, 23, 24, 25, 26, 27, 28}),
            listed({1, 3, 5, 7, 8, 9, 10, 11, 12, 13, 14, 16, 17, 18, 19, 20, 22, 23, 24, 25, 26, 27, 28}),
            listed({2, 4, 5, 6, 7, 8, 11, 13, 14, 15, 16, 17, 18, 19, 20, 21, 22, 23, 24, 25, 26, 27, 28}),
            listed({1, 2, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18, 19, 21, 23, 24, 25, 26, 27, 28}),
            listed({1, 4, 5, 6, 10, 11, 12, 13, 14, 15, 16, 17, 18, 19, 20, 21, 22, 23, 24, 25, 26, 27, 28}),
            listed({2, 4, 5, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18, 19, 20, 21, 22, 23, 24, 25, 27, 28}),
            listed({1, 4, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18, 20, 21, 22, 23, 24, 25, 26, 27, 28}),
            listed({1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15}),
        };
        s.winning = {
            listed({1, 2, 4, 5, 6, 13, 14, 16, 17, 18, 19, 20, 21, 22, 23, 24, 25, 26, 27, 28}),
            listed({4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18, 19, 20, 21, 22, 23, 24, 25, 26, 27, 28}),
            listed({3, 4, 5, 6, 8, 9, 10, 11, 12, 13, 15, 16, 17, 18, 19, 20, 21, 22, 23, 24, 25, 26, 27, 28}),
            listed({1, 2, 5, 6, 10, 11, 12, 13, 14, 15, 16, 17, 18, 19, 20, 21, 22, 23, 24, 25, 26, 27, 28}),
            listed({2, 3, 4, 5, 6, 7, 13, 16, 17, 18, 19, 20, 21, 22, 23, 24, 25, 26, 27, 28}),
            listed({2, 4, 5, 6, 7, 10, 11, 12, 13, 14, 15, 16, 17, 18, 19, 20, 21, 22, 23, 24, 25, 26, 27, 28}),
            listed({1, 3, 4, 5, 9, 10, 11, 12, 14, 15, 16, 17, 18, 19, 20, 21, 22, 23, 24, 25, 26, 27, 28}),
            listed({2, 3, 4, 5, 6, 10, 11, 15, 16, 17, 18, 19, 20, 21, 22, 23, 24, 25, 26, 27, 28}),
            listed({2, 4, 5, 6, 7, 8, 9, 12, 13, 14, 15, 16, 17, 18, 19, 20, 21, 22, 23, 24, 25, 26, 27, 28}),
            listed({3, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18, 19, 20, 21, 22, 23, 24, 25, 26, 27, 28}),
            listed({1, 2, 5, 6, 8, 10, 11, 12, 15, 16, 17, 18, 19, 20, 21, 22, 23, 24, 25, 26, 27, 28}),
            listed({2, 3, 4, 5, 6, 8, 9, 12, 15, 16, 19, 20, 21, 22, 23, 24, 25, 26, 27, 28}),
        };
        return s;
    }();
    return sets;
}

}  // namespace votedim::eu

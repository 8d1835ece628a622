#include "votedim/proof.hpp"

#include "votedim/certificates.hpp"
#include "votedim/cover.hpp"
#include "votedim/error.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

namespace votedim {

namespace {

constexpr std::size_t kListedProblems = 3;

void append_problems(std::string& detail, const std::vector<std::string>& problems)
{
    for (std::size_t i = 0; i < problems.size() && i < kListedProblems; ++i)
        detail += "; " + problems[i];
    if (problems.size() > kListedProblems)
        detail += "; " + std::to_string(problems.size() - kListedProblems) + " more";
}

constexpr int kRefutedCover = 7;
constexpr int kExpectedCoverNumber = 8;

std::string node_label(const NodeSet& s)
{
    std::string out = "{";
    for (int i : s.indices())
        out += (out.size() > 1 ? "," : "") + std::string("L") + std::to_string(i);
    return out + "}";
}

const char* status_name(StepStatus s)
{
    switch (s) {
    case StepStatus::Pass:
        return "PASS";
    case StepStatus::Fail:
        return "FAIL";
    case StepStatus::Skip:
        return "SKIP";
    }
    return "?";
}

ProofStep step_named_coalitions(const eu::EuGame& game)
{
    ProofStep step{"named coalitions", StepStatus::Pass, ""};
    const auto& named = eu::named_coalitions();
    std::vector<std::string> problems;
    int losing = 0, winning = 0;
    for (std::size_t i = 0; i < named.losing.size(); ++i) {
        if (!eu::classify(game, named.losing[i]).winning)
            ++losing;
        else
            problems.push_back("L" + std::to_string(i + 1) + " wins");
    }
    for (std::size_t i = 0; i < named.winning.size(); ++i) {
        if (eu::classify(game, named.winning[i]).winning)
            ++winning;
        else
            problems.push_back("W" + std::to_string(i + 1) + " loses");
    }
    step.detail = std::to_string(losing) + " of " + std::to_string(named.losing.size()) +
                  " L losing, " + std::to_string(winning) + " of " +
                  std::to_string(named.winning.size()) + " W winning";
    if (!problems.empty()) {
        step.status = StepStatus::Fail;
        append_problems(step.detail, problems);
    }
    return step;
}

ProofStep step_pairs(const eu::EuGame& game)
{
    ProofStep step{"pair certificates", StepStatus::Pass, ""};
    const auto& losing = eu::named_coalitions().losing;
    const int anchor = static_cast<int>(losing.size());
    int certified = 0, exchanged = 0, swapped = 0;
    std::vector<std::string> problems;
    for (const auto& [i, j] : listed_pair_edges()) {
        const std::string name = "{L" + std::to_string(i) + ",L" + std::to_string(j) + "}";
        try {
            const auto& li = losing[static_cast<std::size_t>(i - 1)];
            const auto& lj = losing[static_cast<std::size_t>(j - 1)];
            const auto cert = j == anchor ? build_anchor_certificate(li, game)
                                          : build_pair_certificate(li, lj, game);
            if (!verify_balance(cert, game.game())) {
                problems.push_back(name + " does not verify");
                continue;
            }
            ++certified;
            ++(j == anchor ? swapped : exchanged);
        } catch (const Error& e) {
            problems.push_back(name + ": " + e.what());
        }
    }
    const auto total = listed_pair_edges().size();
    step.detail = std::to_string(certified) + " of " + std::to_string(total) +
                  " pairs certified (" + std::to_string(exchanged) +
                  " by exchange within the symmetric difference, " + std::to_string(swapped) +
                  " by swap with L15)";
    if (!problems.empty()) {
        step.status = StepStatus::Fail;
        append_problems(step.detail, problems);
    }
    return step;
}

ProofStep step_triples(const eu::EuGame& game)
{
    ProofStep step{"triple certificates", StepStatus::Pass, ""};
    const auto& named = eu::named_coalitions();
    const auto& triples = listed_triple_edges();
    const auto& witnesses = listed_triple_witnesses();
    int certified = 0;
    std::vector<std::string> problems;
    for (std::size_t k = 0; k < triples.size(); ++k) {
        BalanceCertificate cert;
        std::string name = "{";
        for (int i : triples[k]) {
            cert.losing_set.push_back(named.losing[static_cast<std::size_t>(i - 1)]);
            name += (name.size() > 1 ? "," : "") + std::string("L") + std::to_string(i);
        }
        name += "}";
        for (int w : witnesses[k])
            cert.winning_set.push_back(named.winning[static_cast<std::size_t>(w - 1)]);
        if (verify_balance(cert, game.game()))
            ++certified;
        else
            problems.push_back(name + " does not verify");
    }
    step.detail = std::to_string(certified) + " of " + std::to_string(triples.size()) +
                  " triples certified";
    if (!problems.empty()) {
        step.status = StepStatus::Fail;
        append_problems(step.detail, problems);
    }
    return step;
}

ProofStep step_maximal_sets(const Hypergraph& h)
{
    ProofStep step{"maximal independent sets", StepStatus::Pass, ""};
    const auto found = enumerate_maximal_independent(h);
    std::vector<NodeSet> expected;
    for (const auto& s : expected_maximal_sets())
        expected.push_back(NodeSet::from_indices(s, h.node_count()));
    std::sort(expected.begin(), expected.end());
    step.detail = std::to_string(found.size()) + " maximal independent sets";
    if (found == expected) {
        step.detail += ", matching the expected list";
    } else {
        step.status = StepStatus::Fail;
        step.detail += ", expected " + std::to_string(expected.size()) + ":";
        for (const auto& s : found)
            if (std::find(expected.begin(), expected.end(), s) == expected.end())
                step.detail += " unexpected " + node_label(s);
        for (const auto& s : expected)
            if (std::find(found.begin(), found.end(), s) == found.end())
                step.detail += " missing " + node_label(s);
    }
    return step;
}

ProofStep step_exhaustive(const Hypergraph& h, std::size_t candidates)
{
    ProofStep step{"no 7-cover (exhaustive)", StepStatus::Pass, ""};
    const auto r = no_k_cover(h, kRefutedCover);
    if (r.refuted()) {
        step.detail = "no cover by at most " + std::to_string(kRefutedCover) + " of the " +
                      std::to_string(candidates) + " maximal sets; " +
                      std::to_string(r.combinations_checked) + " combinations checked";
    } else {
        step.status = StepStatus::Fail;
        std::string parts;
        for (const auto& p : r.counterexample->parts)
            parts += " " + node_label(p);
        step.detail = "cover with " + std::to_string(r.counterexample->size()) + " parts:" + parts;
    }
    return step;
}

ProofStep step_duals(const Hypergraph& h)
{
    ProofStep step{"dual weightings", StepStatus::Pass, ""};
    const auto duals = seven_cover_duals();
    std::vector<std::string> parts;
    bool all_verify = true;
    for (const auto& d : duals) {
        const bool ok = verify_dual_certificate(d, h);
        all_verify = all_verify && ok;
        const Rational total = total_weight(d.weights);
        const auto scope = dual_scope(d);
        const int compared = scope == DualScope::CoversUsingExcluded ? d.bound - 1 : d.bound;
        std::string where = scope == DualScope::AllCovers ? "all covers"
                            : scope == DualScope::CoversAvoidingExcluded
                                ? "covers avoiding " + node_label(*d.excluded_part)
                                : "covers using " + node_label(*d.excluded_part);
        parts.push_back(where + ": total " + to_string(total) + (total > compared ? " > " : " <= ") +
                        std::to_string(compared) + (ok ? "" : " (does not verify)"));
    }
    const bool joint = duals_refute_k_cover(duals, h, kRefutedCover);
    for (std::size_t i = 0; i < parts.size(); ++i)
        step.detail += (i ? "; " : "") + parts[i];
    if (!all_verify || !joint) {
        step.status = StepStatus::Fail;
        if (!joint)
            step.detail += "; the weightings do not jointly refute a 7-cover";
    }
    return step;
}

ProofStep step_cover_number(const Hypergraph& h)
{
    ProofStep step{"cover number", StepStatus::Pass, ""};
    const auto r = cover_number(h);
    const bool witness_ok = is_cover(r.solution, h) && r.solution.size() == r.k;
    step.detail = "minimum cover uses " + std::to_string(r.k) + " parts:";
    for (const auto& p : r.solution.parts)
        step.detail += " " + node_label(p);
    if (r.k != kExpectedCoverNumber || !witness_ok) {
        step.status = StepStatus::Fail;
        if (!witness_ok)
            step.detail += " (witness is not a valid cover)";
    }
    return step;
}

}  // namespace

bool ProofTranscript::verified() const
{
    return !steps.empty() && std::all_of(steps.begin(), steps.end(), [](const ProofStep& s) {
        return s.status == StepStatus::Pass;
    });
}

const std::vector<std::vector<int>>& expected_maximal_sets()
{
    static const std::vector<std::vector<int>> sets = {
        {1, 2},     {1, 3, 6},   {1, 4},      {1, 7, 12},  {2, 9},   {2, 12, 14}, {2, 13},
        {3, 8},     {3, 11},     {4, 5},      {4, 7},      {4, 10},  {5, 6, 10},  {5, 6, 12},
        {5, 9},     {5, 10, 13}, {6, 10, 12}, {7, 8},      {8, 13},  {11, 14},    {15},
    };
    return sets;
}

ProofTranscript run_proof(const eu::MemberTable& table, std::string data_source)
{
    ProofTranscript t;
    t.data_source = std::move(data_source);
    const eu::EuGame game(table);
    t.notes = {
        "member rule: at least " + std::to_string(game.member_quota()) + " of " +
            std::to_string(eu::kMemberCount) + " members",
        "population rule: population >= " + to_string(game.population_quota()) +
            " (65% of " + std::to_string(table.total_population()) + ", closed inequality, exact)",
        "supermajority rule: at least 25 of " + std::to_string(eu::kMemberCount) + " members",
    };

    auto guarded = [](const char* name, auto&& run) {
        try {
            return run();
        } catch (const Error& e) {
            return ProofStep{name, StepStatus::Fail, e.what()};
        }
    };

    t.steps.push_back(guarded("named coalitions", [&] { return step_named_coalitions(game); }));
    t.steps.push_back(guarded("pair certificates", [&] { return step_pairs(game); }));
    t.steps.push_back(guarded("triple certificates", [&] { return step_triples(game); }));

    const bool certified = t.steps[1].status == StepStatus::Pass &&
                           t.steps[2].status == StepStatus::Pass;
    std::optional<Hypergraph> graph;
    if (certified) {
        try {
            graph = nonseparable_family(game).graph;
        } catch (const Error& e) {
            t.steps[1].status = StepStatus::Fail;
            t.steps[1].detail += std::string("; family assembly failed: ") + e.what();
        }
    }

    const char* later[] = {"maximal independent sets", "no 7-cover (exhaustive)",
                           "dual weightings", "cover number"};
    if (!graph) {
        for (const char* name : later)
            t.steps.push_back(ProofStep{name, StepStatus::Skip, "requires the certified family"});
    } else {
        const auto& h = *graph;
        const std::size_t candidates = enumerate_maximal_independent(h).size();
        t.steps.push_back(guarded(later[0], [&] { return step_maximal_sets(h); }));
        t.steps.push_back(guarded(later[1], [&] { return step_exhaustive(h, candidates); }));
        t.steps.push_back(guarded(later[2], [&] { return step_duals(h); }));
        t.steps.push_back(guarded(later[3], [&] { return step_cover_number(h); }));
    }

    if (t.verified()) {
        t.conclusion = "dimension ≥ " + std::to_string(kExpectedCoverNumber);
    } else {
        for (std::size_t i = 0; i < t.steps.size(); ++i)
            if (t.steps[i].status != StepStatus::Pass) {
                t.conclusion = "lower bound not established: step " + std::to_string(i + 1) +
                               " (" + t.steps[i].name + ") " +
                               (t.steps[i].status == StepStatus::Fail ? "failed" : "skipped");
                break;
            }
    }
    return t;
}

std::string render_text(const ProofTranscript& t)
{
    std::ostringstream out;
    out << "EU council dimension lower bound\n";
    out << "data: " << t.data_source << "\n";
    for (const auto& n : t.notes)
        out << "note: " << n << "\n";
    for (std::size_t i = 0; i < t.steps.size(); ++i)
        out << "[" << i + 1 << "] " << status_name(t.steps[i].status) << "  " << t.steps[i].name
            << ": " << t.steps[i].detail << "\n";
    out << "conclusion: " << t.conclusion << "\n";
    return out.str();
}

json_io::Json to_json(const ProofTranscript& t)
{
    json_io::Json steps = json_io::Json::array();
    for (std::size_t i = 0; i < t.steps.size(); ++i)
        steps.push_back(json_io::Json{{"step", i + 1},
                                      {"name", t.steps[i].name},
                                      {"status", status_name(t.steps[i].status)},
                                      {"detail", t.steps[i].detail}});
    return json_io::Json{{"data", t.data_source},
                         {"notes", t.notes},
                         {"steps", steps},
                         {"verified", t.verified()},
                         {"conclusion", t.conclusion}};
}

}  // namespace votedim

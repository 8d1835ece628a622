#include "votedim/cli.hpp"

#include "votedim/certificates.hpp"
#include "votedim/cover.hpp"
#include "votedim/error.hpp"
#include "votedim/eu_council.hpp"
#include "votedim/json_io.hpp"
#include "votedim/proof.hpp"
#include "votedim/separation.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>

namespace votedim::cli {

namespace {

using json_io::Json;

struct Options {
    std::string members;
    std::string format = "text";

    std::string coalition;
    std::string input;
    std::string game;
    std::string duals;
    std::string what;
    std::string output;
    std::optional<int> k;
};

struct Loaded {
    eu::MemberTable table;
    std::string source;
};

Loaded load_table(const Options& o)
{
    if (o.members.empty())
        return {eu::default_members(), "embedded 2014 table"};
    return {eu::load_members_file(o.members), o.members};
}

bool want_json(const Options& o) { return o.format == "json"; }

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string label_set(const NodeSet& s)
{
    std::string out = "{";
    for (int i : s.indices())
        out += (out.size() > 1 ? "," : "") + std::to_string(i);
    return out + "}";
}

int cmd_verify(const Options& o, std::ostream& out)
{
    const auto loaded = load_table(o);
    const auto transcript = run_proof(loaded.table, loaded.source);
    if (want_json(o))
        out << to_json(transcript).dump(2) << "\n";
    else
        out << render_text(transcript);
    return transcript.verified() ? kOk : kFailed;
}

int cmd_classify(const Options& o, std::ostream& out)
{
    const auto loaded = load_table(o);
    const eu::EuGame game(loaded.table);
    const auto c = Coalition::from_indices(parse_coalition_spec(o.coalition), eu::kMemberCount);
    const auto r = eu::classify(game, c);
    if (want_json(o)) {
        out << Json{{"coalition", json_io::to_json(c)},
                    {"size", c.size()},
                    {"population_sum", r.population_sum},
                    {"rule55", r.rule55},
                    {"rule65", r.rule65},
                    {"rule25", r.rule25},
                    {"winning", r.winning}}
                   .dump(2)
            << "\n";
        return kOk;
    }
    out << "coalition:  " << c.to_string() << "\n"
        << "members:    " << c.size() << " (member rule, at least " << game.member_quota()
        << ": " << yes_no(r.rule55) << ")\n"
        << "population: " << r.population_sum << " (population rule, at least "
        << to_string(game.population_quota()) << ": " << yes_no(r.rule65) << ")\n"
        << "supermajority rule, at least 25: " << yes_no(r.rule25) << "\n"
        << "winning:    " << yes_no(r.winning);
    if (r.winning)
        out << (r.rule55 && r.rule65 ? " (member and population rules)" : " (supermajority rule)");
    out << "\n";
    return kOk;
}

int cmd_separate(const Options& o, std::ostream& out)
{
    const auto instance = json_io::instance_from_json(json_io::read_file(o.input));
    const auto result = lp_feasible(instance);
    if (want_json(o)) {
        out << json_io::to_json(result).dump(2) << "\n";
        return kOk;
    }
    if (const auto* s = std::get_if<Separable>(&result)) {
        out << "SEPARABLE\nweights:";
        for (const auto& w : s->weights)
            out << " " << to_string(w);
        out << "\nquota: " << to_string(s->quota) << "\n";
    } else {
        out << "NOT SEPARABLE\n" << std::get<NotSeparable>(result).farkas_note << "\n";
    }
    return kOk;
}

int cmd_certs_check(const Options& o, std::ostream& out)
{
    std::optional<SimpleGameExpr> game;
    if (!o.game.empty())
        game = json_io::game_from_json(json_io::read_file(o.game));
    else
        game = eu::EuGame(load_table(o).table).game();
    const int n = game->member_count();

    const Json doc = json_io::read_file(o.input);
    std::vector<BalanceCertificate> certs;
    if (doc.is_object() && doc.contains("certificates")) {
        if (!doc.at("certificates").is_array())
            throw ParseError("'certificates' must be an array");
        for (const auto& c : doc.at("certificates"))
            certs.push_back(json_io::certificate_from_json(c, n));
    } else {
        certs.push_back(json_io::certificate_from_json(doc, n));
    }

    int passed = 0;
    Json results = Json::array();
    for (std::size_t i = 0; i < certs.size(); ++i) {
        bool ok = false;
        std::string reason;
        try {
            ok = verify_balance(certs[i], *game);
            if (!ok)
                reason = certs[i].winning_set.size() < certs[i].losing_set.size()
                             ? "fewer winning than losing coalitions"
                         : !incidence_balanced(certs[i]) ? "incidence counts differ"
                                                         : "a coalition has the wrong outcome";
        } catch (const InvalidArgument& e) {
            reason = e.what();
        }
        passed += ok ? 1 : 0;
        results.push_back(Json{{"index", i}, {"verified", ok}, {"reason", reason}});
        if (!want_json(o))
            out << "certificate " << i + 1 << ": " << (ok ? "VERIFIED" : "REJECTED")
                << (reason.empty() ? "" : " (" + reason + ")") << "\n";
    }
    const bool all = passed == static_cast<int>(certs.size());
    if (want_json(o))
        out << Json{{"results", results}, {"all_verified", all}}.dump(2) << "\n";
    else
        out << passed << " of " << certs.size() << " certificates verified\n";
    return all ? kOk : kFailed;
}

Json cover_json(const CoverSolution& c) { return json_io::to_json(c); }

void print_cover(std::ostream& out, const CoverSolution& c)
{
    for (const auto& p : c.parts)
        out << " " << label_set(p);
    out << "\n";
}

int cmd_cover_solve(const Options& o, std::ostream& out)
{
    const auto h = json_io::hypergraph_from_json(json_io::read_file(o.input));
    const auto r = cover_number(h);
    const bool within = !o.k || r.k <= *o.k;
    if (want_json(o)) {
        Json j{{"cover_number", r.k}, {"cover", cover_json(r.solution)}};
        if (o.k)
            j["within_k"] = within;
        out << j.dump(2) << "\n";
    } else {
        out << "cover number: " << r.k << "\ncover:";
        print_cover(out, r.solution);
        if (o.k)
            out << (within ? "a cover with at most " : "no cover with at most ") << *o.k
                << " parts exists" << (within ? "" : " (refuted)") << "\n";
    }
    return within ? kOk : kFailed;
}

std::vector<DualWeightCertificate> load_duals(const Options& o, const Hypergraph& h)
{
    if (o.duals.empty())
        return {};
    const Json doc = json_io::read_file(o.duals);
    const Json& list = doc.is_object() && doc.contains("duals") ? doc.at("duals") : doc;
    if (!list.is_array())
        throw ParseError("dual certificate file must hold an array");
    std::vector<DualWeightCertificate> duals;
    for (const auto& d : list)
        duals.push_back(json_io::dual_from_json(d, h.node_count()));
    return duals;
}

int cmd_cover_refute(const Options& o, std::ostream& out)
{
    const auto h = json_io::hypergraph_from_json(json_io::read_file(o.input));
    std::vector<DualWeightCertificate> duals = load_duals(o, h);
    if (duals.empty() && *o.k == 7 && h == listed_family_hypergraph())
        duals = seven_cover_duals();
    const auto r = no_k_cover(h, *o.k, duals);
    if (want_json(o)) {
        Json j{{"k", r.k},
               {"refuted", r.refuted()},
               {"combinations_checked", r.combinations_checked},
               {"duals_supplied", !duals.empty()},
               {"duals_refute", r.duals_refute}};
        j["counterexample"] = r.counterexample ? cover_json(*r.counterexample) : Json(nullptr);
        out << j.dump(2) << "\n";
    } else if (r.refuted()) {
        out << "no " << r.k << "-cover exists (exhaustive search, " << r.combinations_checked
            << " combinations)";
        if (!duals.empty())
            out << "; confirmed by " << duals.size() << " dual weightings";
        out << "\n";
    } else {
        out << "found a cover with " << r.k << " parts:";
        print_cover(out, *r.counterexample);
    }
    return r.refuted() ? kOk : kFailed;
}

int cmd_cover_duals(const Options& o, std::ostream& out)
{
    const auto h = json_io::hypergraph_from_json(json_io::read_file(o.input));
    std::vector<DualWeightCertificate> duals = load_duals(o, h);
    if (duals.empty()) {
        if (h.node_count() != 15)
            throw InvalidArgument("built-in dual weightings need 15 nodes; pass --duals");
        duals = seven_cover_duals();
    }
    bool all = true;
    Json list = Json::array();
    for (std::size_t i = 0; i < duals.size(); ++i) {
        const auto& d = duals[i];
        const bool ok = verify_dual_certificate(d, h);
        all = all && ok;
        const auto scope = dual_scope(d);
        const Rational total = total_weight(d.weights);
        const int compared = scope == DualScope::CoversUsingExcluded ? d.bound - 1 : d.bound;
        const char* scope_name = scope == DualScope::AllCovers ? "all covers"
                                 : scope == DualScope::CoversAvoidingExcluded
                                     ? "covers avoiding the excluded part"
                                     : "covers using the excluded part";
        if (want_json(o)) {
            Json j = json_io::to_json(d);
            j["verified"] = ok;
            j["total"] = to_string(total);
            j["compared_with"] = compared;
            j["scope"] = scope_name;
            list.push_back(j);
        } else {
            out << "weighting " << i + 1 << " (" << scope_name
                << (d.excluded_part ? " " + label_set(*d.excluded_part) : "") << "): total "
                << to_string(total) << (total > compared ? " > " : " <= ") << compared << ", "
                << (ok ? "VERIFIED" : "REJECTED") << "\n";
        }
    }
    const int k = duals.front().bound;
    const bool joint = duals_refute_k_cover(duals, h, k);
    if (want_json(o))
        out << Json{{"duals", list}, {"refutes_k", k}, {"jointly_refute", joint}}.dump(2) << "\n";
    else
        out << (joint ? "jointly refute a " : "do not jointly refute a ") << k << "-cover\n";
    return all && joint ? kOk : kFailed;
}

int cmd_export(const Options& o, std::ostream& out)
{
    Json doc;
    if (o.what == "hypergraph") {
        doc = json_io::to_json(listed_family_hypergraph());
    } else {
        const eu::EuGame game(load_table(o).table);
        const auto family = nonseparable_family(game);
        if (o.what == "certs") {
            Json list = Json::array();
            for (std::size_t i = 0; i < family.certificates.size(); ++i) {
                Json c{{"edge", json_io::to_json(family.graph.edges()[i])}};
                const Json body = json_io::to_json(family.certificates[i]);
                c["losing"] = body.at("losing");
                c["winning"] = body.at("winning");
                c["verified"] = verify_balance(family.certificates[i], game.game());
                list.push_back(c);
            }
            doc = Json{{"certificates", list}};
        } else {
            Json sets = Json::array();
            for (const auto& s : enumerate_maximal_independent(family.graph))
                sets.push_back(json_io::to_json(s));
            doc = Json{{"nodes", family.graph.node_count()}, {"maximal_independent_sets", sets}};
        }
    }
    std::ofstream file(o.output, std::ios::binary | std::ios::trunc);
    if (!file)
        throw InvalidArgument("cannot write '" + o.output + "'");
    file << doc.dump(2) << "\n";
    file.close();
    if (!file)
        throw InvalidArgument("failed writing '" + o.output + "'");
    out << "wrote " << o.what << " to " << o.output << "\n";
    return kOk;
}

}  // namespace

std::vector<int> parse_coalition_spec(const std::string& spec)
{
    std::string s;
    for (char c : spec)
        if (!std::isspace(static_cast<unsigned char>(c)))
            s += c;
    if (s.size() >= 2 && (s[0] == 'L' || s[0] == 'W') &&
        std::all_of(s.begin() + 1, s.end(), [](unsigned char c) { return std::isdigit(c); })) {
        const auto& named = eu::named_coalitions();
        const auto& list = s[0] == 'L' ? named.losing : named.winning;
        const int k = std::stoi(s.substr(1));
        if (k < 1 || k > static_cast<int>(list.size()))
            throw InvalidArgument("no coalition named " + s);
        return list[static_cast<std::size_t>(k - 1)].indices();
    }

    std::vector<int> out;
    std::stringstream ss(s);
    std::string token;
    auto number = [&](const std::string& t) {
        if (t.empty() || !std::all_of(t.begin(), t.end(), [](unsigned char c) { return std::isdigit(c); }) ||
            t.size() > 3)
            throw InvalidArgument("bad coalition token '" + t + "'");
        return std::stoi(t);
    };
    while (std::getline(ss, token, ',')) {
        if (token.empty())
            continue;
        if (auto dash = token.find('-'); dash != std::string::npos) {
            const int lo = number(token.substr(0, dash));
            const int hi = number(token.substr(dash + 1));
            if (lo > hi)
                throw InvalidArgument("empty range '" + token + "'");
            for (int i = lo; i <= hi; ++i)
                out.push_back(i);
        } else {
            out.push_back(number(token));
        }
    }
    return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Options o;
    CLI::App app{"Weighted voting game dimension certificates", "votedim"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--members", o.members, "CSV member table (index,name,population)");
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));

    auto* verify = app.add_subcommand("verify", "Replay the dimension lower bound for the EU council");

    auto* classify = app.add_subcommand("classify", "Evaluate a coalition under the council rule");
    classify->add_option("coalition", o.coalition, "e.g. 1-28, 1,3,5-7, L15, W12")->required();

    auto* separate = app.add_subcommand("separate", "Decide weighted separability of an instance");
    separate->add_option("instance", o.input, "Instance JSON")->required();

    auto* certs = app.add_subcommand("certs", "Balance certificates");
    certs->require_subcommand(1);
    auto* certs_check = certs->add_subcommand("check", "Verify certificates from a JSON file");
    certs_check->add_option("file", o.input, "Certificate JSON")->required();
    certs_check->add_option("--game", o.game, "Game JSON (default: the EU council)");

    auto* cover = app.add_subcommand("cover", "Hypergraph covers");
    cover->require_subcommand(1);
    auto* solve = cover->add_subcommand("solve", "Compute the cover number");
    solve->add_option("file", o.input, "Hypergraph JSON")->required();
    solve->add_option("--k", o.k, "Check for a cover with at most K parts");
    auto* refute = cover->add_subcommand("refute", "Prove that no K-cover exists");
    refute->add_option("file", o.input, "Hypergraph JSON")->required();
    refute->add_option("--k", o.k, "Number of parts")->required();
    refute->add_option("--duals", o.duals, "Dual weighting JSON");
    auto* duals = cover->add_subcommand("duals", "Verify dual weightings");
    duals->add_option("file", o.input, "Hypergraph JSON")->required();
    duals->add_option("--duals", o.duals, "Dual weighting JSON (default: built-in 7-cover pair)");

    auto* exporter = app.add_subcommand("export", "Write canonical JSON artefacts");
    exporter->add_option("what", o.what, "hypergraph | certs | maximal-sets")
        ->required()
        ->check(CLI::IsMember({"hypergraph", "certs", "maximal-sets"}));
    exporter->add_option("path", o.output, "Output file")->required();

    for (auto* sub : {verify, classify, separate, certs_check, solve, refute, duals, exporter})
        sub->fallthrough();
    certs->fallthrough();
    cover->fallthrough();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty())
        reversed.pop_back();
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*verify)
            return cmd_verify(o, out);
        if (*classify)
            return cmd_classify(o, out);
        if (*separate)
            return cmd_separate(o, out);
        if (*certs_check)
            return cmd_certs_check(o, out);
        if (*solve)
            return cmd_cover_solve(o, out);
        if (*refute)
            return cmd_cover_refute(o, out);
        if (*duals)
            return cmd_cover_duals(o, out);
        if (*exporter)
            return cmd_export(o, out);
    } catch (const ConstructionError& e) {
        err << "error: " << e.what() << "\n";
        return kFailed;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}

}  // namespace votedim::cli

#include "votedim/json_io.hpp"

#include "votedim/error.hpp"

#include <fstream>
#include <sstream>

namespace votedim::json_io {

namespace {

const Json& field(const Json& j, const char* key)
{
    if (!j.is_object())
        throw ParseError(std::string("expected an object with key '") + key + "'");
    auto it = j.find(key);
    if (it == j.end())
        throw ParseError(std::string("missing key '") + key + "'");
    return *it;
}

int integer_field(const Json& j, const char* key)
{
    const Json& v = field(j, key);
    if (!v.is_number_integer())
        throw ParseError(std::string("key '") + key + "' must be an integer");
    return v.get<int>();
}

const Json& array_field(const Json& j, const char* key)
{
    const Json& v = field(j, key);
    if (!v.is_array())
        throw ParseError(std::string("key '") + key + "' must be an array");
    return v;
}

Rational rational_from_json(const Json& j)
{
    if (j.is_string())
        return parse_rational(j.get<std::string>());
    if (j.is_number_integer())
        return Rational(j.get<long>());
    throw ParseError("rational must be a string or an integer, got " + j.dump());
}

std::vector<int> indices_from_json(const Json& j)
{
    if (!j.is_array())
        throw ParseError("expected an index array, got " + j.dump());
    std::vector<int> out;
    for (const auto& v : j) {
        if (!v.is_number_integer())
            throw ParseError("index must be an integer, got " + v.dump());
        out.push_back(v.get<int>());
    }
    return out;
}

template <class Set>
Set set_from_json(const Json& j, int capacity)
{
    auto idx = indices_from_json(j);
    try {
        return Set::from_indices(idx, capacity);
    } catch (const InvalidArgument& e) {
        throw ParseError(e.what());
    }
}

std::vector<Coalition> coalitions_from_json(const Json& j, int n)
{
    if (!j.is_array())
        throw ParseError("expected an array of coalitions");
    std::vector<Coalition> out;
    for (const auto& c : j)
        out.push_back(coalition_from_json(c, n));
    return out;
}

template <class Range>
Json set_list(const Range& sets)
{
    Json a = Json::array();
    for (const auto& s : sets)
        a.push_back(to_json(s));
    return a;
}

Json rational_list(const std::vector<Rational>& values)
{
    Json a = Json::array();
    for (const auto& v : values)
        a.push_back(to_string(v));
    return a;
}

}  // namespace

Json to_json(const Coalition& c) { return Json(c.indices()); }
Json to_json(const NodeSet& s) { return Json(s.indices()); }

Coalition coalition_from_json(const Json& j, int n) { return set_from_json<Coalition>(j, n); }
NodeSet node_set_from_json(const Json& j, int t) { return set_from_json<NodeSet>(j, t); }

SimpleGameExpr game_from_json(const Json& j)
{
    const int n = integer_field(j, "n");
    if (n < 0 || n > Coalition::kMaxCapacity)
        throw ParseError("n must be in 0..64");
    const Json& kind_json = field(j, "kind");
    if (!kind_json.is_string())
        throw ParseError("key 'kind' must be a string");
    const std::string kind = kind_json.get<std::string>();

    if (kind == "weighted") {
        std::vector<Rational> weights;
        for (const auto& w : array_field(j, "weights"))
            weights.push_back(rational_from_json(w));
        if (weights.size() != static_cast<std::size_t>(n))
            throw ParseError("weighted game lists " + std::to_string(weights.size()) +
                             " weights for n = " + std::to_string(n));
        try {
            return WeightedGame(std::move(weights), rational_from_json(field(j, "quota")));
        } catch (const InvalidArgument& e) {
            throw ParseError(e.what());
        }
    }
    if (kind == "explicit")
        return ExplicitGame(n, coalitions_from_json(array_field(j, "winning"), n));
    if (kind == "intersection" || kind == "union") {
        std::vector<SimpleGameExpr> parts;
        for (const auto& g : array_field(j, "games")) {
            parts.push_back(game_from_json(g));
            if (parts.back().member_count() != n)
                throw ParseError("component game has a different member count");
        }
        if (parts.empty())
            throw ParseError(kind + " of zero games");
        if (kind == "intersection")
            return Intersection{std::move(parts)};
        return Union{std::move(parts)};
    }
    throw ParseError("unknown game kind '" + kind + "'");
}

Json to_json(const SimpleGameExpr& g)
{
    struct Visitor {
        int n;
        Json operator()(const ExplicitGame& e) const
        {
            return Json{{"n", n}, {"kind", "explicit"}, {"winning", set_list(e.minimal_winning())}};
        }
        Json operator()(const WeightedGame& w) const
        {
            return Json{{"n", n},
                        {"kind", "weighted"},
                        {"weights", rational_list(w.weights())},
                        {"quota", to_string(w.quota())}};
        }
        Json composite(const char* kind, const std::vector<SimpleGameExpr>& parts) const
        {
            Json games = Json::array();
            for (const auto& p : parts)
                games.push_back(to_json(p));
            return Json{{"n", n}, {"kind", kind}, {"games", games}};
        }
        Json operator()(const Intersection& i) const { return composite("intersection", i.parts); }
        Json operator()(const Union& u) const { return composite("union", u.parts); }
    };
    return std::visit(Visitor{g.member_count()}, g.node());
}

BalanceCertificate certificate_from_json(const Json& j, int n)
{
    return BalanceCertificate{coalitions_from_json(array_field(j, "losing"), n),
                              coalitions_from_json(array_field(j, "winning"), n)};
}

Json to_json(const BalanceCertificate& cert)
{
    return Json{{"losing", set_list(cert.losing_set)}, {"winning", set_list(cert.winning_set)}};
}

Hypergraph hypergraph_from_json(const Json& j)
{
    const int t = integer_field(j, "nodes");
    if (t < 0 || t > NodeSet::kMaxCapacity)
        throw ParseError("nodes must be in 0..64");
    std::vector<NodeSet> edges;
    for (const auto& e : array_field(j, "edges"))
        edges.push_back(node_set_from_json(e, t));
    try {
        return Hypergraph(t, std::move(edges));
    } catch (const InvalidArgument& e) {
        throw ParseError(e.what());
    }
}

Json to_json(const Hypergraph& h)
{
    return Json{{"nodes", h.node_count()}, {"edges", set_list(h.edges())}};
}

SeparationInstance instance_from_json(const Json& j)
{
    const int n = integer_field(j, "n");
    if (n < 0 || n > Coalition::kMaxCapacity)
        throw ParseError("n must be in 0..64");
    SeparationInstance instance{n, coalitions_from_json(array_field(j, "winning_constraints"), n),
                                coalitions_from_json(array_field(j, "losing_targets"), n)};
    try {
        validate(instance);
    } catch (const InvalidArgument& e) {
        throw ParseError(e.what());
    }
    return instance;
}

Json to_json(const SeparationInstance& instance)
{
    return Json{{"n", instance.n},
                {"winning_constraints", set_list(instance.winning_constraints)},
                {"losing_targets", set_list(instance.losing_targets)}};
}

Json to_json(const SeparationResult& result)
{
    if (const auto* s = std::get_if<Separable>(&result))
        return Json{{"separable", true},
                    {"weights", rational_list(s->weights)},
                    {"quota", to_string(s->quota)}};
    const auto& p = std::get<NotSeparable>(result);
    return Json{{"separable", false},
                {"farkas", Json{{"nonnegativity", rational_list(p.nonnegativity)},
                                {"winning", rational_list(p.winning)},
                                {"losing", rational_list(p.losing)}}},
                {"note", p.farkas_note}};
}

DualWeightCertificate dual_from_json(const Json& j, int t)
{
    DualWeightCertificate d;
    for (const auto& w : array_field(j, "weights"))
        d.weights.push_back(rational_from_json(w));
    if (d.weights.size() != static_cast<std::size_t>(t))
        throw ParseError("dual certificate has " + std::to_string(d.weights.size()) +
                         " weights for " + std::to_string(t) + " nodes");
    d.bound = integer_field(j, "bound");
    if (j.contains("excluded_part") && !j.at("excluded_part").is_null())
        d.excluded_part = node_set_from_json(j.at("excluded_part"), t);
    return d;
}

Json to_json(const DualWeightCertificate& d)
{
    Json j{{"weights", rational_list(d.weights)}, {"bound", d.bound}};
    j["excluded_part"] = d.excluded_part ? to_json(*d.excluded_part) : Json(nullptr);
    return j;
}

Json to_json(const CoverSolution& cover) { return set_list(cover.parts); }

Json read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    try {
        return Json::parse(buffer.str());
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError("'" + path + "' is not valid JSON: " + e.what());
    }
}

}  // namespace votedim::json_io

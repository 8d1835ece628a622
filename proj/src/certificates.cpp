#include "votedim/certificates.hpp"

#include "votedim/error.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <string>

namespace votedim {

namespace {

// Upper bound on candidate sets A enumerated by build_pair_certificate.
constexpr std::size_t kPairCandidateLimit = 4'000'000;

constexpr int kSupermajority = 25;

std::vector<int> incidence(const std::vector<Coalition>& sets, int n)
{
    std::vector<int> count(static_cast<std::size_t>(n) + 1, 0);
    for (const auto& s : sets)
        for (int m : s.indices())
            ++count[static_cast<std::size_t>(m)];
    return count;
}

std::string label(int i) { return "L" + std::to_string(i); }

const Coalition& anchor_coalition() { return eu::named_coalitions().losing.back(); }

std::size_t binomial(std::size_t n, std::size_t k)
{
    if (k > n)
        return 0;
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > kPairCandidateLimit)
            return kPairCandidateLimit + 1;
    }
    return r;
}

void require_winning(const eu::EuGame& g, const Coalition& c, const char* what)
{
    if (!simple_contains(g.game(), c))
        throw ConstructionError(std::string(what) + " " + c.to_string() + " is not winning");
}

}  // namespace

bool incidence_balanced(const BalanceCertificate& cert)
{
    int n = -1;
    for (const auto* family : {&cert.losing_set, &cert.winning_set})
        for (const auto& c : *family) {
            if (n >= 0 && c.capacity() != n)
                throw DimensionMismatch("certificate mixes coalitions of different sizes");
            n = c.capacity();
        }
    if (n < 0)
        return true;
    return incidence(cert.losing_set, n) == incidence(cert.winning_set, n);
}

bool verify_balance(const BalanceCertificate& cert, const SimpleGameExpr& g)
{
    if (cert.losing_set.empty())
        throw InvalidArgument("certificate has an empty losing set");
    for (const auto* family : {&cert.losing_set, &cert.winning_set})
        for (const auto& c : *family)
            if (c.capacity() != g.member_count())
                throw DimensionMismatch("certificate coalition over " +
                                        std::to_string(c.capacity()) +
                                        " members checked against a game on " +
                                        std::to_string(g.member_count()));
    if (cert.winning_set.size() < cert.losing_set.size())
        return false;
    if (!incidence_balanced(cert))
        return false;
    for (const auto& l : cert.losing_set)
        if (simple_contains(g, l))
            return false;
    for (const auto& w : cert.winning_set)
        if (!simple_contains(g, w))
            return false;
    return true;
}

BalanceCertificate build_pair_certificate(const Coalition& li, const Coalition& lj,
                                          const eu::EuGame& g)
{
    if (li == lj)
        throw InvalidArgument("pair certificate needs two distinct coalitions");
    for (const auto* l : {&li, &lj}) {
        const auto r = eu::classify(g, *l);
        if (r.winning)
            throw InvalidArgument("coalition " + l->to_string() + " is winning");
        if (!r.rule55 || r.rule65)
            throw InvalidArgument("coalition " + l->to_string() +
                                  " must meet the member rule and fail the population rule");
    }

    const Coalition common = li & lj;
    const Coalition spread = li ^ lj;
    const int need = std::max(0, kSupermajority - common.size());
    if (need > spread.size())
        throw ConstructionError("no set of " + std::to_string(need) +
                                " members in the symmetric difference " + spread.to_string());
    if (binomial(static_cast<std::size_t>(spread.size()), static_cast<std::size_t>(need)) >
        kPairCandidateLimit)
        throw ResourceGuard("too many candidate exchange sets for " + li.to_string() + " and " +
                            lj.to_string());

    struct Candidate {
        std::int64_t population;
        Coalition members;
    };
    std::vector<Candidate> candidates;
    const std::vector<int> pool = spread.indices();
    Coalition current(li.capacity());
    std::function<void(std::size_t, int)> choose = [&](std::size_t start, int left) {
        if (left == 0) {
            candidates.push_back({g.population_of(current), current});
            return;
        }
        for (std::size_t i = start; i + static_cast<std::size_t>(left) <= pool.size(); ++i) {
            current = current.with(pool[i]);
            choose(i + 1, left - 1);
            current = current.without(pool[i]);
        }
    };
    choose(0, need);
    std::sort(candidates.begin(), candidates.end(), [](const Candidate& a, const Candidate& b) {
        if (a.population != b.population)
            return a.population < b.population;
        return a.members < b.members;
    });

    const Coalition both = li | lj;
    for (const auto& a : candidates) {
        const Coalition w1 = a.members | common;
        const Coalition w2 = both - a.members;
        if (!simple_contains(g.game(), w1))
            throw ConstructionError("W1 = " + w1.to_string() + " is not winning");
        if (simple_contains(g.game(), w2))
            return BalanceCertificate{{std::min(li, lj), std::max(li, lj)}, {w1, w2}};
    }
    throw ConstructionError("no exchange set makes (Li | Lj) - A winning for " + li.to_string() +
                            " and " + lj.to_string());
}

BalanceCertificate build_anchor_certificate(const Coalition& li, const eu::EuGame& g)
{
    const Coalition& anchor = anchor_coalition();
    if (li.capacity() != anchor.capacity())
        throw DimensionMismatch("coalition over " + std::to_string(li.capacity()) +
                                " members used with the 28-member council");
    if (li == anchor)
        throw InvalidArgument("anchor certificate needs a coalition other than L15");
    if (simple_contains(g.game(), li))
        throw InvalidArgument("coalition " + li.to_string() + " is winning");

    auto by_population = [&](int a, int b) {
        const auto pa = g.table().population(a);
        const auto pb = g.table().population(b);
        return pa != pb ? pa < pb : a < b;
    };
    std::vector<int> outside = (li - anchor).indices();
    std::vector<int> missing = (anchor - li).indices();
    if (outside.size() < 2)
        throw ConstructionError("fewer than two members in " + li.to_string() + " outside L15");
    if (missing.empty())
        throw ConstructionError(li.to_string() + " contains L15");

    std::sort(outside.begin(), outside.end(), by_population);
    // Largest population; ties to the lower index.
    const int largest = *std::min_element(missing.begin(), missing.end(), [&](int a, int b) {
        const auto pa = g.table().population(a);
        const auto pb = g.table().population(b);
        return pa != pb ? pa > pb : a < b;
    });

    const Coalition moved = Coalition::from_indices({outside[0], outside[1]}, li.capacity());
    const Coalition w1 = (li - moved).with(largest);
    const Coalition w2 = (anchor.without(largest)) | moved;
    require_winning(g, w1, "exchanged coalition");
    require_winning(g, w2, "exchanged coalition");
    return BalanceCertificate{{li, anchor}, {w1, w2}};
}

std::vector<Coalition> edge_coalitions(const CertifiedFamily& family, const NodeSet& edge)
{
    std::vector<Coalition> out;
    for (int i : edge.indices())
        out.push_back(family.nodes.at(static_cast<std::size_t>(i - 1)));
    return out;
}

const std::vector<std::pair<int, int>>& listed_pair_edges()
{
    static const std::vector<std::pair<int, int>> pairs = {
        {1, 5},   {1, 8},   {1, 9},   {1, 10},  {1, 11},  {1, 13},  {1, 14},  {1, 15},
        {2, 3},   {2, 4},   {2, 5},   {2, 6},   {2, 7},   {2, 8},   {2, 10},  {2, 11},  {2, 15},
        {3, 4},   {3, 5},   {3, 7},   {3, 9},   {3, 10},  {3, 12},  {3, 13},  {3, 14},  {3, 15},
        {4, 6},   {4, 8},   {4, 9},   {4, 11},  {4, 12},  {4, 13},  {4, 14},  {4, 15},
        {5, 7},   {5, 8},   {5, 11},  {5, 14},  {5, 15},
        {6, 7},   {6, 8},   {6, 9},   {6, 11},  {6, 13},  {6, 14},  {6, 15},
        {7, 9},   {7, 10},  {7, 11},  {7, 13},  {7, 14},  {7, 15},
        {8, 9},   {8, 10},  {8, 11},  {8, 12},  {8, 14},  {8, 15},
        {9, 10},  {9, 11},  {9, 12},  {9, 13},  {9, 14},  {9, 15},
        {10, 11}, {10, 14}, {10, 15},
        {11, 12}, {11, 13}, {11, 15},
        {12, 13}, {12, 15},
        {13, 14}, {13, 15},
        {14, 15},
    };
    return pairs;
}

const std::vector<std::vector<int>>& listed_triple_edges()
{
    static const std::vector<std::vector<int>> triples = {
        {1, 2, 12}, {1, 4, 7}, {1, 6, 12}, {4, 5, 10}, {5, 10, 12},
    };
    return triples;
}

const std::vector<std::vector<int>>& listed_triple_witnesses()
{
    static const std::vector<std::vector<int>> witnesses = {
        {2, 7, 11}, {3, 10, 12}, {4, 8, 10}, {2, 5, 9}, {1, 2, 6},
    };
    return witnesses;
}

Hypergraph listed_family_hypergraph()
{
    const int t = static_cast<int>(eu::named_coalitions().losing.size());
    std::vector<NodeSet> edges;
    for (const auto& [i, j] : listed_pair_edges())
        edges.push_back(NodeSet::from_indices({i, j}, t));
    for (const auto& tri : listed_triple_edges())
        edges.push_back(NodeSet::from_indices(tri, t));
    return Hypergraph(t, std::move(edges));
}

CertifiedFamily nonseparable_family(const eu::EuGame& g)
{
    const auto& named = eu::named_coalitions();
    const auto& losing = named.losing;
    const int t = static_cast<int>(losing.size());
    const int anchor_node = t;

    std::map<NodeSet, BalanceCertificate> by_edge;
    auto add = [&](const NodeSet& edge, BalanceCertificate cert, const std::string& name) {
        if (!verify_balance(cert, g.game()))
            throw ConstructionError("certificate for " + name + " does not verify");
        by_edge.emplace(edge, std::move(cert));
    };

    for (const auto& [i, j] : listed_pair_edges()) {
        const Coalition& li = losing[static_cast<std::size_t>(i - 1)];
        const Coalition& lj = losing[static_cast<std::size_t>(j - 1)];
        BalanceCertificate cert;
        try {
            cert = j == anchor_node ? build_anchor_certificate(li, g)
                                    : build_pair_certificate(li, lj, g);
        } catch (const InvalidArgument& e) {
            throw ConstructionError("pair {" + label(i) + ", " + label(j) + "}: " + e.what());
        }
        add(NodeSet::from_indices({i, j}, t), std::move(cert),
            "{" + label(i) + ", " + label(j) + "}");
    }

    const auto& triples = listed_triple_edges();
    const auto& witnesses = listed_triple_witnesses();
    for (std::size_t k = 0; k < triples.size(); ++k) {
        BalanceCertificate cert;
        std::string name = "{";
        for (int i : triples[k]) {
            cert.losing_set.push_back(losing[static_cast<std::size_t>(i - 1)]);
            name += (name.size() > 1 ? ", " : "") + label(i);
        }
        for (int w : witnesses[k])
            cert.winning_set.push_back(named.winning[static_cast<std::size_t>(w - 1)]);
        add(NodeSet::from_indices(triples[k], t), std::move(cert), name + "}");
    }

    std::vector<NodeSet> edges;
    for (const auto& [edge, cert] : by_edge)
        edges.push_back(edge);
    Hypergraph graph(t, edges);
    if (!graph.dropped_edges().empty() || graph.edges().size() != by_edge.size())
        throw ConstructionError("listed family is not an antichain");

    CertifiedFamily family{losing, std::move(graph), {}};
    for (const auto& edge : family.graph.edges())
        family.certificates.push_back(by_edge.at(edge));
    return family;
}

std::vector<DualWeightCertificate> seven_cover_duals()
{
    auto q = [](long num, long den) { return Rational(num, den); };
    const int t = 15;
    const NodeSet excluded = NodeSet::from_indices({1, 3, 6}, t);
    DualWeightCertificate avoiding{
        {q(1, 2), 0, 1, q(1, 2), 0, 1, q(1, 2), 0, 1, 0, 0, 0, 1, 1, 1}, 7, excluded};
    DualWeightCertificate using_part{
        {0, q(1, 3), 0, q(2, 3), q(1, 3), 0, q(1, 3), q(2, 3), q(2, 3), q(1, 3), 1, q(2, 3),
         q(1, 3), 0, 1},
        7,
        excluded};
    return {avoiding, using_part};
}

}  // namespace votedim

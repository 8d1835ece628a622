#include "votedim/cover.hpp"

#include "votedim/error.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <string>

namespace votedim {

namespace {

void require_nodes(const Hypergraph& h, const NodeSet& s)
{
    if (s.capacity() != h.node_count())
        throw DimensionMismatch("node set over " + std::to_string(s.capacity()) +
                                " nodes used with a hypergraph on " +
                                std::to_string(h.node_count()));
}

bool independent_mask(std::uint64_t s, std::span<const NodeSet> edges)
{
    return std::none_of(edges.begin(), edges.end(),
                        [&](const NodeSet& e) { return (e.mask() & ~s) == 0; });
}

std::vector<NodeSet> ordered_candidates(std::span<const NodeSet> candidates)
{
    std::vector<NodeSet> c(candidates.begin(), candidates.end());
    std::sort(c.begin(), c.end(), [](const NodeSet& a, const NodeSet& b) {
        if (a.size() != b.size())
            return a.size() > b.size();
        return a < b;
    });
    c.erase(std::unique(c.begin(), c.end()), c.end());
    return c;
}

CoverSolution canonical_solution(std::vector<NodeSet> parts)
{
    std::sort(parts.begin(), parts.end());
    return CoverSolution{std::move(parts)};
}

}  // namespace

Hypergraph::Hypergraph(int node_count, std::vector<NodeSet> edges) : node_count_(node_count)
{
    if (node_count < 0 || node_count > NodeSet::kMaxCapacity)
        throw InvalidArgument("node count " + std::to_string(node_count) + " outside 0..64");
    for (const auto& e : edges) {
        if (e.capacity() != node_count)
            throw DimensionMismatch("edge over " + std::to_string(e.capacity()) +
                                    " nodes in a hypergraph on " + std::to_string(node_count));
        if (e.size() < 2)
            throw InvalidArgument("edge " + e.to_string() + " has fewer than two nodes");
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    for (const auto& e : edges) {
        bool redundant = std::any_of(edges.begin(), edges.end(), [&](const NodeSet& other) {
            return other != e && other.is_subset_of(e);
        });
        (redundant ? dropped_ : edges_).push_back(e);
    }
}

bool is_independent(const NodeSet& s, const Hypergraph& h)
{
    require_nodes(h, s);
    return independent_mask(s.mask(), h.edges());
}

bool is_cover(const CoverSolution& cover, const Hypergraph& h)
{
    NodeSet covered(h.node_count());
    for (const auto& p : cover.parts) {
        if (!is_independent(p, h))
            return false;
        covered = covered | p;
    }
    return covered == h.all_nodes();
}

std::vector<NodeSet> enumerate_maximal_independent(const Hypergraph& h)
{
    const int t = h.node_count();
    if (t > kEnumerationNodeLimit)
        throw ResourceGuard("maximal independent set enumeration refused: " + std::to_string(t) +
                            " nodes exceeds the limit of " + std::to_string(kEnumerationNodeLimit));
    const auto& edges = h.edges();
    const std::uint64_t all = NodeSet::full_mask(t);
    std::vector<NodeSet> out;

    auto maximal = [&](std::uint64_t s) {
        for (int v = 0; v < t; ++v) {
            std::uint64_t b = std::uint64_t{1} << v;
            if ((s & b) == 0 && independent_mask(s | b, edges))
                return false;
        }
        return true;
    };

    // Nodes are decided in increasing order. Excluding a node that could be
    // added is only useful if some edge through it may still be completed by
    // the current set plus the undecided nodes.
    std::function<void(int, std::uint64_t)> visit = [&](int v, std::uint64_t s) {
        if (v == t) {
            if (maximal(s))
                out.push_back(NodeSet::from_mask(s, t));
            return;
        }
        const std::uint64_t b = std::uint64_t{1} << v;
        const bool addable = independent_mask(s | b, edges);
        if (addable)
            visit(v + 1, s | b);
        if (!addable) {
            visit(v + 1, s);
            return;
        }
        const std::uint64_t later = all & ~((b << 1) - 1);
        const bool blockable = std::any_of(edges.begin(), edges.end(), [&](const NodeSet& e) {
            return (e.mask() & b) != 0 && ((e.mask() & ~b) & ~(s | later)) == 0;
        });
        if (blockable)
            visit(v + 1, s);
    };
    visit(0, 0);
    std::sort(out.begin(), out.end());
    return out;
}

MinCoverResult min_cover(const Hypergraph& h, std::span<const NodeSet> candidates)
{
    const int t = h.node_count();
    for (const auto& c : candidates) {
        require_nodes(h, c);
        if (!is_independent(c, h))
            throw InvalidArgument("candidate " + c.to_string() + " contains an edge");
    }
    const std::vector<NodeSet> order = ordered_candidates(candidates);
    const std::uint64_t all = NodeSet::full_mask(t);

    std::uint64_t reachable = 0;
    for (const auto& c : order)
        reachable |= c.mask();
    if (reachable != all)
        throw InvalidArgument("candidates do not jointly cover all nodes; no cover exists");
    if (t == 0)
        return MinCoverResult{0, CoverSolution{}};

    const int largest = order.front().size();
    std::vector<NodeSet> chosen;

    std::function<bool(std::uint64_t, int)> search = [&](std::uint64_t covered, int remaining) {
        const std::uint64_t uncovered = all & ~covered;
        if (uncovered == 0)
            return true;
        if (remaining == 0 || std::popcount(uncovered) > remaining * largest)
            return false;
        const std::uint64_t lowest = uncovered & (~uncovered + 1);
        for (const auto& c : order) {
            if ((c.mask() & lowest) == 0)
                continue;
            chosen.push_back(c);
            if (search(covered | c.mask(), remaining - 1))
                return true;
            chosen.pop_back();
        }
        return false;
    };

    for (int k = 1;; ++k) {
        chosen.clear();
        if (search(0, k))
            return MinCoverResult{k, canonical_solution(chosen)};
    }
}

MinCoverResult cover_number(const Hypergraph& h)
{
    const auto candidates = enumerate_maximal_independent(h);
    return min_cover(h, candidates);
}

DualScope dual_scope(const DualWeightCertificate& cert)
{
    if (!cert.excluded_part)
        return DualScope::AllCovers;
    if (set_weight(cert.weights, *cert.excluded_part) == 0)
        return DualScope::CoversUsingExcluded;
    return DualScope::CoversAvoidingExcluded;
}

Rational set_weight(std::span<const Rational> weights, const NodeSet& s)
{
    Rational sum = 0;
    for (int i : s.indices()) {
        if (i > static_cast<int>(weights.size()))
            throw DimensionMismatch("node " + std::to_string(i) + " has no weight");
        sum += weights[static_cast<std::size_t>(i - 1)];
    }
    return sum;
}

Rational total_weight(std::span<const Rational> weights)
{
    Rational sum = 0;
    for (const auto& w : weights)
        sum += w;
    return sum;
}

bool verify_dual_certificate(const DualWeightCertificate& cert, const Hypergraph& h)
{
    if (cert.weights.size() != static_cast<std::size_t>(h.node_count()))
        throw DimensionMismatch("dual certificate has " + std::to_string(cert.weights.size()) +
                                " weights for " + std::to_string(h.node_count()) + " nodes");
    for (std::size_t i = 0; i < cert.weights.size(); ++i)
        if (cert.weights[i] < 0)
            throw InvalidArgument("negative weight on node " + std::to_string(i + 1));

    const auto maximal = enumerate_maximal_independent(h);
    if (cert.excluded_part) {
        require_nodes(h, *cert.excluded_part);
        if (std::find(maximal.begin(), maximal.end(), *cert.excluded_part) == maximal.end())
            throw InvalidArgument("excluded part " + cert.excluded_part->to_string() +
                                  " is not a maximal independent set");
    }

    const DualScope scope = dual_scope(cert);
    for (const auto& m : maximal) {
        if (scope == DualScope::CoversAvoidingExcluded && m == *cert.excluded_part)
            continue;
        if (set_weight(cert.weights, m) > 1)
            return false;
    }
    const Rational total = total_weight(cert.weights);
    if (scope == DualScope::CoversUsingExcluded)
        return total > cert.bound - 1;
    return total > cert.bound;
}

bool duals_refute_k_cover(std::span<const DualWeightCertificate> duals, const Hypergraph& h, int k)
{
    bool all = false;
    std::vector<NodeSet> avoiding;
    std::vector<NodeSet> using_part;
    for (const auto& d : duals) {
        if (d.bound != k || !verify_dual_certificate(d, h))
            continue;
        switch (dual_scope(d)) {
        case DualScope::AllCovers:
            all = true;
            break;
        case DualScope::CoversAvoidingExcluded:
            avoiding.push_back(*d.excluded_part);
            break;
        case DualScope::CoversUsingExcluded:
            using_part.push_back(*d.excluded_part);
            break;
        }
    }
    if (all)
        return true;
    return std::any_of(avoiding.begin(), avoiding.end(), [&](const NodeSet& e) {
        return std::find(using_part.begin(), using_part.end(), e) != using_part.end();
    });
}

KCoverRefutation no_k_cover(const Hypergraph& h, int k, std::span<const DualWeightCertificate> duals)
{
    if (k < 0)
        throw InvalidArgument("k must be nonnegative");
    const auto maximal = enumerate_maximal_independent(h);
    const std::uint64_t all = NodeSet::full_mask(h.node_count());

    KCoverRefutation result;
    result.k = k;
    result.duals.assign(duals.begin(), duals.end());

    // Combinations in increasing size, lexicographic over the canonical order.
    std::vector<std::size_t> pick;
    std::function<bool(std::size_t, std::uint64_t, int)> choose =
        [&](std::size_t start, std::uint64_t covered, int left) {
            if (left == 0) {
                ++result.combinations_checked;
                return covered == all;
            }
            for (std::size_t i = start; i < maximal.size(); ++i) {
                pick.push_back(i);
                if (choose(i + 1, covered | maximal[i].mask(), left - 1))
                    return true;
                pick.pop_back();
            }
            return false;
        };

    const int most = std::min<int>(k, static_cast<int>(maximal.size()));
    for (int size = 0; size <= most && !result.counterexample; ++size) {
        pick.clear();
        if (choose(0, 0, size)) {
            std::vector<NodeSet> parts;
            for (auto i : pick)
                parts.push_back(maximal[i]);
            result.counterexample = canonical_solution(std::move(parts));
        }
    }
    result.exhaustive = true;

    if (!duals.empty()) {
        result.duals_refute = duals_refute_k_cover(duals, h, k);
        // Duals may fail to refute when no cover exists; the reverse is unsound.
        if (result.duals_refute && result.counterexample)
            throw ConstructionError("dual certificates refute a " + std::to_string(k) +
                                    "-cover that exhaustive search found");
    }
    return result;
}

}  // namespace votedim

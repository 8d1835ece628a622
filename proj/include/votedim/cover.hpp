#pragma once

#include "votedim/index_set.hpp"
#include "votedim/rational.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace votedim {

// Maximal-independent-set enumeration is refused above this node count.
inline constexpr int kEnumerationNodeLimit = 24;

// Nodes 1..t with a family of hyperedges, each of size >= 2.
//
// Edges are kept sorted and deduplicated. An edge that contains another edge
// adds no constraint to independence, so it is dropped and remembered in
// dropped_edges() rather than rejected.
class Hypergraph {
public:
    Hypergraph(int node_count, std::vector<NodeSet> edges);

    int node_count() const { return node_count_; }
    const std::vector<NodeSet>& edges() const { return edges_; }
    const std::vector<NodeSet>& dropped_edges() const { return dropped_; }
    NodeSet all_nodes() const { return NodeSet::full(node_count_); }

    NodeSet node_set(std::initializer_list<int> nodes) const
    {
        return NodeSet::from_indices(nodes, node_count_);
    }

    friend bool operator==(const Hypergraph& a, const Hypergraph& b)
    {
        return a.node_count_ == b.node_count_ && a.edges_ == b.edges_;
    }

private:
    int node_count_;
    std::vector<NodeSet> edges_;
    std::vector<NodeSet> dropped_;
};

// k parts jointly covering every node, none containing an edge.
struct CoverSolution {
    std::vector<NodeSet> parts;

    int size() const { return static_cast<int>(parts.size()); }
};

bool is_independent(const NodeSet& s, const Hypergraph& h);

// Both cover conditions: the parts cover nodes 1..t and are independent.
bool is_cover(const CoverSolution& cover, const Hypergraph& h);

// Inclusion-maximal independent sets in canonical order.
std::vector<NodeSet> enumerate_maximal_independent(const Hypergraph& h);

struct MinCoverResult {
    int k = 0;
    CoverSolution solution;
};

// Smallest number of candidates whose union is every node.
//
// Candidates must be independent. Exact branch and bound: branch on the
// lowest uncovered node over the candidates containing it, largest first,
// pruning when the remaining parts cannot reach the uncovered count.
// Throws InvalidArgument when the candidates do not jointly cover.
MinCoverResult min_cover(const Hypergraph& h, std::span<const NodeSet> candidates);

// Minimum cover with the maximal independent sets as candidates. Any part of a
// cover can be enlarged to a maximal independent set, so this is the true
// cover number.
MinCoverResult cover_number(const Hypergraph& h);

// Node weighting that bounds every maximal independent set by 1 while the
// total weight exceeds what `bound` parts could carry.
//
// excluded_part, when set, must be a maximal independent set E. If w(E) > 0
// the certificate only refutes covers whose (maximal) parts avoid E, and E is
// exempt from the bound-by-1 check. If w(E) == 0 the certificate only refutes
// covers that use E, and it then suffices that the total exceed bound - 1.
struct DualWeightCertificate {
    std::vector<Rational> weights;  // weights[i] belongs to node i + 1
    int bound = 0;
    std::optional<NodeSet> excluded_part;
};

enum class DualScope {
    AllCovers,
    CoversAvoidingExcluded,
    CoversUsingExcluded,
};

DualScope dual_scope(const DualWeightCertificate& cert);

Rational set_weight(std::span<const Rational> weights, const NodeSet& s);
Rational total_weight(std::span<const Rational> weights);

// Throws InvalidArgument for a negative weight or an excluded part that is
// not maximal independent, DimensionMismatch for a wrong weight count.
bool verify_dual_certificate(const DualWeightCertificate& cert, const Hypergraph& h);

struct KCoverRefutation {
    int k = 0;
    // Exhaustive search over all combinations of at most k maximal sets.
    bool exhaustive = false;
    std::uint64_t combinations_checked = 0;
    std::optional<CoverSolution> counterexample;
    std::vector<DualWeightCertificate> duals;
    // Supplied duals verify and their scopes jointly cover every case.
    bool duals_refute = false;

    bool refuted() const { return exhaustive && !counterexample; }
};

// True when the scopes of the verified certificates leave no cover unrefuted.
bool duals_refute_k_cover(std::span<const DualWeightCertificate> duals, const Hypergraph& h,
                          int k);

// Decides whether a k-cover exists by exhaustive enumeration. Supplied duals
// are checked too; duals that refute a cover the enumeration found raise
// ConstructionError.
KCoverRefutation no_k_cover(const Hypergraph& h, int k,
                            std::span<const DualWeightCertificate> duals = {});

}  // namespace votedim

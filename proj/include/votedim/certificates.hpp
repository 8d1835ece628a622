#pragma once

#include "votedim/cover.hpp"
#include "votedim/eu_council.hpp"
#include "votedim/game.hpp"

#include <vector>

namespace votedim {

// A set N of losing coalitions and a set W* of winning coalitions with
// |W*| >= |N| such that every member lies in exactly as many coalitions of
// W* as of N.
//
// For any weighted game (a, beta) containing the game, summing a over the
// coalitions of N equals summing it over W*, which is at least beta |W*|.
// Some L in N therefore has a(L) >= beta |W*| / |N| >= beta, so N cannot be
// made entirely losing: it is non-separable.
struct BalanceCertificate {
    std::vector<Coalition> losing_set;
    std::vector<Coalition> winning_set;
};

// Per-member membership counts over W* and N agree.
bool incidence_balanced(const BalanceCertificate& cert);

// Balance, |W*| >= |N|, every element of N losing and of W* winning in g.
// Throws InvalidArgument on an empty losing set, DimensionMismatch on
// coalitions of the wrong size.
bool verify_balance(const BalanceCertificate& cert, const SimpleGameExpr& g);

// Certificate for two losing coalitions that both meet the member rule and
// both fail the population rule.
//
// With I = Li & Lj and D = Li ^ Lj, pick A within D of size
// max(0, 25 - |I|) with the least population (ties: lexicographically least
// member list). Then W1 = A | I wins by the 25-member rule and
// W2 = (Li | Lj) - A is checked against the member and population rules.
// Later candidates for A, in increasing population order, are tried only if
// W2 fails. Throws ConstructionError when no choice works.
BalanceCertificate build_pair_certificate(const Coalition& li, const Coalition& lj,
                                          const eu::EuGame& g);

// Certificate for {Li, L15}: swap the two least populous members of
// Li - L15 with the most populous member of L15 - Li, in both directions.
// Population ties go to the lower member index.
BalanceCertificate build_anchor_certificate(const Coalition& li, const eu::EuGame& g);

// Hypergraph on L1..L15 whose edges are the certified non-separable sets,
// with certificates[i] witnessing graph.edges()[i].
struct CertifiedFamily {
    std::vector<Coalition> nodes;  // nodes[i] is node i + 1
    Hypergraph graph;
    std::vector<BalanceCertificate> certificates;
};

// Coalitions of an edge, in node order.
std::vector<Coalition> edge_coalitions(const CertifiedFamily& family, const NodeSet& edge);

// The listed pairs and triples (node numbers refer to L1..L15).
const std::vector<std::pair<int, int>>& listed_pair_edges();
const std::vector<std::vector<int>>& listed_triple_edges();

// Certificates for the triples: the winning triple W* paired with each
// losing triple, by W1..W12 numbering.
const std::vector<std::vector<int>>& listed_triple_witnesses();

// The listed pairs and triples as a hypergraph on 15 nodes, uncertified.
Hypergraph listed_family_hypergraph();

// Builds and verifies all 80 certificates; ConstructionError if any fails.
CertifiedFamily nonseparable_family(const eu::EuGame& g);

// Two weightings refuting a 7-cover of the family: one for covers avoiding
// {L1, L3, L6} and one, with weight 0 on that set, for covers using it.
std::vector<DualWeightCertificate> seven_cover_duals();

}  // namespace votedim

#pragma once

#include "votedim/certificates.hpp"
#include "votedim/game.hpp"

namespace votedim {

// Lower bound on the number of weighted games needed to express g.
//
// If g is the intersection of k weighted games, the coalitions of the family
// that lose in each of them form a k-cover of the family's non-separable
// sets. So g's dimension is at least the cover number of the family's
// hypergraph. Every edge is re-verified against g first; an edge without a
// matching, verifying certificate throws ConstructionError.
int lower_bound_dimension(const SimpleGameExpr& g, const CertifiedFamily& family);

}  // namespace votedim

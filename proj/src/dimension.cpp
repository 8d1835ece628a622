#include "votedim/dimension.hpp"

#include "votedim/error.hpp"

#include <algorithm>

namespace votedim {

int lower_bound_dimension(const SimpleGameExpr& g, const CertifiedFamily& family)
{
    const auto& edges = family.graph.edges();
    if (family.nodes.size() != static_cast<std::size_t>(family.graph.node_count()))
        throw InvalidArgument("family has " + std::to_string(family.nodes.size()) +
                              " node coalitions for " +
                              std::to_string(family.graph.node_count()) + " nodes");
    if (family.certificates.size() != edges.size())
        throw ConstructionError("uncertified edge: " + std::to_string(edges.size()) +
                                " edges but " + std::to_string(family.certificates.size()) +
                                " certificates");
    for (std::size_t i = 0; i < edges.size(); ++i) {
        auto expected = edge_coalitions(family, edges[i]);
        auto listed = family.certificates[i].losing_set;
        std::sort(expected.begin(), expected.end());
        std::sort(listed.begin(), listed.end());
        if (expected != listed || !verify_balance(family.certificates[i], g))
            throw ConstructionError("uncertified edge " + edges[i].to_string());
    }
    return cover_number(family.graph).k;
}

}  // namespace votedim

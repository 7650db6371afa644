#ifndef INTERDICT_FLOW_HPP
#define INTERDICT_FLOW_HPP

#include <map>
#include <vector>

#include "interdict/graph.hpp"

namespace interdict {

struct Flow {
    std::map<EdgeId, Weight> on_edge;
    Weight value = 0;
};

// Integral maximum flow (Edmonds-Karp) on a directed graph with
// capacities w. Throws TerminalMissing if s or t is not a vertex.
Flow max_flow(const WeightedGraph& g, VertexId s, VertexId t);

// alpha(G, s, t)
Weight max_flow_value(const WeightedGraph& g, VertexId s, VertexId t);

// Edges of a minimum s-t cut: the edges from the residual-reachable side
// to the rest, extracted from a maximum flow.
std::vector<EdgeId> min_cut_edges(const WeightedGraph& g, VertexId s, VertexId t);

}  // namespace interdict

#endif

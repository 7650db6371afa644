#ifndef INTERDICT_SHORTEST_PATH_HPP
#define INTERDICT_SHORTEST_PATH_HPP

#include <optional>
#include <vector>

#include "interdict/graph.hpp"

namespace interdict {

struct PathResult {
    std::vector<EdgeId> edges;
    Weight distance = 0;
};

// Dijkstra with nonnegative weights; directions respected on directed
// graphs. No path -> nullopt (rho = infinity as a value, not an error).
std::optional<PathResult> shortest_path(const WeightedGraph& g, VertexId u, VertexId v);

// rho(G, u, v), with kInfWeight for "no path".
Weight rho(const WeightedGraph& g, VertexId u, VertexId v);

}  // namespace interdict

#endif

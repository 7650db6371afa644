#ifndef INTERDICT_LAYERING_HPP
#define INTERDICT_LAYERING_HPP

#include <map>
#include <vector>

#include "interdict/graph.hpp"

namespace interdict {

// BFS layering. level[v] is the hop distance from the root set (edge
// directions ignored). level_edges[i] holds the edges joining level i to
// level i+1; intra_level_edges holds same-level edges, which never enter
// any E_i; residual_edges holds edges touching unreachable vertices.
struct Layering {
    std::vector<VertexId> roots;
    std::map<VertexId, int> level;  // unreachable vertices are absent
    std::vector<std::vector<EdgeId>> level_edges;  // E_0 .. E_{r-1}
    std::vector<EdgeId> intra_level_edges;
    std::vector<EdgeId> residual_edges;
    int num_labels = 0;  // distinct BFS levels, labels 0..r

    int r() const { return num_labels - 1; }
};

Layering bfs_layers(const WeightedGraph& g, VertexId root);

// One BFS root per connected component (the first vertex of each in input
// order), all at level 0. Leaves nothing in residual_edges.
Layering bfs_layers_all_components(const WeightedGraph& g);

}  // namespace interdict

#endif

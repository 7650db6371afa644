#ifndef INTERDICT_GRAPH_HPP
#define INTERDICT_GRAPH_HPP

#include <cstdint>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "interdict/errors.hpp"

namespace interdict {

using VertexId = int;
using EdgeId = int;
using Weight = long long;

// Sentinel for "no path" / "no perfect matching". Large enough that sums of
// real weights never reach it, small enough that a few additions don't wrap.
inline constexpr Weight kInfWeight = (1LL << 60);

struct Edge {
    EdgeId id = -1;
    VertexId tail = -1;
    VertexId head = -1;
    Weight w = 0;  // weight / capacity
    Weight c = 0;  // interdiction cost
};

// Vertex/edge ids are opaque integers. Parallel edges and self-loops are
// permitted; operations with stricter preconditions check them explicitly.
class WeightedGraph {
  public:
    bool directed = false;
    std::vector<VertexId> vertices;
    std::vector<Edge> edges;

    WeightedGraph() = default;
    WeightedGraph(bool directed_, std::vector<VertexId> vs, std::vector<Edge> es)
        : directed(directed_), vertices(std::move(vs)), edges(std::move(es)) {}

    std::size_t num_vertices() const { return vertices.size(); }
    std::size_t num_edges() const { return edges.size(); }

    bool has_vertex(VertexId v) const;
    const Edge& edge(EdgeId id) const;
    bool has_edge(EdgeId id) const;

    // Position of a vertex / edge in the vertices / edges array.
    int vertex_index(VertexId v) const;
    int edge_index(EdgeId id) const;

    VertexId add_vertex(VertexId v);
    EdgeId add_edge(VertexId tail, VertexId head, Weight w, Weight c);
    EdgeId add_edge_with_id(EdgeId id, VertexId tail, VertexId head, Weight w, Weight c);

    VertexId fresh_vertex_id() const;
    EdgeId fresh_edge_id() const;

    Weight total_weight() const;
    Weight total_cost() const;

    int degree(VertexId v) const;  // in + out for directed graphs
    int max_degree() const;

    // G \ I : delete the listed edges, keep all vertices.
    WeightedGraph without_edges(const std::vector<EdgeId>& removed) const;
    // G[F] : subgraph induced by an edge set. keep_all_vertices retains
    // isolated vertices (useful for flow instances where s/t must survive).
    WeightedGraph edge_subgraph(const std::vector<EdgeId>& keep, bool keep_all_vertices = false) const;

    // Checks id uniqueness, endpoint membership and nonnegative w/c.
    void validate() const;

    void invalidate_index() { index_built_ = false; }

  private:
    void build_index() const;
    mutable bool index_built_ = false;
    mutable std::unordered_map<VertexId, int> vpos_;
    mutable std::unordered_map<EdgeId, int> epos_;
};

struct StructureReport {
    // planar is tri-state: unknown without an embedding
    enum class Tri { kYes, kNo, kUnknown };
    Tri planar = Tri::kUnknown;
    bool bipartite = false;
    bool connected = false;
    int max_degree = 0;
    // 2-coloring when bipartite (vertex -> 0/1)
    std::unordered_map<VertexId, int> coloring;
};

class PlanarEmbedding;  // embedding.hpp

// Bipartiteness via 2-coloring, connectivity via BFS (edge directions
// ignored), planarity via the Euler check on a supplied embedding.
StructureReport check_structure(const WeightedGraph& g, const PlanarEmbedding* emb = nullptr);

// V(L_d(H)) = E(H); arc (e1, e2) iff head(e1) = tail(e2).
// Line-graph vertex ids are the input edge ids. Arc weights/costs are zero.
WeightedGraph directed_line_graph(const WeightedGraph& g);

}  // namespace interdict

#endif

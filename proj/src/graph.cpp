#include "interdict/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>

#include "interdict/embedding.hpp"

namespace interdict {

void WeightedGraph::build_index() const {
    if (index_built_) return;
    vpos_.clear();
    epos_.clear();
    for (int i = 0; i < static_cast<int>(vertices.size()); ++i) vpos_[vertices[i]] = i;
    for (int i = 0; i < static_cast<int>(edges.size()); ++i) epos_[edges[i].id] = i;
    index_built_ = true;
}

bool WeightedGraph::has_vertex(VertexId v) const {
    build_index();
    return vpos_.count(v) > 0;
}

bool WeightedGraph::has_edge(EdgeId id) const {
    build_index();
    return epos_.count(id) > 0;
}

const Edge& WeightedGraph::edge(EdgeId id) const {
    build_index();
    auto it = epos_.find(id);
    if (it == epos_.end()) throw Error("unknown edge id " + std::to_string(id));
    return edges[it->second];
}

int WeightedGraph::vertex_index(VertexId v) const {
    build_index();
    auto it = vpos_.find(v);
    if (it == vpos_.end()) throw Error("unknown vertex id " + std::to_string(v));
    return it->second;
}

int WeightedGraph::edge_index(EdgeId id) const {
    build_index();
    auto it = epos_.find(id);
    if (it == epos_.end()) throw Error("unknown edge id " + std::to_string(id));
    return it->second;
}

VertexId WeightedGraph::add_vertex(VertexId v) {
    vertices.push_back(v);
    invalidate_index();
    return v;
}

EdgeId WeightedGraph::add_edge(VertexId tail, VertexId head, Weight w, Weight c) {
    return add_edge_with_id(fresh_edge_id(), tail, head, w, c);
}

EdgeId WeightedGraph::add_edge_with_id(EdgeId id, VertexId tail, VertexId head, Weight w, Weight c) {
    edges.push_back(Edge{id, tail, head, w, c});
    invalidate_index();
    return id;
}

VertexId WeightedGraph::fresh_vertex_id() const {
    VertexId m = 0;
    for (VertexId v : vertices) m = std::max(m, v + 1);
    return m;
}

EdgeId WeightedGraph::fresh_edge_id() const {
    EdgeId m = 0;
    for (const Edge& e : edges) m = std::max(m, e.id + 1);
    return m;
}

Weight WeightedGraph::total_weight() const {
    Weight s = 0;
    for (const Edge& e : edges) s += e.w;
    return s;
}

Weight WeightedGraph::total_cost() const {
    Weight s = 0;
    for (const Edge& e : edges) s += e.c;
    return s;
}

int WeightedGraph::degree(VertexId v) const {
    int d = 0;
    for (const Edge& e : edges) {
        if (e.tail == v) ++d;
        if (e.head == v) ++d;
    }
    return d;
}

int WeightedGraph::max_degree() const {
    int best = 0;
    for (VertexId v : vertices) best = std::max(best, degree(v));
    return best;
}

WeightedGraph WeightedGraph::without_edges(const std::vector<EdgeId>& removed) const {
    std::set<EdgeId> gone(removed.begin(), removed.end());
    WeightedGraph out;
    out.directed = directed;
    out.vertices = vertices;
    for (const Edge& e : edges)
        if (!gone.count(e.id)) out.edges.push_back(e);
    return out;
}

WeightedGraph WeightedGraph::edge_subgraph(const std::vector<EdgeId>& keep, bool keep_all_vertices) const {
    std::set<EdgeId> in(keep.begin(), keep.end());
    WeightedGraph out;
    out.directed = directed;
    std::set<VertexId> used;
    for (const Edge& e : edges) {
        if (in.count(e.id)) {
            out.edges.push_back(e);
            used.insert(e.tail);
            used.insert(e.head);
        }
    }
    if (keep_all_vertices) {
        out.vertices = vertices;
    } else {
        for (VertexId v : vertices)
            if (used.count(v)) out.vertices.push_back(v);
    }
    return out;
}

void WeightedGraph::validate() const {
    std::set<VertexId> vs(vertices.begin(), vertices.end());
    if (vs.size() != vertices.size()) throw Error("duplicate vertex ids");
    std::set<EdgeId> es;
    for (const Edge& e : edges) {
        if (!es.insert(e.id).second) throw Error("duplicate edge id " + std::to_string(e.id));
        if (!vs.count(e.tail) || !vs.count(e.head))
            throw Error("edge " + std::to_string(e.id) + " has undeclared endpoint");
        if (e.w < 0 || e.c < 0) throw Error("negative weight or cost on edge " + std::to_string(e.id));
    }
}

StructureReport check_structure(const WeightedGraph& g, const PlanarEmbedding* emb) {
    StructureReport rep;
    rep.max_degree = g.max_degree();

    // adjacency ignoring direction
    std::unordered_map<VertexId, std::vector<VertexId>> adj;
    for (VertexId v : g.vertices) adj[v];
    bool self_loop = false;
    for (const Edge& e : g.edges) {
        if (e.tail == e.head) self_loop = true;
        adj[e.tail].push_back(e.head);
        adj[e.head].push_back(e.tail);
    }

    rep.bipartite = !self_loop;
    int components = 0;
    for (VertexId root : g.vertices) {
        if (rep.coloring.count(root)) continue;
        ++components;
        rep.coloring[root] = 0;
        std::queue<VertexId> q;
        q.push(root);
        while (!q.empty()) {
            VertexId v = q.front();
            q.pop();
            for (VertexId u : adj[v]) {
                auto it = rep.coloring.find(u);
                if (it == rep.coloring.end()) {
                    rep.coloring[u] = 1 - rep.coloring[v];
                    q.push(u);
                } else if (it->second == rep.coloring[v]) {
                    rep.bipartite = false;
                }
            }
        }
    }
    rep.connected = components <= 1;
    if (!rep.bipartite) rep.coloring.clear();

    if (emb != nullptr) {
        rep.planar = emb->euler_holds() ? StructureReport::Tri::kYes : StructureReport::Tri::kNo;
    }
    return rep;
}

WeightedGraph directed_line_graph(const WeightedGraph& g) {
    if (!g.directed) throw UndirectedInput("directed_line_graph requires a directed graph");
    WeightedGraph out;
    out.directed = true;
    for (const Edge& e : g.edges) out.vertices.push_back(e.id);
    EdgeId next = 0;
    for (const Edge& e1 : g.edges)
        for (const Edge& e2 : g.edges)
            if (e1.head == e2.tail) out.add_edge_with_id(next++, e1.id, e2.id, 0, 0);
    return out;
}

}  // namespace interdict

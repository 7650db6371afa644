#include "interdict/layering.hpp"

#include <algorithm>
#include <queue>

namespace interdict {

namespace {

Layering layers_from_roots(const WeightedGraph& g, const std::vector<VertexId>& roots) {
    Layering lay;
    lay.roots = roots;
    std::map<VertexId, std::vector<VertexId>> adj;
    for (const Edge& e : g.edges) {
        adj[e.tail].push_back(e.head);
        adj[e.head].push_back(e.tail);
    }
    std::queue<VertexId> q;
    for (VertexId r : roots) {
        if (!g.has_vertex(r)) throw Error("bfs root is not a vertex");
        if (!lay.level.count(r)) {
            lay.level[r] = 0;
            q.push(r);
        }
    }
    int max_level = 0;
    while (!q.empty()) {
        VertexId v = q.front();
        q.pop();
        for (VertexId u : adj[v]) {
            if (!lay.level.count(u)) {
                lay.level[u] = lay.level[v] + 1;
                max_level = std::max(max_level, lay.level[u]);
                q.push(u);
            }
        }
    }
    lay.num_labels = lay.level.empty() ? 0 : max_level + 1;
    lay.level_edges.assign(std::max(0, lay.num_labels - 1), {});
    for (const Edge& e : g.edges) {
        auto it = lay.level.find(e.tail);
        auto jt = lay.level.find(e.head);
        if (it == lay.level.end() || jt == lay.level.end()) {
            lay.residual_edges.push_back(e.id);
            continue;
        }
        int a = it->second, b = jt->second;
        if (a == b) {
            lay.intra_level_edges.push_back(e.id);
        } else {
            lay.level_edges[std::min(a, b)].push_back(e.id);
        }
    }
    return lay;
}

}  // namespace

Layering bfs_layers(const WeightedGraph& g, VertexId root) {
    return layers_from_roots(g, {root});
}

Layering bfs_layers_all_components(const WeightedGraph& g) {
    // One root per component, in vertex input order.
    std::map<VertexId, std::vector<VertexId>> adj;
    for (const Edge& e : g.edges) {
        adj[e.tail].push_back(e.head);
        adj[e.head].push_back(e.tail);
    }
    std::set<VertexId> seen;
    std::vector<VertexId> roots;
    for (VertexId v : g.vertices) {
        if (seen.count(v)) continue;
        roots.push_back(v);
        std::queue<VertexId> q;
        seen.insert(v);
        q.push(v);
        while (!q.empty()) {
            VertexId x = q.front();
            q.pop();
            for (VertexId u : adj[x])
                if (seen.insert(u).second) q.push(u);
        }
    }
    return layers_from_roots(g, roots);
}

}  // namespace interdict

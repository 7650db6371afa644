#include "interdict/shortest_path.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

namespace interdict {

std::optional<PathResult> shortest_path(const WeightedGraph& g, VertexId u, VertexId v) {
    if (!g.has_vertex(u) || !g.has_vertex(v)) throw TerminalMissing("path endpoint not in graph");
    std::map<VertexId, std::vector<std::pair<VertexId, EdgeId>>> adj;
    for (const Edge& e : g.edges) {
        if (e.w < 0) throw Error("negative weight");
        adj[e.tail].push_back({e.head, e.id});
        if (!g.directed) adj[e.head].push_back({e.tail, e.id});
    }
    std::map<VertexId, Weight> dist;
    std::map<VertexId, EdgeId> via;
    std::map<VertexId, VertexId> pred;
    using Item = std::pair<Weight, VertexId>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    dist[u] = 0;
    pq.push({0, u});
    std::set<VertexId> done;
    while (!pq.empty()) {
        auto [d, x] = pq.top();
        pq.pop();
        if (done.count(x)) continue;
        done.insert(x);
        if (x == v) break;
        for (const auto& [y, eid] : adj[x]) {
            if (done.count(y)) continue;  // never rewire settled vertices
            Weight nd = d + g.edge(eid).w;
            auto it = dist.find(y);
            if (it == dist.end() || nd < it->second ||
                (nd == it->second && eid < via[y])) {
                // tie-break on edge id for deterministic witnesses
                if (it == dist.end() || nd < it->second) pq.push({nd, y});
                dist[y] = nd;
                via[y] = eid;
                pred[y] = x;
            }
        }
    }
    if (!dist.count(v)) return std::nullopt;
    PathResult res;
    res.distance = dist[v];
    for (VertexId x = v; x != u; x = pred[x]) res.edges.push_back(via[x]);
    std::reverse(res.edges.begin(), res.edges.end());
    return res;
}

Weight rho(const WeightedGraph& g, VertexId u, VertexId v) {
    auto p = shortest_path(g, u, v);
    return p ? p->distance : kInfWeight;
}

}  // namespace interdict

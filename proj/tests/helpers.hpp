// Shared test utilities: small instance builders, brute-force reference
// solvers, and subset enumeration. Everything here is deliberately naive;
// the point is independence from the library's own algorithms.
#ifndef TESTS_HELPERS_HPP
#define TESTS_HELPERS_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "interdict/embedding.hpp"
#include "interdict/graph.hpp"

namespace testutil {

using namespace interdict;

inline WeightedGraph path_graph(const std::vector<Weight>& w, const std::vector<Weight>& c) {
    WeightedGraph g;
    for (std::size_t i = 0; i <= w.size(); ++i) g.add_vertex(static_cast<VertexId>(i + 1));
    for (std::size_t i = 0; i < w.size(); ++i)
        g.add_edge(static_cast<VertexId>(i + 1), static_cast<VertexId>(i + 2), w[i], c[i]);
    return g;
}

// hand-checkable running example: 1 -5|1- 2 -3|1- 3
inline WeightedGraph two_edge_path() { return path_graph({5, 3}, {1, 1}); }

// 4-vertex reference source: edges 01, 02, 12, 23 (independent set {0, 3})
inline WeightedGraph reference_source() {
    WeightedGraph g;
    for (int v = 0; v < 4; ++v) g.add_vertex(v);
    g.add_edge(0, 1, 0, 0);
    g.add_edge(0, 2, 0, 0);
    g.add_edge(1, 2, 0, 0);
    g.add_edge(2, 3, 0, 0);
    return g;
}

inline WeightedGraph complete_graph(int n) {
    WeightedGraph g;
    for (int v = 0; v < n; ++v) g.add_vertex(v);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) g.add_edge(a, b, 0, 0);
    return g;
}

inline WeightedGraph grid_graph(int rows, int cols, Weight w = 1, Weight c = 1) {
    WeightedGraph g;
    for (int i = 0; i < rows * cols; ++i) g.add_vertex(i);
    for (int r = 0; r < rows; ++r)
        for (int cc = 0; cc < cols; ++cc) {
            if (cc + 1 < cols) g.add_edge(r * cols + cc, r * cols + cc + 1, w, c);
            if (r + 1 < rows) g.add_edge(r * cols + cc, (r + 1) * cols + cc, w, c);
        }
    return g;
}

// embedded grid via integer coordinates (outer face is the unbounded one)
inline RotationSystem grid_rotation(const WeightedGraph& g, int cols) {
    std::map<DartId, std::pair<long long, long long>> dir;
    auto xy = [&](VertexId v) { return std::pair<long long, long long>{v % cols, v / cols}; };
    for (const Edge& e : g.edges) {
        auto [tx, ty] = xy(e.tail);
        auto [hx, hy] = xy(e.head);
        dir[dart_fwd(e.id)] = {hx - tx, hy - ty};
        dir[dart_rev_of_edge(e.id)] = {tx - hx, ty - hy};
    }
    return rotation_from_directions(g, dir);
}

inline WeightedGraph random_graph(std::mt19937& rng, int max_n, int max_m, Weight max_w,
                                  Weight max_c, bool simple = true) {
    std::uniform_int_distribution<int> nd(1, max_n);
    int n = nd(rng);
    WeightedGraph g;
    for (int v = 0; v < n; ++v) g.add_vertex(v);
    std::uniform_int_distribution<int> md(0, max_m), vd(0, n - 1);
    std::uniform_int_distribution<long long> wd(0, max_w), cd(0, max_c);
    int m = md(rng);
    std::set<std::pair<int, int>> seen;
    for (int i = 0; i < m; ++i) {
        int a = vd(rng), b = vd(rng);
        if (a == b) continue;
        if (a > b) std::swap(a, b);
        if (simple && !seen.insert({a, b}).second) continue;
        g.add_edge(a, b, wd(rng), cd(rng));
    }
    return g;
}

// connected random grid subgraph: spanning tree plus extras
inline WeightedGraph random_planar(std::mt19937& rng, int rows, int cols, Weight max_w,
                                   Weight max_c) {
    WeightedGraph g;
    int n = rows * cols;
    for (int i = 0; i < n; ++i) g.add_vertex(i);
    std::vector<std::pair<int, int>> es;
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            if (c + 1 < cols) es.push_back({r * cols + c, r * cols + c + 1});
            if (r + 1 < rows) es.push_back({r * cols + c, (r + 1) * cols + c});
        }
    std::shuffle(es.begin(), es.end(), rng);
    std::vector<int> parent(n);
    for (int i = 0; i < n; ++i) parent[i] = i;
    std::function<int(int)> find = [&](int x) {
        return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    std::uniform_int_distribution<long long> wd(0, max_w), cd(0, max_c);
    std::uniform_int_distribution<int> keep(0, 99);
    for (auto [a, b] : es) {
        bool tree = find(a) != find(b);
        if (tree) parent[find(a)] = find(b);
        if (tree || keep(rng) < 35) g.add_edge(a, b, wd(rng), cd(rng));
    }
    return g;
}

// brute-force maximum/minimum matchings by subset enumeration (<= ~14 edges)
inline std::optional<Weight> brute_matching(const WeightedGraph& g, bool perfect, bool minimize) {
    int m = static_cast<int>(g.edges.size());
    std::optional<Weight> best;
    for (int mask = 0; mask < (1 << m); ++mask) {
        std::map<VertexId, int> used;
        Weight w = 0;
        bool ok = true;
        int cnt = 0;
        for (int i = 0; i < m && ok; ++i)
            if (mask >> i & 1) {
                const Edge& e = g.edges[i];
                if (e.tail == e.head || used[e.tail]++ || used[e.head]++) ok = false;
                w += e.w;
                ++cnt;
            }
        if (!ok) continue;
        if (perfect && 2 * cnt != static_cast<int>(g.vertices.size())) continue;
        if (!best || (minimize ? w < *best : w > *best)) best = w;
    }
    if (!perfect && !best) best = 0;
    return best;
}

// every subset of the cost-positive edges whose total cost fits the budget,
// crossed with every subset of the cost-free edges
inline void for_each_affordable(const WeightedGraph& g, Weight budget,
                                const std::function<void(const std::vector<EdgeId>&)>& fn,
                                long long cap = 2'000'000) {
    std::vector<EdgeId> ids;
    for (const Edge& e : g.edges)
        if (e.c <= budget) ids.push_back(e.id);
    std::vector<EdgeId> cur;
    long long seen = 0;
    std::function<void(std::size_t, Weight)> rec = [&](std::size_t i, Weight spent) {
        if (seen >= cap) return;
        if (i == ids.size()) {
            ++seen;
            fn(cur);
            return;
        }
        rec(i + 1, spent);
        Weight c = g.edge(ids[i]).c;
        if (spent + c <= budget) {
            cur.push_back(ids[i]);
            rec(i + 1, spent + c);
            cur.pop_back();
        }
    };
    rec(0, 0);
}

// exhaustive enumeration of integral flows on a DAG; calls fn with the flow
// vector (indexed like g.edges) and its value at the sink
inline bool for_each_flow(const WeightedGraph& g, VertexId s, VertexId t,
                          const std::function<void(const std::vector<Weight>&, Weight)>& fn,
                          long long cap = 5'000'000) {
    // topological order of vertices (edges must form a DAG)
    std::map<VertexId, int> indeg;
    std::map<VertexId, std::vector<int>> out_edges;
    for (VertexId v : g.vertices) indeg[v] = 0;
    for (int i = 0; i < static_cast<int>(g.edges.size()); ++i) {
        indeg[g.edges[i].head]++;
        out_edges[g.edges[i].tail].push_back(i);
    }
    std::vector<VertexId> topo;
    std::vector<VertexId> q;
    for (auto& [v, d] : indeg)
        if (d == 0) q.push_back(v);
    while (!q.empty()) {
        VertexId v = q.back();
        q.pop_back();
        topo.push_back(v);
        for (int i : out_edges[v])
            if (--indeg[g.edges[i].head] == 0) q.push_back(g.edges[i].head);
    }
    if (topo.size() != g.vertices.size()) return false;  // not a DAG

    std::vector<Weight> flow(g.edges.size(), 0);
    std::map<VertexId, Weight> balance;  // inflow accumulated so far
    long long steps = 0;
    bool truncated = false;

    // distribute `need` units across the out-edges of topo[vi], then recurse
    std::function<void(std::size_t)> vertex_rec = [&](std::size_t vi) {
        if (truncated || ++steps > cap) {
            truncated = true;
            return;
        }
        if (vi == topo.size()) {
            fn(flow, balance[t]);
            return;
        }
        VertexId v = topo[vi];
        const std::vector<int>& outs = out_edges[v];
        Weight need = (v == s) ? -1 : balance[v];  // -1: source, free amount
        std::function<void(std::size_t, Weight)> edge_rec = [&](std::size_t ei, Weight left) {
            if (truncated) return;
            if (ei == outs.size()) {
                if (left == 0 || need < 0) vertex_rec(vi + 1);
                return;
            }
            const Edge& e = g.edges[outs[ei]];
            Weight hi = (need < 0) ? e.w : std::min(e.w, left);
            for (Weight f = 0; f <= hi; ++f) {
                flow[outs[ei]] = f;
                balance[e.head] += f;
                edge_rec(ei + 1, need < 0 ? left : left - f);
                balance[e.head] -= f;
                flow[outs[ei]] = 0;
            }
        };
        if (v == t)
            vertex_rec(vi + 1);  // sink absorbs
        else
            edge_rec(0, need);
    };
    vertex_rec(0);
    return !truncated;
}

}  // namespace testutil

#endif

#include "interdict/flow.hpp"

#include <algorithm>
#include <queue>

namespace interdict {

namespace {

struct Arc {
    int to;
    Weight cap;
    int rev;       // index of the reverse arc in net[to]
    EdgeId edge;   // original edge id, -1 for residual-only arcs
};

struct Network {
    std::vector<std::vector<Arc>> net;
    std::map<VertexId, int> idx;

    explicit Network(const WeightedGraph& g) {
        int n = 0;
        for (VertexId v : g.vertices) idx[v] = n++;
        net.assign(n, {});
        for (const Edge& e : g.edges) {
            int a = idx[e.tail], b = idx[e.head];
            net[a].push_back({b, e.w, static_cast<int>(net[b].size()), e.id});
            net[b].push_back({a, 0, static_cast<int>(net[a].size()) - 1, -1});
        }
    }

    Weight augment_all(int s, int t) {
        Weight total = 0;
        while (true) {
            // BFS for a shortest augmenting path
            std::vector<int> prev_v(net.size(), -1), prev_a(net.size(), -1);
            std::queue<int> q;
            q.push(s);
            prev_v[s] = s;
            while (!q.empty() && prev_v[t] == -1) {
                int v = q.front();
                q.pop();
                for (int i = 0; i < static_cast<int>(net[v].size()); ++i) {
                    const Arc& a = net[v][i];
                    if (a.cap > 0 && prev_v[a.to] == -1) {
                        prev_v[a.to] = v;
                        prev_a[a.to] = i;
                        q.push(a.to);
                    }
                }
            }
            if (prev_v[t] == -1) break;
            Weight push = kInfWeight;
            for (int v = t; v != s; v = prev_v[v]) push = std::min(push, net[prev_v[v]][prev_a[v]].cap);
            for (int v = t; v != s; v = prev_v[v]) {
                Arc& a = net[prev_v[v]][prev_a[v]];
                a.cap -= push;
                net[a.to][a.rev].cap += push;
            }
            total += push;
        }
        return total;
    }
};

}  // namespace

Flow max_flow(const WeightedGraph& g, VertexId s, VertexId t) {
    if (!g.has_vertex(s) || !g.has_vertex(t)) throw TerminalMissing("flow terminal not in graph");
    Network nw(g);
    Flow f;
    f.value = nw.augment_all(nw.idx[s], nw.idx[t]);
    for (const Edge& e : g.edges) f.on_edge[e.id] = 0;
    for (const auto& arcs : nw.net)
        for (const Arc& a : arcs)
            if (a.edge >= 0) {
                const Edge& e = g.edge(a.edge);
                f.on_edge[a.edge] += e.w - a.cap;
            }
    // parallel edges each tracked separately; e.w - a.cap is that arc's flow
    return f;
}

Weight max_flow_value(const WeightedGraph& g, VertexId s, VertexId t) {
    if (!g.has_vertex(s) || !g.has_vertex(t)) throw TerminalMissing("flow terminal not in graph");
    Network nw(g);
    return nw.augment_all(nw.idx[s], nw.idx[t]);
}

std::vector<EdgeId> min_cut_edges(const WeightedGraph& g, VertexId s, VertexId t) {
    if (!g.has_vertex(s) || !g.has_vertex(t)) throw TerminalMissing("flow terminal not in graph");
    Network nw(g);
    nw.augment_all(nw.idx[s], nw.idx[t]);
    std::vector<char> reach(nw.net.size(), false);
    std::queue<int> q;
    q.push(nw.idx[s]);
    reach[nw.idx[s]] = true;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (const Arc& a : nw.net[v])
            if (a.cap > 0 && !reach[a.to]) {
                reach[a.to] = true;
                q.push(a.to);
            }
    }
    std::vector<EdgeId> cut;
    for (const Edge& e : g.edges)
        if (reach[nw.idx[e.tail]] && !reach[nw.idx[e.head]]) cut.push_back(e.id);
    std::sort(cut.begin(), cut.end());
    return cut;
}

}  // namespace interdict

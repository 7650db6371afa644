#include "interdict/oracle.hpp"

#include <algorithm>
#include <set>

#include "interdict/flow.hpp"
#include "interdict/matching.hpp"
#include "interdict/shortest_path.hpp"

namespace interdict {

namespace {

struct Enumerator {
    const InterdictionInstance& inst;
    std::vector<EdgeId> ground;  // cost-positive, affordable, sorted by id
    std::vector<EdgeId> free_edges;
    bool maximize = false;

    bool have_best = false;
    Weight best_obj = 0;
    std::vector<EdgeId> best_subset;
    std::vector<EdgeId> current;

    Weight evaluate(const std::vector<EdgeId>& subset) const {
        const WeightedGraph& g = inst.graph;
        switch (inst.kind) {
            case ProblemKind::kMMEIP: {
                std::vector<EdgeId> gone = subset;
                gone.insert(gone.end(), free_edges.begin(), free_edges.end());
                return nu(g.without_edges(gone));
            }
            case ProblemKind::kDSPEIP: {
                std::vector<EdgeId> gone = subset;
                gone.insert(gone.end(), free_edges.begin(), free_edges.end());
                return rho(g.without_edges(gone), inst.s, inst.t);
            }
            case ProblemKind::kMPMEIP: {
                std::vector<EdgeId> gone = subset;
                gone.insert(gone.end(), free_edges.begin(), free_edges.end());
                auto val = mu(g.without_edges(gone));
                if (!val)
                    throw Error("MPMEIP assumption violated: a feasible deletion leaves no perfect matching");
                return *val;
            }
            case ProblemKind::kBCFIP: {
                std::vector<EdgeId> kept = subset;
                kept.insert(kept.end(), free_edges.begin(), free_edges.end());
                return max_flow_value(g.edge_subgraph(kept, /*keep_all_vertices=*/true), inst.s, inst.t);
            }
        }
        return 0;
    }

    void consider() {
        Weight obj = evaluate(current);
        bool better = !have_best || (maximize ? obj > best_obj : obj < best_obj);
        if (better) {
            have_best = true;
            best_obj = obj;
            best_subset = current;
        }
    }

    // Include-first DFS in id order visits subsets in lexicographic order
    // of their sorted id sequences, so the first optimum found is the
    // lexicographically smallest one.
    void rec(std::size_t i, Weight budget_left) {
        for (std::size_t j = i; j < ground.size(); ++j) {
            Weight c = inst.graph.edge(ground[j]).c;
            if (c > budget_left) continue;
            current.push_back(ground[j]);
            consider();
            rec(j + 1, budget_left - c);
            current.pop_back();
        }
    }
};

}  // namespace

InterdictionResult oracle_interdict(const InterdictionInstance& inst, const OracleOptions& opt) {
    inst.graph.validate();
    Enumerator en{inst, {}, {}, false, false, 0, {}, {}};
    en.maximize = (inst.kind != ProblemKind::kMMEIP);
    for (const Edge& e : inst.graph.edges) {
        if (e.c == 0)
            en.free_edges.push_back(e.id);
        else if (e.c <= inst.budget)
            en.ground.push_back(e.id);
    }
    std::sort(en.ground.begin(), en.ground.end());
    std::sort(en.free_edges.begin(), en.free_edges.end());
    if (static_cast<int>(en.ground.size()) > opt.max_ground_edges)
        throw TooLargeForOracle("interdiction oracle ground set exceeds guard");

    en.consider();  // empty subset first
    en.rec(0, inst.budget);

    InterdictionResult res;
    res.objective = en.best_obj;
    res.chosen = en.best_subset;
    res.chosen.insert(res.chosen.end(), en.free_edges.begin(), en.free_edges.end());
    std::sort(res.chosen.begin(), res.chosen.end());
    for (EdgeId e : en.best_subset) res.spent += inst.graph.edge(e).c;
    return res;
}

namespace {

struct IsSolver {
    std::vector<std::vector<int>> adj;
    std::vector<char> blocked;
    std::vector<int> current, best;

    void rec(int v) {
        int n = static_cast<int>(adj.size());
        while (v < n && blocked[v]) ++v;
        if (v == n) {
            if (current.size() > best.size()) best = current;
            return;
        }
        int free_left = 0;
        for (int x = v; x < n; ++x)
            if (!blocked[x]) ++free_left;
        if (current.size() + free_left <= best.size()) return;
        // include v
        std::vector<int> newly;
        blocked[v] = true;
        for (int u : adj[v])
            if (u > v && !blocked[u]) {
                blocked[u] = true;
                newly.push_back(u);
            }
        current.push_back(v);
        rec(v + 1);
        current.pop_back();
        for (int u : newly) blocked[u] = false;
        // exclude v
        rec(v + 1);
        blocked[v] = false;
    }
};

}  // namespace

std::vector<VertexId> max_independent_set(const WeightedGraph& g, int max_vertices) {
    if (static_cast<int>(g.vertices.size()) > max_vertices)
        throw TooLargeForOracle("independent-set oracle vertex count exceeds guard");
    int n = static_cast<int>(g.vertices.size());
    IsSolver s;
    s.adj.assign(n, {});
    s.blocked.assign(n, false);
    for (const Edge& e : g.edges) {
        if (e.tail == e.head) {
            // a self-loop vertex can never be independent
            s.blocked[g.vertex_index(e.tail)] = true;
            continue;
        }
        int a = g.vertex_index(e.tail), b = g.vertex_index(e.head);
        s.adj[a].push_back(b);
        s.adj[b].push_back(a);
    }
    s.rec(0);
    std::vector<VertexId> out;
    for (int i : s.best) out.push_back(g.vertices[i]);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace interdict

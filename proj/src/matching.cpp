#include "interdict/matching.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

namespace interdict {

namespace {

constexpr Weight kBig = kInfWeight / 16;  // safe against a few additions

// Hungarian algorithm for the square min-cost assignment problem.
// Returns column -> row assignment.
std::vector<int> hungarian(const std::vector<std::vector<Weight>>& a) {
    int n = static_cast<int>(a.size());
    std::vector<Weight> u(n + 1, 0), v(n + 1, 0), minv(n + 1);
    std::vector<int> p(n + 1, 0), way(n + 1, 0);
    for (int i = 1; i <= n; ++i) {
        p[0] = i;
        int j0 = 0;
        std::fill(minv.begin(), minv.end(), kInfWeight);
        std::vector<char> used(n + 1, false);
        do {
            used[j0] = true;
            int i0 = p[j0], j1 = -1;
            Weight delta = kInfWeight;
            for (int j = 1; j <= n; ++j) {
                if (used[j]) continue;
                Weight cur = a[i0 - 1][j - 1] - u[i0] - v[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (int j = 0; j <= n; ++j) {
                if (used[j]) {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (p[j0] != 0);
        do {
            int j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
        } while (j0 != 0);
    }
    std::vector<int> col_to_row(n);
    for (int j = 1; j <= n; ++j) col_to_row[j - 1] = p[j] - 1;
    return col_to_row;
}

struct BipartiteView {
    std::vector<VertexId> left, right;
    // best edge per (l, r) pair under the mode's preference
    std::map<std::pair<int, int>, std::pair<Weight, EdgeId>> best;
};

std::optional<Matching> solve_bipartite(const WeightedGraph& g,
                                        const std::unordered_map<VertexId, int>& color,
                                        MatchingMode mode) {
    BipartiteView bv;
    for (VertexId v : g.vertices) (color.at(v) == 0 ? bv.left : bv.right).push_back(v);
    std::map<VertexId, int> lpos, rpos;
    for (int i = 0; i < static_cast<int>(bv.left.size()); ++i) lpos[bv.left[i]] = i;
    for (int i = 0; i < static_cast<int>(bv.right.size()); ++i) rpos[bv.right[i]] = i;

    bool minimize = (mode == MatchingMode::kMinWeightPerfect);
    for (const Edge& e : g.edges) {
        if (e.tail == e.head) continue;
        int l, r;
        if (color.at(e.tail) == 0) {
            l = lpos[e.tail];
            r = rpos[e.head];
        } else {
            l = lpos[e.head];
            r = rpos[e.tail];
        }
        auto key = std::make_pair(l, r);
        auto it = bv.best.find(key);
        bool better = (it == bv.best.end()) ||
                      (minimize ? e.w < it->second.first : e.w > it->second.first) ||
                      (e.w == it->second.first && e.id < it->second.second);
        if (better) bv.best[key] = {e.w, e.id};
    }

    bool perfect = (mode != MatchingMode::kMaxWeight);
    if (perfect && bv.left.size() != bv.right.size()) return std::nullopt;

    int n = static_cast<int>(std::max(bv.left.size(), bv.right.size()));
    if (n == 0) return Matching{};
    // cost matrix: rows = left, cols = right, padded square
    std::vector<std::vector<Weight>> a(n, std::vector<Weight>(n, perfect ? kBig : 0));
    for (const auto& [key, we] : bv.best) {
        Weight w = we.first;
        Weight cost;
        if (mode == MatchingMode::kMinWeightPerfect) {
            cost = w;
        } else {
            cost = -w;  // maximize
        }
        a[key.first][key.second] = cost;
    }
    std::vector<int> col_to_row = hungarian(a);

    Matching m;
    for (int j = 0; j < n; ++j) {
        int i = col_to_row[j];
        if (i >= static_cast<int>(bv.left.size()) || j >= static_cast<int>(bv.right.size())) continue;
        auto it = bv.best.find({i, j});
        if (it == bv.best.end()) {
            if (perfect) return std::nullopt;  // padded cell used: vertex unmatched
            continue;
        }
        if (a[i][j] >= kBig) return std::nullopt;
        m.edges.push_back(it->second.second);
        m.weight += it->second.first;
    }
    std::sort(m.edges.begin(), m.edges.end());
    return m;
}

// Branch and bound for general graphs; only ever used on small inputs.
struct GeneralSolver {
    const WeightedGraph& g;
    MatchingMode mode;
    std::vector<std::vector<std::pair<int, int>>> adj;  // vertex idx -> (other idx, edge idx)
    std::vector<char> matched;
    std::vector<Weight> max_incident;  // static upper-bound helper
    Weight best_value = 0;
    bool found = false;
    std::vector<int> best_edges, cur_edges;
    Weight cur_value = 0;

    explicit GeneralSolver(const WeightedGraph& graph, MatchingMode m) : g(graph), mode(m) {
        int n = static_cast<int>(g.vertices.size());
        adj.assign(n, {});
        matched.assign(n, false);
        max_incident.assign(n, 0);
        for (int k = 0; k < static_cast<int>(g.edges.size()); ++k) {
            const Edge& e = g.edges[k];
            if (e.tail == e.head) continue;
            int a = g.vertex_index(e.tail), b = g.vertex_index(e.head);
            adj[a].push_back({b, k});
            adj[b].push_back({a, k});
            max_incident[a] = std::max(max_incident[a], e.w);
            max_incident[b] = std::max(max_incident[b], e.w);
        }
    }

    Weight upper_bound_rest() const {
        Weight s = 0;
        for (int v = 0; v < static_cast<int>(matched.size()); ++v)
            if (!matched[v]) s += max_incident[v];
        return s / 2;
    }

    void consider() {
        bool better;
        if (!found) {
            better = true;
        } else if (mode == MatchingMode::kMinWeightPerfect) {
            better = cur_value < best_value;
        } else {
            better = cur_value > best_value;
        }
        if (better) {
            found = true;
            best_value = cur_value;
            best_edges = cur_edges;
        }
    }

    void rec(int v) {
        int n = static_cast<int>(matched.size());
        while (v < n && matched[v]) ++v;
        if (v == n) {
            consider();
            return;
        }
        bool perfect = (mode != MatchingMode::kMaxWeight);
        // prune
        if (found) {
            if (mode == MatchingMode::kMaxWeight || mode == MatchingMode::kMaxWeightPerfect) {
                if (cur_value + upper_bound_rest() <= best_value) return;
            } else {
                if (cur_value >= best_value) return;
            }
        }
        matched[v] = true;
        for (const auto& [u, k] : adj[v]) {
            if (matched[u]) continue;
            matched[u] = true;
            cur_value += g.edges[k].w;
            cur_edges.push_back(k);
            rec(v + 1);
            cur_edges.pop_back();
            cur_value -= g.edges[k].w;
            matched[u] = false;
        }
        if (!perfect) rec(v + 1);  // leave v unmatched
        matched[v] = false;
    }
};

std::optional<Matching> solve_general(const WeightedGraph& g, MatchingMode mode) {
    if (mode != MatchingMode::kMaxWeight && g.vertices.size() % 2 != 0) return std::nullopt;
    GeneralSolver s(g, mode);
    s.rec(0);
    if (mode != MatchingMode::kMaxWeight && !s.found) return std::nullopt;
    Matching m;
    m.weight = s.found ? s.best_value : 0;
    for (int k : s.best_edges) m.edges.push_back(g.edges[k].id);
    std::sort(m.edges.begin(), m.edges.end());
    return m;
}

}  // namespace

std::optional<Matching> solve_matching(const WeightedGraph& g, MatchingMode mode) {
    if (g.directed) throw DirectedInput("matching requires an undirected graph");
    StructureReport rep = check_structure(g);
    if (rep.bipartite) return solve_bipartite(g, rep.coloring, mode);
    return solve_general(g, mode);
}

Weight nu(const WeightedGraph& g) {
    return solve_matching(g, MatchingMode::kMaxWeight)->weight;
}

std::optional<Weight> mu(const WeightedGraph& g) {
    auto m = solve_matching(g, MatchingMode::kMinWeightPerfect);
    if (!m) return std::nullopt;
    return m->weight;
}

std::optional<Weight> gamma_perfect(const WeightedGraph& g) {
    auto m = solve_matching(g, MatchingMode::kMaxWeightPerfect);
    if (!m) return std::nullopt;
    return m->weight;
}

}  // namespace interdict

#include "interdict/treewidth.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace interdict {

int TreeDecomposition::width() const {
    std::size_t mx = 0;
    for (const auto& b : bags) mx = std::max(mx, b.size());
    return static_cast<int>(mx) - 1;
}

TreeDecomposition decompose(const WeightedGraph& g, const std::map<VertexId, int>* level) {
    TreeDecomposition td;
    if (g.vertices.empty()) {
        td.bags.push_back({});
        return td;
    }

    // Fill graph as adjacency sets; self-loops dropped.
    std::map<VertexId, std::set<VertexId>> adj;
    for (VertexId v : g.vertices) adj[v];
    for (const Edge& e : g.edges)
        if (e.tail != e.head) {
            adj[e.tail].insert(e.head);
            adj[e.head].insert(e.tail);
        }

    auto level_of = [&](VertexId v) { return level && level->count(v) ? level->at(v) : 0; };

    std::map<VertexId, int> node_of;   // vertex -> its bag node
    std::map<VertexId, int> position;  // elimination position
    std::vector<VertexId> order;
    std::set<VertexId> remaining(g.vertices.begin(), g.vertices.end());

    while (!remaining.empty()) {
        VertexId pick = -1;
        auto key = [&](VertexId v) {
            return std::tuple<int, int, VertexId>(level_of(v), static_cast<int>(adj[v].size()), v);
        };
        for (VertexId v : remaining)
            if (pick == -1 || key(v) < key(pick)) pick = v;

        std::vector<VertexId> bag{pick};
        bag.insert(bag.end(), adj[pick].begin(), adj[pick].end());
        std::sort(bag.begin(), bag.end());
        node_of[pick] = static_cast<int>(td.bags.size());
        td.bags.push_back(bag);
        position[pick] = static_cast<int>(order.size());
        order.push_back(pick);

        // Eliminate: clique-ify the neighborhood, drop the vertex.
        std::vector<VertexId> nb(adj[pick].begin(), adj[pick].end());
        for (std::size_t a = 0; a < nb.size(); ++a)
            for (std::size_t b = a + 1; b < nb.size(); ++b) {
                adj[nb[a]].insert(nb[b]);
                adj[nb[b]].insert(nb[a]);
            }
        for (VertexId u : nb) adj[u].erase(pick);
        adj.erase(pick);
        remaining.erase(pick);
    }

    // Tree edges: each bag hangs off the bag of its earliest-eliminated
    // surviving neighbor; parentless bags (one per component) are chained.
    std::vector<int> roots;
    for (VertexId v : order) {
        const auto& bag = td.bags[node_of[v]];
        VertexId parent = -1;
        for (VertexId u : bag)
            if (u != v && (parent == -1 || position[u] < position[parent])) parent = u;
        if (parent == -1)
            roots.push_back(node_of[v]);
        else
            td.tree_edges.push_back({node_of[v], node_of[parent]});
    }
    for (std::size_t i = 1; i < roots.size(); ++i) td.tree_edges.push_back({roots[i - 1], roots[i]});
    return td;
}

TreeDecomposition decompose_slice(const WeightedGraph& g, const Layering& lay, int lo, int hi) {
    WeightedGraph sub;
    sub.directed = g.directed;
    for (VertexId v : g.vertices) {
        auto it = lay.level.find(v);
        if (it != lay.level.end() && it->second >= lo && it->second <= hi) sub.add_vertex(v);
    }
    for (const Edge& e : g.edges)
        if (sub.has_vertex(e.tail) && sub.has_vertex(e.head))
            sub.add_edge_with_id(e.id, e.tail, e.head, e.w, e.c);
    TreeDecomposition td = decompose(sub, &lay.level);
    auto rep = validate_decomposition(td, sub);
    if (!rep.valid) throw InvalidDecomposition(rep.violation);
    return td;
}

DecompositionReport validate_decomposition(const TreeDecomposition& td, const WeightedGraph& g) {
    DecompositionReport rep;
    int n = static_cast<int>(td.bags.size());
    if (n == 0) {
        rep.violation = "no bags";
        return rep;
    }
    // tree shape
    if (static_cast<int>(td.tree_edges.size()) != n - 1) {
        rep.violation = "tree edge count is not node count minus one";
        return rep;
    }
    std::vector<std::vector<int>> nb(n);
    for (auto [a, b] : td.tree_edges) {
        if (a < 0 || a >= n || b < 0 || b >= n) {
            rep.violation = "tree edge endpoint out of range";
            return rep;
        }
        nb[a].push_back(b);
        nb[b].push_back(a);
    }
    std::vector<char> seen(n, false);
    std::vector<int> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u : nb[v])
            if (!seen[u]) {
                seen[u] = true;
                stack.push_back(u);
            }
    }
    if (std::count(seen.begin(), seen.end(), true) != n) {
        rep.violation = "tree is disconnected";
        return rep;
    }

    auto in_bag = [&](int node, VertexId v) {
        const auto& b = td.bags[node];
        return std::binary_search(b.begin(), b.end(), v);
    };
    for (VertexId v : g.vertices) {
        bool found = false;
        for (int i = 0; i < n && !found; ++i) found = in_bag(i, v);
        if (!found) {
            rep.violation = "vertex " + std::to_string(v) + " is in no bag";
            return rep;
        }
    }
    for (const Edge& e : g.edges) {
        bool found = false;
        for (int i = 0; i < n && !found; ++i) found = in_bag(i, e.tail) && in_bag(i, e.head);
        if (!found) {
            rep.violation = "edge " + std::to_string(e.id) + " fits in no bag";
            return rep;
        }
    }
    // occupancy subtrees connected: nodes holding v must form one tree component
    for (VertexId v : g.vertices) {
        int start = -1;
        for (int i = 0; i < n; ++i)
            if (in_bag(i, v)) {
                start = i;
                break;
            }
        std::vector<char> vis(n, false);
        std::vector<int> st{start};
        vis[start] = true;
        int reached = 0;
        while (!st.empty()) {
            int x = st.back();
            st.pop_back();
            ++reached;
            for (int u : nb[x])
                if (!vis[u] && in_bag(u, v)) {
                    vis[u] = true;
                    st.push_back(u);
                }
        }
        int total = 0;
        for (int i = 0; i < n; ++i)
            if (in_bag(i, v)) ++total;
        if (reached != total) {
            rep.violation = "occupancy of vertex " + std::to_string(v) + " is disconnected";
            return rep;
        }
    }
    rep.valid = true;
    return rep;
}

namespace {

struct NiceBuilder {
    const TreeDecomposition& src;
    TreeDecomposition out;
    std::vector<std::vector<int>> nb;

    int emit(NiceKind k, std::vector<VertexId> bag, std::vector<int> kids, VertexId pivot) {
        int id = static_cast<int>(out.bags.size());
        out.bags.push_back(std::move(bag));
        out.kind.push_back(k);
        out.children.push_back(kids);
        out.pivot.push_back(pivot);
        for (int c : kids) out.tree_edges.push_back({id, c});
        return id;
    }

    // Chain of forgets/introduces turning bag `from` into bag `to`.
    int morph(int below, std::vector<VertexId> from, const std::vector<VertexId>& to) {
        int top = below;
        for (VertexId v : std::vector<VertexId>(from)) {
            if (!std::binary_search(to.begin(), to.end(), v)) {
                from.erase(std::find(from.begin(), from.end(), v));
                top = emit(NiceKind::kForget, from, {top}, v);
            }
        }
        for (VertexId v : to) {
            if (!std::binary_search(from.begin(), from.end(), v)) {
                from.insert(std::upper_bound(from.begin(), from.end(), v), v);
                top = emit(NiceKind::kIntroduce, from, {top}, v);
            }
        }
        return top;
    }

    // Returns the nice node carrying src node's bag.
    int build(int u, int parent) {
        const std::vector<VertexId>& bag = src.bags[u];
        std::vector<int> tops;
        for (int c : nb[u])
            if (c != parent) tops.push_back(morph(build(c, u), src.bags[c], bag));
        if (tops.empty()) {
            if (bag.empty()) return emit(NiceKind::kLeaf, {}, {}, -1);
            int top = emit(NiceKind::kLeaf, {bag[0]}, {}, bag[0]);
            std::vector<VertexId> cur{bag[0]};
            for (std::size_t i = 1; i < bag.size(); ++i) {
                cur.push_back(bag[i]);
                top = emit(NiceKind::kIntroduce, cur, {top}, bag[i]);
            }
            return top;
        }
        while (tops.size() > 1) {
            int a = tops.back();
            tops.pop_back();
            int b = tops.back();
            tops.pop_back();
            tops.push_back(emit(NiceKind::kJoin, bag, {a, b}, -1));
        }
        return tops[0];
    }
};

}  // namespace

TreeDecomposition make_nice(const TreeDecomposition& td, const WeightedGraph& g) {
    auto rep = validate_decomposition(td, g);
    if (!rep.valid) throw InvalidDecomposition(rep.violation);

    NiceBuilder nb{td, {}, {}};
    nb.nb.assign(td.bags.size(), {});
    for (auto [a, b] : td.tree_edges) {
        nb.nb[a].push_back(b);
        nb.nb[b].push_back(a);
    }
    int top = nb.build(0, -1);
    // forget everything down to an empty root bag
    std::vector<VertexId> cur = td.bags[0];
    while (!cur.empty()) {
        VertexId v = cur.back();
        cur.pop_back();
        top = nb.emit(NiceKind::kForget, cur, {top}, v);
    }
    nb.out.nice = true;
    nb.out.root = top;
    auto out_rep = validate_decomposition(nb.out, g);
    if (!out_rep.valid) throw InvalidDecomposition("nice form broke validity: " + out_rep.violation);
    if (nb.out.width() > td.width()) throw InvalidDecomposition("nice form widened the decomposition");
    return nb.out;
}

}  // namespace interdict

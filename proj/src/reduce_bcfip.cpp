#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "interdict/reductions.hpp"

namespace interdict {

// ---------------------------------------------------------------------------
// Stage 1
// ---------------------------------------------------------------------------

FlowGadget is_to_bcfip(const WeightedGraph& g, int k) {
    g.validate();
    if (g.directed) throw DirectedInput("stage 1 wants an undirected source");
    if (k < 1) throw Error("target set size must be positive");
    for (const Edge& e : g.edges)
        if (e.tail == e.head) throw Error("source graph must be simple");

    FlowGadget a;
    a.source = g;
    a.k = k;
    a.d = std::max(g.max_degree(), 1);  // edgeless convention: pretend degree 1

    WeightedGraph& n = a.graph;
    n.directed = true;
    a.s = n.add_vertex(0);
    a.t = n.add_vertex(1);
    for (VertexId v : g.vertices) a.vertex_node[v] = n.add_vertex(n.fresh_vertex_id());
    for (const Edge& e : g.edges) a.edge_node[e.id] = n.add_vertex(n.fresh_vertex_id());

    for (VertexId v : g.vertices) {
        EdgeId id = n.add_edge(a.s, a.vertex_node[v], a.d, 1);
        a.e1.push_back(id);
        a.pay_edge[v] = id;
    }
    for (const Edge& e : g.edges) {
        a.e2.push_back(n.add_edge(a.vertex_node[e.tail], a.edge_node[e.id], 1, 0));
        a.e2.push_back(n.add_edge(a.vertex_node[e.head], a.edge_node[e.id], 1, 0));
    }
    for (const Edge& e : g.edges) a.e3.push_back(n.add_edge(a.edge_node[e.id], a.t, 1, 0));
    for (VertexId v : g.vertices) a.e4.push_back(n.add_edge(a.vertex_node[v], a.t, a.d - g.degree(v), 0));

    a.budget = k;
    return a;
}

std::vector<EdgeId> FlowGadget::kept_edges_for(const std::vector<VertexId>& iset) const {
    std::vector<EdgeId> kept;
    for (const Edge& e : graph.edges)
        if (e.c == 0) kept.push_back(e.id);
    for (VertexId v : iset) kept.push_back(pay_edge.at(v));
    std::sort(kept.begin(), kept.end());
    return kept;
}

std::vector<VertexId> FlowGadget::vertices_for(const std::vector<EdgeId>& kept) const {
    std::vector<VertexId> out;
    for (const auto& [v, eid] : pay_edge)
        if (std::find(kept.begin(), kept.end(), eid) != kept.end()) out.push_back(v);
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// Stage 2: exact rational sweep geometry
// ---------------------------------------------------------------------------

namespace {

using I128 = __int128;

long long igcd(long long a, long long b) { return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b); }

struct Rat {
    long long n = 0, d = 1;
    Rat() = default;
    Rat(long long v) : n(v), d(1) {}
    Rat(long long n_, long long d_) : n(n_), d(d_) { norm(); }
    void norm() {
        if (d < 0) {
            n = -n;
            d = -d;
        }
        long long gg = igcd(n, d);
        if (gg > 1) {
            n /= gg;
            d /= gg;
        }
        if (n == 0) d = 1;
    }
    static Rat make(I128 n_, I128 d_) {
        if (d_ < 0) {
            n_ = -n_;
            d_ = -d_;
        }
        I128 a = n_ < 0 ? -n_ : n_, b = d_;
        while (b) {
            I128 t = a % b;
            a = b;
            b = t;
        }
        if (a > 1) {
            n_ /= a;
            d_ /= a;
        }
        Rat r;
        r.n = static_cast<long long>(n_);
        r.d = static_cast<long long>(d_);
        if (r.n == 0) r.d = 1;
        return r;
    }
    friend Rat operator+(const Rat& a, const Rat& b) {
        return make(static_cast<I128>(a.n) * b.d + static_cast<I128>(b.n) * a.d,
                    static_cast<I128>(a.d) * b.d);
    }
    friend Rat operator-(const Rat& a, const Rat& b) {
        return make(static_cast<I128>(a.n) * b.d - static_cast<I128>(b.n) * a.d,
                    static_cast<I128>(a.d) * b.d);
    }
    friend Rat operator*(const Rat& a, const Rat& b) {
        return make(static_cast<I128>(a.n) * b.n, static_cast<I128>(a.d) * b.d);
    }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.n == 0) throw DegenerateLayout("division by zero in layout geometry");
        return make(static_cast<I128>(a.n) * b.d, static_cast<I128>(a.d) * b.n);
    }
    friend bool operator==(const Rat& a, const Rat& b) { return a.n == b.n && a.d == b.d; }
    friend bool operator<(const Rat& a, const Rat& b) {
        return static_cast<I128>(a.n) * b.d < static_cast<I128>(b.n) * a.d;
    }
    friend bool operator<=(const Rat& a, const Rat& b) { return a < b || a == b; }
};

struct Point {
    Rat x, y;
    friend bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
};

struct Segment {
    EdgeId edge;  // stage-1 edge realized by this segment
    Point p, q;   // tail to head
};

struct Crossing {
    Point at;
    EdgeId a, b;  // the two stage-1 edges meeting here
};

// Proper interior intersection of two straight segments, exact. Throws
// DegenerateLayout on overlap/touch cases that the layout must avoid.
bool segment_crossing(const Segment& s1, const Segment& s2, Point& out) {
    // orientation via cross products
    auto cross = [](const Point& o, const Point& a, const Point& b) {
        Rat v = (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
        return v.n == 0 ? 0 : (v.n > 0 ? 1 : -1);
    };
    bool share = s1.p == s2.p || s1.p == s2.q || s1.q == s2.p || s1.q == s2.q;
    int o1 = cross(s1.p, s1.q, s2.p), o2 = cross(s1.p, s1.q, s2.q);
    int o3 = cross(s2.p, s2.q, s1.p), o4 = cross(s2.p, s2.q, s1.q);
    if (share) {
        if (o1 == 0 && o2 == 0) throw DegenerateLayout("collinear segments share an endpoint");
        return false;
    }
    if (o1 == 0 || o2 == 0 || o3 == 0 || o4 == 0)
        throw DegenerateLayout("segment endpoint lies on another segment");
    if (o1 == o2 || o3 == o4) return false;
    // solve for the intersection point
    Rat a1 = s1.q.y - s1.p.y, b1 = s1.p.x - s1.q.x;
    Rat c1 = a1 * s1.p.x + b1 * s1.p.y;
    Rat a2 = s2.q.y - s2.p.y, b2 = s2.p.x - s2.q.x;
    Rat c2 = a2 * s2.p.x + b2 * s2.p.y;
    Rat det = a1 * b2 - a2 * b1;
    out.x = (b2 * c1 - b1 * c2) / det;
    out.y = (a1 * c2 - a2 * c1) / det;
    return true;
}

struct Layout {
    std::map<VertexId, Point> pos;
    std::vector<Segment> segments;
    std::vector<Crossing> crossings;  // sorted in sweep order
};

Layout build_layout(const FlowGadget& a, int attempt) {
    Layout L;
    const WeightedGraph& g1 = a.graph;
    int n = static_cast<int>(a.source.vertices.size());
    int m = static_cast<int>(a.source.edges.size());

    // deterministic jitter for retry attempts; zero on the first try so the
    // reference layout stays clean
    auto jitter = [&](int idx) -> Rat {
        if (attempt == 0) return Rat(0);
        long long h = (static_cast<long long>(idx + 1) * 2654435761LL * (attempt + 1)) % 97;
        return Rat(h - 48, 97 * (attempt + 1));
    };

    L.pos[a.s] = {Rat(0), Rat(n + 1)};
    L.pos[a.t] = {Rat(1), Rat(m + 1) + jitter(n + m)};
    for (int i = 0; i < n; ++i)
        L.pos[a.vertex_node.at(a.source.vertices[i])] = {Rat(1, 3), Rat(2 * (n - i)) + jitter(i)};
    for (int l = 0; l < m; ++l)
        L.pos[a.edge_node.at(a.source.edges[l].id)] = {Rat(2, 3), Rat(2 * (m - l)) + jitter(n + l)};

    for (const Edge& e : g1.edges) L.segments.push_back({e.id, L.pos.at(e.tail), L.pos.at(e.head)});

    for (std::size_t i = 0; i < L.segments.size(); ++i)
        for (std::size_t j = i + 1; j < L.segments.size(); ++j) {
            Point p;
            if (segment_crossing(L.segments[i], L.segments[j], p))
                L.crossings.push_back({p, L.segments[i].edge, L.segments[j].edge});
        }
    for (std::size_t i = 0; i < L.crossings.size(); ++i)
        for (std::size_t j = i + 1; j < L.crossings.size(); ++j)
            if (L.crossings[i].at == L.crossings[j].at)
                throw DegenerateLayout("three segments meet at one point");

    std::sort(L.crossings.begin(), L.crossings.end(), [](const Crossing& x, const Crossing& y) {
        if (!(x.at.x == y.at.x)) return x.at.x < y.at.x;
        if (!(x.at.y == y.at.y)) return x.at.y < y.at.y;
        return std::minmax(x.a, x.b) < std::minmax(y.a, y.b);
    });
    return L;
}

}  // namespace

PlanarFlowGadget planarize_bcfip(const FlowGadget& a) {
    PlanarFlowGadget out;
    out.stage1 = a;

    Layout L;
    bool built = false;
    std::string last_failure = "no attempt made";
    for (int attempt = 0; attempt < 40 && !built; ++attempt) {
        try {
            L = build_layout(a, attempt);
            built = true;
        } catch (const DegenerateLayout& ex) {
            last_failure = ex.what();
        }
    }
    if (!built) throw DegenerateLayout(last_failure);

    const WeightedGraph& g1 = a.graph;
    Weight m2 = static_cast<Weight>(a.source.edges.size()) * static_cast<Weight>(a.source.edges.size());
    out.r = static_cast<int>(L.crossings.size());
    const int r = out.r;

    for (std::size_t l = 0; l < a.source.edges.size(); ++l)
        out.label[a.source.edges[l].id] = static_cast<Weight>(l + 1);

    std::set<EdgeId> in_e1(a.e1.begin(), a.e1.end());
    std::set<EdgeId> in_e2(a.e2.begin(), a.e2.end());
    std::set<EdgeId> in_e3(a.e3.begin(), a.e3.end());

    // source-edge label attached to a stage-1 fan/drain edge
    std::map<VertexId, Weight> node_label;
    for (const auto& [eid, vnode] : a.edge_node) node_label[vnode] = out.label[eid];
    // overflow capacity: |E|^2 minus the labels of the fan edges leaving the vertex
    std::map<VertexId, Weight> fan_sum;
    for (EdgeId eid : a.e2) fan_sum[g1.edge(eid).tail] += node_label[g1.edge(eid).head];

    WeightedGraph& g2 = out.graph;
    g2.directed = true;
    std::map<VertexId, Point> pos = L.pos;
    for (VertexId v : g1.vertices) g2.add_vertex(v);
    std::map<int, VertexId> cross_vertex;  // sweep index (1-based) -> vertex
    for (int i = 0; i < r; ++i) {
        VertexId cv = g2.add_vertex(g2.fresh_vertex_id());
        cross_vertex[i + 1] = cv;
        out.crossings.push_back(cv);
        pos[cv] = L.crossings[i].at;
    }

    for (const Edge& e : g1.edges) {
        // crossings on this edge, ordered along it (x increases tail to head)
        std::vector<int> on_edge;
        for (int i = 0; i < r; ++i)
            if (L.crossings[i].a == e.id || L.crossings[i].b == e.id) on_edge.push_back(i + 1);
        std::sort(on_edge.begin(), on_edge.end(), [&](int i, int j) {
            return L.crossings[i - 1].at.x < L.crossings[j - 1].at.x;
        });

        Weight w;
        if (in_e1.count(e.id))
            w = m2;
        else if (in_e2.count(e.id))
            w = node_label.at(e.head);
        else if (in_e3.count(e.id))
            w = node_label.at(e.tail);
        else
            w = m2 - fan_sum[e.tail];

        VertexId at = e.tail;
        int prev = 0;  // 0 encodes "the left endpoint"
        auto cost_of = [&](int i, int j) -> Weight {
            // i = previous stop (0 = tail vertex), j = next stop
            // (r+1 = drain column endpoint, r+2 = the sink)
            if (in_e1.count(e.id) || in_e3.count(e.id)) return w;
            return static_cast<Weight>(j - i) * w;
        };
        std::vector<EdgeId>& chain = out.child[e.id];
        for (int idx : on_edge) {
            EdgeId c = g2.add_edge(at, cross_vertex[idx], w, cost_of(prev, idx));
            chain.push_back(c);
            out.parent[c] = e.id;
            at = cross_vertex[idx];
            prev = idx;
        }
        int last;
        if (in_e1.count(e.id) || in_e3.count(e.id))
            last = prev;  // flat cost; value unused
        else if (in_e2.count(e.id))
            last = r + 1;
        else
            last = r + 2;
        EdgeId c = g2.add_edge(at, e.head, w, cost_of(prev, last));
        chain.push_back(c);
        out.parent[c] = e.id;
    }

    // rotation from exact directions at every vertex; every chain edge runs
    // along its parent segment, so the segment's primitive direction is
    // exact and avoids the large denominators of crossing coordinates
    std::map<EdgeId, std::pair<long long, long long>> seg_dir;
    for (const Segment& seg : L.segments) {
        Rat dx = seg.q.x - seg.p.x, dy = seg.q.y - seg.p.y;
        I128 ax = static_cast<I128>(dx.n) * dy.d, ay = static_cast<I128>(dy.n) * dx.d;
        I128 u = ax < 0 ? -ax : ax, w128 = ay < 0 ? -ay : ay;
        while (w128) {
            I128 t = u % w128;
            u = w128;
            w128 = t;
        }
        if (u > 1) {
            ax /= u;
            ay /= u;
        }
        seg_dir[seg.edge] = {static_cast<long long>(ax), static_cast<long long>(ay)};
    }
    std::map<DartId, std::pair<long long, long long>> dirs;
    for (const Edge& e : g2.edges) {
        auto [vx, vy] = seg_dir.at(out.parent.at(e.id));
        dirs[dart_fwd(e.id)] = {vx, vy};
        dirs[dart_rev_of_edge(e.id)] = {-vx, -vy};
    }
    out.rotation = rotation_from_directions(g2, dirs);
    PlanarEmbedding::build(g2, out.rotation);  // throws if the surgery broke planarity

    out.s = a.s;
    out.t = a.t;
    out.budget = static_cast<Weight>(r + 3) * a.k * m2;
    return out;
}

PlanarEmbedding PlanarFlowGadget::embedding() const { return PlanarEmbedding::build(graph, rotation); }

std::vector<EdgeId> PlanarFlowGadget::kept_edges_for(const std::vector<VertexId>& iset) const {
    std::set<VertexId> in_set(iset.begin(), iset.end());
    std::set<VertexId> boundary_nodes;  // gadget vertices of source edges leaving the set
    for (const Edge& e : stage1.source.edges)
        if (in_set.count(e.tail) != in_set.count(e.head))
            boundary_nodes.insert(stage1.edge_node.at(e.id));

    std::set<EdgeId> keep1;  // stage-1 edges carrying flow
    for (VertexId v : iset) keep1.insert(stage1.pay_edge.at(v));
    std::set<VertexId> chosen_nodes;
    for (VertexId v : iset) chosen_nodes.insert(stage1.vertex_node.at(v));
    for (EdgeId eid : stage1.e2)
        if (chosen_nodes.count(stage1.graph.edge(eid).tail)) keep1.insert(eid);
    for (EdgeId eid : stage1.e3)
        if (boundary_nodes.count(stage1.graph.edge(eid).tail)) keep1.insert(eid);
    for (EdgeId eid : stage1.e4)
        if (chosen_nodes.count(stage1.graph.edge(eid).tail)) keep1.insert(eid);

    std::vector<EdgeId> kept;
    for (EdgeId p : keep1)
        for (EdgeId c : child.at(p)) kept.push_back(c);
    std::sort(kept.begin(), kept.end());
    return kept;
}

}  // namespace interdict

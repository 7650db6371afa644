#include <algorithm>
#include <map>

#include "interdict/reductions.hpp"

namespace interdict {

namespace {

int pos_of(const std::vector<DartId>& order, DartId d) {
    auto it = std::find(order.begin(), order.end(), d);
    if (it == order.end()) throw MalformedRotation("dart missing from rotation order");
    return static_cast<int>(it - order.begin());
}

// ccw steps from dart a to dart b within one vertex's cyclic order
int ccw_gap(const std::vector<DartId>& order, DartId a, DartId b) {
    int n = static_cast<int>(order.size());
    return ((pos_of(order, b) - pos_of(order, a)) % n + n) % n;
}

}  // namespace

MatchingGadget dspeip_to_mpmeip(const WeightedGraph& g, const RotationSystem& rot, VertexId u,
                                VertexId v, Weight B) {
    if (!g.directed) throw UndirectedInput("path instance must be directed");
    if (!g.has_vertex(u) || !g.has_vertex(v)) throw TerminalMissing("path terminal not in graph");
    PlanarEmbedding::build(g, rot);  // input must arrive embedded

    MatchingGadget out;
    out.input = g;
    out.input_u = u;
    out.input_v = v;
    out.budget = B;

    // ---- step 1: leaves, then cycle gadgets for high-degree vertices ----
    WeightedGraph& g1 = out.degree3;
    g1 = g;
    RotationSystem& r1 = out.degree3_rotation;
    r1 = rot;
    for (const Edge& e : g.edges) out.f[e.id] = e.id;

    out.u1 = g1.add_vertex(g1.fresh_vertex_id());
    EdgeId leaf_u = g1.add_edge(out.u1, u, 0, B + 1);
    out.v1 = g1.add_vertex(g1.fresh_vertex_id());
    EdgeId leaf_v = g1.add_edge(v, out.v1, 0, B + 1);
    r1[out.u1] = {dart_fwd(leaf_u)};
    r1[u].insert(r1[u].begin(), dart_rev_of_edge(leaf_u));  // pendant: any corner works
    r1[out.v1] = {dart_rev_of_edge(leaf_v)};
    r1[v].insert(r1[v].begin(), dart_fwd(leaf_v));

    std::vector<VertexId> fat;
    for (VertexId w : g1.vertices)
        if (r1[w].size() > 3) fat.push_back(w);
    for (VertexId w : fat) {
        std::vector<DartId> around = r1[w];
        int kk = static_cast<int>(around.size());
        std::vector<VertexId> ring;
        for (int i = 0; i < kk; ++i) ring.push_back(g1.add_vertex(g1.fresh_vertex_id()));
        for (int i = 0; i < kk; ++i) {
            DartId d = around[i];
            Edge& e = const_cast<Edge&>(g1.edge(dart_edge(d)));
            if (dart_is_forward(d))
                e.tail = ring[i];
            else
                e.head = ring[i];
        }
        g1.invalidate_index();
        std::vector<EdgeId> ring_edge(kk);
        for (int i = 0; i < kk; ++i) ring_edge[i] = g1.add_edge(ring[i], ring[(i + 1) % kk], 0, B + 1);
        for (int i = 0; i < kk; ++i) {
            int prev = (i + kk - 1) % kk;
            r1[ring[i]] = {around[i], dart_fwd(ring_edge[i]), dart_rev_of_edge(ring_edge[prev])};
        }
        r1.erase(w);
        auto vit = std::find(g1.vertices.begin(), g1.vertices.end(), w);
        g1.vertices.erase(vit);
        g1.invalidate_index();
    }
    PlanarEmbedding::build(g1, r1);

    // ---- step 2: embedded line graph plus the two terminals ----
    WeightedGraph& g2 = out.line;
    g2.directed = false;
    for (const Edge& e : g1.edges) out.line_vertex[e.id] = g2.add_vertex(e.id);
    VertexId u2 = g2.add_vertex(g2.fresh_vertex_id());
    VertexId v2 = g2.add_vertex(g2.fresh_vertex_id());

    // adjacency of g1 by vertex
    std::map<VertexId, std::vector<EdgeId>> out_of, into;
    for (const Edge& e : g1.edges) {
        out_of[e.tail].push_back(e.id);
        into[e.head].push_back(e.id);
    }

    // line edges are built tail-copy -> head-copy so each end knows its role
    std::map<std::pair<EdgeId, EdgeId>, EdgeId> arc_edge;  // (pred, succ) -> g2 edge
    for (const Edge& e : g1.edges)
        for (EdgeId o : out_of[e.head]) arc_edge[{e.id, o}] = g2.add_edge(e.id, o, 0, 0);
    EdgeId u2_edge = -1, v2_edge = -1;
    for (EdgeId e : out_of[out.u1]) u2_edge = g2.add_edge(u2, e, 0, 0);
    for (EdgeId e : into[out.v1]) v2_edge = g2.add_edge(e, v2, 0, 0);

    // rotation at the copy of e = (x, y): predecessor block sorted by ccw
    // distance at x from e's own dart, then successor block sorted by ccw
    // distance at y from e's reverse dart (the disk-chord order that keeps
    // the drawing planar)
    RotationSystem& r2 = out.line_rotation;
    std::map<EdgeId, std::vector<DartId>> pred_block, succ_block;
    for (const Edge& e : g1.edges) {
        std::vector<EdgeId> preds = into[e.tail];
        std::sort(preds.begin(), preds.end(), [&](EdgeId a, EdgeId b) {
            return ccw_gap(r1[e.tail], dart_fwd(e.id), dart_rev_of_edge(a)) <
                   ccw_gap(r1[e.tail], dart_fwd(e.id), dart_rev_of_edge(b));
        });
        std::vector<EdgeId> succs = out_of[e.head];
        std::sort(succs.begin(), succs.end(), [&](EdgeId a, EdgeId b) {
            return ccw_gap(r1[e.head], dart_rev_of_edge(e.id), dart_fwd(a)) <
                   ccw_gap(r1[e.head], dart_rev_of_edge(e.id), dart_fwd(b));
        });
        std::vector<DartId>& pb = pred_block[e.id];
        for (EdgeId p : preds) pb.push_back(dart_rev_of_edge(arc_edge[{p, e.id}]));
        if (e.tail == out.u1) pb.push_back(dart_rev_of_edge(u2_edge));
        std::vector<DartId>& sb = succ_block[e.id];
        for (EdgeId o : succs) sb.push_back(dart_fwd(arc_edge[{e.id, o}]));
        if (e.head == out.v1) sb.push_back(dart_fwd(v2_edge));

        std::vector<DartId>& ro = r2[e.id];
        ro.insert(ro.end(), pb.begin(), pb.end());
        ro.insert(ro.end(), sb.begin(), sb.end());
    }
    r2[u2] = u2_edge >= 0 ? std::vector<DartId>{dart_fwd(u2_edge)} : std::vector<DartId>{};
    r2[v2] = v2_edge >= 0 ? std::vector<DartId>{dart_rev_of_edge(v2_edge)} : std::vector<DartId>{};
    PlanarEmbedding::build(g2, r2);

    // ---- step 3: split every line vertex into a 4-chain ----
    WeightedGraph& g3 = out.graph;
    g3.directed = false;
    RotationSystem& r3 = out.rotation;
    out.u3 = g3.add_vertex(u2);
    out.v3 = g3.add_vertex(v2);

    for (const Edge& e : g1.edges) {
        std::array<VertexId, 4> ch;  // tail-side to head-side: f2d f2c f2b f2a
        for (int i = 0; i < 4; ++i) ch[i] = g3.add_vertex(g3.fresh_vertex_id());
        out.chain[e.id] = ch;
        EdgeId c_edge = g3.add_edge(ch[0], ch[1], 0, B + 1);
        EdgeId b_edge = g3.add_edge(ch[1], ch[2], e.w, e.c);
        EdgeId a_edge = g3.add_edge(ch[2], ch[3], 0, B + 1);
        out.mid[e.id] = b_edge;
        // chain rotations; the outer ends are finished after external edges land
        r3[ch[0]] = {dart_fwd(c_edge)};
        r3[ch[1]] = {dart_fwd(b_edge), dart_rev_of_edge(c_edge)};
        r3[ch[2]] = {dart_fwd(a_edge), dart_rev_of_edge(b_edge)};
        r3[ch[3]] = {dart_rev_of_edge(a_edge)};
    }
    // external edges: arc (p, e) joins head-end of p to tail-end of e
    std::map<DartId, DartId> lifted;  // g2 dart -> g3 dart
    for (const auto& [pe, le] : arc_edge) {
        EdgeId ne = g3.add_edge(out.chain[pe.first][3], out.chain[pe.second][0], 0, B + 1);
        lifted[dart_fwd(le)] = dart_fwd(ne);
        lifted[dart_rev_of_edge(le)] = dart_rev_of_edge(ne);
    }
    if (u2_edge >= 0) {
        EdgeId ne = g3.add_edge(out.u3, out.chain[g2.edge(u2_edge).head][0], 0, B + 1);
        lifted[dart_fwd(u2_edge)] = dart_fwd(ne);
        lifted[dart_rev_of_edge(u2_edge)] = dart_rev_of_edge(ne);
    }
    if (v2_edge >= 0) {
        EdgeId ne = g3.add_edge(out.chain[g2.edge(v2_edge).tail][3], out.v3, 0, B + 1);
        lifted[dart_fwd(v2_edge)] = dart_fwd(ne);
        lifted[dart_rev_of_edge(v2_edge)] = dart_rev_of_edge(ne);
    }
    for (const Edge& e : g1.edges) {
        std::vector<DartId>& tail_end = r3[out.chain[e.id][0]];  // f2d: chain dart then preds
        for (DartId d : pred_block[e.id]) tail_end.push_back(lifted.at(d));
        std::vector<DartId>& head_end = r3[out.chain[e.id][3]];  // f2a: chain dart then succs
        for (DartId d : succ_block[e.id]) head_end.push_back(lifted.at(d));
    }
    r3[out.u3] = u2_edge >= 0 ? std::vector<DartId>{lifted.at(dart_fwd(u2_edge))}
                              : std::vector<DartId>{};
    r3[out.v3] = v2_edge >= 0 ? std::vector<DartId>{lifted.at(dart_rev_of_edge(v2_edge))}
                              : std::vector<DartId>{};
    PlanarEmbedding::build(g3, r3);
    return out;
}

std::vector<EdgeId> MatchingGadget::translate(const std::vector<EdgeId>& I) const {
    std::vector<EdgeId> out_edges;
    for (EdgeId e : I) out_edges.push_back(mid.at(f.at(e)));
    std::sort(out_edges.begin(), out_edges.end());
    return out_edges;
}

}  // namespace interdict

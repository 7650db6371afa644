#include <algorithm>

#include "interdict/reductions.hpp"

namespace interdict {

PathGadget bcfip_to_dspeip(const PlanarEmbedding& emb, VertexId s, VertexId t, Weight B) {
    const WeightedGraph& g = emb.graph();
    if (!g.directed) throw UndirectedInput("flow instance must be directed");
    if (!g.has_vertex(s) || !g.has_vertex(t)) throw TerminalMissing("flow terminal not in graph");

    PathGadget out;
    out.input = g;
    out.input_s = s;
    out.input_t = t;
    out.budget = B;

    int f_inf = emb.common_face(s, t);
    if (f_inf < 0) throw WalkNotFound("terminals share no face");

    // Boundary walk of the split face. Each dart's tail is a walk vertex;
    // both terminals must appear exactly once for the split to make sense.
    const std::vector<DartId>& walk = emb.faces().at(f_inf);
    int pos_s = -1, pos_t = -1;
    for (std::size_t i = 0; i < walk.size(); ++i) {
        VertexId tail = emb.dart_tail(walk[i]);
        if (tail == s) {
            if (pos_s >= 0) throw WalkNotFound("source visited twice on the boundary walk");
            pos_s = static_cast<int>(i);
        }
        if (tail == t) {
            if (pos_t >= 0) throw WalkNotFound("sink visited twice on the boundary walk");
            pos_t = static_cast<int>(i);
        }
    }
    if (pos_s < 0 || pos_t < 0) throw WalkNotFound("terminal missing from the boundary walk");

    // Darts from s (inclusive) to t (exclusive), wrapping around the cycle.
    std::vector<DartId> st_darts, ts_darts;
    int n = static_cast<int>(walk.size());
    for (int i = pos_s; i != pos_t; i = (i + 1) % n) st_darts.push_back(walk[i]);
    for (int i = pos_t; i != pos_s; i = (i + 1) % n) ts_darts.push_back(walk[i]);
    for (DartId d : st_darts) out.st_side.push_back(dart_edge(d));
    std::sort(out.st_side.begin(), out.st_side.end());

    // Dual, with the split-face vertex divided between the two dart blocks.
    PlanarEmbedding dual = emb.dual();
    WeightedGraph split = dual.graph();
    out.u = split.add_vertex(split.fresh_vertex_id());
    out.v = split.add_vertex(split.fresh_vertex_id());
    auto reassign = [&](DartId d, VertexId to) {
        Edge& e = const_cast<Edge&>(split.edge(dart_edge(d)));
        if (dart_is_forward(d))
            e.tail = to;
        else
            e.head = to;
    };
    for (DartId d : st_darts) reassign(d, out.u);
    for (DartId d : ts_darts) reassign(d, out.v);
    split.invalidate_index();

    RotationSystem srot = dual.rotation();
    srot.erase(f_inf);
    srot[out.u] = st_darts;
    srot[out.v] = ts_darts;
    PlanarEmbedding::build(split, srot);  // planarity must survive the split

    // Triple every edge: toll copy (carries the capacity, undeletable),
    // free copy (deletable at the original cost), reverse copy.
    WeightedGraph& g3 = out.graph;
    g3.directed = true;
    for (VertexId v : split.vertices) g3.add_vertex(v);
    std::map<DartId, std::vector<DartId>> bundle;  // old dart -> replacement block
    for (const Edge& e : split.edges) {
        EdgeId a = g3.add_edge(e.tail, e.head, e.w, B + 1);
        EdgeId b = g3.add_edge(e.tail, e.head, 0, e.c);
        EdgeId c = g3.add_edge(e.head, e.tail, 0, B + 1);
        out.copy_toll[e.id] = a;
        out.copy_free[e.id] = b;
        out.copy_reverse[e.id] = c;
        // parallel strands: tail-side order reverses on the head side
        bundle[dart_fwd(e.id)] = {dart_fwd(a), dart_fwd(b), dart_rev_of_edge(c)};
        bundle[dart_rev_of_edge(e.id)] = {dart_fwd(c), dart_rev_of_edge(b), dart_rev_of_edge(a)};
    }
    for (const auto& [v, order] : srot) {
        std::vector<DartId>& ro = out.rotation[v];
        for (DartId d : order)
            for (DartId nd : bundle[d]) ro.push_back(nd);
    }
    PlanarEmbedding::build(g3, out.rotation);
    return out;
}

std::vector<EdgeId> PathGadget::translate(const std::vector<EdgeId>& I) const {
    std::vector<EdgeId> out_edges;
    for (EdgeId e : I) out_edges.push_back(copy_free.at(e));
    std::sort(out_edges.begin(), out_edges.end());
    return out_edges;
}

}  // namespace interdict

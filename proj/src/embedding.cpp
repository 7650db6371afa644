#include "interdict/embedding.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace interdict {

VertexId PlanarEmbedding::dart_tail(DartId d) const {
    const Edge& e = graph_.edge(dart_edge(d));
    return dart_is_forward(d) ? e.tail : e.head;
}

VertexId PlanarEmbedding::dart_head(DartId d) const {
    const Edge& e = graph_.edge(dart_edge(d));
    return dart_is_forward(d) ? e.head : e.tail;
}

PlanarEmbedding PlanarEmbedding::build(const WeightedGraph& g, const RotationSystem& rotation,
                                       bool allow_nonplanar) {
    g.validate();
    PlanarEmbedding emb;
    emb.graph_ = g;
    emb.rotation_ = rotation;

    // Every dart must appear exactly once, at its tail vertex.
    std::set<DartId> expected;
    for (const Edge& e : g.edges) {
        expected.insert(dart_fwd(e.id));
        expected.insert(dart_rev_of_edge(e.id));
    }
    std::set<DartId> seen;
    for (const auto& [v, order] : rotation) {
        if (!g.has_vertex(v)) throw MalformedRotation("rotation lists unknown vertex");
        for (std::size_t i = 0; i < order.size(); ++i) {
            DartId d = order[i];
            if (!expected.count(d)) throw MalformedRotation("rotation lists unknown dart");
            if (!seen.insert(d).second) throw MalformedRotation("dart listed twice");
            if (emb.dart_tail(d) != v) throw MalformedRotation("dart listed at wrong vertex");
            emb.rot_next_[d] = order[(i + 1) % order.size()];
        }
    }
    if (seen.size() != expected.size()) throw MalformedRotation("dart missing from rotation");

    emb.compute_faces();
    emb.check_euler();
    if (!emb.euler_ok_ && !allow_nonplanar)
        throw NotPlanarEmbedding("rotation system violates Euler's formula");
    return emb;
}

void PlanarEmbedding::compute_faces() {
    faces_.clear();
    face_of_.clear();
    // Successor of d along its face: the dart after rev(d) in the rotation
    // at head(d).
    std::set<DartId> visited;
    for (const auto& [d0, nxt0] : rot_next_) {
        (void)nxt0;
        if (visited.count(d0)) continue;
        std::vector<DartId> cycle;
        DartId d = d0;
        while (!visited.count(d)) {
            visited.insert(d);
            cycle.push_back(d);
            d = rot_next_.at(dart_reverse(d));
        }
        int f = static_cast<int>(faces_.size());
        for (DartId x : cycle) face_of_[x] = f;
        faces_.push_back(std::move(cycle));
    }
}

void PlanarEmbedding::check_euler() {
    // Euler per connected component; edgeless components are trivially fine.
    std::map<VertexId, int> comp;
    int ncomp = 0;
    std::map<VertexId, std::vector<VertexId>> adj;
    for (const Edge& e : graph_.edges) {
        adj[e.tail].push_back(e.head);
        adj[e.head].push_back(e.tail);
    }
    for (VertexId root : graph_.vertices) {
        if (comp.count(root)) continue;
        int c = ncomp++;
        std::queue<VertexId> q;
        comp[root] = c;
        q.push(root);
        while (!q.empty()) {
            VertexId v = q.front();
            q.pop();
            for (VertexId u : adj[v])
                if (!comp.count(u)) {
                    comp[u] = c;
                    q.push(u);
                }
        }
    }
    std::vector<long long> nv(ncomp, 0), ne(ncomp, 0), nf(ncomp, 0);
    for (VertexId v : graph_.vertices) nv[comp[v]]++;
    for (const Edge& e : graph_.edges) ne[comp[e.tail]]++;
    for (const auto& cycle : faces_) nf[comp[dart_tail(cycle.front())]]++;
    euler_ok_ = true;
    for (int c = 0; c < ncomp; ++c) {
        if (ne[c] == 0) continue;
        if (nv[c] - ne[c] + nf[c] != 2) euler_ok_ = false;
    }
}

int PlanarEmbedding::face_of(DartId d) const {
    auto it = face_of_.find(d);
    if (it == face_of_.end()) throw Error("unknown dart");
    return it->second;
}

std::vector<VertexId> PlanarEmbedding::boundary_vertices(int face) const {
    std::set<VertexId> out;
    for (DartId d : faces_.at(face)) out.insert(dart_tail(d));
    return {out.begin(), out.end()};
}

int PlanarEmbedding::common_face(VertexId u, VertexId v) const {
    for (int f = 0; f < num_faces(); ++f) {
        bool hu = false, hv = false;
        for (DartId d : faces_[f]) {
            VertexId t = dart_tail(d);
            hu |= (t == u);
            hv |= (t == v);
        }
        if (hu && hv) return f;
    }
    return -1;
}

PlanarEmbedding PlanarEmbedding::dual() const {
    WeightedGraph dg;
    dg.directed = graph_.directed;
    for (int f = 0; f < num_faces(); ++f) dg.add_vertex(f);
    for (const Edge& e : graph_.edges) {
        // Dual edge keeps the primal id, weight and cost.
        dg.add_edge_with_id(e.id, face_of(dart_fwd(e.id)), face_of(dart_rev_of_edge(e.id)), e.w, e.c);
    }
    RotationSystem rot;
    for (int f = 0; f < num_faces(); ++f) rot[f] = faces_[f];
    return build(dg, rot);
}

RotationSystem rotation_from_directions(
    const WeightedGraph& g, const std::map<DartId, std::pair<long long, long long>>& dir) {
    RotationSystem rot;
    for (VertexId v : g.vertices) rot[v];
    std::map<VertexId, std::vector<DartId>> at;
    for (const Edge& e : g.edges) {
        at[e.tail].push_back(dart_fwd(e.id));
        at[e.head].push_back(dart_rev_of_edge(e.id));
    }
    auto half = [](const std::pair<long long, long long>& p) {
        // 0 for angle in [0, pi), 1 for [pi, 2pi)
        if (p.second > 0) return 0;
        if (p.second < 0) return 1;
        return p.first > 0 ? 0 : 1;
    };
    for (auto& [v, darts] : at) {
        std::sort(darts.begin(), darts.end(), [&](DartId a, DartId b) {
            const auto& pa = dir.at(a);
            const auto& pb = dir.at(b);
            int ha = half(pa), hb = half(pb);
            if (ha != hb) return ha < hb;
            __int128 cross = static_cast<__int128>(pa.first) * pb.second -
                             static_cast<__int128>(pa.second) * pb.first;
            if (cross != 0) return cross > 0;
            return a < b;  // collinear darts (parallel edges): stable id order
        });
        rot[v] = darts;
    }
    return rot;
}

}  // namespace interdict

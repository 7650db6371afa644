#ifndef INTERDICT_EMBEDDING_HPP
#define INTERDICT_EMBEDDING_HPP

#include <map>
#include <vector>

#include "interdict/graph.hpp"

namespace interdict {

// A dart is a directed half of an edge. Edge e contributes dart 2e
// (tail -> head) and its reverse 2e+1 (head -> tail). Codes use edge ids,
// not array positions, so they survive graph surgery.
using DartId = long long;

inline DartId dart_fwd(EdgeId e) { return 2LL * e; }
inline DartId dart_rev_of_edge(EdgeId e) { return 2LL * e + 1; }
inline DartId dart_reverse(DartId d) { return d ^ 1LL; }
inline EdgeId dart_edge(DartId d) { return static_cast<EdgeId>(d >> 1); }
inline bool dart_is_forward(DartId d) { return (d & 1LL) == 0; }

// Per-vertex cyclic order of emanating darts.
using RotationSystem = std::map<VertexId, std::vector<DartId>>;

// Combinatorial embedding: a graph plus a rotation system, with faces and
// the primal/dual correspondence computed on construction. Faces are the
// cycles of pi∘rev; planarity is certified by Euler's formula per
// connected component.
class PlanarEmbedding {
  public:
    // Throws MalformedRotation if some dart is missing or misplaced, and
    // NotPlanarEmbedding if the Euler check fails (unless allow_nonplanar).
    static PlanarEmbedding build(const WeightedGraph& g, const RotationSystem& rotation,
                                 bool allow_nonplanar = false);

    const WeightedGraph& graph() const { return graph_; }
    const RotationSystem& rotation() const { return rotation_; }

    int num_faces() const { return static_cast<int>(faces_.size()); }
    const std::vector<std::vector<DartId>>& faces() const { return faces_; }
    int face_of(DartId d) const;

    VertexId dart_tail(DartId d) const;
    VertexId dart_head(DartId d) const;

    bool euler_holds() const { return euler_ok_; }

    // Vertices on the boundary walk of a face (B_G).
    std::vector<VertexId> boundary_vertices(int face) const;

    // Dual embedding. Vertices of the dual are face indices 0..F-1; edge
    // ids and dart codes carry over unchanged (D_G is the identity on ids),
    // as do weights and costs. Dual edge e runs face_of(2e) -> face_of(2e+1).
    PlanarEmbedding dual() const;

    // Face index containing both u and v on its boundary, or -1.
    int common_face(VertexId u, VertexId v) const;

  private:
    WeightedGraph graph_;
    RotationSystem rotation_;
    std::vector<std::vector<DartId>> faces_;
    std::map<DartId, int> face_of_;
    std::map<DartId, DartId> rot_next_;  // successor within the tail vertex's cyclic order
    bool euler_ok_ = false;

    void compute_faces();
    void check_euler();
};

// Rotation produced by sorting each vertex's emanating darts
// counterclockwise by the angle of an exact integer direction vector
// (scaled from rational geometry by the caller). Used by the
// coordinate-based planarization.
RotationSystem rotation_from_directions(
    const WeightedGraph& g, const std::map<DartId, std::pair<long long, long long>>& dir);

}  // namespace interdict

#endif

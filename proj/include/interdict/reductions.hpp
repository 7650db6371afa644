#ifndef INTERDICT_REDUCTIONS_HPP
#define INTERDICT_REDUCTIONS_HPP

#include <array>
#include <map>
#include <string>
#include <vector>

#include "interdict/embedding.hpp"
#include "interdict/graph.hpp"
#include "interdict/oracle.hpp"

namespace interdict {

// ---------------------------------------------------------------------------
// Stage 1: independent set -> budget-constrained flow improvement.
// One source-side edge per original vertex (capacity d, cost 1), a
// two-fan per original edge through its edge-gadget vertex, and a direct
// overflow edge per vertex carrying the leftover d - deg capacity.
// ---------------------------------------------------------------------------
struct FlowGadget {
    WeightedGraph source;  // simple undirected input
    int k = 0;             // target independent-set size
    int d = 0;             // max degree of the source (>= 1 by convention)
    WeightedGraph graph;   // directed flow network
    VertexId s = -1, t = -1;
    Weight budget = 0;  // == k

    std::map<VertexId, VertexId> vertex_node;  // source vertex -> its network vertex
    std::map<EdgeId, VertexId> edge_node;      // source edge -> its gadget vertex
    std::map<VertexId, EdgeId> pay_edge;       // source vertex -> its cost-1 source edge
    std::vector<EdgeId> e1, e2, e3, e4;        // the four construction layers

    // Forward certificate: an independent set -> the kept-edge set (all
    // free edges plus the paid source edges of the chosen vertices).
    std::vector<EdgeId> kept_edges_for(const std::vector<VertexId>& iset) const;
    // Backward: paid source edges of a kept-edge set -> source vertices.
    std::vector<VertexId> vertices_for(const std::vector<EdgeId>& kept) const;
};

FlowGadget is_to_bcfip(const WeightedGraph& g, int k);

// ---------------------------------------------------------------------------
// Stage 2: crossing removal. The flow network is drawn with straight
// segments on three columns (exact rational arithmetic), a vertex is added
// at every crossing, and capacities/costs are reassigned so that every
// unit of flow pays once per sweep cut.
// ---------------------------------------------------------------------------
struct PlanarFlowGadget {
    FlowGadget stage1;
    WeightedGraph graph;  // planarized network
    RotationSystem rotation;
    VertexId s = -1, t = -1;
    Weight budget = 0;  // (r + 3) * k * |E(source)|^2
    int r = 0;          // number of crossings

    std::map<EdgeId, EdgeId> parent;              // child edge -> stage-1 edge
    std::map<EdgeId, std::vector<EdgeId>> child;  // stage-1 edge -> chain, tail to head
    std::map<EdgeId, Weight> label;               // source edge -> 1..|E(source)|
    std::vector<VertexId> crossings;              // added vertices in sweep order

    PlanarEmbedding embedding() const;

    std::vector<EdgeId> kept_edges_for(const std::vector<VertexId>& iset) const;
};

PlanarFlowGadget planarize_bcfip(const FlowGadget& a);

// ---------------------------------------------------------------------------
// Stage 3: flow improvement -> directed shortest path interdiction.
// Dual graph, infinite-face split into path terminals, every edge tripled
// (toll copy / deletable free copy / reverse free copy).
// ---------------------------------------------------------------------------
struct PathGadget {
    WeightedGraph input;  // the flow instance this was built from
    VertexId input_s = -1, input_t = -1;

    WeightedGraph graph;  // directed, tripled dual
    RotationSystem rotation;
    VertexId u = -1, v = -1;
    Weight budget = 0;  // unchanged

    std::map<EdgeId, EdgeId> copy_toll;     // input edge -> weight-carrying copy
    std::map<EdgeId, EdgeId> copy_free;     // input edge -> deletable zero-weight copy
    std::map<EdgeId, EdgeId> copy_reverse;  // input edge -> reversed zero-weight copy
    std::vector<EdgeId> st_side;            // boundary edges between s and t on the walk

    // I on the flow side -> the deletable copies on the path side.
    std::vector<EdgeId> translate(const std::vector<EdgeId>& I) const;
};

PathGadget bcfip_to_dspeip(const PlanarEmbedding& emb, VertexId s, VertexId t, Weight B);

// ---------------------------------------------------------------------------
// Stage 4: shortest path -> minimum perfect matching on a planar bipartite
// graph. High-degree vertices become zero-weight cycles, edges become
// line-graph vertices, and each line-graph vertex splits into a 4-chain
// whose middle edge carries the original weight and cost.
// ---------------------------------------------------------------------------
struct MatchingGadget {
    WeightedGraph input;  // DSPEIP instance
    VertexId input_u = -1, input_v = -1;

    WeightedGraph degree3;  // after leaf + cycle gadgets
    RotationSystem degree3_rotation;
    VertexId u1 = -1, v1 = -1;
    std::map<EdgeId, EdgeId> f;  // input edge -> degree3 edge

    WeightedGraph line;  // undirected line graph plus the two terminals
    RotationSystem line_rotation;
    std::map<EdgeId, VertexId> line_vertex;  // degree3 edge -> line vertex

    WeightedGraph graph;  // the final matching instance
    RotationSystem rotation;
    VertexId u3 = -1, v3 = -1;
    Weight budget = 0;
    // per degree3 edge: the 4-chain vertices tail-side to head-side
    std::map<EdgeId, std::array<VertexId, 4>> chain;  // [f2d, f2c, f2b, f2a]
    std::map<EdgeId, EdgeId> mid;                     // degree3 edge -> middle (weighted) edge

    // I on the path side -> middle edges on the matching side.
    std::vector<EdgeId> translate(const std::vector<EdgeId>& I) const;
};

MatchingGadget dspeip_to_mpmeip(const WeightedGraph& g, const RotationSystem& rot, VertexId u,
                                VertexId v, Weight B);

// ---------------------------------------------------------------------------
// Stage 5: minimum perfect matching -> maximum matching, by two weight
// shifts on the same graph. First complement against the maximum weight W,
// then add 2 nu' + 2 to every edge so maximum matchings are forced perfect.
// ---------------------------------------------------------------------------
struct ShiftGadget {
    WeightedGraph input;
    WeightedGraph graph;  // same shape, shifted weights
    Weight budget = 0;
    Weight W = 0;         // max input weight
    Weight nu_prime = 0;  // max matching value under the complemented weights

    // nu_shifted(G \ I) = W|V|/2 - mu_input(G \ I) + |V| nu_prime + |V|
    Weight expected_nu(Weight mu_before) const;
};

ShiftGadget mpmeip_to_mmeip(const WeightedGraph& g, Weight B);

// ---------------------------------------------------------------------------
// End-to-end verification: build the whole chain from a small instance and
// check every stage relation with the exhaustive solvers.
// ---------------------------------------------------------------------------
struct ChainReport {
    bool ok = false;
    bool source_has_is = false;  // independent set of size >= k exists
    std::string failure;         // first failed check
    std::vector<std::string> checks;
};

ChainReport verify_chain(const WeightedGraph& g, int k, const OracleOptions& opt = {});

}  // namespace interdict

#endif

#include "interdict/reductions.hpp"

#include <algorithm>

#include "interdict/matching.hpp"

namespace interdict {

ShiftGadget mpmeip_to_mmeip(const WeightedGraph& g, Weight B) {
    if (g.directed) throw DirectedInput("matching instance must be undirected");
    g.validate();
    if (g.vertices.size() % 2 != 0)
        throw OddVertexCount("perfect matchings need an even vertex count");

    ShiftGadget out;
    out.input = g;
    out.budget = B;
    for (const Edge& e : g.edges) out.W = std::max(out.W, e.w);

    // first shift: w -> W - w turns minimization into maximization over
    // perfect matchings of fixed cardinality |V|/2
    WeightedGraph comp = g;
    for (Edge& e : comp.edges) e.w = out.W - e.w;
    out.nu_prime = nu(comp);

    // second shift: adding 2 nu' + 2 per edge makes every maximum matching
    // take as many edges as possible, i.e. be perfect when one exists
    out.graph = comp;
    for (Edge& e : out.graph.edges) e.w += 2 * out.nu_prime + 2;
    return out;
}

Weight ShiftGadget::expected_nu(Weight mu_before) const {
    Weight n = static_cast<Weight>(input.vertices.size());
    return W * n / 2 - mu_before + n * nu_prime + n;
}

}  // namespace interdict

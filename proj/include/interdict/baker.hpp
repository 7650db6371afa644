#ifndef INTERDICT_BAKER_HPP
#define INTERDICT_BAKER_HPP

#include <utility>
#include <vector>

#include "interdict/graph.hpp"
#include "interdict/layering.hpp"
#include "interdict/tw_interdict.hpp"

namespace interdict {

struct PtasOptions {
    bool strict_width = false;  // fail when a slice decomposition is wider than 3k-1
    TwOptions tw;
};

struct PtasRun {
    double eps = 0;
    int k = 0;

    int chosen_i = -1;
    Weight chosen_b = -1;
    std::vector<EdgeId> chosen;  // the returned deletion set, sorted
    Weight spent = 0;
    Weight nu_after = 0;  // recomputed max matching weight of G minus chosen

    struct Cell {
        int i;
        Weight b;
        Weight value;
    };
    std::vector<Cell> table;  // full (i, b) diagnostic sweep
};

// Residue-class slicing: F_i collects every k-th inter-level edge class
// starting at i. Returns (the graph minus F_i, the subgraph induced by the
// F_i edges). Same-level edges always stay on the first side.
std::pair<WeightedGraph, WeightedGraph> slice(const WeightedGraph& g, const Layering& lay, int k, int i);

// Layered (1+eps)-approximation for matching interdiction with budget B.
// eps above 1 is clamped to 1; eps <= 0 is rejected. Deterministic: ties
// across the sweep go to the smallest i, then the smallest b.
PtasRun ptas_mmeip(const WeightedGraph& g, Weight B, double eps, const PtasOptions& opt = {});

}  // namespace interdict

#endif

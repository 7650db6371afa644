#ifndef INTERDICT_TW_INTERDICT_HPP
#define INTERDICT_TW_INTERDICT_HPP

#include <vector>

#include "interdict/graph.hpp"
#include "interdict/treewidth.hpp"

namespace interdict {

// Exact per-budget answers to edge interdiction against maximum weight
// matching: value[b] = min over deletion sets I with c(I) <= b of the
// maximum matching weight of G \ I.
struct BudgetTable {
    Weight budget = 0;
    std::vector<Weight> value;                 // index 0..budget
    std::vector<std::vector<EdgeId>> witness;  // sorted deletion sets
};

struct TwOptions {
    long long state_cap = 50'000'000;
    Weight table_cap = 1'000'000;  // largest representable budget axis
};

// Dynamic program over a nice tree decomposition. Per node we keep a
// Pareto frontier of leader strategies: (spent, profile) where profile[S]
// is the best matching weight of the processed subgraph with exactly the
// bag subset S matched inside it. Leader branches delete/keep at each
// edge's designated node; follower choices fold into the profile maxima.
// Exactness is certified by the oracle-equivalence test suite, and every
// run self-checks monotonicity plus its own witnesses.
BudgetTable solve_tw_mmeip(const WeightedGraph& g, const TreeDecomposition& nice_td, Weight B,
                           const TwOptions& opt = {});

}  // namespace interdict

#endif

#ifndef INTERDICT_ORACLE_HPP
#define INTERDICT_ORACLE_HPP

#include <vector>

#include "interdict/graph.hpp"

namespace interdict {

enum class ProblemKind { kMMEIP, kMPMEIP, kDSPEIP, kBCFIP };

struct InterdictionInstance {
    WeightedGraph graph;
    Weight budget = 0;
    ProblemKind kind = ProblemKind::kMMEIP;
    // s/t for BCFIP, u/v for DSPEIP; unused otherwise
    VertexId s = -1;
    VertexId t = -1;
};

struct InterdictionResult {
    std::vector<EdgeId> chosen;  // deleted edges (kept edges for BCFIP)
    Weight spent = 0;
    Weight objective = 0;  // kInfWeight encodes an infinite objective
};

struct OracleOptions {
    // Maximum number of cost-positive candidate edges to enumerate over.
    int max_ground_edges = 22;
    int max_is_vertices = 24;
};

// Exhaustive ground-truth solver. Enumerates subsets of the cost-positive
// edges in lexicographic edge-id order; cost-free edges are folded in by
// monotonicity (always deleted for MMEIP/DSPEIP/MPMEIP, always kept for
// BCFIP). For MPMEIP the perfect-matching assumption is asserted on every
// enumerated deletion set. Throws TooLargeForOracle past the guard.
InterdictionResult oracle_interdict(const InterdictionInstance& inst, const OracleOptions& opt = {});

// Exact maximum independent set by branch and bound; lexicographically
// smallest witness among the maximum ones.
std::vector<VertexId> max_independent_set(const WeightedGraph& g, int max_vertices = 24);

}  // namespace interdict

#endif

#ifndef INTERDICT_MATCHING_HPP
#define INTERDICT_MATCHING_HPP

#include <optional>
#include <vector>

#include "interdict/graph.hpp"

namespace interdict {

enum class MatchingMode {
    kMaxWeight,         // nu(G)
    kMinWeightPerfect,  // mu(G)
    kMaxWeightPerfect,  // gamma(G)
};

struct Matching {
    std::vector<EdgeId> edges;
    Weight weight = 0;
};

// Exact solver. Bipartite graphs go through the Hungarian algorithm;
// everything else through branch and bound (fine at desk scale, where all
// non-bipartite inputs are small). Perfect modes return nullopt when no
// perfect matching exists (the mu = infinity convention). Self-loops can
// never be matched and are ignored.
std::optional<Matching> solve_matching(const WeightedGraph& g, MatchingMode mode);

Weight nu(const WeightedGraph& g);                  // max weight matching value
std::optional<Weight> mu(const WeightedGraph& g);   // min weight perfect matching value
std::optional<Weight> gamma_perfect(const WeightedGraph& g);  // max weight perfect matching

}  // namespace interdict

#endif

#ifndef INTERDICT_TREEWIDTH_HPP
#define INTERDICT_TREEWIDTH_HPP

#include <string>
#include <utility>
#include <vector>

#include "interdict/graph.hpp"
#include "interdict/layering.hpp"

namespace interdict {

enum class NiceKind { kNone, kLeaf, kIntroduce, kForget, kJoin };

struct TreeDecomposition {
    std::vector<std::vector<VertexId>> bags;       // sorted vertex lists
    std::vector<std::pair<int, int>> tree_edges;   // undirected

    // Populated by make_nice.
    bool nice = false;
    int root = -1;
    std::vector<NiceKind> kind;
    std::vector<std::vector<int>> children;
    std::vector<VertexId> pivot;  // introduced / forgotten vertex, -1 otherwise

    int width() const;
};

struct DecompositionReport {
    bool valid = false;
    std::string violation;  // first violated condition, empty when valid
};

// Elimination-order builder: vertices leave in (level, current degree, id)
// order, bags are closed neighborhoods in the fill graph. Levels default to
// zero everywhere, which degrades to plain min-degree. Always emits a tree
// (components are chained through their elimination roots).
TreeDecomposition decompose(const WeightedGraph& g, const std::map<VertexId, int>* level = nullptr);

// Decomposition of the subgraph induced by the levels in [lo, hi].
TreeDecomposition decompose_slice(const WeightedGraph& g, const Layering& lay, int lo, int hi);

// Checks the three decomposition conditions (vertex coverage, edge
// coverage, connected occupancy subtrees) plus tree shape.
DecompositionReport validate_decomposition(const TreeDecomposition& td, const WeightedGraph& g);

// Rooted normal form: leaf / introduce / forget / join nodes, empty root
// bag, identical width. Throws InvalidDecomposition on invalid input.
TreeDecomposition make_nice(const TreeDecomposition& td, const WeightedGraph& g);

}  // namespace interdict

#endif

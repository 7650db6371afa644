#ifndef INTERDICT_JSON_IO_HPP
#define INTERDICT_JSON_IO_HPP

#include <optional>
#include <string>

#include "interdict/embedding.hpp"
#include "interdict/graph.hpp"
#include "interdict/treewidth.hpp"

namespace interdict {

// On-disk instance: the graph, an optional rotation system (darts 2e/2e+1
// in cyclic order per vertex) and optional terminals.
struct InstanceFile {
    WeightedGraph graph;
    std::optional<RotationSystem> rotation;
    std::optional<VertexId> s, t;
};

InstanceFile read_instance(const std::string& path);
InstanceFile parse_instance(const std::string& text);

std::string instance_to_json(const InstanceFile& inst);
void write_instance(const std::string& path, const InstanceFile& inst);

std::string decomposition_to_json(const TreeDecomposition& td);

}  // namespace interdict

#endif

#include "interdict/json_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace interdict {

using nlohmann::json;

InstanceFile parse_instance(const std::string& text) {
    json j = json::parse(text);
    InstanceFile inst;
    inst.graph.directed = j.value("directed", false);
    for (const auto& v : j.at("vertices")) inst.graph.add_vertex(v.get<VertexId>());
    for (const auto& e : j.at("edges"))
        inst.graph.add_edge_with_id(e.at("id").get<EdgeId>(), e.at("tail").get<VertexId>(),
                                    e.at("head").get<VertexId>(), e.value("w", 0LL),
                                    e.value("c", 0LL));
    inst.graph.validate();
    if (j.contains("rotation")) {
        RotationSystem rot;
        for (const auto& [key, darts] : j.at("rotation").items())
            rot[std::stoi(key)] = darts.get<std::vector<DartId>>();
        inst.rotation = std::move(rot);
    }
    if (j.contains("terminals")) {
        const auto& t = j.at("terminals");
        if (t.contains("s")) inst.s = t.at("s").get<VertexId>();
        if (t.contains("t")) inst.t = t.at("t").get<VertexId>();
    }
    return inst;
}

InstanceFile read_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_instance(buf.str());
}

std::string instance_to_json(const InstanceFile& inst) {
    json j;
    j["directed"] = inst.graph.directed;
    j["vertices"] = inst.graph.vertices;
    j["edges"] = json::array();
    for (const Edge& e : inst.graph.edges)
        j["edges"].push_back({{"id", e.id}, {"tail", e.tail}, {"head", e.head}, {"w", e.w},
                              {"c", e.c}});
    if (inst.rotation) {
        json rot = json::object();
        for (const auto& [v, darts] : *inst.rotation) rot[std::to_string(v)] = darts;
        j["rotation"] = rot;
    }
    if (inst.s || inst.t) {
        json t = json::object();
        if (inst.s) t["s"] = *inst.s;
        if (inst.t) t["t"] = *inst.t;
        j["terminals"] = t;
    }
    return j.dump(2) + "\n";
}

void write_instance(const std::string& path, const InstanceFile& inst) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    out << instance_to_json(inst);
}

std::string decomposition_to_json(const TreeDecomposition& td) {
    json j;
    j["nodes"] = json::array();
    for (std::size_t i = 0; i < td.bags.size(); ++i)
        j["nodes"].push_back({{"id", i}, {"bag", td.bags[i]}});
    j["edges"] = json::array();
    for (const auto& [a, b] : td.tree_edges) j["edges"].push_back({a, b});
    return j.dump(2) + "\n";
}

}  // namespace interdict

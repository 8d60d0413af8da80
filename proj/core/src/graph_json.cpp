#include "critgraph/graph_json.hpp"

#include <json.hpp>

#include "critgraph/errors.hpp"

namespace critgraph {

using nlohmann::json;

static EdgeKind kind_from_name(const std::string& s) {
    if (s == "link") return EdgeKind::Link;
    if (s == "loop") return EdgeKind::Loop;
    if (s == "half_loop") return EdgeKind::HalfLoop;
    throw ValidationError("unknown edge kind: " + s);
}

static SignedMultigraph graph_from(const json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
        throw ValidationError("graph JSON needs \"vertices\" and \"edges\"");
    SignedMultigraph g;
    g.vertices = j.at("vertices").get<int>();
    const auto& edges = j.at("edges");
    if (!edges.is_array()) throw ValidationError("\"edges\" must be an array");
    g.edges.resize(edges.size());
    std::vector<bool> seen(edges.size(), false);
    for (const auto& je : edges) {
        int id = je.at("id").get<int>();
        if (id < 0 || id >= static_cast<int>(edges.size()) || seen[id])
            throw ValidationError("edge ids must be unique and dense 0..|E|-1");
        seen[id] = true;
        Edge e;
        e.tail = je.at("tail").get<int>();
        e.head = je.at("head").get<int>();
        e.kind = je.contains("kind") ? kind_from_name(je.at("kind").get<std::string>())
                                     : EdgeKind::Link;
        e.sign = je.contains("sign") ? je.at("sign").get<int>() : +1;
        g.edges[id] = e;
    }
    validate(g);
    return g;
}

SignedMultigraph graph_from_json(const std::string& text) {
    return graph_from(json::parse(text));
}

static json graph_to(const SignedMultigraph& g) {
    json j;
    j["vertices"] = g.vertices;
    j["edges"] = json::array();
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        const Edge& e = g.edges[i];
        j["edges"].push_back({{"id", static_cast<int>(i)},
                              {"tail", e.tail},
                              {"head", e.head},
                              {"kind", kind_name(e.kind)},
                              {"sign", e.sign}});
    }
    return j;
}

std::string graph_to_json(const SignedMultigraph& g) { return graph_to(g).dump(2); }

bool json_has_voltage(const std::string& text) {
    json j = json::parse(text);
    return j.is_object() && j.contains("voltage") && j.contains("group");
}

VoltageGraph voltage_from_json(const std::string& text) {
    json j = json::parse(text);
    if (!j.is_object() || !j.contains("voltage") || !j.contains("group"))
        throw ValidationError("voltage graph JSON needs \"group\" and \"voltage\"");
    VoltageGraph vg;
    vg.base = graph_from(j);
    const auto& jg = j.at("group");
    int order = jg.at("order").get<int>();
    if (jg.contains("table"))
        vg.group = group_from_table(jg.at("table").get<std::vector<std::vector<int>>>());
    else
        vg.group = group_cyclic(order);
    if (vg.group.order != order) throw ValidationError("group order does not match table");
    vg.voltage.assign(vg.base.edges.size(), 0);
    for (const auto& [key, val] : j.at("voltage").items()) {
        int id;
        try {
            id = std::stoi(key);
        } catch (const std::exception&) {
            throw ValidationError("voltage key is not an edge id: " + key);
        }
        if (id < 0 || id >= static_cast<int>(vg.voltage.size()))
            throw ValidationError("voltage references unknown edge id " + key);
        vg.voltage[id] = val.get<int>();
    }
    validate(vg);
    return vg;
}

std::string voltage_to_json(const VoltageGraph& vg) {
    json j = json::parse(graph_to_json(vg.base));
    j["group"] = {{"order", vg.group.order}, {"table", vg.group.cayley}};
    json volts = json::object();
    for (std::size_t i = 0; i < vg.voltage.size(); ++i)
        volts[std::to_string(i)] = vg.voltage[i];
    j["voltage"] = volts;
    return j.dump(2);
}

} // namespace critgraph

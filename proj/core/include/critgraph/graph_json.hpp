#pragma once

#include <string>

#include "critgraph/signed_multigraph.hpp"
#include "critgraph/voltage_graph.hpp"

namespace critgraph {

// Shared JSON schema:
// {"vertices": n,
//  "edges": [{"id", "tail", "head", "kind": "link"|"loop"|"half_loop", "sign": +-1}],
//  "group"?: {"order", "table"},          // table omitted -> cyclic
//  "voltage"?: {"<edge id>": element}}
//
// Parse errors (malformed JSON) raise std::runtime_error from the JSON layer;
// schema/semantic problems raise ValidationError.
SignedMultigraph graph_from_json(const std::string& text);
std::string graph_to_json(const SignedMultigraph& g);

bool json_has_voltage(const std::string& text);
VoltageGraph voltage_from_json(const std::string& text);
std::string voltage_to_json(const VoltageGraph& vg);

} // namespace critgraph

#include "critgraph/voltage_graph.hpp"

#include "critgraph/errors.hpp"

namespace critgraph {

void validate(const VoltageGraph& vg) {
    validate(vg.base);
    for (std::size_t i = 0; i < vg.base.edges.size(); ++i) {
        const Edge& e = vg.base.edges[i];
        if (e.sign != +1)
            throw ValidationError("voltage base must be all-positive (edge " +
                                  std::to_string(i) + ")");
        if (e.kind == EdgeKind::HalfLoop)
            throw ValidationError("voltage base must not contain half-loops (edge " +
                                  std::to_string(i) + ")");
    }
    if (vg.voltage.size() != vg.base.edges.size())
        throw ValidationError("every edge needs a voltage");
    for (int b : vg.voltage)
        if (b < 0 || b >= vg.group.order)
            throw ValidationError("voltage element index out of range");
}

} // namespace critgraph

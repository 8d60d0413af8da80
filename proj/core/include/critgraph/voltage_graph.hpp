#pragma once

#include <vector>

#include "critgraph/finite_group.hpp"
#include "critgraph/signed_multigraph.hpp"

namespace critgraph {

// Base multigraph (all-positive, no half-loops) with edge voltages in a
// finite group.
struct VoltageGraph {
    SignedMultigraph base;
    FiniteGroup group;
    std::vector<int> voltage; // per edge id
};

void validate(const VoltageGraph& vg);

} // namespace critgraph

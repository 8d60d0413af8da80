#pragma once

#include <string>
#include <vector>

namespace critgraph {

enum class EdgeKind { Link, Loop, HalfLoop };

struct Edge {
    int tail = 0;
    int head = 0;
    EdgeKind kind = EdgeKind::Link;
    int sign = +1; // +1 or -1

    bool operator==(const Edge&) const = default;
};

// Multigraph with signs, full loops and half-loops. Edge ids are positions in
// `edges` (dense 0..|E|-1); the stored (tail, head) order is the fixed
// orientation.
struct SignedMultigraph {
    int vertices = 0;
    std::vector<Edge> edges;

    bool operator==(const SignedMultigraph&) const = default;
};

// Throws ValidationError with a descriptive message on any invariant breach.
void validate(const SignedMultigraph& g);

// Flip the sign of every link with exactly one endpoint in s.
SignedMultigraph switched(const SignedMultigraph& g, const std::vector<bool>& s);

struct BalanceReport {
    int components = 0;
    std::vector<int> component_of;     // per vertex
    std::vector<bool> balanced;        // per component
    std::vector<int> potential;        // per vertex, +-1; switches balanced comps to all-positive
    std::vector<std::vector<int>> witness; // per component: edge ids of an unbalanced cycle (empty if balanced)

    bool all_balanced() const {
        for (bool b : balanced)
            if (!b) return false;
        return true;
    }
};

BalanceReport balance_classify(const SignedMultigraph& g);

std::string kind_name(EdgeKind k);

} // namespace critgraph

#pragma once

#include "critgraph/incidence.hpp"
#include "critgraph/report.hpp"
#include "critgraph/signed_multigraph.hpp"

namespace critgraph {

// Two signed graphs over one underlying multigraph; g2 plays the role of the
// voltage assignment for the double cover of g1.
struct DoubleCoverSpec {
    SignedMultigraph g1, g2;
};

void validate(const DoubleCoverSpec& spec); // UNDERLYING_MISMATCH on breach

enum class DoubleCase { Case1 = 1, Case2 = 2, Case3 = 3 };

struct DoubleCoverResult {
    SignedMultigraph total; // vertices: v_+ = v, v_- = n + v
    BigIntMatrix pi1, pi2;  // |V| x 2|V|: v_+,v_- -> +v resp. +v,-v
    std::vector<int> iota;  // vertex permutation v_+ <-> v_-
    // base edge id -> lifted edge ids; lift_minus = -1 for a half-loop with
    // disagreeing signs (single crossing edge)
    std::vector<int> lift_plus, lift_minus;
};

DoubleCoverResult double_cover(const DoubleCoverSpec& spec);

// Case 1: total connected unbalanced; Case 2: connected balanced; Case 3:
// disconnected (two copies swapped by iota). Requires connected base.
DoubleCase classify(const DoubleCoverSpec& spec);

// Theorem checks: order identity (extra factor 2 in Case 1), odd-prime Sylow
// splitting, pi pi^T = 2 and iota-commutation matrix identities; with
// `exactness`, the induced complex K(g1) -> K(total) -> K(g2) and its middle
// homology. Disconnected bases are verified componentwise.
Report verify_double_complex(const DoubleCoverSpec& spec, bool exactness = false);

} // namespace critgraph

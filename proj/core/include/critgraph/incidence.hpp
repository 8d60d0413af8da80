#pragma once

#include "critgraph/bigint_matrix.hpp"
#include "critgraph/presented_group.hpp"
#include "critgraph/signed_multigraph.hpp"

namespace critgraph {

// The two vertex-by-edge incidence maps of a signed graph. They differ only
// on negative half-loops (del: +2, delta: +1).
struct IncidencePair {
    BigIntMatrix del;
    BigIntMatrix delta;
};

IncidencePair incidence(const SignedMultigraph& g);

// L = del * delta^T
BigIntMatrix laplacian(const SignedMultigraph& g);

struct CriticalGroup {
    AbelianGroup group;
    PresentedGroup presentation; // im del / im L inside Z^V
};

CriticalGroup critical_group(const SignedMultigraph& g);

// Cross-check presentation Z^E / (im delta^T + ker del); isomorphic to the
// vertex presentation.
AbelianGroup critical_group_edge(const SignedMultigraph& g);

enum class ImageCharacter { FullSumZero, EvenSum };

// Per component: the image of del restricted to the component is the sum-zero
// lattice (balanced) or the even-sum lattice (unbalanced).
std::vector<ImageCharacter> del_image_character(const SignedMultigraph& g);

// Brute-force |K(g)| by enumerating column bases of del and weighting them
// 1/2/4; throws CapExceeded when |E| > cap.
Int matrix_tree_count(const SignedMultigraph& g, std::size_t cap = 22);

} // namespace critgraph

#pragma once

#include "critgraph/abelian_group.hpp"
#include "critgraph/coverings.hpp"
#include "critgraph/report.hpp"
#include "critgraph/signed_multigraph.hpp"
#include "critgraph/voltage_graph.hpp"

namespace critgraph {

// Unsigned structural families (all-positive links)
SignedMultigraph build_path(int n);
SignedMultigraph build_cycle(int n);
SignedMultigraph build_complete(int n);
// K_{n,n} minus the perfect matching, plus k parallel matching edges per pair;
// vertices 0..n-1 and n..2n-1 are the bipartition blocks.
SignedMultigraph build_crown(int n, int k);
// K_n with k half-loops per vertex; sign +-1 applies to links and half-loops
// alike (the all-negative variant is the crown double-cover voltage side).
SignedMultigraph build_complete_halfloops(int n, int k, int sign);
// n-cube in binary vertex order with m negative half-loops per vertex.
SignedMultigraph build_cube_signed(int n, int m);

// The running introductory example: two vertices, six parallel links, three
// loops at vertex 0 — unsigned, signed, and as a Z2 voltage graph.
SignedMultigraph intro_base();
SignedMultigraph intro_signed();
VoltageGraph intro_voltage();

// Two-vertex Z3 voltage graph whose derived cover is the octahedron.
VoltageGraph octahedron_voltage();

// Closed form for K(Crown_n^{(k)}): n odd for any k, or n even with
// gcd(k-1, n) = 1 (OUT_OF_REGIME otherwise).
AbelianGroup crown_formula(int n, int k);

// Sylow p-part of K(Q_n^{(m)}) for odd p, as the p-part of the binomial
// direct sum; EVEN_PRIME for p = 2.
AbelianGroup cube_sylow_formula(int n, int m, const Int& p);

// Grid verifiers: closed forms against direct computation.
Report verify_crown(const std::vector<int>& ns, const std::vector<int>& ks);
Report verify_cube(int max_n, int max_m, const std::vector<int>& primes,
                   int recursion_max_n);
Report verify_cover_families();

} // namespace critgraph

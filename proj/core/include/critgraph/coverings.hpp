#pragma once

#include <string>
#include <vector>

#include "critgraph/incidence.hpp"
#include "critgraph/report.hpp"
#include "critgraph/voltage_graph.hpp"

namespace critgraph {

// Regular |H|-fold cover derived from a voltage graph. Cover vertex v_h has
// index v*m + h, cover edge e_h has id e*m + h; e_h runs from u_h to
// v_{beta(e)h} for base edge e = (u,v).
struct DerivedCover {
    SignedMultigraph total;
    int fiber = 1;            // |H|
    BigIntMatrix pi_vertex;   // |V| x |V~|, forgets subscripts

    int vertex_label(int v, int h) const { return v * fiber + h; }
    int edge_label(int e, int h) const { return e * fiber + h; }
};

DerivedCover derive_cover(const VoltageGraph& vg);

// Integer realization of the reduced group algebra maps, in the basis
// {T_h : h != identity} with T_1 = -sum of the others.
struct ReducedRealization {
    BigIntMatrix del_bar;      // (m-1)|V| x (m-1)|E|
    BigIntMatrix del_bar_star; // (m-1)|E| x (m-1)|V|
    BigIntMatrix lap_bar;      // del_bar * del_bar_star
};

ReducedRealization reduced_realization(const VoltageGraph& vg);

AbelianGroup voltage_critical_group(const VoltageGraph& vg);

struct CoveringReport {
    Report report;
    AbelianGroup k_total, k_base, k_voltage;
};

// Checks |K(total)| = |K(voltage)| * |K(base)|, Sylow splitting at primes not
// dividing |H|, and (optionally) the induced maps pi / pi^T on presentations.
CoveringReport verify_covering_sequence(const VoltageGraph& vg, bool exactness = false);

// The voltage graph HG: every edge of g replicated once per group element,
// with the group element as its voltage.
VoltageGraph hg_construct(const SignedMultigraph& g, const FiniteGroup& h);

// Closed form for K(HG) from the base degree sequence; m = |H| >= 2.
AbelianGroup hg_closed_form(const std::vector<Int>& degrees, int m);

enum class CoverFamily { Path, Cycle, Complete };

// Closed forms for the critical group of the derived cover of HG when the
// base is a path / cycle / complete graph; throws HypothesisViolated outside
// the stated regimes.
AbelianGroup family_cover_formula(CoverFamily kind, int nverts, int m);

} // namespace critgraph

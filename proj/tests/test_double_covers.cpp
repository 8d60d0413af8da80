#include <doctest.h>

#include <algorithm>
#include <random>
#include <tuple>

#include "critgraph/coverings.hpp"
#include "critgraph/double_cover.hpp"
#include "critgraph/errors.hpp"
#include "critgraph/families.hpp"
#include "critgraph/incidence.hpp"
#include "critgraph/normal_forms.hpp"
#include "test_util.hpp"

using namespace critgraph;

namespace {

std::vector<std::tuple<int, int, int, int>> edge_set(const SignedMultigraph& g,
                                                     const std::vector<int>& vmap) {
    std::vector<std::tuple<int, int, int, int>> out;
    for (const Edge& e : g.edges) {
        int a = vmap[e.tail], b = vmap[e.head];
        out.emplace_back(std::min(a, b), std::max(a, b), static_cast<int>(e.kind), e.sign);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> identity_map(int n) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = i;
    return v;
}

// connected underlying graph with two independent random sign assignments
DoubleCoverSpec random_spec(std::mt19937& rng, int max_v, int max_extra) {
    std::uniform_int_distribution<int> nv(1, max_v);
    SignedMultigraph base;
    base.vertices = nv(rng);
    for (int v = 1; v < base.vertices; ++v) {
        std::uniform_int_distribution<int> pd(0, v - 1);
        base.edges.push_back({pd(rng), v, EdgeKind::Link, +1});
    }
    std::uniform_int_distribution<int> xd(0, max_extra);
    std::uniform_int_distribution<int> vd(0, base.vertices - 1);
    std::uniform_int_distribution<int> kd(0, 2);
    int extra = xd(rng);
    for (int i = 0; i < extra; ++i) {
        int u = vd(rng), v = vd(rng);
        Edge e;
        if (u == v) {
            e.tail = e.head = u;
            e.kind = kd(rng) ? EdgeKind::HalfLoop : EdgeKind::Loop;
        } else {
            e.tail = u;
            e.head = v;
        }
        base.edges.push_back(e);
    }
    DoubleCoverSpec spec{base, base};
    for (Edge& e : spec.g1.edges) e.sign = (rng() & 1) ? +1 : -1;
    for (Edge& e : spec.g2.edges) e.sign = (rng() & 1) ? +1 : -1;
    return spec;
}

// the single-vertex Case 1 instance: one half-loop agreeing negative, one
// disagreeing (positive on the g1 side)
DoubleCoverSpec case1_spec() {
    SignedMultigraph g1, g2;
    g1.vertices = g2.vertices = 1;
    g1.edges = {{0, 0, EdgeKind::HalfLoop, -1}, {0, 0, EdgeKind::HalfLoop, +1}};
    g2.edges = {{0, 0, EdgeKind::HalfLoop, -1}, {0, 0, EdgeKind::HalfLoop, -1}};
    return {g1, g2};
}

} // namespace

TEST_CASE("double cover construction") {
    // unsigned intro graph doubled along its signed companion gives the
    // 4-vertex, 18-edge unsigned cover, matching the voltage-graph derivation
    DoubleCoverResult dr = double_cover({intro_base(), intro_signed()});
    SignedMultigraph tilde = derive_cover(intro_voltage()).total;
    // double-cover labels (v_+, v_-) = (v, 2 + v); derived labels v*2 + h
    std::vector<int> vmap{0, 2, 1, 3};
    CHECK(edge_set(dr.total, vmap) == edge_set(tilde, identity_map(4)));

    // identical factors: two disjoint copies
    DoubleCoverResult two = double_cover({intro_signed(), intro_signed()});
    CHECK(balance_classify(two.total).components == 2);
    for (std::size_t e = 0; e < intro_signed().edges.size(); ++e) {
        CHECK(two.lift_plus[e] >= 0);
        CHECK(two.lift_minus[e] >= 0);
    }

    // mismatched underlying graphs are rejected
    DoubleCoverSpec bad{intro_base(), intro_base()};
    bad.g2.edges[0].kind = EdgeKind::Loop;
    bad.g2.edges[0].head = bad.g2.edges[0].tail;
    CHECK_THROWS_AS(validate(bad), ValidationError);
}

TEST_CASE("cube recursion as a double cover") {
    // Q2 plus (one positive + two negative) half-loops, doubled along
    // Q2 with three negative half-loops, yields Q3 with two negative
    // half-loops per vertex
    SignedMultigraph under = build_cube_signed(2, 3);
    DoubleCoverSpec spec{under, under};
    for (int v = 0; v < 4; ++v) spec.g1.edges[4 + 3 * v].sign = +1; // first half-loop
    DoubleCoverResult dr = double_cover(spec);

    SignedMultigraph q3 = build_cube_signed(3, 2);
    CHECK(dr.total.vertices == q3.vertices);
    CHECK(edge_set(dr.total, identity_map(8)) == edge_set(q3, identity_map(8)));
}

TEST_CASE("crown graphs as double covers") {
    // K5 with one positive half-loop per vertex, doubled along its all-negative
    // companion, is the crown graph with one matching edge, i.e. K_{5,5}
    DoubleCoverSpec spec{build_complete_halfloops(5, 1, +1),
                         build_complete_halfloops(5, 1, -1)};
    DoubleCoverResult dr = double_cover(spec);
    SignedMultigraph crown = build_crown(5, 1);
    CHECK(edge_set(dr.total, identity_map(10)) == edge_set(crown, identity_map(10)));
    CHECK(classify(spec) == DoubleCase::Case2);

    Report rep = verify_double_complex(spec, true);
    CHECK(rep.ok());
    CHECK(critical_group(dr.total).group.order() ==
          critical_group(spec.g1).group.order() * critical_group(spec.g2).group.order());
}

TEST_CASE("swapping the factors switches the cover at the minus copy") {
    std::mt19937 rng(61);
    for (int t = 0; t < 40; ++t) {
        DoubleCoverSpec spec = random_spec(rng, 4, 5);
        SignedMultigraph fwd = double_cover(spec).total;
        SignedMultigraph rev = double_cover({spec.g2, spec.g1}).total;
        std::vector<bool> minus(fwd.vertices, false);
        for (int v = spec.g1.vertices; v < fwd.vertices; ++v) minus[v] = true;
        CHECK(switched(fwd, minus) == rev);
    }
}

TEST_CASE("classification") {
    CHECK(classify({intro_signed(), intro_signed()}) == DoubleCase::Case3);
    CHECK(classify({intro_base(), intro_signed()}) == DoubleCase::Case2);
    CHECK(classify(case1_spec()) == DoubleCase::Case1);

    SignedMultigraph disc;
    disc.vertices = 2;
    DoubleCoverSpec bad{disc, disc};
    CHECK_THROWS_AS(classify(bad), ValidationError);

    // the cover splits exactly when the product-sign graph is balanced
    std::mt19937 rng(67);
    for (int t = 0; t < 40; ++t) {
        DoubleCoverSpec spec = random_spec(rng, 4, 5);
        SignedMultigraph prod = spec.g1;
        for (std::size_t e = 0; e < prod.edges.size(); ++e)
            prod.edges[e].sign = spec.g1.edges[e].sign * spec.g2.edges[e].sign;
        CHECK((classify(spec) == DoubleCase::Case3) ==
              balance_classify(prod).all_balanced());
    }
}

TEST_CASE("projection and involution lattice identities") {
    std::mt19937 rng(71);
    for (int t = 0; t < 25; ++t) {
        DoubleCoverSpec spec = random_spec(rng, 4, 5);
        DoubleCoverResult dr = double_cover(spec);
        BigIntMatrix del_t = incidence(dr.total).del;
        BigIntMatrix lap_t = laplacian(dr.total);
        const BigIntMatrix* pis[2] = {&dr.pi1, &dr.pi2};
        const SignedMultigraph* gs[2] = {&spec.g1, &spec.g2};
        for (int i = 0; i < 2; ++i) {
            const BigIntMatrix& pi = *pis[i];
            // pi carries the cover lattices onto the base lattices
            CHECK(hnf(pi * del_t).basis == hnf(incidence(*gs[i]).del).basis);
            CHECK(hnf(pi * lap_t).basis == hnf(laplacian(*gs[i])).basis);
            // pi^T intertwines the Laplacians
            CHECK(lap_t * pi.transpose() == pi.transpose() * laplacian(*gs[i]));
        }
    }
}

TEST_CASE("double cover verifier on the running examples") {
    Report ri = verify_double_complex({intro_base(), intro_signed()}, true);
    if (!ri.ok())
        for (const Check& c : ri.checks)
            if (!c.pass) MESSAGE(c.name << ": " << c.detail);
    CHECK(ri.ok());
    DoubleCoverResult dr = double_cover({intro_base(), intro_signed()});
    CHECK(critical_group(dr.total).group.order() == 324); // 54 * 6

    // Case 1: order gains the factor 2 and the middle homology is Z2
    DoubleCoverSpec c1 = case1_spec();
    Report r1 = verify_double_complex(c1, true);
    if (!r1.ok())
        for (const Check& c : r1.checks)
            if (!c.pass) MESSAGE(c.name << ": " << c.detail);
    CHECK(r1.ok());
    DoubleCoverResult d1 = double_cover(c1);
    Int o1 = critical_group(c1.g1).group.order();
    Int o2 = critical_group(c1.g2).group.order();
    CHECK(critical_group(d1.total).group.order() == 2 * o1 * o2);
}

TEST_CASE("double cover verifier on random instances") {
    std::mt19937 rng(73);
    for (int t = 0; t < 110; ++t) {
        DoubleCoverSpec spec = random_spec(rng, 4, 5);
        Report rep = verify_double_complex(spec, true);
        if (!rep.ok())
            for (const Check& c : rep.checks)
                if (!c.pass) MESSAGE("t=" << t << " " << c.name << ": " << c.detail);
        CHECK(rep.ok());
    }
    // disconnected underlying graphs are handled componentwise
    for (int t = 0; t < 20; ++t) {
        SignedMultigraph base = testutil::random_signed_graph(rng, 5, 6);
        DoubleCoverSpec spec{base, base};
        for (Edge& e : spec.g1.edges) e.sign = (rng() & 1) ? +1 : -1;
        for (Edge& e : spec.g2.edges) e.sign = (rng() & 1) ? +1 : -1;
        Report rep = verify_double_complex(spec, true);
        if (!rep.ok())
            for (const Check& c : rep.checks)
                if (!c.pass) MESSAGE("t=" << t << " " << c.name << ": " << c.detail);
        CHECK(rep.ok());
    }
}

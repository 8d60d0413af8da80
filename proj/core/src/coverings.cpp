#include "critgraph/coverings.hpp"

#include <numeric>
#include <sstream>

#include "critgraph/errors.hpp"
#include "critgraph/normal_forms.hpp"

namespace critgraph {

DerivedCover derive_cover(const VoltageGraph& vg) {
    validate(vg);
    const int m = vg.group.order;
    const int n = vg.base.vertices;
    DerivedCover dc;
    dc.fiber = m;
    dc.total.vertices = n * m;
    dc.total.edges.resize(vg.base.edges.size() * m);
    for (std::size_t e = 0; e < vg.base.edges.size(); ++e) {
        const Edge& be = vg.base.edges[e];
        const int beta = vg.voltage[e];
        for (int h = 0; h < m; ++h) {
            // Gross-Tucker rule: e_h = (u_h, v_{beta h})
            int tail = dc.vertex_label(be.tail, h);
            int head = dc.vertex_label(be.head, vg.group.mul(beta, h));
            Edge ce;
            ce.tail = tail;
            ce.head = head;
            ce.sign = +1;
            ce.kind = (tail == head) ? EdgeKind::Loop : EdgeKind::Link;
            dc.total.edges[dc.edge_label(static_cast<int>(e), h)] = ce;
        }
    }
    dc.pi_vertex = BigIntMatrix(n, n * m);
    for (int v = 0; v < n; ++v)
        for (int h = 0; h < m; ++h) dc.pi_vertex(v, dc.vertex_label(v, h)) = 1;
    return dc;
}

namespace {

// (m-1)x(m-1) integer matrix of left multiplication by T_k in the basis
// {T_h : h != 1} of the reduced group algebra, added into `dst` at block
// (bi, bj) with coefficient coef.
void add_mult_block(BigIntMatrix& dst, const FiniteGroup& grp, int k, int coef,
                    std::size_t bi, std::size_t bj) {
    const int m = grp.order;
    for (int g = 1; g < m; ++g) {
        int kg = grp.mul(k, g);
        if (kg == 0) {
            // T_1 = -sum of the nonidentity basis classes
            for (int h = 1; h < m; ++h)
                dst(bi * (m - 1) + (h - 1), bj * (m - 1) + (g - 1)) -= coef;
        } else {
            dst(bi * (m - 1) + (kg - 1), bj * (m - 1) + (g - 1)) += coef;
        }
    }
}

} // namespace

ReducedRealization reduced_realization(const VoltageGraph& vg) {
    validate(vg);
    const int m = vg.group.order;
    const std::size_t n = vg.base.vertices, ne = vg.base.edges.size();
    const std::size_t d = m - 1;
    ReducedRealization rr{BigIntMatrix(n * d, ne * d), BigIntMatrix(ne * d, n * d),
                          BigIntMatrix()};
    for (std::size_t e = 0; e < ne; ++e) {
        const Edge& be = vg.base.edges[e];
        const int beta = vg.voltage[e];
        // del_bar column block: e -> +u - v T_beta
        add_mult_block(rr.del_bar, vg.group, 0, +1, be.tail, e);
        add_mult_block(rr.del_bar, vg.group, beta, -1, be.head, e);
        // star: transpose blockwise and send T_h -> T_{h^-1}
        add_mult_block(rr.del_bar_star, vg.group, 0, +1, e, be.tail);
        add_mult_block(rr.del_bar_star, vg.group, vg.group.inv(beta), -1, e, be.head);
    }
    rr.lap_bar = rr.del_bar * rr.del_bar_star;
    return rr;
}

AbelianGroup voltage_critical_group(const VoltageGraph& vg) {
    ReducedRealization rr = reduced_realization(vg);
    return lattice_quotient(rr.del_bar, rr.lap_bar).group;
}

CoveringReport verify_covering_sequence(const VoltageGraph& vg, bool exactness) {
    CoveringReport out;
    DerivedCover dc = derive_cover(vg);
    CriticalGroup kt = critical_group(dc.total);
    CriticalGroup kb = critical_group(vg.base);
    out.k_total = kt.group;
    out.k_base = kb.group;
    out.k_voltage = voltage_critical_group(vg);

    Int ot = out.k_total.order(), ob = out.k_base.order(), ov = out.k_voltage.order();
    {
        std::ostringstream d;
        d << ot.get_str() << " vs " << ov.get_str() << " * " << ob.get_str();
        out.report.add("order identity |K(total)| = |K(voltage)| * |K(base)|",
                       ot == ov * ob, d.str());
    }

    const Int m = vg.group.order;
    for (const auto& [p, exps] : out.k_total.primary_decomposition()) {
        if (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) continue;
        AbelianGroup lhs = out.k_total.sylow(p);
        AbelianGroup rhs = out.k_voltage.sylow(p).direct_sum(out.k_base.sylow(p));
        out.report.add("Sylow splitting at p = " + p.get_str(), lhs == rhs,
                       lhs.str() + " vs " + rhs.str());
    }

    if (exactness) {
        try {
            GroupHom pi = induced_hom(kt.presentation, kb.presentation, dc.pi_vertex);
            GroupHom pit =
                induced_hom(kb.presentation, kt.presentation, dc.pi_vertex.transpose());
            out.report.add("pi surjective on K(base)", hom_is_surjective(pi));
            out.report.add("pi o pi^T = |H| on K(base)",
                           hom_equals_scalar(compose(pi, pit), m));
            AbelianGroup ker = hom_kernel(pi);
            out.report.add("|ker pi| = |K(voltage)|", ker.order() == ov,
                           ker.str() + " vs " + out.k_voltage.str());
        } catch (const Error& err) {
            out.report.add("induced maps well-defined", false, err.what());
        }
    }
    return out;
}

VoltageGraph hg_construct(const SignedMultigraph& g, const FiniteGroup& h) {
    validate(g);
    for (const Edge& e : g.edges) {
        if (e.sign != +1) throw ValidationError("hg_construct: base must be all-positive");
        if (e.kind == EdgeKind::HalfLoop)
            throw ValidationError("hg_construct: base must not contain half-loops");
    }
    VoltageGraph vg;
    vg.base.vertices = g.vertices;
    vg.group = h;
    for (const Edge& e : g.edges)
        for (int k = 0; k < h.order; ++k) {
            vg.base.edges.push_back(e);
            vg.voltage.push_back(k);
        }
    return vg;
}

AbelianGroup hg_closed_form(const std::vector<Int>& degrees, int m) {
    if (m < 2) throw HypothesisViolated("HYPOTHESIS_VIOLATED: need |H| >= 2");
    if (degrees.empty()) throw ValidationError("hg_closed_form: empty degree list");
    for (const Int& d : degrees)
        if (d < 1) throw ValidationError("hg_closed_form: degrees must be positive");
    const std::size_t n = degrees.size();
    // s_1 | ... | s_n: invariant factors of the degree direct sum, padded with 1s
    AbelianGroup dsum = AbelianGroup::from_cyclic_orders(degrees);
    std::vector<Int> s(n, 1);
    for (std::size_t i = 0; i < dsum.invariant_factors.size(); ++i)
        s[n - dsum.invariant_factors.size() + i] = dsum.invariant_factors[i];
    std::vector<Int> orders;
    orders.push_back(s[0]);
    for (int k = 0; k < m - 2; ++k) orders.push_back(m * s[0]);
    for (std::size_t i = 1; i < n; ++i)
        for (int k = 0; k < m - 1; ++k) orders.push_back(m * s[i]);
    return AbelianGroup::from_cyclic_orders(orders);
}

AbelianGroup family_cover_formula(CoverFamily kind, int n, int m) {
    std::vector<Int> orders;
    auto push = [&](const Int& d, long copies) {
        for (long i = 0; i < copies; ++i) orders.push_back(d);
    };
    switch (kind) {
        case CoverFamily::Path:
            if (n < 2 || n % 2 != 0)
                throw HypothesisViolated("HYPOTHESIS_VIOLATED: path formula needs |V| even");
            if (m < 3 || m % 2 == 0)
                throw HypothesisViolated("HYPOTHESIS_VIOLATED: path formula needs m odd >= 3");
            push(m, static_cast<long>(m - 2) * n);
            push(Int(m) * m, n - 1);
            push(2, static_cast<long>(m - 1) * (n - 2));
            break;
        case CoverFamily::Cycle:
            if (n < 3 || n % 4 == 0)
                throw HypothesisViolated(
                    "HYPOTHESIS_VIOLATED: cycle formula needs |V| != 0 mod 4");
            if (m < 3 || m % 2 == 0)
                throw HypothesisViolated("HYPOTHESIS_VIOLATED: cycle formula needs m odd >= 3");
            push(m, static_cast<long>(m - 2) * n);
            push(Int(m) * m * n, 1);
            push(Int(m) * m, n - 2);
            push(2, static_cast<long>(m - 1) * n);
            break;
        case CoverFamily::Complete:
            if (n < 2) throw HypothesisViolated("HYPOTHESIS_VIOLATED: need |V| >= 2");
            if (m < 2) throw HypothesisViolated("HYPOTHESIS_VIOLATED: need m >= 2");
            if (std::gcd(n - 1, m) != 1)
                throw HypothesisViolated(
                    "HYPOTHESIS_VIOLATED: complete formula needs gcd(|V|-1, m) = 1");
            push(m, static_cast<long>(m - 2) * n);
            push(Int(m) * m, 1);
            push(Int(m) * m * n, n - 2);
            push(n - 1, static_cast<long>(m - 1) * n);
            break;
    }
    return AbelianGroup::from_cyclic_orders(orders);
}

} // namespace critgraph

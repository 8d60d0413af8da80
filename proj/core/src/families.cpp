#include "critgraph/families.hpp"

#include <numeric>

#include "critgraph/errors.hpp"
#include "critgraph/incidence.hpp"

namespace critgraph {

static void need(bool ok, const char* msg) {
    if (!ok) throw ValidationError(std::string("BAD_PARAMS: ") + msg);
}

SignedMultigraph build_path(int n) {
    need(n >= 1, "path needs n >= 1");
    SignedMultigraph g;
    g.vertices = n;
    for (int i = 0; i + 1 < n; ++i) g.edges.push_back({i, i + 1, EdgeKind::Link, +1});
    return g;
}

SignedMultigraph build_cycle(int n) {
    need(n >= 2, "cycle needs n >= 2");
    SignedMultigraph g;
    g.vertices = n;
    for (int i = 0; i + 1 < n; ++i) g.edges.push_back({i, i + 1, EdgeKind::Link, +1});
    if (n == 2)
        g.edges.push_back({1, 0, EdgeKind::Link, +1});
    else
        g.edges.push_back({n - 1, 0, EdgeKind::Link, +1});
    return g;
}

SignedMultigraph build_complete(int n) {
    need(n >= 1, "complete graph needs n >= 1");
    SignedMultigraph g;
    g.vertices = n;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.edges.push_back({i, j, EdgeKind::Link, +1});
    return g;
}

SignedMultigraph build_crown(int n, int k) {
    need(n >= 1 && k >= 0, "crown needs n >= 1, k >= 0");
    SignedMultigraph g;
    g.vertices = 2 * n;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) g.edges.push_back({i, n + j, EdgeKind::Link, +1});
    for (int i = 0; i < n; ++i)
        for (int c = 0; c < k; ++c) g.edges.push_back({i, n + i, EdgeKind::Link, +1});
    return g;
}

SignedMultigraph build_complete_halfloops(int n, int k, int sign) {
    need(n >= 1 && k >= 0 && (sign == 1 || sign == -1), "bad complete-halfloop params");
    SignedMultigraph g = build_complete(n);
    for (Edge& e : g.edges) e.sign = sign;
    for (int v = 0; v < n; ++v)
        for (int c = 0; c < k; ++c) g.edges.push_back({v, v, EdgeKind::HalfLoop, sign});
    return g;
}

SignedMultigraph build_cube_signed(int n, int m) {
    need(n >= 0 && m >= 0, "cube needs n, m >= 0");
    SignedMultigraph g;
    g.vertices = 1 << n;
    for (int v = 0; v < g.vertices; ++v)
        for (int b = 0; b < n; ++b) {
            int w = v ^ (1 << b);
            if (v < w) g.edges.push_back({v, w, EdgeKind::Link, +1});
        }
    for (int v = 0; v < g.vertices; ++v)
        for (int c = 0; c < m; ++c) g.edges.push_back({v, v, EdgeKind::HalfLoop, -1});
    return g;
}

SignedMultigraph intro_base() {
    SignedMultigraph g;
    g.vertices = 2;
    for (int i = 0; i < 6; ++i) g.edges.push_back({0, 1, EdgeKind::Link, +1});
    for (int i = 0; i < 3; ++i) g.edges.push_back({0, 0, EdgeKind::Loop, +1});
    return g;
}

SignedMultigraph intro_signed() {
    SignedMultigraph g = intro_base();
    for (int i = 3; i < 6; ++i) g.edges[i].sign = -1; // links d, e, f
    for (int i = 6; i < 9; ++i) g.edges[i].sign = -1; // loops g, h, i
    return g;
}

VoltageGraph intro_voltage() {
    VoltageGraph vg;
    vg.base = intro_base();
    vg.group = group_cyclic(2);
    vg.voltage = {0, 0, 0, 1, 1, 1, 1, 1, 1};
    return vg;
}

VoltageGraph octahedron_voltage() {
    VoltageGraph vg;
    vg.base.vertices = 2;
    vg.base.edges = {{0, 1, EdgeKind::Link, +1},
                     {0, 1, EdgeKind::Link, +1},
                     {0, 0, EdgeKind::Loop, +1},
                     {1, 1, EdgeKind::Loop, +1}};
    vg.group = group_cyclic(3);
    vg.voltage = {0, 1, 1, 1};
    return vg;
}

AbelianGroup crown_formula(int n, int k) {
    need(n >= 3 && k >= 0, "crown formula needs n >= 3, k >= 0");
    std::vector<Int> orders;
    if (n % 2 == 1) {
        for (int i = 0; i < n - 2; ++i) orders.push_back(n);
        for (int i = 0; i < n - 2; ++i) orders.push_back(n - 2 + 2 * k);
        orders.push_back(Int(n - 1 + k) * (n - 2 + 2 * k));
    } else {
        if (std::gcd(k - 1, n) != 1)
            throw HypothesisViolated("OUT_OF_REGIME: n even needs gcd(k-1, n) = 1");
        orders.push_back(n - 2 + 2 * k);
        for (int i = 0; i < n - 3; ++i) orders.push_back(Int(n) * (n - 2 + 2 * k));
        orders.push_back(Int(n) * (n - 1 + k) * (n - 2 + 2 * k));
    }
    return AbelianGroup::from_cyclic_orders(orders);
}

static Int binom(int n, int k) {
    Int b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

AbelianGroup cube_sylow_formula(int n, int m, const Int& p) {
    need(n >= 0 && m >= 0, "cube formula needs n, m >= 0");
    if (p == 2) throw HypothesisViolated("EVEN_PRIME: the formula excludes p = 2");
    if (!is_prime(p)) throw ValidationError("cube_sylow_formula: p is not prime");
    std::vector<Int> orders;
    for (int j = 0; j <= n; ++j) {
        if (j + m == 0) continue; // Z_0 summand normalized to the trivial group
        Int q = 1, r = j + m;
        while (mpz_divisible_p(r.get_mpz_t(), p.get_mpz_t())) {
            r /= p;
            q *= p;
        }
        if (q == 1) continue;
        Int copies = binom(n, j);
        for (Int c = 0; c < copies; ++c) orders.push_back(q);
    }
    return AbelianGroup::from_cyclic_orders(orders);
}

Report verify_crown(const std::vector<int>& ns, const std::vector<int>& ks) {
    Report rep;
    for (int n : ns)
        for (int k : ks) {
            std::string name = "crown n=" + std::to_string(n) + " k=" + std::to_string(k);
            if (n % 2 == 0 && std::gcd(k - 1, n) != 1) {
                bool threw = false;
                try {
                    crown_formula(n, k);
                } catch (const HypothesisViolated&) {
                    threw = true;
                }
                rep.add(name + " (out of regime)", threw, "formula refuses as expected");
                continue;
            }
            AbelianGroup expected = crown_formula(n, k);
            AbelianGroup got = critical_group(build_crown(n, k)).group;
            rep.add(name, got == expected, got.str() + " vs " + expected.str());
        }
    return rep;
}

Report verify_cube(int max_n, int max_m, const std::vector<int>& primes,
                   int recursion_max_n) {
    Report rep;
    // direct K(Q_n^(m)) cached across both phases
    std::vector<std::vector<AbelianGroup>> k(max_n + 1);
    for (int n = 0; n <= max_n; ++n) {
        // the recursion check additionally needs m = max_m + 1 at levels below it
        int top_m = (n <= recursion_max_n - 1) ? max_m + 1 : max_m;
        for (int m = 0; m <= top_m; ++m)
            k[n].push_back(critical_group(build_cube_signed(n, m)).group);
    }

    for (int n = 0; n <= max_n; ++n)
        for (int m = 0; m <= max_m; ++m)
            for (int p : primes) {
                AbelianGroup expected = cube_sylow_formula(n, m, p);
                AbelianGroup got = k[n][m].sylow(p);
                rep.add("cube n=" + std::to_string(n) + " m=" + std::to_string(m) +
                            " p=" + std::to_string(p),
                        got == expected, got.str() + " vs " + expected.str());
            }
    for (int n = 1; n <= recursion_max_n; ++n)
        for (int m = 0; m <= max_m; ++m)
            for (int p : primes) {
                AbelianGroup lhs = k[n][m].sylow(p);
                AbelianGroup rhs = k[n - 1][m].direct_sum(k[n - 1][m + 1]).sylow(p);
                rep.add("cube recursion n=" + std::to_string(n) +
                            " m=" + std::to_string(m) + " p=" + std::to_string(p),
                        lhs == rhs, lhs.str() + " vs " + rhs.str());
            }
    return rep;
}

Report verify_cover_families() {
    struct Case {
        CoverFamily kind;
        int n, m;
    };
    const std::vector<Case> cases = {
        {CoverFamily::Path, 2, 3},     {CoverFamily::Path, 4, 3},
        {CoverFamily::Cycle, 3, 3},    {CoverFamily::Cycle, 5, 3},
        {CoverFamily::Complete, 3, 2}, {CoverFamily::Complete, 4, 3},
    };
    Report rep;
    for (const Case& c : cases) {
        SignedMultigraph base;
        std::string name;
        switch (c.kind) {
            case CoverFamily::Path:
                base = build_path(c.n);
                name = "path";
                break;
            case CoverFamily::Cycle:
                base = build_cycle(c.n);
                name = "cycle";
                break;
            case CoverFamily::Complete:
                base = build_complete(c.n);
                name = "complete";
                break;
        }
        name += " |V|=" + std::to_string(c.n) + " m=" + std::to_string(c.m);
        VoltageGraph hg = hg_construct(base, group_cyclic(c.m));
        AbelianGroup direct = critical_group(derive_cover(hg).total).group;
        try {
            AbelianGroup expected = family_cover_formula(c.kind, c.n, c.m);
            rep.add(name, direct == expected, direct.str() + " vs " + expected.str());
        } catch (const HypothesisViolated& hv) {
            rep.add(name + " (out of regime)", true,
                    std::string(hv.what()) + "; direct = " + direct.str());
        }
    }
    return rep;
}

} // namespace critgraph

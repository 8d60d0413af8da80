#include "critgraph/abelian_group.hpp"

#include <algorithm>
#include <sstream>

#include "critgraph/errors.hpp"
#include "critgraph/normal_forms.hpp"

namespace critgraph {

Int AbelianGroup::order() const {
    if (free_rank > 0) throw InfiniteGroup("INFINITE_GROUP: free rank > 0");
    Int n = 1;
    for (const Int& f : invariant_factors) n *= f;
    return n;
}

AbelianGroup AbelianGroup::from_diag(const std::vector<Int>& diag, std::size_t free_rank) {
    AbelianGroup g;
    g.free_rank = free_rank;
    for (const Int& d : diag) {
        if (d < 0) throw ValidationError("from_diag: negative entry");
        if (d == 0)
            ++g.free_rank;
        else if (d > 1)
            g.invariant_factors.push_back(d);
    }
    std::sort(g.invariant_factors.begin(), g.invariant_factors.end());
    for (std::size_t i = 0; i + 1 < g.invariant_factors.size(); ++i)
        if (!mpz_divisible_p(g.invariant_factors[i + 1].get_mpz_t(),
                             g.invariant_factors[i].get_mpz_t()))
            throw ValidationError("from_diag: divisibility chain violated");
    return g;
}

AbelianGroup AbelianGroup::from_cyclic_orders(const std::vector<Int>& orders) {
    std::vector<Int> torsion;
    for (const Int& d : orders) {
        if (d < 0) throw ValidationError("from_cyclic_orders: negative order");
        if (d > 1) torsion.push_back(d); // Z_0 -> trivial, Z_1 dropped
    }
    BigIntMatrix m(torsion.size(), torsion.size());
    for (std::size_t i = 0; i < torsion.size(); ++i) m(i, i) = torsion[i];
    SmithForm s = snf(m);
    AbelianGroup g;
    for (const Int& d : s.diag)
        if (d > 1) g.invariant_factors.push_back(d);
    return g;
}

AbelianGroup AbelianGroup::direct_sum(const AbelianGroup& o) const {
    std::vector<Int> all = invariant_factors;
    all.insert(all.end(), o.invariant_factors.begin(), o.invariant_factors.end());
    AbelianGroup g = from_cyclic_orders(all);
    g.free_rank = free_rank + o.free_rank;
    return g;
}

std::map<Int, std::vector<unsigned>> AbelianGroup::primary_decomposition() const {
    if (free_rank > 0) throw InfiniteGroup("INFINITE_GROUP: free rank > 0");
    std::map<Int, std::vector<unsigned>> out;
    for (const Int& f : invariant_factors)
        for (const auto& [p, e] : factorize(f)) out[p].push_back(e);
    for (auto& [p, exps] : out)
        std::sort(exps.begin(), exps.end(), std::greater<>());
    return out;
}

AbelianGroup AbelianGroup::sylow(const Int& p) const {
    if (free_rank > 0) throw InfiniteGroup("INFINITE_GROUP: free rank > 0");
    if (p < 2 || !is_prime(p)) throw ValidationError("sylow: p is not prime");
    AbelianGroup g;
    // p-adic valuation per invariant factor; no full factorization needed
    for (const Int& f : invariant_factors) {
        Int q = 1, r = f;
        while (mpz_divisible_p(r.get_mpz_t(), p.get_mpz_t())) {
            r /= p;
            q *= p;
        }
        if (q > 1) g.invariant_factors.push_back(q);
    }
    std::sort(g.invariant_factors.begin(), g.invariant_factors.end());
    return g;
}

std::string AbelianGroup::str() const {
    if (trivial()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const Int& f : invariant_factors) {
        if (!first) os << " + ";
        os << "Z" << f.get_str();
        first = false;
    }
    if (free_rank > 0) {
        if (!first) os << " + ";
        os << "Z^" << free_rank;
    }
    return os.str();
}

bool is_prime(const Int& n) {
    if (n < 2) return false;
    // GMP: 2 = definitely prime, 1 = BPSW+Miller-Rabin probable prime (no
    // known composite passes), 0 = composite
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

namespace {

Int pollard_rho(const Int& n) {
    // Brent's variant; n odd composite, not a prime power obstruction here
    for (unsigned long c = 1;; ++c) {
        Int x = 2, y = 2, d = 1;
        Int saved_x;
        unsigned long power = 1, lam = 0;
        auto f = [&](const Int& v) {
            Int r = (v * v + c) % n;
            return r;
        };
        saved_x = x;
        while (d == 1) {
            if (lam == power) {
                saved_x = x;
                power *= 2;
                lam = 0;
            }
            x = f(x);
            ++lam;
            Int diff = x - saved_x;
            if (diff == 0) break; // cycle without factor; retry with next c
            mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        }
        if (d != 1 && d != n) return d;
    }
}

void factor_into(const Int& n, std::map<Int, unsigned>& acc) {
    if (n == 1) return;
    if (is_prime(n)) {
        ++acc[n];
        return;
    }
    Int d = pollard_rho(n);
    factor_into(d, acc);
    factor_into(n / d, acc);
}

} // namespace

std::vector<std::pair<Int, unsigned>> factorize(const Int& n) {
    if (n < 1) throw ValidationError("factorize: n must be >= 1");
    std::map<Int, unsigned> acc;
    Int m = n;
    for (unsigned long p = 2; p <= 1000000ul && m > 1; p = (p == 2 ? 3 : p + 2)) {
        if (p * p > m) break;
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            ++acc[Int(p)];
            m /= static_cast<unsigned long>(p);
        }
    }
    if (m > 1) factor_into(m, acc);
    return {acc.begin(), acc.end()};
}

} // namespace critgraph

#include "critgraph/normal_forms.hpp"

#include <cstdlib>

namespace critgraph {

namespace {

// g = gcd(a,b) = x*a + y*b via GMP
void xgcd(const Int& a, const Int& b, Int& g, Int& x, Int& y) {
    mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}

} // namespace

HermiteForm hnf(const BigIntMatrix& m) {
    const std::size_t nr = m.rows(), nc = m.cols();
    BigIntMatrix a = m;
    BigIntMatrix c = BigIntMatrix::identity(nc);
    std::vector<std::size_t> pivot_rows;
    std::size_t j = 0; // next pivot column

    for (std::size_t i = 0; i < nr && j < nc; ++i) {
        // bring the minimal-magnitude nonzero of row i (cols >= j) to column j
        std::size_t best = nc;
        for (std::size_t k = j; k < nc; ++k) {
            if (a(i, k) == 0) continue;
            if (best == nc || mpz_cmpabs(a(i, k).get_mpz_t(), a(i, best).get_mpz_t()) < 0)
                best = k;
        }
        if (best == nc) continue;
        a.swap_cols(j, best);
        c.swap_cols(j, best);

        // zero out row i beyond column j with gcd column transforms
        for (std::size_t k = j + 1; k < nc; ++k) {
            if (a(i, k) == 0) continue;
            Int g, x, y;
            xgcd(a(i, j), a(i, k), g, x, y);
            Int aj = a(i, j) / g, ak = a(i, k) / g;
            // (colj, colk) <- (x*colj + y*colk, -ak*colj + aj*colk), det = 1
            for (std::size_t r = 0; r < nr; ++r) {
                Int cj = a(r, j), ck = a(r, k);
                a(r, j) = x * cj + y * ck;
                a(r, k) = aj * ck - ak * cj;
            }
            for (std::size_t r = 0; r < nc; ++r) {
                Int cj = c(r, j), ck = c(r, k);
                c(r, j) = x * cj + y * ck;
                c(r, k) = aj * ck - ak * cj;
            }
        }
        if (a(i, j) < 0) {
            a.negate_col(j);
            c.negate_col(j);
        }
        // reduce earlier columns in this pivot row into [0, pivot)
        for (std::size_t k = 0; k < j; ++k) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), a(i, k).get_mpz_t(), a(i, j).get_mpz_t());
            if (q != 0) {
                a.add_col_multiple(k, j, -q);
                c.add_col_multiple(k, j, -q);
            }
        }
        pivot_rows.push_back(i);
        ++j;
    }

    HermiteForm h;
    h.rank = j;
    h.pivot_rows = std::move(pivot_rows);
    std::vector<std::size_t> keep(j);
    for (std::size_t k = 0; k < j; ++k) keep[k] = k;
    h.basis = a.columns(keep);
    h.transform = std::move(c);
    return h;
}

BigIntMatrix kernel_basis(const BigIntMatrix& m) {
    HermiteForm h = hnf(m);
    std::vector<std::size_t> idx;
    for (std::size_t k = h.rank; k < m.cols(); ++k) idx.push_back(k);
    return h.transform.columns(idx);
}

SmithForm snf(const BigIntMatrix& m, bool with_transforms) {
    const std::size_t nr = m.rows(), nc = m.cols();
    BigIntMatrix s = m;
    BigIntMatrix u, v;
    if (with_transforms) {
        u = BigIntMatrix::identity(nr);
        v = BigIntMatrix::identity(nc);
    }
    const std::size_t t_max = std::min(nr, nc);
    std::size_t t = 0;

    while (t < t_max) {
        // minimal-magnitude nonzero pivot in the trailing block
        std::size_t pi = nr, pj = nc;
        for (std::size_t i = t; i < nr; ++i)
            for (std::size_t j = t; j < nc; ++j) {
                if (s(i, j) == 0) continue;
                if (pi == nr || mpz_cmpabs(s(i, j).get_mpz_t(), s(pi, pj).get_mpz_t()) < 0) {
                    pi = i;
                    pj = j;
                }
            }
        if (pi == nr) break; // trailing block is zero
        s.swap_rows(t, pi);
        s.swap_cols(t, pj);
        if (with_transforms) {
            u.swap_rows(t, pi);
            v.swap_cols(t, pj);
        }
        if (s(t, t) < 0) { // nearest-quotient reduction below assumes pivot > 0
            for (std::size_t j = t; j < nc; ++j) s(t, j) = -s(t, j);
            if (with_transforms)
                for (std::size_t j = 0; j < nr; ++j) u(t, j) = -u(t, j);
        }

        bool clean = true;
        for (std::size_t i = t + 1; i < nr; ++i) {
            if (s(i, t) == 0) continue;
            Int q;
            // round-to-nearest keeps remainders small
            Int r2 = 2 * s(i, t) + s(t, t);
            mpz_fdiv_q(q.get_mpz_t(), r2.get_mpz_t(), Int(2 * s(t, t)).get_mpz_t());
            s.add_row_multiple(i, t, -q);
            if (with_transforms) u.add_row_multiple(i, t, -q);
            if (s(i, t) != 0) clean = false;
        }
        for (std::size_t j = t + 1; j < nc; ++j) {
            if (s(t, j) == 0) continue;
            Int q;
            Int r2 = 2 * s(t, j) + s(t, t);
            mpz_fdiv_q(q.get_mpz_t(), r2.get_mpz_t(), Int(2 * s(t, t)).get_mpz_t());
            s.add_col_multiple(j, t, -q);
            if (with_transforms) v.add_col_multiple(j, t, -q);
            if (s(t, j) != 0) clean = false;
        }
        if (!clean) continue; // re-select pivot; magnitudes strictly shrink

        // pivot divides every trailing entry, or fold an offending row in
        bool divides = true;
        for (std::size_t i = t + 1; i < nr && divides; ++i)
            for (std::size_t j = t + 1; j < nc && divides; ++j)
                if (!mpz_divisible_p(s(i, j).get_mpz_t(), s(t, t).get_mpz_t())) {
                    s.add_row_multiple(t, i, 1);
                    if (with_transforms) u.add_row_multiple(t, i, 1);
                    divides = false;
                }
        if (!divides) continue;

        if (s(t, t) < 0) {
            s.negate_col(t);
            if (with_transforms) v.negate_col(t);
        }
        ++t;
    }

    SmithForm out;
    out.diag.resize(t_max);
    for (std::size_t i = 0; i < t_max; ++i) out.diag[i] = s(i, i);
    out.rank = t;
    out.has_transforms = with_transforms;
    if (with_transforms) {
        out.left = std::move(u);
        out.right = std::move(v);
    }
    return out;
}

std::optional<BigIntMatrix> solve_integer(const BigIntMatrix& a, const BigIntMatrix& b) {
    if (a.rows() != b.rows()) return std::nullopt;
    HermiteForm h = hnf(a);
    const std::size_t r = h.rank;
    BigIntMatrix y(r, b.cols());
    BigIntMatrix resid = b;
    for (std::size_t col = 0; col < b.cols(); ++col) {
        for (std::size_t t = 0; t < r; ++t) {
            const std::size_t i = h.pivot_rows[t];
            if (!mpz_divisible_p(resid(i, col).get_mpz_t(), h.basis(i, t).get_mpz_t()))
                return std::nullopt;
            Int q = resid(i, col) / h.basis(i, t);
            y(t, col) = q;
            if (q != 0)
                for (std::size_t rr = 0; rr < a.rows(); ++rr)
                    resid(rr, col) -= q * h.basis(rr, t);
        }
        for (std::size_t rr = 0; rr < a.rows(); ++rr)
            if (resid(rr, col) != 0) return std::nullopt;
    }
    std::vector<std::size_t> keep(r);
    for (std::size_t k = 0; k < r; ++k) keep[k] = k;
    return h.transform.columns(keep) * y;
}

} // namespace critgraph

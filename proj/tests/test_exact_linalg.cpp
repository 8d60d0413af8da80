#include <doctest.h>

#include <functional>
#include <random>

#include "critgraph/abelian_group.hpp"
#include "critgraph/bigint_matrix.hpp"
#include "critgraph/errors.hpp"
#include "critgraph/normal_forms.hpp"
#include "critgraph/presented_group.hpp"

using namespace critgraph;

namespace {

BigIntMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int lo,
                           int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    BigIntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
    return m;
}

// determinant by cofactor expansion; fine at oracle sizes
Int det(const BigIntMatrix& m) {
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    if (n == 1) return m(0, 0);
    Int total = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (m(0, j) == 0) continue;
        BigIntMatrix sub(n - 1, n - 1);
        for (std::size_t i = 1; i < n; ++i) {
            std::size_t cc = 0;
            for (std::size_t k = 0; k < n; ++k)
                if (k != j) sub(i - 1, cc++) = m(i, k);
        }
        Int term = m(0, j) * det(sub);
        total += (j % 2 == 0) ? term : -term;
    }
    return total;
}

// gcd of all k x k minors
Int minor_gcd(const BigIntMatrix& m, std::size_t k) {
    std::vector<std::size_t> ri(k), ci(k);
    Int g = 0;
    auto choose = [&](auto&& self, std::vector<std::size_t>& idx, std::size_t max,
                      std::size_t pos, auto&& inner) -> void {
        if (pos == k) {
            inner();
            return;
        }
        std::size_t start = pos == 0 ? 0 : idx[pos - 1] + 1;
        for (std::size_t v = start; v < max; ++v) {
            idx[pos] = v;
            self(self, idx, max, pos + 1, inner);
        }
    };
    choose(choose, ri, m.rows(), 0, [&] {
        choose(choose, ci, m.cols(), 0, [&] {
            BigIntMatrix sub(k, k);
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j) sub(i, j) = m(ri[i], ci[j]);
            Int d = det(sub);
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
        });
    });
    return g;
}

// brute-force span membership over a small coefficient box
bool in_span_box(const BigIntMatrix& cols, const BigIntMatrix& target, int box) {
    const std::size_t m = cols.cols();
    std::vector<int> coef(m, -box);
    while (true) {
        BigIntMatrix acc(cols.rows(), 1);
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t i = 0; i < cols.rows(); ++i)
                acc(i, 0) += Int(coef[j]) * cols(i, j);
        if (acc == target) return true;
        std::size_t pos = 0;
        while (pos < m && coef[pos] == box) coef[pos++] = -box;
        if (pos == m) return false;
        ++coef[pos];
    }
}

} // namespace

TEST_CASE("hnf basics") {
    auto h = hnf(BigIntMatrix::from_rows({{2, 4}, {0, 0}}));
    CHECK(h.rank == 1);
    CHECK(h.basis == BigIntMatrix::from_rows({{2}, {0}}));

    auto id = BigIntMatrix::identity(3);
    auto h2 = hnf(id);
    CHECK(h2.rank == 3);
    CHECK(h2.basis == id);
}

TEST_CASE("hnf of the intro boundary map gives the sum-zero basis") {
    // 6 parallel links between two vertices plus 3 loops (zero columns)
    BigIntMatrix del(2, 9);
    for (int j = 0; j < 6; ++j) {
        del(0, j) = 1;
        del(1, j) = -1;
    }
    auto h = hnf(del);
    CHECK(h.rank == 1);
    CHECK(h.basis == BigIntMatrix::from_rows({{1}, {-1}}));
    // brute-force span check over a small coefficient box: the basis column
    // and the original columns generate each other
    CHECK(in_span_box(del, h.basis.column(0), 1));
    for (int j = 0; j < 9; ++j) CHECK(in_span_box(h.basis, del.column(j), 1));
}

TEST_CASE("hnf canonical form and transform") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        BigIntMatrix m = random_matrix(rng, 4, 5, -9, 9);
        auto h = hnf(m);
        // transform is unimodular
        Int d = det(h.transform);
        CHECK((d == 1 || d == -1));
        // M * C = [H | 0]
        BigIntMatrix prod = m * h.transform;
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 5; ++j)
                CHECK(prod(i, j) == (j < h.rank ? h.basis(i, j) : Int(0)));
        // canonical shape: increasing pivot rows, positive pivots, reduced row
        for (std::size_t t = 0; t < h.rank; ++t) {
            std::size_t pr = h.pivot_rows[t];
            CHECK(h.basis(pr, t) > 0);
            if (t > 0) CHECK(h.pivot_rows[t - 1] < pr);
            for (std::size_t k = 0; k < t; ++k) {
                CHECK(h.basis(pr, k) >= 0);
                CHECK(h.basis(pr, k) < h.basis(pr, t));
            }
            for (std::size_t k = t + 1; k < h.rank; ++k) CHECK(h.basis(pr, k) == 0);
        }
    }
}

TEST_CASE("snf paper displays") {
    auto s1 = snf(BigIntMatrix::from_rows({{6, -6}, {-6, 6}}));
    CHECK(s1.diag == std::vector<Int>{6, 0});

    auto s2 = snf(BigIntMatrix::from_rows(
        {{12, -6, -3, -3}, {-6, 12, -3, -3}, {-3, -3, 6, 0}, {-3, -3, 0, 6}}));
    CHECK(s2.diag == std::vector<Int>{3, 3, 36, 0});

    // M_n(b,a) = b I - a J at (n,b,a) = (4,4,1)
    BigIntMatrix m(4, 4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m(i, j) = (i == j ? 4 : 0) - 1;
    auto s3 = snf(m);
    CHECK(s3.diag == std::vector<Int>{1, 4, 4, 0});
}

TEST_CASE("snf determinantal divisors and transforms") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        BigIntMatrix m = random_matrix(rng, 4, 5, -9, 9);
        auto s = snf(m, true);
        // divisibility chain
        for (std::size_t i = 0; i + 1 < s.rank; ++i)
            CHECK(mpz_divisible_p(s.diag[i + 1].get_mpz_t(), s.diag[i].get_mpz_t()));
        // product of first k entries = gcd of k x k minors
        Int prod = 1;
        for (std::size_t k = 1; k <= 4; ++k) {
            Int g = minor_gcd(m, k);
            if (k <= s.rank) {
                prod *= s.diag[k - 1];
                CHECK(prod == g);
            } else {
                CHECK(g == 0);
            }
        }
        // U M V = S
        BigIntMatrix smat = s.left * m * s.right;
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 5; ++j)
                CHECK(smat(i, j) == ((i == j && i < s.diag.size()) ? s.diag[i] : Int(0)));
        CHECK((det(s.left) == 1 || det(s.left) == -1));
    }
}

TEST_CASE("snf invariant under permutations") {
    std::mt19937 rng(13);
    BigIntMatrix m = random_matrix(rng, 4, 4, -9, 9);
    auto base = snf(m).diag;
    BigIntMatrix p = BigIntMatrix::from_rows(
        {{0, 1, 0, 0}, {0, 0, 1, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}});
    CHECK(snf(p * m).diag == base);
    CHECK(snf(m * p).diag == base);
}

TEST_CASE("solve_integer") {
    BigIntMatrix a = Int(2) * BigIntMatrix::identity(2);
    auto x = solve_integer(a, BigIntMatrix::from_rows({{4}, {6}}));
    REQUIRE(x.has_value());
    CHECK(*x == BigIntMatrix::from_rows({{2}, {3}}));

    CHECK_FALSE(solve_integer(BigIntMatrix::from_rows({{2}, {0}}),
                              BigIntMatrix::from_rows({{1}, {0}}))
                    .has_value());

    // random consistency: A * X = B always holds on returned solutions
    std::mt19937 rng(17);
    for (int trial = 0; trial < 50; ++trial) {
        BigIntMatrix m = random_matrix(rng, 3, 4, -5, 5);
        BigIntMatrix w = random_matrix(rng, 4, 2, -3, 3);
        BigIntMatrix b = m * w;
        auto sol = solve_integer(m, b);
        REQUIRE(sol.has_value());
        CHECK(m * *sol == b);
    }
}

TEST_CASE("solve_integer reproduces the intro critical group") {
    BigIntMatrix del(2, 9);
    for (int j = 0; j < 6; ++j) {
        del(0, j) = 1;
        del(1, j) = -1;
    }
    auto h = hnf(del);
    BigIntMatrix lap = BigIntMatrix::from_rows({{6, -6}, {-6, 6}});
    auto x = solve_integer(h.basis, lap);
    REQUIRE(x.has_value());
    auto s = snf(*x);
    CHECK(s.diag == std::vector<Int>{6});
}

TEST_CASE("kernel_basis") {
    std::mt19937 rng(19);
    for (int trial = 0; trial < 30; ++trial) {
        BigIntMatrix m = random_matrix(rng, 3, 5, -4, 4);
        BigIntMatrix k = kernel_basis(m);
        CHECK((m * k).is_zero());
        CHECK(hnf(m).rank + k.cols() == 5);
    }
}

TEST_CASE("lattice_quotient on the intro even-sum sublattice") {
    // index-2 sublattice of Z^2 modulo the intro signed Laplacian image;
    // Z2 + Z3 + Z9 in invariant-factor form is (3, 18)
    BigIntMatrix even = BigIntMatrix::from_rows({{1, 0}, {1, 2}});
    BigIntMatrix lap = BigIntMatrix::from_rows({{18, 0}, {0, 6}});
    auto q = lattice_quotient(even, lap);
    CHECK(q.group.invariant_factors == std::vector<Int>{3, 18});
    CHECK(q.group == AbelianGroup::from_cyclic_orders({2, 3, 9}));
    CHECK(q.group.order() == 54);
}

TEST_CASE("lattice_quotient basics and coset oracle") {
    // A = B gives the trivial group
    BigIntMatrix a = BigIntMatrix::from_rows({{3, 1}, {0, 2}});
    CHECK(lattice_quotient(a, a).group.trivial());

    // containment violation is an error
    CHECK_THROWS_AS(lattice_quotient(Int(2) * BigIntMatrix::identity(2),
                                     BigIntMatrix::identity(2)),
                    ContainmentViolation);

    // random upper-triangular B inside Z^3: order = |det B| and a direct coset
    // count agree
    std::mt19937 rng(23);
    std::uniform_int_distribution<int> diag(1, 5), off(-3, 3);
    for (int trial = 0; trial < 20; ++trial) {
        BigIntMatrix b(3, 3);
        for (int i = 0; i < 3; ++i) {
            b(i, i) = diag(rng);
            for (int j = i + 1; j < 3; ++j) b(i, j) = off(rng);
        }
        auto q = lattice_quotient(BigIntMatrix::identity(3), b);
        Int d = det(b);
        if (d < 0) d = -d;
        CHECK(q.group.order() == d);
        // coset enumeration: reduce every point of a bounding box to a normal
        // form via the HNF of B and count distinct residues
        auto hb = hnf(b);
        long count = 0;
        // residues modulo the triangular HNF basis: product of pivots boxes it
        std::vector<long> piv(3);
        for (int i = 0; i < 3; ++i) piv[i] = 0;
        for (std::size_t t = 0; t < hb.rank; ++t)
            piv[hb.pivot_rows[t]] = hb.basis(hb.pivot_rows[t], t).get_si();
        std::vector<Int> v(3);
        std::function<void(int)> walk = [&](int i) {
            if (i == 3) {
                ++count;
                return;
            }
            for (long x = 0; x < piv[i]; ++x) {
                v[i] = x;
                walk(i + 1);
            }
        };
        if (hb.rank == 3) walk(0);
        if (hb.rank == 3) CHECK(Int(count) == q.group.order());
    }
}

TEST_CASE("abelian group normal forms") {
    AbelianGroup z6 = AbelianGroup::from_cyclic_orders({2, 3});
    CHECK(z6.invariant_factors == std::vector<Int>{6});
    auto pd = z6.primary_decomposition();
    CHECK(pd[Int(2)] == std::vector<unsigned>{1});
    CHECK(pd[Int(3)] == std::vector<unsigned>{1});

    AbelianGroup g = AbelianGroup::from_cyclic_orders({3, 3, 36});
    auto pd2 = g.primary_decomposition();
    CHECK(pd2[Int(2)] == std::vector<unsigned>{2});
    CHECK(pd2[Int(3)] == std::vector<unsigned>{2, 1, 1});
    CHECK(g.sylow(2).invariant_factors == std::vector<Int>{4});
    CHECK(g.sylow(3).invariant_factors == std::vector<Int>{3, 3, 9});
    CHECK(g.sylow(5).trivial());

    CHECK(AbelianGroup{}.primary_decomposition().empty());
    CHECK(AbelianGroup::from_cyclic_orders({0, 1}).trivial());

    AbelianGroup inf;
    inf.free_rank = 1;
    CHECK_THROWS_AS(inf.primary_decomposition(), InfiniteGroup);
}

TEST_CASE("factorization") {
    auto f = factorize(Int("1234567890123456789012"));
    Int back = 1;
    for (auto& [p, e] : f) {
        CHECK(is_prime(p));
        for (unsigned i = 0; i < e; ++i) back *= p;
    }
    CHECK(back == Int("1234567890123456789012"));
    CHECK(factorize(1).empty());
}

TEST_CASE("presented group homs") {
    // identity on a presented group: kernel trivial, image everything
    BigIntMatrix gens = BigIntMatrix::identity(2);
    BigIntMatrix rels = BigIntMatrix::from_rows({{18, 0}, {0, 6}});
    PresentedGroup pg = lattice_quotient(gens, rels);
    GroupHom id = induced_hom(pg, pg, BigIntMatrix::identity(2));
    CHECK(hom_kernel(id).trivial());
    CHECK(hom_image(id) == pg.group);
    CHECK(hom_is_injective(id));
    CHECK(hom_is_surjective(id));
    CHECK(hom_equals_scalar(id, 1));

    // multiplication by 6 on Z18 + Z6 kills the Z6 part
    GroupHom six = induced_hom(pg, pg, Int(6) * BigIntMatrix::identity(2));
    CHECK(hom_image(six).order() == 3);
    CHECK(hom_kernel(six).order() == pg.group.order() / 3);
    CHECK(hom_equals_scalar(six, 6));
    CHECK_FALSE(hom_equals_scalar(six, 1));
}

TEST_CASE("hom composition is matrix composition") {
    std::mt19937 rng(29);
    int done = 0;
    while (done < 20) {
        BigIntMatrix rels = random_matrix(rng, 3, 3, -6, 6);
        PresentedGroup pg = lattice_quotient(BigIntMatrix::identity(3), rels);
        BigIntMatrix f = random_matrix(rng, 3, 3, -3, 3);
        BigIntMatrix g = random_matrix(rng, 3, 3, -3, 3);
        // scale to guarantee hom conditions: multiples of the group exponent
        // always define homs; instead test with maps that do validate
        try {
            GroupHom hf = induced_hom(pg, pg, f * rels);
            GroupHom hg = induced_hom(pg, pg, g * rels);
            GroupHom comp = compose(hg, hf);
            CHECK(comp.ambient_matrix == (g * rels) * (f * rels));
            CHECK(comp.coord_matrix == hg.coord_matrix * hf.coord_matrix);
            ++done;
        } catch (const NotAHomomorphism&) {
            continue;
        }
    }
}

TEST_CASE("complex homology") {
    // 0 -> Z2 -> Z4 -> Z2 -> 0 style complex inside Z
    PresentedGroup z4 = lattice_quotient(BigIntMatrix::identity(1),
                                         BigIntMatrix::from_rows({{4}}));
    GroupHom two = induced_hom(z4, z4, BigIntMatrix::from_rows({{2}}));
    // two∘two = multiplication by 4 = 0 on Z4
    AbelianGroup h = complex_homology(two, two);
    CHECK(h.trivial()); // ker(2) = 2Z4 = im(2)

    GroupHom zero = induced_hom(z4, z4, BigIntMatrix::from_rows({{0}}));
    AbelianGroup h2 = complex_homology(zero, zero);
    CHECK(h2.invariant_factors == std::vector<Int>{4});

    GroupHom idm = induced_hom(z4, z4, BigIntMatrix::identity(1));
    CHECK_THROWS_AS(complex_homology(idm, idm), NotAComplex);
}

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "critgraph/bigint_matrix.hpp"

namespace critgraph {

// Column-style Hermite normal form. `basis` holds the `rank` canonical basis
// columns of the column lattice (pivot rows strictly increasing, positive
// pivots, entries left of a pivot reduced into [0, pivot)). `transform` is a
// square unimodular C with M*C = [basis | 0].
struct HermiteForm {
    BigIntMatrix basis;
    BigIntMatrix transform;
    std::vector<std::size_t> pivot_rows;
    std::size_t rank = 0;
};

HermiteForm hnf(const BigIntMatrix& m);

// Basis of the integer kernel {x : M x = 0}, one column per basis vector.
BigIntMatrix kernel_basis(const BigIntMatrix& m);

// Smith normal form: diag d1 | d2 | ... with trailing zeros, all nonnegative.
// When transforms are requested, left * M * right = diag(diag).
struct SmithForm {
    std::vector<Int> diag;
    std::size_t rank = 0;
    BigIntMatrix left, right;
    bool has_transforms = false;
};

SmithForm snf(const BigIntMatrix& m, bool with_transforms = false);

// Exact integer solve A X = B; std::nullopt when no integer solution exists.
std::optional<BigIntMatrix> solve_integer(const BigIntMatrix& a, const BigIntMatrix& b);

} // namespace critgraph

#pragma once

#include <map>
#include <string>
#include <vector>

#include "critgraph/bigint_matrix.hpp"

namespace critgraph {

// Finitely generated abelian group in invariant-factor normal form:
// Z_{f1} + Z_{f2} + ... + Z^free_rank with each fi >= 2 and f1 | f2 | ...
struct AbelianGroup {
    std::vector<Int> invariant_factors;
    std::size_t free_rank = 0;

    bool finite() const { return free_rank == 0; }
    bool trivial() const { return invariant_factors.empty() && free_rank == 0; }
    Int order() const; // throws InfiniteGroup when free_rank > 0

    // Normalizes a Smith diagonal: drops 1s, keeps the divisibility chain.
    static AbelianGroup from_diag(const std::vector<Int>& diag, std::size_t free_rank = 0);
    // Direct sum of arbitrary cyclic groups Z_d, d >= 0; Z_0 summands are
    // normalized to the trivial group (formula-evaluator convention), Z_1
    // dropped. Normal form is recovered via the SNF of a diagonal matrix, so
    // no factorization is needed.
    static AbelianGroup from_cyclic_orders(const std::vector<Int>& orders);

    AbelianGroup direct_sum(const AbelianGroup& o) const;

    // prime -> exponents of the p-power summands, descending
    std::map<Int, std::vector<unsigned>> primary_decomposition() const;
    AbelianGroup sylow(const Int& p) const;

    bool operator==(const AbelianGroup& o) const = default;
    std::string str() const;
};

bool is_prime(const Int& n);
// Prime factorization (trial division to 1e6, then Pollard rho); n >= 1.
std::vector<std::pair<Int, unsigned>> factorize(const Int& n);

} // namespace critgraph

#include "critgraph/finite_group.hpp"

#include <array>

#include "critgraph/errors.hpp"

namespace critgraph {

static FiniteGroup finish(FiniteGroup g) {
    const int m = g.order;
    if (m < 1) throw ValidationError("NOT_A_GROUP: empty table");
    for (int a = 0; a < m; ++a) {
        if (static_cast<int>(g.cayley[a].size()) != m)
            throw ValidationError("NOT_A_GROUP: ragged table");
        for (int b = 0; b < m; ++b)
            if (g.cayley[a][b] < 0 || g.cayley[a][b] >= m)
                throw ValidationError("NOT_A_GROUP: entry out of range");
    }
    for (int a = 0; a < m; ++a)
        if (g.cayley[0][a] != a || g.cayley[a][0] != a)
            throw ValidationError("NOT_A_GROUP: index 0 is not the identity");
    g.inverse.assign(m, -1);
    for (int a = 0; a < m; ++a) {
        for (int b = 0; b < m; ++b)
            if (g.cayley[a][b] == 0 && g.cayley[b][a] == 0) {
                g.inverse[a] = b;
                break;
            }
        if (g.inverse[a] == -1)
            throw ValidationError("NOT_A_GROUP: element without inverse");
    }
    if (m <= 64) {
        for (int a = 0; a < m; ++a)
            for (int b = 0; b < m; ++b)
                for (int c = 0; c < m; ++c)
                    if (g.cayley[g.cayley[a][b]][c] != g.cayley[a][g.cayley[b][c]])
                        throw ValidationError("NOT_A_GROUP: associativity fails");
        g.associativity_checked = true;
    } else {
        g.associativity_checked = false;
    }
    return g;
}

FiniteGroup group_cyclic(int m) {
    if (m < 1) throw ValidationError("NOT_A_GROUP: cyclic order must be >= 1");
    FiniteGroup g;
    g.order = m;
    g.name = "Z" + std::to_string(m);
    g.cayley.assign(m, std::vector<int>(m));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) g.cayley[a][b] = (a + b) % m;
    return finish(std::move(g));
}

FiniteGroup group_symmetric3() {
    // permutations of {0,1,2}; identity listed first
    const std::array<std::array<int, 3>, 6> perms = {{
        {0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {0, 2, 1}, {2, 1, 0}, {1, 0, 2},
    }};
    auto index_of = [&](const std::array<int, 3>& p) {
        for (int i = 0; i < 6; ++i)
            if (perms[i] == p) return i;
        throw ValidationError("NOT_A_GROUP: bad permutation");
    };
    FiniteGroup g;
    g.order = 6;
    g.name = "S3";
    g.cayley.assign(6, std::vector<int>(6));
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) {
            std::array<int, 3> comp; // (a*b)(x) = a(b(x))
            for (int x = 0; x < 3; ++x) comp[x] = perms[a][perms[b][x]];
            g.cayley[a][b] = index_of(comp);
        }
    return finish(std::move(g));
}

FiniteGroup group_from_table(const std::vector<std::vector<int>>& table) {
    FiniteGroup g;
    g.order = static_cast<int>(table.size());
    g.name = "order" + std::to_string(g.order);
    g.cayley = table;
    return finish(std::move(g));
}

} // namespace critgraph

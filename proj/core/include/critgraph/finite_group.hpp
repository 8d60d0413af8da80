#pragma once

#include <string>
#include <vector>

namespace critgraph {

// Finite group on element indices 0..order-1 with identity at 0.
struct FiniteGroup {
    int order = 1;
    std::vector<std::vector<int>> cayley; // cayley[a][b] = a*b
    std::vector<int> inverse;
    std::string name;
    bool associativity_checked = true; // false only above the order-64 cap

    int mul(int a, int b) const { return cayley[a][b]; }
    int inv(int a) const { return inverse[a]; }
};

FiniteGroup group_cyclic(int m);
FiniteGroup group_symmetric3();
// Validates identity/closure/inverses; associativity checked exhaustively for
// order <= 64, otherwise accepted with associativity_checked = false.
FiniteGroup group_from_table(const std::vector<std::vector<int>>& table);

} // namespace critgraph

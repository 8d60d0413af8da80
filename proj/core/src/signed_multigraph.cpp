#include "critgraph/signed_multigraph.hpp"

#include <algorithm>
#include <queue>

#include "critgraph/errors.hpp"

namespace critgraph {

std::string kind_name(EdgeKind k) {
    switch (k) {
        case EdgeKind::Link: return "link";
        case EdgeKind::Loop: return "loop";
        case EdgeKind::HalfLoop: return "half_loop";
    }
    return "?";
}

void validate(const SignedMultigraph& g) {
    if (g.vertices < 0) throw ValidationError("vertex count negative");
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        const Edge& e = g.edges[i];
        if (e.tail < 0 || e.tail >= g.vertices || e.head < 0 || e.head >= g.vertices)
            throw ValidationError("edge " + std::to_string(i) + ": endpoint out of range");
        if (e.sign != 1 && e.sign != -1)
            throw ValidationError("edge " + std::to_string(i) + ": sign must be +-1");
        if (e.kind == EdgeKind::Link && e.tail == e.head)
            throw ValidationError("edge " + std::to_string(i) + ": link with tail = head");
        if (e.kind != EdgeKind::Link && e.tail != e.head)
            throw ValidationError("edge " + std::to_string(i) + ": loop with tail != head");
    }
}

SignedMultigraph switched(const SignedMultigraph& g, const std::vector<bool>& s) {
    if (s.size() != static_cast<std::size_t>(g.vertices))
        throw ValidationError("switch: vertex set size mismatch");
    SignedMultigraph out = g;
    for (Edge& e : out.edges)
        if (e.kind == EdgeKind::Link && s[e.tail] != s[e.head]) e.sign = -e.sign;
    return out;
}

BalanceReport balance_classify(const SignedMultigraph& g) {
    const int n = g.vertices;
    BalanceReport rep;
    rep.component_of.assign(n, -1);
    rep.potential.assign(n, +1);

    // adjacency over links only; loops do not affect connectivity
    std::vector<std::vector<std::pair<int, int>>> adj(n); // (neighbor, edge id)
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        const Edge& e = g.edges[i];
        if (e.kind != EdgeKind::Link) continue;
        adj[e.tail].push_back({e.head, static_cast<int>(i)});
        adj[e.head].push_back({e.tail, static_cast<int>(i)});
    }

    std::vector<int> parent_edge(n, -1), parent(n, -1);
    auto tree_path = [&](int v) {
        std::vector<int> path;
        while (parent[v] != -1) {
            path.push_back(parent_edge[v]);
            v = parent[v];
        }
        return path;
    };

    for (int root = 0; root < n; ++root) {
        if (rep.component_of[root] != -1) continue;
        const int c = rep.components++;
        rep.balanced.push_back(true);
        rep.witness.push_back({});
        rep.component_of[root] = c;
        rep.potential[root] = +1;
        std::queue<int> q;
        q.push(root);
        std::vector<int> verts{root};
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (auto [v, eid] : adj[u]) {
                int want = g.edges[eid].sign * rep.potential[u];
                if (rep.component_of[v] == -1) {
                    rep.component_of[v] = c;
                    rep.potential[v] = want;
                    parent[v] = u;
                    parent_edge[v] = eid;
                    verts.push_back(v);
                    q.push(v);
                } else if (rep.balanced[c] && rep.potential[v] != want) {
                    // unbalanced cycle: conflict edge plus symmetric difference
                    // of the two tree paths to the root
                    rep.balanced[c] = false;
                    std::vector<int> cyc{eid};
                    std::vector<int> pu = tree_path(u), pv = tree_path(v);
                    std::sort(pu.begin(), pu.end());
                    std::sort(pv.begin(), pv.end());
                    std::set_symmetric_difference(pu.begin(), pu.end(), pv.begin(),
                                                  pv.end(), std::back_inserter(cyc));
                    rep.witness[c] = std::move(cyc);
                }
            }
        }
        // negative loops and half-loops are intrinsic unbalanced cycles
        if (rep.balanced[c]) {
            for (std::size_t i = 0; i < g.edges.size(); ++i) {
                const Edge& e = g.edges[i];
                if (e.kind != EdgeKind::Link && e.sign == -1 &&
                    rep.component_of[e.tail] == c) {
                    rep.balanced[c] = false;
                    rep.witness[c] = {static_cast<int>(i)};
                    break;
                }
            }
        }
    }
    return rep;
}

} // namespace critgraph

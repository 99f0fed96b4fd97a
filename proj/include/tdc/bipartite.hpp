#pragma once

// Bipartition by breadth-first layering, with an odd-cycle certificate on
// failure. Side X holds the even layers, rooting each component at its
// smallest vertex id.

#include <optional>
#include <queue>
#include <variant>
#include <vector>

#include "tdc/graph.hpp"
#include "tdc/vertex_set.hpp"

namespace tdc {

struct Bipartition {
    VertexSet x, y;
};

// Vertices of an odd cycle in order; consecutive entries (cyclically) are
// adjacent and the length is odd.
using OddCycle = std::vector<int>;

inline std::variant<Bipartition, OddCycle> recognize_bipartite(const Graph& g) {
    std::vector<int> side(static_cast<size_t>(g.n()), -1);
    std::vector<int> parent(static_cast<size_t>(g.n()), -1);
    for (int root = 0; root < g.n(); ++root) {
        if (side[static_cast<size_t>(root)] != -1) continue;
        side[static_cast<size_t>(root)] = 0;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int w : g.neighbors(u)) {
                if (side[static_cast<size_t>(w)] == -1) {
                    side[static_cast<size_t>(w)] = 1 - side[static_cast<size_t>(u)];
                    parent[static_cast<size_t>(w)] = u;
                    q.push(w);
                } else if (side[static_cast<size_t>(w)] == side[static_cast<size_t>(u)]) {
                    // Conflict edge u-w; walk both to their lowest common
                    // ancestor. The closed walk has odd length.
                    std::vector<char> on_u(static_cast<size_t>(g.n()), 0);
                    for (int a = u; a != -1; a = parent[static_cast<size_t>(a)]) on_u[static_cast<size_t>(a)] = 1;
                    int lca = w;
                    while (!on_u[static_cast<size_t>(lca)]) lca = parent[static_cast<size_t>(lca)];
                    OddCycle cycle;
                    for (int a = u; a != lca; a = parent[static_cast<size_t>(a)]) cycle.push_back(a);
                    cycle.push_back(lca);
                    std::vector<int> back;
                    for (int a = w; a != lca; a = parent[static_cast<size_t>(a)]) back.push_back(a);
                    for (auto it = back.rbegin(); it != back.rend(); ++it) cycle.push_back(*it);
                    return cycle;
                }
            }
        }
    }
    Bipartition bp{VertexSet(g.n()), VertexSet(g.n())};
    for (int v = 0; v < g.n(); ++v) {
        if (side[static_cast<size_t>(v)] == 0)
            bp.x.add(v);
        else
            bp.y.add(v);
    }
    return bp;
}

inline bool is_bipartite(const Graph& g) {
    return std::holds_alternative<Bipartition>(recognize_bipartite(g));
}

} // namespace tdc

#pragma once

// Immutable undirected simple graph with dense vertex ids 0..n-1 and sorted
// adjacency lists. Self-loops are rejected; duplicate edges collapse.

#include <algorithm>
#include <cstdint>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "tdc/errors.hpp"
#include "tdc/vertex_set.hpp"

namespace tdc {

class Graph {
public:
    Graph() = default;

    Graph(int n, const std::vector<std::pair<int, int>>& edge_list) : n_(n), adj_(static_cast<size_t>(std::max(n, 0))) {
        if (n < 0) throw PreconditionError("graph order must be non-negative");
        for (auto [u, v] : edge_list) {
            if (u < 0 || u >= n || v < 0 || v >= n)
                throw PreconditionError("edge endpoint out of range");
            if (u == v) throw PreconditionError("self-loops are not allowed");
            adj_[static_cast<size_t>(u)].push_back(v);
            adj_[static_cast<size_t>(v)].push_back(u);
        }
        m_ = 0;
        for (auto& nbrs : adj_) {
            std::sort(nbrs.begin(), nbrs.end());
            nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
            m_ += static_cast<int>(nbrs.size());
        }
        m_ /= 2;
    }

    int n() const { return n_; }
    int m() const { return m_; }

    int degree(int v) const {
        check_vertex(v);
        return static_cast<int>(adj_[static_cast<size_t>(v)].size());
    }

    const std::vector<int>& neighbors(int v) const {
        check_vertex(v);
        return adj_[static_cast<size_t>(v)];
    }

    bool adjacent(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        const auto& nbrs = adj_[static_cast<size_t>(u)];
        return std::binary_search(nbrs.begin(), nbrs.end(), v);
    }

    // All edges as (u, v) with u < v, sorted lexicographically.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        out.reserve(static_cast<size_t>(m_));
        for (int u = 0; u < n_; ++u)
            for (int v : adj_[static_cast<size_t>(u)])
                if (u < v) out.emplace_back(u, v);
        return out;
    }

    VertexSet neighbor_set(int v) const {
        VertexSet s(n_);
        for (int w : neighbors(v)) s.add(w);
        return s;
    }

    bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw PreconditionError("vertex id out of range");
    }

    int n_ = 0;
    int m_ = 0;
    std::vector<std::vector<int>> adj_;
};

inline int min_degree(const Graph& g) {
    int d = g.n() == 0 ? 0 : g.degree(0);
    for (int v = 1; v < g.n(); ++v) d = std::min(d, g.degree(v));
    return d;
}

// True iff every vertex has at least one neighbor (vacuously true for the
// empty graph).
inline bool is_isolate_free(const Graph& g) {
    for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) == 0) return false;
    return true;
}

inline bool is_connected(const Graph& g) {
    if (g.n() <= 1) return true;
    std::vector<char> seen(static_cast<size_t>(g.n()), 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int w : g.neighbors(u)) {
            if (!seen[static_cast<size_t>(w)]) {
                seen[static_cast<size_t>(w)] = 1;
                ++reached;
                q.push(w);
            }
        }
    }
    return reached == g.n();
}

inline bool is_tree(const Graph& g) {
    return g.n() >= 1 && g.m() == g.n() - 1 && is_connected(g);
}

inline Graph complement(const Graph& g) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (!g.adjacent(u, v)) edges.emplace_back(u, v);
    return Graph(g.n(), edges);
}

// Subgraph induced by `verts`; local ids follow the order of `verts`,
// which must be duplicate-free.
inline Graph induced_subgraph(const Graph& g, const std::vector<int>& verts) {
    std::vector<int> local(static_cast<size_t>(g.n()), -1);
    for (size_t i = 0; i < verts.size(); ++i) {
        if (local[static_cast<size_t>(verts[i])] != -1)
            throw PreconditionError("induced_subgraph: duplicate vertex");
        local[static_cast<size_t>(verts[i])] = static_cast<int>(i);
    }
    std::vector<std::pair<int, int>> edges;
    for (int u : verts)
        for (int w : g.neighbors(u))
            if (u < w && local[static_cast<size_t>(w)] != -1)
                edges.emplace_back(local[static_cast<size_t>(u)], local[static_cast<size_t>(w)]);
    return Graph(static_cast<int>(verts.size()), edges);
}

struct Component {
    Graph graph;
    std::vector<int> to_original; // local id -> original id, ascending
};

// Connected components, ordered by smallest original vertex id. Local ids
// within each component preserve the original order.
inline std::vector<Component> components(const Graph& g) {
    std::vector<int> comp(static_cast<size_t>(g.n()), -1);
    int num = 0;
    for (int s = 0; s < g.n(); ++s) {
        if (comp[static_cast<size_t>(s)] != -1) continue;
        std::queue<int> q;
        q.push(s);
        comp[static_cast<size_t>(s)] = num;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int w : g.neighbors(u)) {
                if (comp[static_cast<size_t>(w)] == -1) {
                    comp[static_cast<size_t>(w)] = num;
                    q.push(w);
                }
            }
        }
        ++num;
    }
    std::vector<Component> out(static_cast<size_t>(num));
    for (int v = 0; v < g.n(); ++v) out[static_cast<size_t>(comp[static_cast<size_t>(v)])].to_original.push_back(v);
    for (auto& c : out) c.graph = induced_subgraph(g, c.to_original);
    return out;
}

// Small factory graphs, mostly for tests and experiments.

inline Graph path_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph(n, e);
}

inline Graph cycle_graph(int n) {
    if (n < 3) throw PreconditionError("cycle_graph needs n >= 3");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph(n, e);
}

inline Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph(n, e);
}

// K_{a,b} with side X = {0..a-1} and side Y = {a..a+b-1}.
inline Graph complete_bipartite(int a, int b) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) e.emplace_back(i, a + j);
    return Graph(a + b, e);
}

// Star K_{1,k}: center 0, leaves 1..k.
inline Graph star_graph(int k) { return complete_bipartite(1, k); }

} // namespace tdc

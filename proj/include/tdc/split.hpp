#pragma once

// Split graphs: V partitions into a clique K and an independent set I.
// Recognition uses the degree-sequence criterion (sort degrees descending,
// m = max{ i : d_i >= i-1 }; split iff sum_{i<=m} d_i = m(m-1) +
// sum_{i>m} d_i). The partition is normalized to |K| = omega(G) by moving
// any I-vertex adjacent to all of K into K, and the result is verified
// against a brute-force maximum clique.
//
// For a connected split graph, omega <= chi_td <= omega + 1, and chi_td
// equals chi_d; the solver decides the value through the dominator-coloring
// search and cross-checks with the TD feasibility test at omega.

#include <algorithm>
#include <functional>
#include <numeric>
#include <utility>
#include <variant>
#include <vector>

#include "tdc/coloring.hpp"
#include "tdc/errors.hpp"
#include "tdc/exact.hpp"
#include "tdc/graph.hpp"
#include "tdc/vertex_set.hpp"

namespace tdc {

struct SplitPartition {
    VertexSet k_side; // clique, |K| = omega(G)
    VertexSet i_side; // independent set
    int omega = 0;
};

enum class SplitFailure { NotSplit };

// Brute-force clique number; desk scale only.
inline int clique_number_exact(const Graph& g) {
    int best = 0;
    std::vector<int> clique;
    std::function<void(int)> grow = [&](int next) {
        best = std::max(best, static_cast<int>(clique.size()));
        for (int v = next; v < g.n(); ++v) {
            if (static_cast<int>(clique.size()) + (g.n() - v) <= best) break;
            bool ok = true;
            for (int u : clique)
                if (!g.adjacent(u, v)) ok = false;
            if (!ok) continue;
            clique.push_back(v);
            grow(v + 1);
            clique.pop_back();
        }
    };
    grow(0);
    return best;
}

inline std::variant<SplitPartition, SplitFailure> recognize_split(const Graph& g) {
    if (g.n() == 0) return SplitFailure::NotSplit;
    std::vector<int> order(static_cast<size_t>(g.n()));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
        return a < b;
    });

    int m = 0;
    for (int i = 1; i <= g.n(); ++i)
        if (g.degree(order[static_cast<size_t>(i - 1)]) >= i - 1) m = i;
    long long lhs = 0, rhs = static_cast<long long>(m) * (m - 1);
    for (int i = 1; i <= g.n(); ++i) {
        if (i <= m)
            lhs += g.degree(order[static_cast<size_t>(i - 1)]);
        else
            rhs += g.degree(order[static_cast<size_t>(i - 1)]);
    }
    if (lhs != rhs) return SplitFailure::NotSplit;

    SplitPartition part{VertexSet(g.n()), VertexSet(g.n()), 0};
    for (int i = 0; i < g.n(); ++i) {
        if (i < m)
            part.k_side.add(order[static_cast<size_t>(i)]);
        else
            part.i_side.add(order[static_cast<size_t>(i)]);
    }

    for (int u : part.k_side.to_vector())
        for (int v : part.k_side.to_vector())
            if (u < v && !g.adjacent(u, v)) throw InternalError("recognize_split: K is not a clique");
    for (int u : part.i_side.to_vector())
        for (int v : g.neighbors(u))
            if (part.i_side.contains(v)) throw InternalError("recognize_split: I is not independent");

    // Normalize to |K| = omega: an I-vertex adjacent to all of K moves in.
    // At most one move is possible (I is independent).
    bool moved = true;
    while (moved) {
        moved = false;
        for (int v : part.i_side.to_vector()) {
            bool sees_all = true;
            for (int u : part.k_side.to_vector())
                if (!g.adjacent(u, v)) sees_all = false;
            if (sees_all) {
                part.i_side.remove(v);
                part.k_side.add(v);
                moved = true;
                break;
            }
        }
    }
    part.omega = part.k_side.count();
    if (part.omega != clique_number_exact(g)) throw InternalError("recognize_split: |K| != omega");
    return part;
}

inline bool is_split_graph(const Graph& g) {
    return std::holds_alternative<SplitPartition>(recognize_split(g));
}

// The omega+1 witness: each clique vertex gets its own color, all of I one
// new color. Always a TD-coloring of a connected split graph.
inline Coloring split_omega_plus_one_coloring(const Graph& g, const SplitPartition& part) {
    std::vector<int> colors(static_cast<size_t>(g.n()), part.omega + 1);
    int next = 1;
    for (int v : part.k_side.to_vector()) colors[static_cast<size_t>(v)] = next++;
    // for a complete graph I is empty and normalization drops the unused color
    return Coloring(colors);
}

// Exact chi_td of a connected isolate-free split graph. The value is
// decided by chi_d (the two numbers agree on split graphs with omega >= 2)
// and cross-checked against TD feasibility at omega.
inline std::pair<int, Coloring> chi_td_split(const Graph& g, const SearchLimits& limits = {}) {
    detail::require_isolate_free(g, "chi_td_split");
    if (!is_connected(g)) throw PreconditionError("chi_td_split: graph is not connected");
    auto rec = recognize_split(g);
    if (!std::holds_alternative<SplitPartition>(rec))
        throw PreconditionError("chi_td_split: graph is not split");
    const SplitPartition& part = std::get<SplitPartition>(rec);
    if (part.omega < 2) throw InternalError("chi_td_split: omega < 2 on an isolate-free graph");

    int value = chi_d_exact(g, limits).value;
    if (value != part.omega && value != part.omega + 1)
        throw InternalError("chi_td_split: chi_d outside {omega, omega+1}");

    auto at_omega = feasible_td_coloring(g, part.omega, limits);
    if (at_omega.has_value() != (value == part.omega))
        throw InternalError("chi_td_split: chi_d / chi_td equivalence violated");

    Coloring witness = at_omega ? *at_omega : split_omega_plus_one_coloring(g, part);
    if (witness.num_colors() != value) throw InternalError("chi_td_split: witness color count mismatch");
    if (!is_td_coloring(g, witness)) throw InternalError("chi_td_split: witness failed validation");
    return {value, witness};
}

} // namespace tdc

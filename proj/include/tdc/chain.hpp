#pragma once

// Chain graphs: bipartite graphs whose neighborhoods on one side form a
// nested chain. The chain partition groups each side into blocks of equal
// neighborhoods; for x in X_i, N(x) = Y_1 u ... u Y_i, and for y in Y_i,
// N(y) = X_i u ... u X_k. On an isolate-free chain graph gamma_t = 2, and
// chi_td is exactly 2, 3, or 4 according to k = 1, k = 2, or k >= 3, with
// explicit witness colorings in each case.

#include <algorithm>
#include <utility>
#include <variant>
#include <vector>

#include "tdc/bipartite.hpp"
#include "tdc/coloring.hpp"
#include "tdc/domination.hpp"
#include "tdc/errors.hpp"
#include "tdc/graph.hpp"

namespace tdc {

struct ChainPartition {
    std::vector<VertexSet> x_blocks; // X_1..X_k, neighborhoods strictly increasing
    std::vector<VertexSet> y_blocks; // Y_1..Y_k
    VertexSet x_side, y_side;

    int k() const { return static_cast<int>(x_blocks.size()); }
};

enum class ChainFailure {
    NotBipartite,
    Disconnected, // an isolate-free chain graph is necessarily connected
    NotNested,
};

inline const char* to_string(ChainFailure f) {
    switch (f) {
    case ChainFailure::NotBipartite: return "not bipartite";
    case ChainFailure::Disconnected: return "disconnected";
    case ChainFailure::NotNested: return "neighborhoods not nested";
    }
    return "?";
}

inline std::variant<ChainPartition, ChainFailure> recognize_chain(const Graph& g) {
    detail::require_isolate_free(g, "recognize_chain");
    auto bip = recognize_bipartite(g);
    if (!std::holds_alternative<Bipartition>(bip)) return ChainFailure::NotBipartite;
    if (!is_connected(g)) return ChainFailure::Disconnected;

    const Bipartition& sides = std::get<Bipartition>(bip);
    std::vector<int> xs = sides.x.to_vector();
    std::sort(xs.begin(), xs.end(), [&](int a, int b) {
        if (g.degree(a) != g.degree(b)) return g.degree(a) < g.degree(b);
        return a < b;
    });

    // Nesting along the degree-sorted order; subset checks on sorted lists.
    for (size_t i = 0; i + 1 < xs.size(); ++i) {
        const auto& small = g.neighbors(xs[i]);
        const auto& big = g.neighbors(xs[i + 1]);
        if (!std::includes(big.begin(), big.end(), small.begin(), small.end()))
            return ChainFailure::NotNested;
    }

    ChainPartition part;
    part.x_side = sides.x;
    part.y_side = sides.y;
    for (size_t i = 0; i < xs.size(); ++i) {
        if (i == 0 || g.neighbors(xs[i]) != g.neighbors(xs[i - 1])) part.x_blocks.emplace_back(g.n());
        part.x_blocks.back().add(xs[i]);
    }
    VertexSet seen(g.n());
    for (const auto& xb : part.x_blocks) {
        VertexSet nb(g.n());
        for (int x : xb.to_vector())
            for (int y : g.neighbors(x)) nb.add(y);
        part.y_blocks.push_back(nb - seen);
        seen |= nb;
    }

    // Post-hoc invariant check of the block structure.
    for (int i = 0; i < part.k(); ++i) {
        if (part.x_blocks[static_cast<size_t>(i)].empty() || part.y_blocks[static_cast<size_t>(i)].empty())
            throw InternalError("recognize_chain: empty block");
        VertexSet expect_x(g.n());
        for (int j = 0; j <= i; ++j) expect_x |= part.y_blocks[static_cast<size_t>(j)];
        for (int x : part.x_blocks[static_cast<size_t>(i)].to_vector())
            if (g.neighbor_set(x) != expect_x) throw InternalError("recognize_chain: X block neighborhood mismatch");
        VertexSet expect_y(g.n());
        for (int j = i; j < part.k(); ++j) expect_y |= part.x_blocks[static_cast<size_t>(j)];
        for (int y : part.y_blocks[static_cast<size_t>(i)].to_vector())
            if (g.neighbor_set(y) != expect_y) throw InternalError("recognize_chain: Y block neighborhood mismatch");
    }
    return part;
}

inline bool is_chain_graph(const Graph& g) {
    return std::holds_alternative<ChainPartition>(recognize_chain(g));
}

// chi_td of an isolate-free chain graph with the constructive witness:
// k = 1: the two sides; k = 2: Y_1 -> 1, X_2 -> 2, X_1 u Y_2 -> 3;
// k >= 3: Y_1 -> 1, X_k -> 2, X \ X_k -> 3, Y \ Y_1 -> 4.
inline std::pair<int, Coloring> chi_td_chain(const Graph& g) {
    auto rec = recognize_chain(g);
    if (!std::holds_alternative<ChainPartition>(rec))
        throw PreconditionError(std::string("chi_td_chain: not a chain graph (") +
                                to_string(std::get<ChainFailure>(rec)) + ")");
    const ChainPartition& part = std::get<ChainPartition>(rec);
    int k = part.k();
    std::vector<int> colors(static_cast<size_t>(g.n()), 0);
    auto paint = [&](const VertexSet& s, int c) {
        for (int v : s.to_vector()) colors[static_cast<size_t>(v)] = c;
    };
    int value;
    if (k == 1) {
        value = 2;
        paint(part.x_side, 1);
        paint(part.y_side, 2);
    } else if (k == 2) {
        value = 3;
        paint(part.y_blocks[0], 1);
        paint(part.x_blocks[1], 2);
        paint(part.x_blocks[0], 3);
        paint(part.y_blocks[1], 3);
    } else {
        value = 4;
        paint(part.y_side, 4);
        paint(part.x_side, 3);
        paint(part.y_blocks[0], 1);
        paint(part.x_blocks[static_cast<size_t>(k - 1)], 2);
    }
    Coloring witness(colors);
    if (witness.num_colors() != value) throw InternalError("chi_td_chain: witness color count mismatch");
    if (!is_td_coloring(g, witness)) throw InternalError("chi_td_chain: witness failed validation");
    return {value, witness};
}

} // namespace tdc

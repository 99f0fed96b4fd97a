#pragma once

// Structural analysis of a total dominator coloring: the partition of the
// color classes into solitary (C_P), dominated non-solitary (C_S), and
// undominated non-solitary (C_G) classes, plus the minimum exclusive cover
// C_0, the vertex sets A/B, the representatives D_S/D_0, and per-vertex
// dominated-class lists. Also Algorithm-style TD-set extraction: one
// representative per class of a TD-coloring is always a TD-set.

#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "tdc/coloring.hpp"
#include "tdc/errors.hpp"
#include "tdc/graph.hpp"
#include "tdc/vertex_set.hpp"

namespace tdc {

struct ColoringAnalysis {
    int num_colors = 0;
    std::vector<VertexSet> classes;         // classes[i] = class of color i+1
    std::vector<int> c_p, c_s, c_g;         // 1-based class ids, ascending
    std::vector<int> c_0;                   // minimum exclusive cover, lex-least
    VertexSet a;                            // union of C_P classes
    VertexSet b;                            // union of C_G classes
    VertexSet d_s;                          // lowest vertex of each C_S class
    VertexSet d_0;                          // lowest vertex of each C_0 class
    std::vector<std::vector<int>> dominated_by; // per vertex: class ids it totally dominates
};

namespace detail {

// Minimum-cardinality subset of classes such that every vertex totally
// dominates one of them, lexicographically least among minimum solutions.
// Exact search over class subsets; the class count is small at desk scale.
inline std::vector<int> minimum_exclusive_cover(const std::vector<std::uint64_t>& dom_mask, int k) {
    if (k > 64) throw PreconditionError("analyze: more than 64 color classes unsupported");
    std::vector<int> pick;
    std::function<bool(int, int)> choose = [&](int next, int slots) -> bool {
        if (slots == 0) {
            std::uint64_t mask = 0;
            for (int id : pick) mask |= std::uint64_t{1} << (id - 1);
            for (std::uint64_t dm : dom_mask)
                if ((dm & mask) == 0) return false;
            return true;
        }
        for (int c = next; c <= k - slots + 1; ++c) {
            pick.push_back(c);
            if (choose(c + 1, slots - 1)) return true;
            pick.pop_back();
        }
        return false;
    };
    for (int size = 1; size <= k; ++size) {
        pick.clear();
        if (choose(1, size)) return pick;
    }
    throw InternalError("minimum_exclusive_cover: no cover found for a TD-coloring");
}

} // namespace detail

inline ColoringAnalysis analyze(const Graph& g, const Coloring& c) {
    if (auto v = first_td_violation(g, c))
        throw PreconditionError("analyze: not a TD-coloring (vertex " + std::to_string(*v) + ")");

    ColoringAnalysis an;
    an.num_colors = c.num_colors();
    an.classes = c.class_sets(g.n());
    an.a = VertexSet(g.n());
    an.b = VertexSet(g.n());
    an.d_s = VertexSet(g.n());
    an.d_0 = VertexSet(g.n());
    an.dominated_by.assign(static_cast<size_t>(g.n()), {});

    std::vector<std::uint64_t> dom_mask(static_cast<size_t>(g.n()), 0);
    std::vector<int> dominator_count(static_cast<size_t>(an.num_colors), 0);
    for (int v = 0; v < g.n(); ++v) {
        VertexSet nbrs = g.neighbor_set(v);
        for (int i = 0; i < an.num_colors; ++i) {
            if (an.classes[static_cast<size_t>(i)].is_subset_of(nbrs)) {
                an.dominated_by[static_cast<size_t>(v)].push_back(i + 1);
                dom_mask[static_cast<size_t>(v)] |= std::uint64_t{1} << i;
                ++dominator_count[static_cast<size_t>(i)];
            }
        }
    }

    for (int i = 0; i < an.num_colors; ++i) {
        const VertexSet& cls = an.classes[static_cast<size_t>(i)];
        if (cls.count() == 1) {
            an.c_p.push_back(i + 1);
            an.a |= cls;
        } else if (dominator_count[static_cast<size_t>(i)] > 0) {
            an.c_s.push_back(i + 1);
            an.d_s.add(cls.to_vector().front());
        } else {
            an.c_g.push_back(i + 1);
            an.b |= cls;
        }
    }

    an.c_0 = detail::minimum_exclusive_cover(dom_mask, an.num_colors);
    for (int id : an.c_0) an.d_0.add(an.classes[static_cast<size_t>(id - 1)].to_vector().front());
    return an;
}

// A class is free when every vertex totally dominates some class other
// than it; recomputable, hence not stored on the analysis.
inline bool is_free_class(const ColoringAnalysis& an, int class_id) {
    for (const auto& doms : an.dominated_by) {
        bool other = false;
        for (int id : doms)
            if (id != class_id) other = true;
        if (!other) return false;
    }
    return true;
}

// One vertex per color class (lowest id). For a TD-coloring this is a
// TD-set of size num_colors: each vertex dominates some class entirely, so
// it is adjacent to that class's representative.
inline VertexSet extract_td_set(const Graph& g, const Coloring& c) {
    if (auto v = first_td_violation(g, c))
        throw PreconditionError("extract_td_set: not a TD-coloring (vertex " + std::to_string(*v) + ")");
    VertexSet d(g.n());
    for (const auto& cls : c.class_sets(g.n())) d.add(cls.to_vector().front());
    return d;
}

} // namespace tdc

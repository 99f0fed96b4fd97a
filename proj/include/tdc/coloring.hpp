#pragma once

// Vertex colorings and the three validators: proper coloring, total
// dominator coloring (every vertex is adjacent to all of some class), and
// dominator coloring (closed-neighborhood variant, own singleton allowed).
//
// Color ids are normalized to 1..k on construction, preserving class
// identity and the relative order of the incoming ids.

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

#include "tdc/errors.hpp"
#include "tdc/graph.hpp"
#include "tdc/vertex_set.hpp"

namespace tdc {

class Coloring {
public:
    Coloring() = default;

    explicit Coloring(std::vector<int> colors) : colors_(std::move(colors)) {
        std::map<int, int> relabel;
        for (int c : colors_) {
            if (c < 1) throw PreconditionError("Coloring: color ids must be >= 1");
            relabel.emplace(c, 0);
        }
        int next = 1;
        for (auto& [_, lab] : relabel) lab = next++;
        for (int& c : colors_) c = relabel[c];
        k_ = next - 1;
    }

    int size() const { return static_cast<int>(colors_.size()); }
    int num_colors() const { return k_; }

    int color(int v) const {
        if (v < 0 || v >= size()) throw PreconditionError("Coloring: vertex out of range");
        return colors_[static_cast<size_t>(v)];
    }

    const std::vector<int>& colors() const { return colors_; }

    // classes()[c-1] lists the vertices of color c, ascending.
    std::vector<std::vector<int>> classes() const {
        std::vector<std::vector<int>> out(static_cast<size_t>(k_));
        for (int v = 0; v < size(); ++v) out[static_cast<size_t>(colors_[static_cast<size_t>(v)] - 1)].push_back(v);
        return out;
    }

    std::vector<VertexSet> class_sets(int universe) const {
        if (universe != size()) throw PreconditionError("Coloring: universe mismatch");
        std::vector<VertexSet> out(static_cast<size_t>(k_), VertexSet(universe));
        for (int v = 0; v < size(); ++v) out[static_cast<size_t>(colors_[static_cast<size_t>(v)] - 1)].add(v);
        return out;
    }

    bool operator==(const Coloring& o) const = default;

private:
    std::vector<int> colors_;
    int k_ = 0;
};

namespace detail {

inline void require_covers(const Graph& g, const Coloring& c, const char* op) {
    if (c.size() != g.n())
        throw PreconditionError(std::string(op) + ": coloring covers " + std::to_string(c.size()) +
                                " vertices, graph has " + std::to_string(g.n()));
}

} // namespace detail

// Smallest vertex incident to a monochromatic edge, if any.
inline std::optional<int> first_proper_violation(const Graph& g, const Coloring& c) {
    detail::require_covers(g, c, "is_proper");
    for (int v = 0; v < g.n(); ++v)
        for (int w : g.neighbors(v))
            if (c.color(w) == c.color(v)) return v;
    return std::nullopt;
}

inline bool is_proper(const Graph& g, const Coloring& c) {
    return !first_proper_violation(g, c).has_value();
}

// Smallest vertex that either breaks propriety or totally dominates no
// color class. A vertex can never totally dominate its own class, since it
// is not adjacent to itself.
inline std::optional<int> first_td_violation(const Graph& g, const Coloring& c) {
    detail::require_covers(g, c, "is_td_coloring");
    auto classes = c.class_sets(g.n());
    for (int v = 0; v < g.n(); ++v) {
        VertexSet nbrs = g.neighbor_set(v);
        bool mono_edge = false;
        for (int w : g.neighbors(v))
            if (c.color(w) == c.color(v)) mono_edge = true;
        if (mono_edge) return v;
        bool dominates_some = false;
        for (const auto& cls : classes) {
            if (cls.is_subset_of(nbrs)) { // classes are nonempty by construction
                dominates_some = true;
                break;
            }
        }
        if (!dominates_some) return v;
    }
    return std::nullopt;
}

inline bool is_td_coloring(const Graph& g, const Coloring& c) {
    return !first_td_violation(g, c).has_value();
}

// Dominator-coloring check: each vertex must dominate all of some class
// within its closed neighborhood; its own class qualifies exactly when it
// is a singleton.
inline std::optional<int> first_dominator_violation(const Graph& g, const Coloring& c) {
    detail::require_covers(g, c, "is_dominator_coloring");
    auto classes = c.class_sets(g.n());
    for (int v = 0; v < g.n(); ++v) {
        VertexSet closed = g.neighbor_set(v);
        closed.add(v);
        bool mono_edge = false;
        for (int w : g.neighbors(v))
            if (c.color(w) == c.color(v)) mono_edge = true;
        if (mono_edge) return v;
        bool dominates_some = false;
        for (const auto& cls : classes) {
            if (cls.is_subset_of(closed)) {
                dominates_some = true;
                break;
            }
        }
        if (!dominates_some) return v;
    }
    return std::nullopt;
}

inline bool is_dominator_coloring(const Graph& g, const Coloring& c) {
    return !first_dominator_violation(g, c).has_value();
}

} // namespace tdc

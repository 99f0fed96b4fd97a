#pragma once

// Exact chromatic, total dominator chromatic, and dominator chromatic
// numbers by bounded backtracking. One engine serves all three: vertices
// are assigned in descending-degree order (ties by id), a new color may
// only be introduced as max-used + 1, and for the domination variants each
// vertex tracks which colors are already "broken" for it (some vertex of
// that color lies outside the relevant neighborhood). A vertex whose
// colors are all broken prunes the branch; the test is conservative and
// never cuts a feasible extension.
//
// chi_td is searched bottom-up from max(gamma_t, chi): the feasibility
// test is far cheaper near the lower bound than near the upper one.
// Every returned witness is re-validated before it leaves the solver.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "tdc/coloring.hpp"
#include "tdc/domination.hpp"
#include "tdc/errors.hpp"
#include "tdc/graph.hpp"
#include "tdc/search.hpp"

namespace tdc {

struct SolveResult {
    int value = 0;
    Coloring witness;
    int lower_bound_used = 0;
    int upper_bound_used = 0;
};

namespace detail {

enum class ColoringKind { Proper, TotalDominator, Dominator };

constexpr int kMaxExactOrder = 64;

inline void require_exact_order(const Graph& g, const char* op) {
    if (g.n() > kMaxExactOrder)
        throw PreconditionError(std::string(op) + ": exact search supports at most 64 vertices");
}

inline std::vector<std::uint64_t> open_neighbor_masks(const Graph& g) {
    std::vector<std::uint64_t> m(static_cast<size_t>(g.n()), 0);
    for (int v = 0; v < g.n(); ++v)
        for (int w : g.neighbors(v)) m[static_cast<size_t>(v)] |= std::uint64_t{1} << w;
    return m;
}

inline std::vector<int> degree_descending_order(const Graph& g) {
    std::vector<int> order(static_cast<size_t>(g.n()));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
        return a < b;
    });
    return order;
}

class ColoringSearch {
public:
    ColoringSearch(const Graph& g, int k, ColoringKind kind, NodeCounter& nodes)
        : g_(g), n_(g.n()), k_(std::min(k, std::max(g.n(), 1))), kind_(kind), nodes_(nodes) {
        order_ = degree_descending_order(g_);
        auto open = open_neighbor_masks(g_);
        scope_.resize(static_cast<size_t>(n_));
        for (int v = 0; v < n_; ++v) {
            scope_[static_cast<size_t>(v)] = open[static_cast<size_t>(v)];
            if (kind_ == ColoringKind::Dominator) scope_[static_cast<size_t>(v)] |= std::uint64_t{1} << v;
        }
        open_ = std::move(open);
        in_scope_of_.assign(static_cast<size_t>(n_), 0);
        for (int w = 0; w < n_; ++w)
            for (int v = 0; v < n_; ++v)
                if ((scope_[static_cast<size_t>(w)] >> v) & 1)
                    in_scope_of_[static_cast<size_t>(v)] |= std::uint64_t{1} << w;
        color_.assign(static_cast<size_t>(n_), 0);
        adj_count_.assign(static_cast<size_t>(n_) * static_cast<size_t>(k_ + 1), 0);
        broken_count_.assign(static_cast<size_t>(n_) * static_cast<size_t>(k_ + 1), 0);
        broken_mask_.assign(static_cast<size_t>(n_), 0);
        full_mask_ = k_ >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << k_) - 1);
    }

    std::optional<Coloring> run() {
        if (n_ == 0) return Coloring();
        if (search(0, 0)) return Coloring(color_);
        return std::nullopt;
    }

private:
    int& adj_count(int v, int c) { return adj_count_[static_cast<size_t>(v) * static_cast<size_t>(k_ + 1) + static_cast<size_t>(c)]; }
    int& broken_count(int v, int c) { return broken_count_[static_cast<size_t>(v) * static_cast<size_t>(k_ + 1) + static_cast<size_t>(c)]; }

    bool search(int pos, int max_used) {
        nodes_.tick();
        if (pos == n_) return leaf_ok(max_used);
        int v = order_[static_cast<size_t>(pos)];
        int cmax = std::min(k_, max_used + 1);
        for (int c = 1; c <= cmax; ++c) {
            if (adj_count(v, c) > 0) continue;
            bool doomed = false;
            color_[static_cast<size_t>(v)] = c;
            for (int w : g_.neighbors(v)) ++adj_count(w, c);
            if (kind_ != ColoringKind::Proper) {
                std::uint64_t in_scope = in_scope_of_[static_cast<size_t>(v)];
                for (int w = 0; w < n_; ++w) {
                    if ((in_scope >> w) & 1) continue; // v lies inside w's scope, no break
                    if (++broken_count(w, c) == 1) {
                        broken_mask_[static_cast<size_t>(w)] |= std::uint64_t{1} << (c - 1);
                        if ((broken_mask_[static_cast<size_t>(w)] & full_mask_) == full_mask_) doomed = true;
                    }
                }
            }
            if (!doomed && search(pos + 1, std::max(max_used, c))) return true;
            if (kind_ != ColoringKind::Proper) {
                std::uint64_t in_scope = in_scope_of_[static_cast<size_t>(v)];
                for (int w = 0; w < n_; ++w) {
                    if ((in_scope >> w) & 1) continue;
                    if (--broken_count(w, c) == 0)
                        broken_mask_[static_cast<size_t>(w)] &= ~(std::uint64_t{1} << (c - 1));
                }
            }
            for (int w : g_.neighbors(v)) --adj_count(w, c);
            color_[static_cast<size_t>(v)] = 0;
        }
        return false;
    }

    bool leaf_ok(int max_used) {
        if (kind_ == ColoringKind::Proper) return true;
        std::uint64_t used = max_used >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << max_used) - 1);
        for (int w = 0; w < n_; ++w)
            if ((~broken_mask_[static_cast<size_t>(w)] & used) == 0) return false;
        return true;
    }

    const Graph& g_;
    int n_;
    int k_;
    ColoringKind kind_;
    NodeCounter& nodes_;
    std::vector<int> order_;
    std::vector<std::uint64_t> open_;
    std::vector<std::uint64_t> scope_;       // per vertex: mask of its relevant neighborhood
    std::vector<std::uint64_t> in_scope_of_; // in_scope_of_[v]: vertices whose scope contains v
    std::vector<int> color_;
    std::vector<int> adj_count_;
    std::vector<int> broken_count_;
    std::vector<std::uint64_t> broken_mask_;
    std::uint64_t full_mask_ = 0;
};

inline std::optional<Coloring> feasible_coloring(const Graph& g, int k, ColoringKind kind, NodeCounter& nodes) {
    if (k < 1) return std::nullopt;
    ColoringSearch s(g, k, kind, nodes);
    return s.run();
}

// Greedy clique (valid lower bound for chi).
inline int greedy_clique_size(const Graph& g) {
    if (g.n() == 0) return 0;
    auto order = degree_descending_order(g);
    std::vector<int> clique;
    for (int v : order) {
        bool ok = true;
        for (int u : clique)
            if (!g.adjacent(u, v)) ok = false;
        if (ok) clique.push_back(v);
    }
    return static_cast<int>(clique.size());
}

// First-fit coloring in descending-degree order (valid upper bound).
inline Coloring greedy_coloring(const Graph& g) {
    std::vector<int> color(static_cast<size_t>(g.n()), 0);
    for (int v : degree_descending_order(g)) {
        std::uint64_t used = 0;
        for (int w : g.neighbors(v))
            if (color[static_cast<size_t>(w)] > 0 && color[static_cast<size_t>(w)] <= 64)
                used |= std::uint64_t{1} << (color[static_cast<size_t>(w)] - 1);
        int c = static_cast<int>(std::countr_one(used)) + 1;
        color[static_cast<size_t>(v)] = c;
    }
    return Coloring(color);
}

} // namespace detail

// Some TD-coloring of g with at most k colors, or nullopt when none exists.
// Throws BudgetError when the node budget runs out before either outcome.
inline std::optional<Coloring> feasible_td_coloring(const Graph& g, int k, const SearchLimits& limits = {}) {
    detail::require_isolate_free(g, "feasible_td_coloring");
    detail::require_exact_order(g, "feasible_td_coloring");
    if (k < 1) throw PreconditionError("feasible_td_coloring: k must be >= 1");
    detail::NodeCounter nodes(limits);
    return detail::feasible_coloring(g, k, detail::ColoringKind::TotalDominator, nodes);
}

inline SolveResult chi_exact(const Graph& g, const SearchLimits& limits = {}) {
    detail::require_exact_order(g, "chi_exact");
    if (g.n() == 0) return SolveResult{0, Coloring(), 0, 0};
    detail::NodeCounter nodes(limits);
    int lb = std::max(1, detail::greedy_clique_size(g));
    Coloring greedy = detail::greedy_coloring(g);
    int ub = greedy.num_colors();
    for (int k = lb; k < ub; ++k) {
        if (auto c = detail::feasible_coloring(g, k, detail::ColoringKind::Proper, nodes)) {
            if (!is_proper(g, *c)) throw InternalError("chi_exact: invalid witness");
            return SolveResult{c->num_colors(), *c, lb, ub};
        }
    }
    return SolveResult{ub, greedy, lb, ub};
}

inline SolveResult chi_td_exact(const Graph& g, const SearchLimits& limits = {}) {
    detail::require_isolate_free(g, "chi_td_exact");
    detail::require_exact_order(g, "chi_td_exact");
    TDSetResult gt = gamma_t_exact(g, limits);
    SolveResult chi = chi_exact(g, limits);
    int lb = std::max(gt.gamma_t, chi.value);
    int ub = gt.gamma_t + chi.value;
    detail::NodeCounter nodes(limits);
    for (int k = lb; k <= ub; ++k) {
        if (auto c = detail::feasible_coloring(g, k, detail::ColoringKind::TotalDominator, nodes)) {
            if (!is_td_coloring(g, *c)) throw InternalError("chi_td_exact: invalid witness");
            if (c->num_colors() != k) throw InternalError("chi_td_exact: witness skipped a value");
            return SolveResult{k, *c, lb, ub};
        }
    }
    throw InternalError("chi_td_exact: no coloring within gamma_t + chi colors");
}

inline SolveResult chi_d_exact(const Graph& g, const SearchLimits& limits = {}) {
    detail::require_exact_order(g, "chi_d_exact");
    if (g.n() == 0) return SolveResult{0, Coloring(), 0, 0};
    SolveResult chi = chi_exact(g, limits);
    int lb = chi.value;
    int ub = g.n(); // all-singleton coloring is always a dominator coloring
    detail::NodeCounter nodes(limits);
    for (int k = lb; k <= ub; ++k) {
        if (auto c = detail::feasible_coloring(g, k, detail::ColoringKind::Dominator, nodes)) {
            if (!is_dominator_coloring(g, *c)) throw InternalError("chi_d_exact: invalid witness");
            return SolveResult{c->num_colors(), *c, lb, ub};
        }
    }
    throw InternalError("chi_d_exact: no dominator coloring found");
}

} // namespace tdc

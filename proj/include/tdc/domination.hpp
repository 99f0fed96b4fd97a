#pragma once

// Total domination primitives: TD-set verification, exact gamma_t by
// bottom-up cardinality search, private neighborhoods with the D_I/D_R
// split, and lexicographic enumeration of all minimum TD-sets.
//
// A vertex never totally dominates itself, so gamma_t >= 2 on every
// isolate-free graph and is undefined when isolated vertices are present.

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tdc/errors.hpp"
#include "tdc/graph.hpp"
#include "tdc/search.hpp"
#include "tdc/vertex_set.hpp"

namespace tdc {

struct TDSetResult {
    int gamma_t = 0;
    VertexSet witness;
};

inline bool is_td_set(const Graph& g, const VertexSet& d) {
    if (d.universe() != g.n()) throw PreconditionError("is_td_set: universe mismatch");
    for (int v = 0; v < g.n(); ++v) {
        bool dominated = false;
        for (int w : g.neighbors(v)) {
            if (d.contains(w)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) return false;
    }
    return true;
}

namespace detail {

inline void require_isolate_free(const Graph& g, const char* op) {
    if (g.n() == 0) throw PreconditionError(std::string(op) + ": graph is empty");
    for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) == 0)
            throw PreconditionError(std::string(op) + ": vertex " + std::to_string(v) + " is isolated");
}

// Enumerates TD-sets of size exactly k in lexicographic order (as sorted id
// sequences). The visitor returns false to stop. Pruning: the smallest
// uncovered vertex must still be able to gain a dominator among the ids
// not yet passed over, and the remaining slots must suffice to cover the
// rest at max-degree rate.
class TdSetEnumerator {
public:
    TdSetEnumerator(const Graph& g, int k, NodeCounter& nodes)
        : g_(g), k_(k), nodes_(nodes), chosen_(g.n()), cover_(static_cast<size_t>(g.n()), 0) {
        max_deg_ = 0;
        for (int v = 0; v < g_.n(); ++v) max_deg_ = std::max(max_deg_, g_.degree(v));
        uncovered_ = g_.n();
    }

    bool run(const std::function<bool(const VertexSet&)>& visit) {
        visit_ = &visit;
        return recurse(0, k_);
    }

private:
    bool recurse(int next, int slots) {
        nodes_.tick();
        if (uncovered_ == 0) return (*visit_)(chosen_);
        if (slots == 0) return true;
        if (static_cast<long long>(slots) * max_deg_ < uncovered_) return true;

        int first_uncovered = -1;
        for (int v = 0; v < g_.n(); ++v) {
            if (cover_[static_cast<size_t>(v)] == 0) {
                first_uncovered = v;
                break;
            }
        }
        // The smallest uncovered vertex needs a dominator with id >= next.
        const auto& nbrs = g_.neighbors(first_uncovered);
        if (nbrs.empty() || nbrs.back() < next) return true;

        for (int c = next; c <= g_.n() - slots; ++c) {
            if (nbrs.back() < c && cover_[static_cast<size_t>(first_uncovered)] == 0) break;
            chosen_.add(c);
            for (int w : g_.neighbors(c))
                if (cover_[static_cast<size_t>(w)]++ == 0) --uncovered_;
            bool keep_going = recurse(c + 1, slots - 1);
            for (int w : g_.neighbors(c))
                if (--cover_[static_cast<size_t>(w)] == 0) ++uncovered_;
            chosen_.remove(c);
            if (!keep_going) return false;
        }
        return true;
    }

    const Graph& g_;
    int k_;
    NodeCounter& nodes_;
    VertexSet chosen_;
    std::vector<int> cover_;
    int uncovered_ = 0;
    int max_deg_ = 0;
    const std::function<bool(const VertexSet&)>* visit_ = nullptr;
};

// Greedy TD-set (max coverage first, ties by id); valid upper bound.
inline VertexSet greedy_td_set(const Graph& g) {
    VertexSet d(g.n());
    std::vector<char> covered(static_cast<size_t>(g.n()), 0);
    int left = g.n();
    while (left > 0) {
        int best = -1, best_gain = -1;
        for (int v = 0; v < g.n(); ++v) {
            if (d.contains(v)) continue;
            int gain = 0;
            for (int w : g.neighbors(v))
                if (!covered[static_cast<size_t>(w)]) ++gain;
            if (gain > best_gain) {
                best_gain = gain;
                best = v;
            }
        }
        if (best_gain <= 0) throw InternalError("greedy_td_set: no progress (isolated vertex?)");
        d.add(best);
        for (int w : g.neighbors(best)) {
            if (!covered[static_cast<size_t>(w)]) {
                covered[static_cast<size_t>(w)] = 1;
                --left;
            }
        }
    }
    return d;
}

} // namespace detail

// Exact total domination number with a lexicographically least witness.
inline TDSetResult gamma_t_exact(const Graph& g, const SearchLimits& limits = {}) {
    detail::require_isolate_free(g, "gamma_t_exact");
    int ub = detail::greedy_td_set(g).count();
    detail::NodeCounter nodes(limits);
    for (int k = 2; k <= ub; ++k) {
        std::optional<VertexSet> found;
        detail::TdSetEnumerator enumerator(g, k, nodes);
        enumerator.run([&](const VertexSet& s) {
            found = s;
            return false; // first hit is the lexicographically least
        });
        if (found) return TDSetResult{k, *found};
    }
    throw InternalError("gamma_t_exact: greedy witness not rediscovered");
}

// Visits every minimum TD-set in lexicographic order; visitor returns false
// to stop early. Nothing is materialized.
inline void for_each_min_td_set(const Graph& g,
                                const std::function<bool(const VertexSet&)>& visit,
                                const SearchLimits& limits = {}) {
    TDSetResult base = gamma_t_exact(g, limits);
    detail::NodeCounter nodes(limits);
    detail::TdSetEnumerator enumerator(g, base.gamma_t, nodes);
    enumerator.run(visit);
}

inline std::vector<VertexSet> all_min_td_sets(const Graph& g, const SearchLimits& limits = {}) {
    std::vector<VertexSet> out;
    for_each_min_td_set(g, [&](const VertexSet& s) {
        out.push_back(s);
        return true;
    }, limits);
    return out;
}

// Private neighborhoods of a TD-set D: pn(u,D) = { w : N(w) cap D = {u} },
// taken over all vertices w (members of D included). D_I collects the
// members with exactly one private neighbor, D_R the rest.
struct PrivateStructure {
    std::vector<int> members;    // D, ascending
    std::vector<VertexSet> pn;   // parallel to members
    VertexSet d_i, d_r;

    const VertexSet& pn_of(int u) const {
        for (size_t i = 0; i < members.size(); ++i)
            if (members[i] == u) return pn[i];
        throw PreconditionError("pn_of: vertex not in D");
    }
};

inline PrivateStructure private_structure(const Graph& g, const VertexSet& d) {
    if (!is_td_set(g, d)) throw PreconditionError("private_structure: d is not a TD-set");
    PrivateStructure ps;
    ps.members = d.to_vector();
    ps.pn.assign(ps.members.size(), VertexSet(g.n()));
    ps.d_i = VertexSet(g.n());
    ps.d_r = VertexSet(g.n());

    std::vector<int> index(static_cast<size_t>(g.n()), -1);
    for (size_t i = 0; i < ps.members.size(); ++i) index[static_cast<size_t>(ps.members[i])] = static_cast<int>(i);

    for (int w = 0; w < g.n(); ++w) {
        int unique_dominator = -1;
        int hits = 0;
        for (int u : g.neighbors(w)) {
            if (d.contains(u)) {
                ++hits;
                if (hits > 1) break;
                unique_dominator = u;
            }
        }
        if (hits == 1) ps.pn[static_cast<size_t>(index[static_cast<size_t>(unique_dominator)])].add(w);
    }
    for (size_t i = 0; i < ps.members.size(); ++i) {
        if (ps.pn[i].count() == 1)
            ps.d_i.add(ps.members[i]);
        else
            ps.d_r.add(ps.members[i]);
    }
    return ps;
}

} // namespace tdc

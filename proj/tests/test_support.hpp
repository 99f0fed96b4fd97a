#pragma once

// Shared test machinery: independent brute-force oracles, exhaustive
// enumerators, and common fixtures. Everything here is deliberately written
// the straightforward way, independent of the library's search paths, so it
// can serve as ground truth.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "tdc/tdc.hpp"

namespace testsup {

// ---------------------------------------------------------------------------
// fixtures

inline tdc::Graph p11() { return tdc::path_graph(11); }

// The 7-color optimal TD-coloring of P_11 used throughout: classes
// {v2},{v3},{v9},{v10},{v6},{v5,v7},{v1,v4,v8,v11} (vertices 1-based).
inline tdc::Coloring p11_seven_coloring() {
    return tdc::Coloring({7, 1, 2, 7, 6, 5, 6, 7, 3, 4, 7});
}

// Half graph H_k: X = {0..k-1}, Y = {k..2k-1}, x_i adjacent y_j iff j <= i.
inline tdc::Graph half_graph(int k) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < k; ++i)
        for (int j = 0; j <= i; ++j) e.emplace_back(i, k + j);
    return tdc::Graph(2 * k, e);
}

// Spider: center 0 with `legs` paths of length `len` hanging off it.
inline tdc::Graph spider(int legs, int len) {
    std::vector<std::pair<int, int>> e;
    int next = 1;
    for (int l = 0; l < legs; ++l) {
        int prev = 0;
        for (int s = 0; s < len; ++s) {
            e.emplace_back(prev, next);
            prev = next++;
        }
    }
    return tdc::Graph(next, e);
}

// Triangle with a pendant vertex on each corner ("net").
inline tdc::Graph net_graph() {
    return tdc::Graph(6, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 4}, {2, 5}});
}

// Triangle with a single pendant ("paw").
inline tdc::Graph paw_graph() {
    return tdc::Graph(4, {{0, 1}, {1, 2}, {0, 2}, {0, 3}});
}

// ---------------------------------------------------------------------------
// labeled-graph enumeration (edge mask order: pairs (i,j), i<j, i outer)

inline tdc::Graph graph_from_mask(int n, std::uint64_t mask) {
    std::vector<std::pair<int, int>> edges;
    int bit = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++bit)
            if ((mask >> bit) & 1) edges.emplace_back(i, j);
    return tdc::Graph(n, edges);
}

template <class F>
inline void for_each_labeled_graph(int n, F&& fn) {
    int bits = n * (n - 1) / 2;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask) fn(mask, n);
}

inline bool mask_isolate_free(int n, std::uint64_t mask) {
    std::array<std::uint32_t, 12> deg{};
    int bit = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++bit)
            if ((mask >> bit) & 1) {
                ++deg[static_cast<size_t>(i)];
                ++deg[static_cast<size_t>(j)];
            }
    for (int v = 0; v < n; ++v)
        if (deg[static_cast<size_t>(v)] == 0) return false;
    return true;
}

// ---------------------------------------------------------------------------
// naive gamma_t over the full subset lattice

inline int naive_gamma_t(const tdc::Graph& g) {
    int n = g.n();
    std::vector<std::uint64_t> nbr(static_cast<size_t>(n), 0);
    for (int v = 0; v < n; ++v)
        for (int w : g.neighbors(v)) nbr[static_cast<size_t>(v)] |= std::uint64_t{1} << w;
    int best = std::numeric_limits<int>::max();
    for (std::uint64_t d = 1; d < (std::uint64_t{1} << n); ++d) {
        int size = std::popcount(d);
        if (size >= best) continue;
        bool ok = true;
        for (int v = 0; v < n && ok; ++v)
            if ((nbr[static_cast<size_t>(v)] & d) == 0) ok = false;
        if (ok) best = size;
    }
    return best;
}

// All TD-sets of minimum size, as sorted vertex lists in lexicographic
// order, by sheer enumeration.
inline std::vector<std::vector<int>> naive_min_td_sets(const tdc::Graph& g) {
    int n = g.n();
    int gt = naive_gamma_t(g);
    std::vector<std::vector<int>> out;
    std::vector<int> pick;
    std::function<void(int, int)> rec = [&](int next, int slots) {
        if (slots == 0) {
            tdc::VertexSet d = tdc::VertexSet::of(n, pick);
            if (tdc::is_td_set(g, d)) out.push_back(pick);
            return;
        }
        for (int v = next; v <= n - slots; ++v) {
            pick.push_back(v);
            rec(v + 1, slots - 1);
            pick.pop_back();
        }
    };
    rec(0, gt);
    return out;
}

// ---------------------------------------------------------------------------
// partition-based coloring oracles (restricted growth strings)

enum class Kind { Proper, TotalDominator, Dominator };

// Visits every partition of {0..n-1} into at most `cap` blocks; fn gets the
// block assignment and the block count, and may return false to stop.
template <class F>
inline bool for_each_partition_capped(int n, int cap, F&& fn) {
    std::vector<int> assign(static_cast<size_t>(n), 0);
    std::function<bool(int, int)> rec = [&](int i, int used) -> bool {
        if (i == n) return fn(assign, used);
        int lim = std::min(used, cap - 1);
        for (int b = 0; b <= lim; ++b) {
            assign[static_cast<size_t>(i)] = b;
            if (!rec(i + 1, std::max(used, b + 1))) return false;
        }
        return true;
    };
    if (n == 0) return true;
    return rec(0, 0);
}

inline bool partition_valid(const tdc::Graph& g, const std::vector<int>& assign, int blocks, Kind kind) {
    int n = g.n();
    std::array<std::uint64_t, 16> cls{};
    for (int v = 0; v < n; ++v) cls[static_cast<size_t>(assign[static_cast<size_t>(v)])] |= std::uint64_t{1} << v;
    for (int v = 0; v < n; ++v) {
        std::uint64_t open = 0;
        for (int w : g.neighbors(v)) open |= std::uint64_t{1} << w;
        if (cls[static_cast<size_t>(assign[static_cast<size_t>(v)])] & open) return false; // monochromatic edge
        if (kind == Kind::Proper) continue;
        std::uint64_t scope = kind == Kind::TotalDominator ? open : (open | (std::uint64_t{1} << v));
        bool dominates = false;
        for (int b = 0; b < blocks && !dominates; ++b)
            if ((cls[static_cast<size_t>(b)] & ~scope) == 0) dominates = true;
        if (!dominates) return false;
    }
    return true;
}

// Minimum number of blocks of a valid coloring of the given kind, searching
// partitions with at most `cap` blocks; INT_MAX when none exists there.
inline int naive_min_colors(const tdc::Graph& g, Kind kind, int cap) {
    cap = std::min(cap, 15);
    for (int k = 1; k <= cap; ++k) {
        bool found = false;
        for_each_partition_capped(g.n(), k, [&](const std::vector<int>& assign, int blocks) {
            if (blocks == k && partition_valid(g, assign, blocks, kind)) {
                found = true;
                return false;
            }
            return true;
        });
        if (found) return k;
    }
    return std::numeric_limits<int>::max();
}

// Every valid coloring with exactly `k` blocks, handed over as a Coloring.
template <class F>
inline void for_each_valid_coloring(const tdc::Graph& g, Kind kind, int k, F&& fn) {
    for_each_partition_capped(g.n(), k, [&](const std::vector<int>& assign, int blocks) {
        if (blocks == k && partition_valid(g, assign, blocks, kind)) {
            std::vector<int> colors(assign.size());
            for (size_t i = 0; i < assign.size(); ++i) colors[i] = assign[i] + 1;
            fn(tdc::Coloring(colors));
        }
        return true;
    });
}

// ---------------------------------------------------------------------------
// independent graph6 encoder (assembled via an explicit bit string)

inline std::string reference_graph6(const tdc::Graph& g) {
    if (g.n() > 62) throw std::runtime_error("reference_graph6: small orders only");
    std::string bits;
    for (int j = 1; j < g.n(); ++j)
        for (int i = 0; i < j; ++i) bits.push_back(g.adjacent(i, j) ? '1' : '0');
    while (bits.size() % 6 != 0) bits.push_back('0');
    std::string out(1, static_cast<char>(63 + g.n()));
    for (size_t i = 0; i < bits.size(); i += 6) {
        int val = 0;
        for (size_t b = 0; b < 6; ++b) val = val * 2 + (bits[i + b] - '0');
        out.push_back(static_cast<char>(63 + val));
    }
    return out;
}

// ---------------------------------------------------------------------------
// nonisomorphic free trees by leaf augmentation + canonical-form dedup

inline std::string ahu_string(const tdc::Graph& t, int root, int parent) {
    std::vector<std::string> ch;
    for (int w : t.neighbors(root))
        if (w != parent) ch.push_back(ahu_string(t, w, root));
    std::sort(ch.begin(), ch.end());
    std::string s = "(";
    for (auto& c : ch) s += c;
    s += ")";
    return s;
}

inline std::vector<int> tree_centers(const tdc::Graph& t) {
    int n = t.n();
    if (n == 1) return {0};
    std::vector<int> deg(static_cast<size_t>(n));
    std::vector<int> layer;
    for (int v = 0; v < n; ++v) {
        deg[static_cast<size_t>(v)] = t.degree(v);
        if (deg[static_cast<size_t>(v)] == 1) layer.push_back(v);
    }
    int remaining = n;
    std::vector<char> removed(static_cast<size_t>(n), 0);
    while (remaining > 2) {
        std::vector<int> next;
        for (int v : layer) {
            removed[static_cast<size_t>(v)] = 1;
            --remaining;
            for (int w : t.neighbors(v))
                if (!removed[static_cast<size_t>(w)] && --deg[static_cast<size_t>(w)] == 1) next.push_back(w);
        }
        layer = std::move(next);
    }
    std::vector<int> centers;
    for (int v = 0; v < n; ++v)
        if (!removed[static_cast<size_t>(v)]) centers.push_back(v);
    return centers;
}

inline std::string canonical_tree_string(const tdc::Graph& t) {
    auto c = tree_centers(t);
    if (c.size() == 1) return ahu_string(t, c[0], -1);
    std::string s1 = ahu_string(t, c[0], c[1]);
    std::string s2 = ahu_string(t, c[1], c[0]);
    if (s2 < s1) std::swap(s1, s2);
    return s1 + "|" + s2;
}

// Canonically labeled copy: root at a center (for bicentral trees, the one
// whose half reads lexicographically smaller), ids by preorder with
// children in sorted subtree-string order. Isomorphic trees map to the
// same labeled graph.
inline tdc::Graph canonical_labeled_tree(const tdc::Graph& t) {
    auto centers = tree_centers(t);
    int root = centers[0];
    if (centers.size() == 2) {
        std::string s1 = ahu_string(t, centers[0], centers[1]);
        std::string s2 = ahu_string(t, centers[1], centers[0]);
        root = s1 <= s2 ? centers[0] : centers[1];
    }
    std::vector<std::pair<int, int>> edges;
    int next = 0;
    std::function<int(int, int)> emit = [&](int v, int parent) -> int {
        int id = next++;
        std::vector<std::pair<std::string, int>> ch;
        for (int w : t.neighbors(v))
            if (w != parent) ch.emplace_back(ahu_string(t, w, v), w);
        std::sort(ch.begin(), ch.end());
        for (auto& [s, w] : ch) {
            int cid = emit(w, v);
            edges.emplace_back(id, cid);
        }
        return id;
    };
    emit(root, -1);
    return tdc::Graph(t.n(), edges);
}

// All nonisomorphic trees of order n, canonically labeled, sorted by their
// graph6 string (so "first in enumeration order" is well defined).
inline const std::vector<tdc::Graph>& free_trees(int n) {
    static std::map<int, std::vector<tdc::Graph>> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    if (n == 1) {
        cache[1] = {tdc::Graph(1, {})};
        return cache[1];
    }
    const auto& prev = free_trees(n - 1);
    std::map<std::string, tdc::Graph> found;
    for (const auto& t : prev) {
        for (int v = 0; v < t.n(); ++v) {
            auto edges = t.edges();
            edges.emplace_back(v, t.n());
            tdc::Graph grown(t.n() + 1, edges);
            std::string key = canonical_tree_string(grown);
            if (!found.count(key)) found.emplace(key, canonical_labeled_tree(grown));
        }
    }
    std::vector<tdc::Graph> out;
    out.reserve(found.size());
    for (auto& [key, g] : found) out.push_back(g);
    std::sort(out.begin(), out.end(), [](const tdc::Graph& a, const tdc::Graph& b) {
        return reference_graph6(a) < reference_graph6(b);
    });
    cache[n] = std::move(out);
    return cache[n];
}

} // namespace testsup

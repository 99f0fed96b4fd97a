#pragma once

// Cograph recognition by recursive complement-component splitting, cotree
// evaluation, and the exact total dominator chromatic number of cographs:
// chi_td equals chi on a connected cograph (any proper coloring already
// totally dominates across the join), and chi + 2(k-1) on a cograph with k
// components, realized by giving each component two fresh exclusive colors
// and sharing the remaining chi - 2 colors across components.

#include <algorithm>
#include <array>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "tdc/coloring.hpp"
#include "tdc/errors.hpp"
#include "tdc/graph.hpp"

namespace tdc {

struct Cotree {
    enum class Label { Leaf, Union, Join };

    struct Node {
        Label label = Label::Leaf;
        int vertex = -1;            // for leaves: the graph vertex
        std::vector<int> children;  // for internal nodes, ordered by smallest leaf
    };

    std::vector<Node> nodes;
    int root = -1;

    int smallest_leaf(int node) const {
        const Node& nd = nodes[static_cast<size_t>(node)];
        if (nd.label == Label::Leaf) return nd.vertex;
        int best = smallest_leaf(nd.children.front());
        for (size_t i = 1; i < nd.children.size(); ++i)
            best = std::min(best, smallest_leaf(nd.children[i]));
        return best;
    }
};

// An induced P_4 certificate a-b-c-d (edges ab, bc, cd only).
using InducedP4 = std::array<int, 4>;

namespace detail {

// Finds an induced P_4 in g restricted to `verts` (original ids); g[verts]
// is known to be connected with connected complement, hence not a cograph.
inline InducedP4 find_induced_p4(const Graph& g, const std::vector<int>& verts) {
    for (int b : verts) {
        for (int c : verts) {
            if (b >= c || !g.adjacent(b, c)) continue;
            for (int a : verts) {
                if (a == b || a == c || !g.adjacent(a, b) || g.adjacent(a, c)) continue;
                for (int d : verts) {
                    if (d == a || d == b || d == c) continue;
                    if (g.adjacent(c, d) && !g.adjacent(b, d) && !g.adjacent(a, d))
                        return InducedP4{a, b, c, d};
                }
            }
        }
    }
    throw InternalError("find_induced_p4: no P4 in a non-cograph");
}

inline int build_cotree(const Graph& g, const std::vector<int>& verts, Cotree& tree, std::optional<InducedP4>& fail) {
    if (fail) return -1;
    if (verts.size() == 1) {
        tree.nodes.push_back({Cotree::Label::Leaf, verts[0], {}});
        return static_cast<int>(tree.nodes.size()) - 1;
    }
    Graph sub = induced_subgraph(g, verts);
    auto comps = components(sub);
    std::vector<std::vector<int>> parts;
    Cotree::Label label;
    if (comps.size() > 1) {
        label = Cotree::Label::Union;
        for (auto& c : comps) {
            std::vector<int> part;
            for (int local : c.to_original) part.push_back(verts[static_cast<size_t>(local)]);
            parts.push_back(std::move(part));
        }
    } else {
        auto co_comps = components(complement(sub));
        if (co_comps.size() > 1) {
            label = Cotree::Label::Join;
            for (auto& c : co_comps) {
                std::vector<int> part;
                for (int local : c.to_original) part.push_back(verts[static_cast<size_t>(local)]);
                parts.push_back(std::move(part));
            }
        } else {
            fail = find_induced_p4(g, verts);
            return -1;
        }
    }
    std::vector<int> children;
    for (auto& part : parts) {
        int child = build_cotree(g, part, tree, fail);
        if (fail) return -1;
        children.push_back(child);
    }
    tree.nodes.push_back({label, -1, std::move(children)});
    return static_cast<int>(tree.nodes.size()) - 1;
}

} // namespace detail

// Canonical cotree, or an induced P_4 when g is not a cograph. Children of
// a UNION are JOIN nodes or leaves and vice versa, so no two adjacent
// internal nodes share a label.
inline std::variant<Cotree, InducedP4> recognize_cograph(const Graph& g) {
    if (g.n() == 0) throw PreconditionError("recognize_cograph: empty graph");
    std::vector<int> verts(static_cast<size_t>(g.n()));
    for (int v = 0; v < g.n(); ++v) verts[static_cast<size_t>(v)] = v;
    Cotree tree;
    std::optional<InducedP4> fail;
    int root = detail::build_cotree(g, verts, tree, fail);
    if (fail) return *fail;
    tree.root = root;
    return tree;
}

inline bool is_cograph(const Graph& g) {
    return std::holds_alternative<Cotree>(recognize_cograph(g));
}

// Rebuilds the graph a cotree encodes: UNION = disjoint union, JOIN adds
// all cross edges between the leaf sets of distinct children.
inline Graph cotree_to_graph(const Cotree& t, int n) {
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<int>> leafsets(t.nodes.size());
    // nodes were appended children-first, so a single pass suffices
    for (size_t i = 0; i < t.nodes.size(); ++i) {
        const auto& nd = t.nodes[i];
        if (nd.label == Cotree::Label::Leaf) {
            leafsets[i] = {nd.vertex};
            continue;
        }
        for (int ch : nd.children)
            leafsets[i].insert(leafsets[i].end(), leafsets[static_cast<size_t>(ch)].begin(),
                               leafsets[static_cast<size_t>(ch)].end());
        if (nd.label == Cotree::Label::Join) {
            for (size_t a = 0; a < nd.children.size(); ++a)
                for (size_t b = a + 1; b < nd.children.size(); ++b)
                    for (int u : leafsets[static_cast<size_t>(nd.children[a])])
                        for (int v : leafsets[static_cast<size_t>(nd.children[b])]) edges.emplace_back(u, v);
        }
    }
    return Graph(n, edges);
}

namespace detail {

// chi over the cotree: leaves 1, UNION max, JOIN sum. The same recursion
// hands out an optimal proper coloring (UNION children share the palette,
// JOIN children get disjoint ranges).
inline int cotree_color(const Cotree& t, int node, int offset, std::vector<int>& colors) {
    const auto& nd = t.nodes[static_cast<size_t>(node)];
    if (nd.label == Cotree::Label::Leaf) {
        colors[static_cast<size_t>(nd.vertex)] = offset + 1;
        return 1;
    }
    // children ordered by smallest contained vertex for determinism
    std::vector<int> order = nd.children;
    std::sort(order.begin(), order.end(), [&](int a, int b) { return t.smallest_leaf(a) < t.smallest_leaf(b); });
    if (nd.label == Cotree::Label::Union) {
        int chi = 0;
        for (int ch : order) chi = std::max(chi, cotree_color(t, ch, offset, colors));
        return chi;
    }
    int chi = 0;
    for (int ch : order) chi += cotree_color(t, ch, offset + chi, colors);
    return chi;
}

} // namespace detail

inline int chi_cograph(const Graph& g, const Cotree& t) {
    std::vector<int> colors(static_cast<size_t>(g.n()), 0);
    return detail::cotree_color(t, t.root, 0, colors);
}

// Optimal proper coloring of a cograph from its cotree.
inline Coloring cograph_chi_coloring(const Graph& g, const Cotree& t) {
    std::vector<int> colors(static_cast<size_t>(g.n()), 0);
    detail::cotree_color(t, t.root, 0, colors);
    return Coloring(colors);
}

// Exact chi_td of an isolate-free cograph with a verified witness.
inline std::pair<int, Coloring> chi_td_cograph(const Graph& g) {
    detail::require_isolate_free(g, "chi_td_cograph");
    auto rec = recognize_cograph(g);
    if (!std::holds_alternative<Cotree>(rec))
        throw PreconditionError("chi_td_cograph: graph is not a cograph");

    auto comps = components(g);
    int k = static_cast<int>(comps.size());
    int chi = 0;
    struct CompColoring {
        Coloring local;
        int exclusive1, exclusive2; // local color ids of the exclusive pair
    };
    std::vector<CompColoring> per_comp;
    for (auto& comp : comps) {
        auto sub_rec = recognize_cograph(comp.graph);
        const Cotree& sub_tree = std::get<Cotree>(sub_rec);
        Coloring local = cograph_chi_coloring(comp.graph, sub_tree);
        chi = std::max(chi, local.num_colors());

        // A connected cograph of order >= 2 is the join of its co-components;
        // every color class stays inside one co-component. Any two classes
        // from distinct co-components are jointly dominated by all vertices.
        auto co_comps = components(complement(comp.graph));
        if (co_comps.size() < 2) throw InternalError("chi_td_cograph: connected component with connected complement");
        int e1 = local.color(co_comps[0].to_original.front());
        int e2 = local.color(co_comps[1].to_original.front());
        if (e1 == e2) throw InternalError("chi_td_cograph: exclusive classes collide");
        per_comp.push_back({std::move(local), e1, e2});
    }

    int value = chi + 2 * (k - 1);
    std::vector<int> colors(static_cast<size_t>(g.n()), 0);
    int shared = chi - 2; // shared palette 1..chi-2; fresh pairs follow
    for (int ci = 0; ci < k; ++ci) {
        const auto& comp = comps[static_cast<size_t>(ci)];
        const auto& cc = per_comp[static_cast<size_t>(ci)];
        // map local colors: exclusive pair -> fresh, others -> shared slots
        std::vector<int> map(static_cast<size_t>(cc.local.num_colors()) + 1, 0);
        map[static_cast<size_t>(cc.exclusive1)] = shared + 2 * ci + 1;
        map[static_cast<size_t>(cc.exclusive2)] = shared + 2 * ci + 2;
        int slot = 1;
        for (int c = 1; c <= cc.local.num_colors(); ++c) {
            if (c == cc.exclusive1 || c == cc.exclusive2) continue;
            map[static_cast<size_t>(c)] = slot++;
        }
        for (size_t local_v = 0; local_v < comp.to_original.size(); ++local_v)
            colors[static_cast<size_t>(comp.to_original[local_v])] =
                map[static_cast<size_t>(cc.local.color(static_cast<int>(local_v)))];
    }
    Coloring witness(colors);
    if (witness.num_colors() != value) throw InternalError("chi_td_cograph: witness color count mismatch");
    if (!is_td_coloring(g, witness)) throw InternalError("chi_td_cograph: witness failed validation");
    return {value, witness};
}

} // namespace tdc

#pragma once

// Seeded instance generators for the supported graph classes. The same
// GenSpec always produces the same graph: the engine is mt19937_64 (whose
// sequence the standard fixes) and all draws go through our own helpers,
// never through library distributions.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <random>
#include <string>
#include <vector>

#include "tdc/errors.hpp"
#include "tdc/graph.hpp"

namespace tdc {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    // Inclusive bounds.
    int uniform(int lo, int hi) {
        if (lo > hi) throw PreconditionError("Rng::uniform: empty range");
        return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    bool coin(double p = 0.5) { return unit() < p; }

    template <class T>
    void shuffle(std::vector<T>& v) {
        for (size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[static_cast<size_t>(uniform(0, static_cast<int>(i) - 1))]);
    }

private:
    std::mt19937_64 eng_;
};

struct GenSpec {
    enum class Class { Tree, Cograph, Chain, Split, Bipartite, Any };

    Class cls = Class::Any;
    int n = 2;
    std::uint64_t seed = 0;

    // class-specific shape knobs
    int chain_k_min = 1;
    int chain_k_max = 0;        // 0: up to floor(n/2)
    double edge_probability = 0.5;
    bool require_connected = false;
};

inline GenSpec::Class parse_class_name(const std::string& s) {
    if (s == "tree") return GenSpec::Class::Tree;
    if (s == "cograph") return GenSpec::Class::Cograph;
    if (s == "chain") return GenSpec::Class::Chain;
    if (s == "split") return GenSpec::Class::Split;
    if (s == "bipartite") return GenSpec::Class::Bipartite;
    if (s == "any") return GenSpec::Class::Any;
    throw ParseError("unknown graph class: " + s);
}

inline const char* class_name(GenSpec::Class c) {
    switch (c) {
    case GenSpec::Class::Tree: return "tree";
    case GenSpec::Class::Cograph: return "cograph";
    case GenSpec::Class::Chain: return "chain";
    case GenSpec::Class::Split: return "split";
    case GenSpec::Class::Bipartite: return "bipartite";
    case GenSpec::Class::Any: return "any";
    }
    return "?";
}

namespace detail {

inline Graph random_tree(int n, Rng& rng) {
    if (n == 2) return Graph(2, {{0, 1}});
    // uniform via Pruefer decode
    std::vector<int> seq(static_cast<size_t>(n - 2));
    for (int& s : seq) s = rng.uniform(0, n - 1);
    std::vector<int> deg(static_cast<size_t>(n), 1);
    for (int s : seq) ++deg[static_cast<size_t>(s)];
    std::vector<std::pair<int, int>> edges;
    int ptr = 0;
    while (deg[static_cast<size_t>(ptr)] != 1) ++ptr;
    int leaf = ptr;
    for (int s : seq) {
        edges.emplace_back(leaf, s);
        if (--deg[static_cast<size_t>(s)] == 1 && s < ptr) {
            leaf = s;
        } else {
            ++ptr;
            while (deg[static_cast<size_t>(ptr)] != 1) ++ptr;
            leaf = ptr;
        }
    }
    edges.emplace_back(leaf, n - 1);
    return Graph(n, edges);
}

// Random canonical cotree over `size` slots; label alternates along each
// root-to-leaf path. A UNION node never has single-vertex children when
// `isolate_free_parts` is set, which keeps the graph isolate-free.
struct CotreeGen {
    Rng& rng;

    void edges_of(int lo, int hi, bool join, bool forbid_singletons, std::vector<std::pair<int, int>>& out) {
        int size = hi - lo;
        if (size == 1) return;
        int min_part = forbid_singletons && !join ? 2 : 1;
        int max_parts = size / min_part;
        int parts = rng.uniform(2, std::max(2, std::min(max_parts, 4)));
        parts = std::min(parts, max_parts);
        // random composition of `size` into `parts` parts, each >= min_part
        std::vector<int> sizes(static_cast<size_t>(parts), min_part);
        int left = size - parts * min_part;
        for (int i = 0; i < left; ++i) ++sizes[static_cast<size_t>(rng.uniform(0, parts - 1))];
        int start = lo;
        std::vector<std::pair<int, int>> ranges;
        for (int s : sizes) {
            ranges.emplace_back(start, start + s);
            start += s;
        }
        if (join) {
            for (size_t a = 0; a < ranges.size(); ++a)
                for (size_t b = a + 1; b < ranges.size(); ++b)
                    for (int u = ranges[a].first; u < ranges[a].second; ++u)
                        for (int v = ranges[b].first; v < ranges[b].second; ++v) out.emplace_back(u, v);
        }
        for (auto [a, b] : ranges) edges_of(a, b, !join, false, out);
    }
};

inline Graph random_cograph(int n, Rng& rng) {
    bool root_join = n < 4 ? true : rng.coin();
    std::vector<std::pair<int, int>> edges;
    CotreeGen gen{rng};
    gen.edges_of(0, n, root_join, !root_join, edges);
    // scramble ids
    std::vector<int> perm(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<size_t>(i)] = i;
    rng.shuffle(perm);
    for (auto& [u, v] : edges) {
        u = perm[static_cast<size_t>(u)];
        v = perm[static_cast<size_t>(v)];
    }
    return Graph(n, edges);
}

inline Graph random_chain(int n, const GenSpec& spec, Rng& rng) {
    int k_cap = n / 2;
    int k_max = spec.chain_k_max == 0 ? k_cap : std::min(spec.chain_k_max, k_cap);
    if (spec.chain_k_min > k_max)
        throw PreconditionError("generate: chain block count " + std::to_string(spec.chain_k_min) +
                                " needs at least " + std::to_string(2 * spec.chain_k_min) + " vertices");
    int k = rng.uniform(spec.chain_k_min, k_max);
    int n1 = rng.uniform(k, n - k);
    int n2 = n - n1;

    auto compose = [&](int total, int parts) {
        std::vector<int> sizes(static_cast<size_t>(parts), 1);
        for (int i = 0; i < total - parts; ++i) ++sizes[static_cast<size_t>(rng.uniform(0, parts - 1))];
        return sizes;
    };
    std::vector<int> xb = compose(n1, k), yb = compose(n2, k);

    std::vector<int> perm(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<size_t>(i)] = i;
    rng.shuffle(perm);

    // X vertices come first in slot order, then Y; block i of X sees blocks
    // 1..i of Y.
    std::vector<std::pair<int, int>> edges;
    std::vector<int> x_block_of, y_block_of;
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < xb[static_cast<size_t>(i)]; ++j) x_block_of.push_back(i);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < yb[static_cast<size_t>(i)]; ++j) y_block_of.push_back(i);
    for (int xi = 0; xi < n1; ++xi)
        for (int yi = 0; yi < n2; ++yi)
            if (y_block_of[static_cast<size_t>(yi)] <= x_block_of[static_cast<size_t>(xi)])
                edges.emplace_back(perm[static_cast<size_t>(xi)], perm[static_cast<size_t>(n1 + yi)]);
    return Graph(n, edges);
}

inline Graph random_split(int n, Rng& rng) {
    int q = n == 2 ? 2 : rng.uniform(2, n);
    std::vector<int> perm(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<size_t>(i)] = i;
    rng.shuffle(perm);
    // slots 0..q-1 clique, the rest independent
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < q; ++i)
        for (int j = i + 1; j < q; ++j) edges.emplace_back(perm[static_cast<size_t>(i)], perm[static_cast<size_t>(j)]);
    for (int v = q; v < n; ++v) {
        std::vector<int> attach;
        for (int i = 0; i < q; ++i)
            if (rng.coin()) attach.push_back(i);
        if (attach.empty()) attach.push_back(rng.uniform(0, q - 1));
        if (static_cast<int>(attach.size()) == q) attach.erase(attach.begin() + rng.uniform(0, q - 1));
        for (int i : attach) edges.emplace_back(perm[static_cast<size_t>(v)], perm[static_cast<size_t>(i)]);
    }
    return Graph(n, edges);
}

inline Graph repair_isolates_bipartite(int n, int n1, std::vector<std::pair<int, int>> edges, Rng& rng,
                                       bool connect) {
    Graph g(n, edges);
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) == 0) {
            int other = v < n1 ? n1 + rng.uniform(0, n - n1 - 1) : rng.uniform(0, n1 - 1);
            edges.emplace_back(v, other);
        }
    }
    g = Graph(n, edges);
    if (connect) {
        auto comps = components(g);
        while (comps.size() > 1) {
            // bridge each later component to the first, respecting sides
            const auto& base = comps[0].to_original;
            const auto& extra = comps[1].to_original;
            int u = -1, w = -1;
            for (int cand : extra)
                if (cand < n1) u = cand;
            if (u != -1) {
                for (int cand : base)
                    if (cand >= n1) w = cand;
            }
            if (u == -1 || w == -1) {
                u = -1;
                for (int cand : extra)
                    if (cand >= n1) u = cand;
                for (int cand : base)
                    if (cand < n1) w = cand;
            }
            if (u == -1 || w == -1) throw InternalError("generate: cannot bridge bipartite components");
            edges.emplace_back(u, w);
            g = Graph(n, edges);
            comps = components(g);
        }
    }
    return g;
}

inline Graph random_bipartite(int n, const GenSpec& spec, Rng& rng) {
    int n1 = rng.uniform(1, n - 1);
    std::vector<std::pair<int, int>> edges;
    for (int x = 0; x < n1; ++x)
        for (int y = n1; y < n; ++y)
            if (rng.coin(spec.edge_probability)) edges.emplace_back(x, y);
    return repair_isolates_bipartite(n, n1, std::move(edges), rng, spec.require_connected);
}

inline Graph random_any(int n, const GenSpec& spec, Rng& rng) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.coin(spec.edge_probability)) edges.emplace_back(u, v);
    Graph g(n, edges);
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) == 0) {
            int other = v;
            while (other == v) other = rng.uniform(0, n - 1);
            edges.emplace_back(v, other);
        }
    }
    return Graph(n, edges);
}

} // namespace detail

inline Graph generate(const GenSpec& spec) {
    if (spec.n < 2) throw PreconditionError("generate: n must be >= 2");
    Rng rng(spec.seed);
    switch (spec.cls) {
    case GenSpec::Class::Tree: return detail::random_tree(spec.n, rng);
    case GenSpec::Class::Cograph: return detail::random_cograph(spec.n, rng);
    case GenSpec::Class::Chain: return detail::random_chain(spec.n, spec, rng);
    case GenSpec::Class::Split: return detail::random_split(spec.n, rng);
    case GenSpec::Class::Bipartite: return detail::random_bipartite(spec.n, spec, rng);
    case GenSpec::Class::Any: return detail::random_any(spec.n, spec, rng);
    }
    throw PreconditionError("generate: unknown class");
}

// Default seed: the TDC_SEED environment variable when set, else 42.
inline std::uint64_t default_seed() {
    if (const char* env = std::getenv("TDC_SEED")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0') return v;
        throw ParseError("TDC_SEED is not a valid integer");
    }
    return 42;
}

} // namespace tdc

#include <catch2/catch_amalgamated.hpp>

#include "tdc/tdc.hpp"
#include "test_support.hpp"

using namespace tdc;

TEST_CASE("is_td_set") {
    SECTION("chain graph: top X block + bottom Y block") {
        Graph g = testsup::half_graph(3); // X = {0,1,2}, Y = {3,4,5}, X_3 = {2}, Y_1 = {3}
        REQUIRE(is_td_set(g, VertexSet::of(6, {2, 3})));
    }
    SECTION("P_11 with the six-vertex set from its optimal analysis") {
        REQUIRE(is_td_set(testsup::p11(), VertexSet::of(11, {1, 2, 4, 5, 8, 9})));
    }
    SECTION("a vertex never totally dominates itself") {
        REQUIRE_FALSE(is_td_set(complete_graph(2), VertexSet::of(2, {0})));
    }
}

TEST_CASE("gamma_t_exact") {
    SECTION("K_2 needs both endpoints") {
        auto r = gamma_t_exact(complete_graph(2));
        REQUIRE(r.gamma_t == 2);
        REQUIRE(r.witness == VertexSet::of(2, {0, 1}));
    }
    SECTION("chain graphs have gamma_t = 2") {
        Rng rng(3);
        for (int it = 0; it < 25; ++it) {
            GenSpec spec;
            spec.cls = GenSpec::Class::Chain;
            spec.n = rng.uniform(2, 12);
            spec.seed = rng.next();
            REQUIRE(gamma_t_exact(generate(spec)).gamma_t == 2);
        }
    }
    SECTION("P_11") {
        Graph g = testsup::p11();
        REQUIRE(testsup::naive_gamma_t(g) == 6);
        auto r = gamma_t_exact(g);
        REQUIRE(r.gamma_t == 6);
        REQUIRE(is_td_set(g, r.witness));
        REQUIRE(r.witness.count() == 6);
    }
    SECTION("isolated vertex is a hard error") {
        REQUIRE_THROWS_AS(gamma_t_exact(Graph(3, {{0, 1}})), PreconditionError);
        REQUIRE_THROWS_AS(gamma_t_exact(Graph(0, {})), PreconditionError);
    }
}

TEST_CASE("gamma_t_exact matches the subset-lattice oracle") {
    SECTION("exhaustive over all isolate-free graphs n <= 6") {
        for (int n = 2; n <= 6; ++n) {
            testsup::for_each_labeled_graph(n, [&](std::uint64_t mask, int order) {
                if (!testsup::mask_isolate_free(order, mask)) return;
                Graph g = testsup::graph_from_mask(order, mask);
                REQUIRE(gamma_t_exact(g).gamma_t == testsup::naive_gamma_t(g));
            });
        }
    }
    SECTION("seeded samples at n = 7 and n = 8") {
        Rng rng(20240807);
        for (int n = 7; n <= 8; ++n) {
            int bits = n * (n - 1) / 2;
            for (int it = 0; it < 400; ++it) {
                std::uint64_t mask = rng.next() & ((std::uint64_t{1} << bits) - 1);
                if (!testsup::mask_isolate_free(n, mask)) continue;
                Graph g = testsup::graph_from_mask(n, mask);
                REQUIRE(gamma_t_exact(g).gamma_t == testsup::naive_gamma_t(g));
            }
        }
    }
    SECTION("exhaustive over trees n <= 9") {
        for (int n = 2; n <= 9; ++n)
            for (const auto& t : testsup::free_trees(n))
                REQUIRE(gamma_t_exact(t).gamma_t == testsup::naive_gamma_t(t));
    }
}

TEST_CASE("private_structure") {
    SECTION("P_11 with the Fig-style TD-set") {
        Graph g = testsup::p11();
        auto ps = private_structure(g, VertexSet::of(11, {1, 2, 4, 5, 8, 9}));
        REQUIRE(ps.d_i == VertexSet::of(11, {2, 4}));
        REQUIRE(ps.d_r == VertexSet::of(11, {1, 5, 8, 9}));
    }
    SECTION("K_2") {
        Graph g = complete_graph(2);
        auto ps = private_structure(g, VertexSet::of(2, {0, 1}));
        REQUIRE(ps.pn_of(0) == VertexSet::of(2, {1}));
        REQUIRE(ps.pn_of(1) == VertexSet::of(2, {0}));
        REQUIRE(ps.d_i == VertexSet::of(2, {0, 1}));
    }
    SECTION("star with center and one leaf") {
        Graph g = star_graph(3);
        auto ps = private_structure(g, VertexSet::of(4, {0, 1}));
        // every vertex whose only dominator is the center, including the
        // chosen leaf itself
        REQUIRE(ps.pn_of(0) == VertexSet::of(4, {1, 2, 3}));
        REQUIRE(ps.pn_of(1) == VertexSet::of(4, {0}));
        REQUIRE(ps.d_i == VertexSet::of(4, {1}));
        REQUIRE(ps.d_r == VertexSet::of(4, {0}));
    }
    SECTION("non-TD-set is rejected") {
        REQUIRE_THROWS_AS(private_structure(complete_graph(2), VertexSet::of(2, {0})), PreconditionError);
    }
    SECTION("private neighbors have exactly one dominator") {
        Rng rng(17);
        for (int it = 0; it < 25; ++it) {
            GenSpec spec;
            spec.cls = GenSpec::Class::Any;
            spec.n = rng.uniform(3, 10);
            spec.seed = rng.next();
            Graph g = generate(spec);
            auto d = gamma_t_exact(g).witness;
            auto ps = private_structure(g, d);
            for (size_t i = 0; i < ps.members.size(); ++i) {
                for (int w : ps.pn[i].to_vector()) {
                    int dominators = 0;
                    for (int u : g.neighbors(w))
                        if (d.contains(u)) ++dominators;
                    REQUIRE(dominators == 1);
                    REQUIRE(g.adjacent(w, ps.members[i]));
                }
            }
        }
    }
}

TEST_CASE("all_min_td_sets") {
    SECTION("K_2 has exactly one") {
        auto sets = all_min_td_sets(complete_graph(2));
        REQUIRE(sets.size() == 1);
        REQUIRE(sets[0] == VertexSet::of(2, {0, 1}));
    }
    SECTION("P_4 has exactly the middle pair") {
        auto sets = all_min_td_sets(path_graph(4));
        REQUIRE(sets.size() == 1);
        REQUIRE(sets[0] == VertexSet::of(4, {1, 2}));
    }
    SECTION("C_4 has the four adjacent pairs, lexicographically") {
        auto sets = all_min_td_sets(cycle_graph(4));
        REQUIRE(sets.size() == 4);
        REQUIRE(sets[0] == VertexSet::of(4, {0, 1}));
        REQUIRE(sets[1] == VertexSet::of(4, {0, 3}));
        REQUIRE(sets[2] == VertexSet::of(4, {1, 2}));
        REQUIRE(sets[3] == VertexSet::of(4, {2, 3}));
    }
    SECTION("matches blunt enumeration on random graphs") {
        Rng rng(23);
        for (int it = 0; it < 20; ++it) {
            GenSpec spec;
            spec.cls = GenSpec::Class::Any;
            spec.n = rng.uniform(3, 9);
            spec.seed = rng.next();
            Graph g = generate(spec);
            auto sets = all_min_td_sets(g);
            auto expect = testsup::naive_min_td_sets(g);
            REQUIRE(sets.size() == expect.size());
            int gt = gamma_t_exact(g).gamma_t;
            for (size_t i = 0; i < sets.size(); ++i) {
                REQUIRE(sets[i].to_vector() == expect[i]); // same lexicographic order
                REQUIRE(is_td_set(g, sets[i]));
                REQUIRE(sets[i].count() == gt);
            }
        }
    }
    SECTION("early stop works") {
        int visits = 0;
        for_each_min_td_set(cycle_graph(4), [&](const VertexSet&) { return ++visits < 2; });
        REQUIRE(visits == 2);
    }
}

TEST_CASE("gamma_t is at least 2 on isolate-free graphs") {
    Rng rng(31);
    for (int it = 0; it < 40; ++it) {
        GenSpec spec;
        spec.cls = it % 2 ? GenSpec::Class::Any : GenSpec::Class::Split;
        spec.n = rng.uniform(2, 10);
        spec.seed = rng.next();
        REQUIRE(gamma_t_exact(generate(spec)).gamma_t >= 2);
    }
}

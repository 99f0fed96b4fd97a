#include <catch2/catch_amalgamated.hpp>

#include "tdc/tdc.hpp"
#include "test_support.hpp"

using namespace tdc;

TEST_CASE("chi_exact") {
    REQUIRE(chi_exact(complete_graph(3)).value == 3);
    REQUIRE(chi_exact(path_graph(4)).value == 2);
    SECTION("bipartite graphs with an edge are 2-chromatic") {
        Rng rng(7);
        for (int it = 0; it < 20; ++it) {
            GenSpec spec;
            spec.cls = GenSpec::Class::Bipartite;
            spec.n = rng.uniform(2, 12);
            spec.seed = rng.next();
            REQUIRE(chi_exact(generate(spec)).value == 2);
        }
    }
    SECTION("witness propriety") {
        auto r = chi_exact(cycle_graph(5));
        REQUIRE(r.value == 3);
        REQUIRE(is_proper(cycle_graph(5), r.witness));
        REQUIRE(r.witness.num_colors() == 3);
    }
}

TEST_CASE("chi_td_exact anchors") {
    SECTION("P_11 needs 7 colors") {
        auto r = chi_td_exact(testsup::p11());
        REQUIRE(r.value == 7);
        REQUIRE(is_td_coloring(testsup::p11(), r.witness));
        REQUIRE(r.lower_bound_used == 6);
        REQUIRE(r.upper_bound_used == 8);
    }
    SECTION("P_6 hits gamma_t") {
        REQUIRE(chi_td_exact(path_graph(6)).value == 4);
        REQUIRE(gamma_t_exact(path_graph(6)).gamma_t == 4);
    }
    SECTION("2K_2") {
        Graph g(4, {{0, 1}, {2, 3}});
        REQUIRE(testsup::naive_min_colors(g, testsup::Kind::TotalDominator, 8) == 4);
        REQUIRE(chi_td_exact(g).value == 4);
    }
    SECTION("isolated vertices are rejected") {
        REQUIRE_THROWS_AS(chi_td_exact(Graph(3, {{0, 1}})), PreconditionError);
    }
}

TEST_CASE("chi_d_exact anchors") {
    REQUIRE(chi_d_exact(star_graph(3)).value == 2);
    REQUIRE(chi_d_exact(complete_bipartite(2, 3)).value == 2);
    REQUIRE(chi_d_exact(complete_graph(3)).value == 3);
    SECTION("P_4 needs 3, matching the oracle") {
        REQUIRE(testsup::naive_min_colors(path_graph(4), testsup::Kind::Dominator, 4) == 3);
        REQUIRE(chi_d_exact(path_graph(4)).value == 3);
    }
    SECTION("isolated vertices are fine for dominator colorings") {
        REQUIRE(chi_d_exact(Graph(2, {})).value == 2);
    }
    SECTION("witness validity") {
        auto r = chi_d_exact(testsup::paw_graph());
        REQUIRE(is_dominator_coloring(testsup::paw_graph(), r.witness));
    }
}

TEST_CASE("feasible_td_coloring") {
    REQUIRE_FALSE(feasible_td_coloring(testsup::p11(), 6).has_value());
    auto c = feasible_td_coloring(testsup::p11(), 7);
    REQUIRE(c.has_value());
    REQUIRE(is_td_coloring(testsup::p11(), *c));
    REQUIRE(feasible_td_coloring(complete_graph(2), 2).has_value());
    REQUIRE_THROWS_AS(feasible_td_coloring(complete_graph(2), 0), PreconditionError);
}

TEST_CASE("determinism of witnesses") {
    Graph g = testsup::half_graph(4);
    auto a = chi_td_exact(g);
    auto b = chi_td_exact(g);
    REQUIRE(a.value == b.value);
    REQUIRE(a.witness == b.witness);
    REQUIRE(chi_d_exact(g).witness == chi_d_exact(g).witness);
}

TEST_CASE("node budget is a loud, distinct outcome") {
    Graph g = testsup::half_graph(6);
    SearchLimits tiny{5};
    REQUIRE_THROWS_AS(chi_td_exact(g, tiny), BudgetError);
    REQUIRE_NOTHROW(chi_td_exact(g));
}

TEST_CASE("theorem bounds hold on random graphs") {
    Rng rng(53);
    for (int it = 0; it < 40; ++it) {
        GenSpec spec;
        spec.cls = it % 3 == 0 ? GenSpec::Class::Bipartite : GenSpec::Class::Any;
        spec.n = rng.uniform(2, 9);
        spec.seed = rng.next();
        Graph g = generate(spec);
        int gt = gamma_t_exact(g).gamma_t;
        int chi = chi_exact(g).value;
        int td = chi_td_exact(g).value;
        REQUIRE(td >= std::max(gt, chi));
        REQUIRE(td <= gt + chi);
        if (is_bipartite(g)) REQUIRE(td <= gt + 2);
    }
}

TEST_CASE("solver values match the partition oracle, exhaustive n <= 6") {
    for (int n = 2; n <= 6; ++n) {
        testsup::for_each_labeled_graph(n, [&](std::uint64_t mask, int order) {
            if (!testsup::mask_isolate_free(order, mask)) return;
            Graph g = testsup::graph_from_mask(order, mask);
            int td = chi_td_exact(g).value;
            REQUIRE(testsup::naive_min_colors(g, testsup::Kind::TotalDominator, td) == td);
            int chi = chi_exact(g).value;
            REQUIRE(testsup::naive_min_colors(g, testsup::Kind::Proper, chi) == chi);
            int cd = chi_d_exact(g).value;
            REQUIRE(testsup::naive_min_colors(g, testsup::Kind::Dominator, cd) == cd);
        });
    }
}

TEST_CASE("chi_td matches the partition oracle on sampled n = 7 graphs") {
    Rng rng(77);
    int bits = 7 * 6 / 2;
    int tested = 0;
    while (tested < 1500) {
        std::uint64_t mask = rng.next() & ((std::uint64_t{1} << bits) - 1);
        if (!testsup::mask_isolate_free(7, mask)) continue;
        Graph g = testsup::graph_from_mask(7, mask);
        int td = chi_td_exact(g).value;
        REQUIRE(testsup::naive_min_colors(g, testsup::Kind::TotalDominator, td) == td);
        ++tested;
    }
}

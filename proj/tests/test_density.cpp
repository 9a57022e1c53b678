#include <catch2/catch_amalgamated.hpp>

#include "kex/density.hpp"

using namespace kex;

TEST_CASE("empty instance satisfies every hypothesis", "[density]") {
    GraphIndex g = build_index(5);
    auto ps = ParameterSet::make("relaxed", g.n, g.m);
    EdgeColoring phi(g);
    ListAssignment L(g);
    auto rep = check_instance_hypotheses(g, phi, L, ps);
    REQUIRE(rep.ok());
    REQUIRE(rep.find("alpha-vertex") != nullptr);
    REQUIRE(rep.find("phi-not-in-list")->worst == 0);
}

TEST_CASE("alpha violations are localized to the right item", "[density]") {
    GraphIndex g = build_index(5);
    auto ps = ParameterSet::make("relaxed", g.n, g.m);
    SECTION("vertex overload") {
        EdgeColoring phi(g);
        // alpha_m = floor(0.15 * 10) = 1: two precolored edges at vertex 0
        for (int c = 1; c <= ps.alpha_m + 1; c++) phi.set(g.edge_id(0, c), c);
        auto rep = check_alpha_dense(g, phi, ps);
        REQUIRE_FALSE(rep.find("alpha-vertex")->pass);
    }
    SECTION("color overload") {
        EdgeColoring phi(g);
        phi.set(g.edge_id(0, 1), 1);
        phi.set(g.edge_id(2, 3), 1);
        auto rep = check_alpha_dense(g, phi, ps);
        REQUIRE_FALSE(rep.find("alpha-color")->pass);
        REQUIRE(rep.find("alpha-color")->worst == 2);
    }
}

TEST_CASE("beta violations are localized to the right item", "[density]") {
    GraphIndex g = build_index(5);
    auto ps = ParameterSet::make("relaxed", g.n, g.m);
    SECTION("list too large") {
        ListAssignment L(g);
        for (int c = 1; c <= ps.beta_m + 1; c++) L.add(0, c);
        auto rep = check_beta_sparse(g, L, ps);
        REQUIRE_FALSE(rep.find("beta-size")->pass);
    }
    SECTION("vertex-color concentration") {
        ListAssignment L(g);
        // color 4 forbidden on beta_m + 1 edges at vertex 0
        for (int v = 1; v <= ps.beta_m + 1; v++) L.add(g.edge_id(0, v), 4);
        auto rep = check_beta_sparse(g, L, ps);
        REQUIRE_FALSE(rep.find("beta-vertex-color")->pass);
    }
}

TEST_CASE("precolor inside its own list is rejected", "[density]") {
    GraphIndex g = build_index(5);
    auto ps = ParameterSet::make("relaxed", g.n, g.m);
    EdgeColoring phi(g);
    ListAssignment L(g);
    phi.set(g.edge_id(0, 7), 3);
    L.add(g.edge_id(0, 7), 3);
    auto rep = check_instance_hypotheses(g, phi, L, ps);
    REQUIRE_FALSE(rep.find("phi-not-in-list")->pass);
}

TEST_CASE("allowed cycle filter", "[density]") {
    GraphIndex g = build_index(4);
    EdgeColoring h = build_standard_coloring(g);
    EdgeColoring phi(g);
    ListAssignment L(g);
    int e = g.edge_id(g.p_vertex(1), g.q_vertex(1));
    auto cycles = strong_cycles_through(g, h, e);
    REQUIRE_FALSE(cycles.empty());
    Cycle4 cy = cycles.front();
    REQUIRE(is_allowed_cycle(g, h, L, phi, cy));
    SECTION("prescribed edge on the cycle blocks it") {
        phi.set(cy.edge_ids()[1], h.color(cy.edge_ids()[1]));
        REQUIRE_FALSE(is_allowed_cycle(g, h, L, phi, cy));
    }
    SECTION("post-swap color in a list blocks it") {
        // edge 0 receives c2 after the swap
        L.add(cy.edge_ids()[0], cy.c2);
        REQUIRE_FALSE(is_allowed_cycle(g, h, L, phi, cy));
    }
    SECTION("colors not matching the coloring block it") {
        Cycle4 wrong = cy;
        std::swap(wrong.c1, wrong.c2);
        REQUIRE_FALSE(is_allowed_cycle(g, h, L, phi, wrong));
    }
}

TEST_CASE("h' conditions: empty instance passes a through i", "[density]") {
    GraphIndex g = build_index(6);
    auto ps = ParameterSet::make("relaxed", g.n, g.m);
    EdgeColoring h = build_standard_coloring(g);
    EdgeColoring phi(g);
    ListAssignment L(g);
    auto rep = check_hprime_conditions(g, h, phi, L, ps);
    REQUIRE(rep.ok());
    for (const char* id : {"a", "b", "c", "d", "e", "f", "g", "h", "i"})
        REQUIRE(rep.find(id) != nullptr);
}

TEST_CASE("h' conditions: conflicts piled on one vertex fail (b)", "[density]") {
    GraphIndex g = build_index(6);
    auto ps = ParameterSet::make("relaxed", g.n, g.m);
    EdgeColoring h = build_standard_coloring(g);
    EdgeColoring phi(g);
    ListAssignment L(g);
    // every cross edge at p_1 becomes a conflict edge: n of them, all with
    // distinct colors, versus the per-vertex limit c'(n) = c(n)/2
    int p1 = g.p_vertex(1);
    for (int j = 1; j <= g.n; j++) {
        int e = g.edge_id(p1, g.q_vertex(j));
        L.add(e, h.color(e));
    }
    REQUIRE(g.n > ps.cprime_n);
    auto rep = check_hprime_conditions(g, h, phi, L, ps);
    REQUIRE_FALSE(rep.find("b")->pass);
    REQUIRE(rep.find("b")->worst == g.n);
}

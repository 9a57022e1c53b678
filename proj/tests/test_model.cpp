#include <catch2/catch_amalgamated.hpp>

#include "kex/model.hpp"
#include "kex/standard_coloring.hpp"

using namespace kex;

TEST_CASE("edge ids round-trip and partition counts", "[model]") {
    for (int n : {2, 3, 5, 8}) {
        GraphIndex g = build_index(n);
        REQUIRE(g.vertices == 2 * n);
        REQUIRE(g.edge_count == n * (2 * n - 1));
        REQUIRE(g.m == (n % 2 == 0 ? 2 * n - 1 : 2 * n));
        int knn = 0, g1 = 0, g2 = 0;
        for (int e = 0; e < g.edge_count; e++) {
            auto [u, v] = g.ends(e);
            REQUIRE(u < v);
            REQUIRE(g.edge_id(u, v) == e);
            REQUIRE(g.edge_id(v, u) == e);
            switch (g.classify_edge(e)) {
                case Part::Knn: knn++; break;
                case Part::G1: g1++; break;
                case Part::G2: g2++; break;
            }
        }
        REQUIRE(knn == n * n);
        REQUIRE(g1 == n * (n - 1) / 2);
        REQUIRE(g2 == n * (n - 1) / 2);
    }
}

TEST_CASE("p/q vertex helpers agree with sides", "[model]") {
    GraphIndex g = build_index(4);
    for (int i = 1; i <= 4; i++) {
        REQUIRE(g.p_side(g.p_vertex(i)));
        REQUIRE_FALSE(g.p_side(g.q_vertex(i)));
        REQUIRE(g.side_index(g.p_vertex(i)) == i);
        REQUIRE(g.side_index(g.q_vertex(i)) == i);
    }
}

TEST_CASE("EdgeColoring maintains both indices", "[model]") {
    GraphIndex g = build_index(3);
    EdgeColoring h(g);
    int e01 = g.edge_id(0, 1), e23 = g.edge_id(2, 3), e02 = g.edge_id(0, 2);
    h.set(e01, 1);
    h.set(e23, 1);
    REQUIRE(h.at(0, 1) == e01);
    REQUIRE(h.at(3, 1) == e23);
    REQUIRE(h.class_size(1) == 2);
    REQUIRE(h.assigned_count() == 2);
    // 0 already has color 1
    REQUIRE_FALSE(h.can_set(e02, 1));
    REQUIRE_THROWS_AS(h.set(e02, 1), std::logic_error);
    REQUIRE(h.can_set(e02, 2));
    h.set(e02, 2);
    h.clear(e01);
    REQUIRE(h.free_at(0, 1));
    REQUIRE(h.class_size(1) == 1);
    // recolor in place
    h.set(e02, 5);
    REQUIRE(h.color(e02) == 5);
    REQUIRE(h.free_at(0, 2));
}

TEST_CASE("standard coloring is proper, complete and segregated", "[model]") {
    for (int n = 2; n <= 9; n++) {
        GraphIndex g = build_index(n);
        EdgeColoring h = build_standard_coloring(g);
        REQUIRE(h.assigned_count() == g.edge_count);
        std::vector<std::set<int>> seen(g.vertices);
        for (int e = 0; e < g.edge_count; e++) {
            int c = h.color(e);
            REQUIRE(c >= 1);
            REQUIRE(c <= g.m);
            auto [u, v] = g.ends(e);
            REQUIRE(seen[u].insert(c).second);
            REQUIRE(seen[v].insert(c).second);
            if (g.classify_edge(e) == Part::Knn)
                REQUIRE(c <= n);
            else
                REQUIRE(c > n);
        }
    }
}

TEST_CASE("4-cycle swap is a properness-preserving involution", "[model]") {
    GraphIndex g = build_index(4);
    EdgeColoring h = build_standard_coloring(g);
    // find any matching 2-colored 4-cycle through edge(p1,q1)
    int e = g.edge_id(g.p_vertex(1), g.q_vertex(1));
    auto cycles = strong_cycles_through(g, h, e);
    REQUIRE_FALSE(cycles.empty());
    Cycle4 cy = cycles.front();
    REQUIRE(cycle_matches(h, cy));
    EdgeColoring before = h;
    apply_swap(h, cy);
    REQUIRE_FALSE(h == before);
    // swapped colors, still proper (set() would have thrown otherwise)
    auto es = cy.edge_ids();
    REQUIRE(h.color(es[0]) == cy.c2);
    REQUIRE(h.color(es[1]) == cy.c1);
    revert_swap(h, cy);
    REQUIRE(h == before);
}

TEST_CASE("Cycle4 canonical form identifies rotations and reflections", "[model]") {
    Cycle4 a{0, 5, 1, 6, 2, 7};
    Cycle4 rot{1, 6, 0, 5, 2, 7};      // rotate by two: same edge pairs
    Cycle4 refl{0, 6, 1, 5, 7, 2};     // reversed orientation swaps colors
    REQUIRE(a == rot);
    REQUIRE(a == refl);
    Cycle4 other{0, 5, 1, 6, 3, 7};
    REQUIRE_FALSE(a == other);
}

TEST_CASE("parameter presets", "[model]") {
    GraphIndex g = build_index(6);
    auto relaxed = ParameterSet::make("relaxed", g.n, g.m);
    REQUIRE(relaxed.alpha_m >= 1);
    REQUIRE(relaxed.c_n == 6);
    REQUIRE(relaxed.d_n == 12);
    REQUIRE(relaxed.H_n > 0);
    auto paper = ParameterSet::make("paper", g.n, g.m);
    // the article's constants vanish at desk scale; the checks must still run
    REQUIRE(paper.alpha_m == 0);
    REQUIRE(paper.c_n == 0);
    REQUIRE_THROWS_AS(ParameterSet::make("bogus", g.n, g.m), std::invalid_argument);
}

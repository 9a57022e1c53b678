#include <catch2/catch_amalgamated.hpp>

#include "kex/extend.hpp"

using namespace kex;

TEST_CASE("no conflicts: phi' equals phi", "[extend]") {
    GraphIndex g = build_index(5);
    auto ps = ParameterSet::make("relaxed", g.n, g.m);
    EdgeColoring h = build_standard_coloring(g);
    EdgeColoring phi(g);
    phi.set(g.edge_id(0, 7), 4);
    ListAssignment L(g);
    auto res = extend_to_phi_prime(g, h, phi, L, ps);
    REQUIRE(res.ok);
    REQUIRE(res.conflict_edges.empty());
    REQUIRE(res.phi_prime == phi);
    REQUIRE(res.report.find("extend-feasible") != nullptr);
}

TEST_CASE("conflict edges get requests outside their lists", "[extend]") {
    GraphIndex g = build_index(5);
    auto ps = ParameterSet::make("relaxed", g.n, g.m);
    EdgeColoring h = build_standard_coloring(g);
    EdgeColoring phi(g);
    ListAssignment L(g);
    int e1 = g.edge_id(0, 5), e2 = g.edge_id(2, 8);
    L.add(e1, h.color(e1));  // h'(e1) lands in L(e1)
    L.add(e2, h.color(e2));
    auto res = extend_to_phi_prime(g, h, phi, L, ps);
    REQUIRE(res.ok);
    REQUIRE(res.conflict_edges == std::vector<int>{std::min(e1, e2), std::max(e1, e2)});
    for (int e : {e1, e2}) {
        REQUIRE(res.phi_prime.colored(e));
        REQUIRE_FALSE(L.forbids(e, res.phi_prime.color(e)));
        REQUIRE(res.ledger.used[res.phi_prime.color(e)] >= 1);
    }
}

TEST_CASE("requests sharing a vertex stay proper", "[extend]") {
    GraphIndex g = build_index(5);
    auto ps = ParameterSet::make("relaxed", g.n, g.m);
    EdgeColoring h = build_standard_coloring(g);
    EdgeColoring phi(g);
    ListAssignment L(g);
    // two conflict edges at vertex 0
    int e1 = g.edge_id(0, 5), e2 = g.edge_id(0, 6);
    L.add(e1, h.color(e1));
    L.add(e2, h.color(e2));
    auto res = extend_to_phi_prime(g, h, phi, L, ps);
    REQUIRE(res.ok);
    REQUIRE(res.phi_prime.color(e1) != res.phi_prime.color(e2));
}

TEST_CASE("precolored conflict edge keeps its prescription", "[extend]") {
    GraphIndex g = build_index(5);
    auto ps = ParameterSet::make("relaxed", g.n, g.m);
    EdgeColoring h = build_standard_coloring(g);
    EdgeColoring phi(g);
    ListAssignment L(g);
    int e = g.edge_id(0, 5);
    int hc = h.color(e);
    int target = (hc % g.m) + 1;
    phi.set(e, target);
    L.add(e, hc);  // conflicts under h', but phi(e) is already outside L(e)
    auto res = extend_to_phi_prime(g, h, phi, L, ps);
    REQUIRE(res.ok);
    REQUIRE(res.conflict_edges == std::vector<int>{e});
    REQUIRE(res.phi_prime.color(e) == target);
    // no ledger charge for the kept prescription
    for (int c = 1; c <= g.m; c++) REQUIRE(res.ledger.used[c] == 0);
}

TEST_CASE("requests avoid prescribed colors at both endpoints", "[extend]") {
    GraphIndex g = build_index(5);
    auto ps = ParameterSet::make("relaxed", g.n, g.m);
    EdgeColoring h = build_standard_coloring(g);
    EdgeColoring phi(g);
    ListAssignment L(g);
    int e = g.edge_id(0, 5);
    phi.set(g.edge_id(0, 6), 1);  // color 1 prescribed at vertex 0
    L.add(e, h.color(e));
    auto res = extend_to_phi_prime(g, h, phi, L, ps);
    REQUIRE(res.ok);
    REQUIRE(res.phi_prime.color(e) != 1);
}

TEST_CASE("ledger caps per-color absorptions at f(n)", "[extend]") {
    GraphIndex g = build_index(6);
    auto ps = ParameterSet::make("relaxed", g.n, g.m);
    EdgeColoring h = build_standard_coloring(g);
    EdgeColoring phi(g);
    ListAssignment L(g);
    // disjoint conflict edges; absorb more of them than f_n
    int made = 0;
    for (int i = 1; i <= g.n && made < ps.f_n + 2; i++) {
        int e = g.edge_id(g.p_vertex(i), g.q_vertex(i));
        L.add(e, h.color(e));
        made++;
    }
    REQUIRE(made > ps.f_n);
    auto res = extend_to_phi_prime(g, h, phi, L, ps);
    REQUIRE(res.ok);
    for (int c = 1; c <= g.m; c++) REQUIRE(res.ledger.used[c] <= ps.f_n);
    // output bound items measured on phi'
    REQUIRE(res.report.find("extend-color") != nullptr);
    REQUIRE(res.report.find("extend-vertex") != nullptr);
}

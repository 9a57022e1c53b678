#include <catch2/catch_amalgamated.hpp>

#include "kex/rng.hpp"
#include "kex/swap_engine.hpp"

using namespace kex;

namespace {

bool proper_and_full(const GraphIndex& g, const EdgeColoring& h) {
    std::vector<std::set<int>> seen(g.vertices);
    for (int e = 0; e < g.edge_count; e++) {
        int c = h.color(e);
        if (c < 1 || c > g.m) return false;
        auto [u, v] = g.ends(e);
        if (!seen[u].insert(c).second || !seen[v].insert(c).second) return false;
    }
    return true;
}

struct Fixture {
    GraphIndex g;
    EdgeColoring h;
    ParameterSet ps;
    SwapTrace tr;
    EdgeColoring phi;
    ListAssignment L;
    explicit Fixture(int n)
        : g(build_index(n)), h(build_standard_coloring(g)),
          ps(ParameterSet::make("relaxed", g.n, g.m)), tr(g, ps), phi(g), L(g) {}
    SwapCtx ctx() { return SwapCtx{g, h, L, phi, tr}; }
};

}  // namespace

TEST_CASE("four_cycle_through agrees with brute force", "[swap]") {
    Fixture fx(4);
    for (int e = 0; e < fx.g.edge_count; e++)
        for (int c2 = 1; c2 <= fx.g.m; c2++) {
            if (c2 == fx.h.color(e)) continue;
            auto cy = detail::four_cycle_through(fx.g, fx.h, e, c2);
            // brute force: does a matching (c1,c2) 4-cycle contain e?
            int c1 = fx.h.color(e);
            auto [x, y] = fx.g.ends(e);
            bool found = false;
            for (int x2 = 0; x2 < fx.g.vertices && !found; x2++) {
                if (x2 == x || x2 == y) continue;
                for (int y2 = 0; y2 < fx.g.vertices && !found; y2++) {
                    if (y2 == x || y2 == y || y2 == x2) continue;
                    found = fx.h.color(fx.g.edge_id(x, x2)) == c2 &&
                            fx.h.color(fx.g.edge_id(y, y2)) == c2 &&
                            fx.h.color(fx.g.edge_id(x2, y2)) == c1;
                }
            }
            REQUIRE(cy.has_value() == found);
            if (cy) {
                REQUIRE(cycle_matches(fx.h, *cy));
                auto es = cy->edge_ids();
                REQUIRE(std::count(es.begin(), es.end(), e) == 1);
            }
        }
}

TEST_CASE("do_swap updates trace and properness survives fuzzing", "[swap]") {
    Fixture fx(5);
    auto cx = fx.ctx();
    Rng rng(2024);
    int applied = 0;
    for (int k = 0; k < 2000; k++) {
        int e = static_cast<int>(rng.below(fx.g.edge_count));
        int c2 = rng.range(1, fx.g.m);
        auto cy = detail::four_cycle_through(fx.g, fx.h, e, c2);
        if (!cy || !detail::swap_admissible(cx, *cy, {}, {}, false)) continue;
        std::set<int> touched;
        detail::do_swap(cx, *cy, touched);
        applied++;
        REQUIRE(touched.size() == 4);
    }
    REQUIRE(applied > 100);
    REQUIRE(proper_and_full(fx.g, fx.h));
    REQUIRE(fx.tr.swap_count() == applied);
    // recount the trace bookkeeping from scratch
    std::vector<int> by_color(fx.g.m + 1, 0), at_vertex(fx.g.vertices, 0);
    for (int e : fx.tr.disturbed()) {
        by_color[fx.h.color(e)]++;
        auto [u, v] = fx.g.ends(e);
        at_vertex[u]++;
        at_vertex[v]++;
    }
    for (int c = 1; c <= fx.g.m; c++) REQUIRE(by_color[c] == fx.tr.disturbed_with_color(c));
    for (int v = 0; v < fx.g.vertices; v++) REQUIRE(at_vertex[v] == fx.tr.disturbed_at_vertex(v));
}

TEST_CASE("transaction rollback is bit-identical", "[swap]") {
    Fixture fx(5);
    auto cx = fx.ctx();
    EdgeColoring h0 = fx.h;
    int swaps0 = fx.tr.swap_count();
    {
        detail::Txn txn(cx);
        std::set<int> touched;
        auto cy = detail::four_cycle_through(fx.g, fx.h, 0, fx.h.color(0) % fx.g.n + 1);
        if (cy && detail::swap_admissible(cx, *cy, {}, {}, false)) detail::do_swap(cx, *cy, touched);
        // no commit: destructor restores
    }
    REQUIRE(fx.h == h0);
    REQUIRE(fx.tr.swap_count() == swaps0);
    REQUIRE(fx.tr.disturbed_count() == 0);
}

TEST_CASE("exchange_adjacent_knn exchanges two adjacent low colors", "[swap]") {
    Fixture fx(6);
    auto cx = fx.ctx();
    int u1 = fx.g.p_vertex(1), u2 = fx.g.q_vertex(1), v2 = fx.g.q_vertex(2);
    int e1 = fx.g.edge_id(u1, u2), e2 = fx.g.edge_id(u1, v2);
    int c1 = fx.h.color(e1), c2 = fx.h.color(e2);
    auto res = exchange_adjacent_knn(cx, e1, e2, {});
    REQUIRE(res.ok);
    REQUIRE(fx.h.color(e1) == c2);
    REQUIRE(fx.h.color(e2) == c1);
    REQUIRE(res.touched.size() <= 16);
    REQUIRE(proper_and_full(fx.g, fx.h));
    for (int e : res.touched) REQUIRE(fx.g.classify_edge(e) == Part::Knn);
}

TEST_CASE("exchange refuses avoided colors and leaves no residue", "[swap]") {
    Fixture fx(6);
    auto cx = fx.ctx();
    EdgeColoring h0 = fx.h;
    int e1 = fx.g.edge_id(fx.g.p_vertex(1), fx.g.q_vertex(1));
    int e2 = fx.g.edge_id(fx.g.p_vertex(1), fx.g.q_vertex(2));
    auto res = exchange_adjacent_knn(cx, e1, e2, {fx.h.color(e1)});
    REQUIRE_FALSE(res.ok);
    REQUIRE(res.reason == "color avoided");
    REQUIRE(fx.h == h0);
    REQUIRE(fx.tr.disturbed_count() == 0);
}

TEST_CASE("exchange respects prescriptions and overloads", "[swap]") {
    Fixture fx(6);
    int e1 = fx.g.edge_id(fx.g.p_vertex(1), fx.g.q_vertex(1));
    int e2 = fx.g.edge_id(fx.g.p_vertex(1), fx.g.q_vertex(2));
    SECTION("prescribed first edge") {
        fx.phi.set(e1, fx.h.color(e1));
        auto cx = fx.ctx();
        auto res = exchange_adjacent_knn(cx, e1, e2, {});
        REQUIRE_FALSE(res.ok);
        REQUIRE(res.reason == "prescribed edge");
    }
    SECTION("overloaded color") {
        // push the disturbed-with-color counter past d_n by hand
        for (int e = 0; e < fx.ps.d_n; e++) fx.tr.mark(e, 0, fx.h.color(e1));
        auto cx = fx.ctx();
        auto res = exchange_adjacent_knn(cx, e1, e2, {});
        REQUIRE_FALSE(res.ok);
        REQUIRE(res.reason == "color overloaded");
    }
}

TEST_CASE("pull_color_to_neighbor_knn moves a low color one edge over", "[swap]") {
    Fixture fx(6);
    auto cx = fx.ctx();
    int u1 = fx.g.p_vertex(1), u2 = fx.g.q_vertex(1);
    int c1 = fx.h.color(fx.g.edge_id(u1, u2));
    bool one_ok = false;
    for (int j = 2; j <= fx.g.n && !one_ok; j++) {
        int v2 = fx.g.q_vertex(j);
        detail::Txn txn(cx);
        auto res = pull_color_to_neighbor_knn(cx, u1, u2, v2, {});
        if (!res.ok) continue;
        REQUIRE(fx.h.color(fx.g.edge_id(u1, v2)) == c1);
        REQUIRE(res.touched.size() <= 34);
        REQUIRE(proper_and_full(fx.g, fx.h));
        one_ok = true;
        txn.commit();
    }
    REQUIRE(one_ok);
}

TEST_CASE("push_clique_color_to_knn then pull_high_color_along_knn", "[swap]") {
    Fixture fx(6);
    auto cx = fx.ctx();
    int u1 = fx.g.p_vertex(1), v1 = fx.g.p_vertex(2);
    int src = fx.g.edge_id(u1, v1);
    int c1 = fx.h.color(src);
    REQUIRE(c1 > fx.g.n);  // clique edges carry high colors
    bool pushed = false;
    int knn_edge = -1, u2 = -1;
    for (int j = 1; j <= fx.g.n && !pushed; j++) {
        u2 = fx.g.q_vertex(j);
        auto res = push_clique_color_to_knn(cx, u1, v1, u2, {});
        if (!res.ok) continue;
        pushed = true;
        knn_edge = fx.g.edge_id(u1, u2);
        REQUIRE(fx.h.color(knn_edge) == c1);
        REQUIRE(res.touched.size() <= 34);
        REQUIRE(proper_and_full(fx.g, fx.h));
    }
    REQUIRE(pushed);
    // now walk the high color along K_{n,n} to another neighbor
    bool pulled = false;
    for (int j = 1; j <= fx.g.n && !pulled; j++) {
        int v2 = fx.g.q_vertex(j);
        if (v2 == u2) continue;
        auto res = pull_high_color_along_knn(cx, u1, u2, v2, {});
        if (!res.ok) continue;
        pulled = true;
        REQUIRE(fx.h.color(fx.g.edge_id(u1, v2)) == c1);
        REQUIRE(res.touched.size() <= 67);
        REQUIRE(proper_and_full(fx.g, fx.h));
    }
    REQUIRE(pulled);
}

TEST_CASE("place_low_color_in_clique plants a low color and reports both edges", "[swap]") {
    Fixture fx(6);
    auto cx = fx.ctx();
    auto res = place_low_color_in_clique(cx, 1, Part::G2, {});
    REQUIRE(res.ok);
    REQUIRE(res.result_edge >= 0);
    REQUIRE(fx.g.classify_edge(res.result_edge) == Part::G2);
    REQUIRE(fx.h.color(res.result_edge) == 1);
    REQUIRE(res.partner_edge >= 0);
    REQUIRE(fx.g.classify_edge(res.partner_edge) == Part::G1);  // opposite clique
    REQUIRE(fx.h.color(res.partner_edge) == 1);
    REQUIRE(res.touched.size() <= 70);
    REQUIRE(proper_and_full(fx.g, fx.h));
}

TEST_CASE("ops fail cleanly at the smallest graph", "[swap]") {
    Fixture fx(2);
    auto cx = fx.ctx();
    // n = 2: no third vertex candidates survive the filters for many calls;
    // whatever the outcome, properness and rollback discipline must hold
    EdgeColoring h0 = fx.h;
    auto res = place_low_color_in_clique(cx, 1, Part::G1, {});
    if (!res.ok) {
        REQUIRE(fx.h == h0);
        REQUIRE(fx.tr.disturbed_count() == 0);
    } else {
        REQUIRE(proper_and_full(fx.g, fx.h));
    }
}

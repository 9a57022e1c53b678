// Step IV machinery: 2-colored 4-cycle swaps, disturbance bookkeeping and the
// five chain operations.  Every operation validates its selections (lists,
// prescriptions, avoided colors, overload state), applies swaps
// transactionally and rolls back to a bit-identical state on failure.
//
// Budgets (maximum edges of the exchange subgraph T):
//   exchange_adjacent_knn      16
//   pull_color_to_neighbor_knn 34
//   push_clique_color_to_knn   34
//   pull_high_color_along_knn  67
//   place_low_color_in_clique  70
#pragma once

#include <optional>
#include <set>
#include <sstream>

#include "density.hpp"
#include "model.hpp"

namespace kex {

class SwapTrace {
public:
    struct State {
        std::set<int> disturbed;
        std::vector<int> by_color;   // current color of disturbed edges
        std::vector<int> at_vertex;  // disturbed edges incident to v
        std::vector<Cycle4> log;
        int swap_count = 0;
        int path_flips = 0;  // Kempe-style component flips (non-4-cycle moves)
        std::vector<std::string> warnings;
    };

    SwapTrace() = default;
    SwapTrace(const GraphIndex& g, const ParameterSet& ps) : g_(&g), ps_(ps) {
        st_.by_color.assign(g.m + 1, 0);
        st_.at_vertex.assign(g.vertices, 0);
    }

    // The baseline exceptional set: edges of h' short of allowed strong
    // cycles.  They count as disturbed from the start.
    void init_baseline(const EdgeColoring& hprime, const ListAssignment& L,
                       const EdgeColoring& phi) {
        int thr = std::max(0, g_->n / 2 - ps_.eps_n);
        if (thr == 0) return;
        for (int e = 0; e < g_->edge_count; e++) {
            if (g_->classify_edge(e) != Part::Knn) continue;
            int allowed = 0;
            for (auto& cy : strong_cycles_through(*g_, hprime, e))
                if (is_allowed_cycle(*g_, hprime, L, phi, cy)) allowed++;
            if (allowed < thr) mark(e, 0, hprime.color(e));
        }
    }

    void mark(int e, int old_color, int new_color) {
        if (st_.disturbed.insert(e).second) {
            auto [u, v] = g_->ends(e);
            st_.at_vertex[u]++;
            st_.at_vertex[v]++;
            st_.by_color[new_color]++;
        } else {
            st_.by_color[old_color]--;
            st_.by_color[new_color]++;
        }
    }

    void note_swap(const Cycle4& cy) {
        st_.log.push_back(cy);
        st_.swap_count++;
    }
    void note_path(int) { st_.path_flips++; }

    void warn(std::string msg) { st_.warnings.push_back(std::move(msg)); }

    bool is_disturbed(int e) const { return st_.disturbed.count(e) != 0; }
    bool color_overloaded(int c) const { return st_.by_color[c] >= ps_.d_n; }
    bool vertex_overloaded(int v) const { return st_.at_vertex[v] >= ps_.d_n; }
    int disturbed_count() const { return static_cast<int>(st_.disturbed.size()); }
    int disturbed_with_color(int c) const { return st_.by_color[c]; }
    int disturbed_at_vertex(int v) const { return st_.at_vertex[v]; }
    int swap_count() const { return st_.swap_count; }
    int path_flips() const { return st_.path_flips; }
    const std::set<int>& disturbed() const { return st_.disturbed; }
    const std::vector<Cycle4>& log() const { return st_.log; }
    const std::vector<std::string>& warnings() const { return st_.warnings; }
    const ParameterSet& params() const { return ps_; }

    State snapshot() const { return st_; }
    void restore(State s) { st_ = std::move(s); }

private:
    const GraphIndex* g_ = nullptr;
    ParameterSet ps_;
    State st_;
};

struct SwapCtx {
    const GraphIndex& g;
    EdgeColoring& h;
    const ListAssignment& L;
    const EdgeColoring& phi;  // prescribed targets
    SwapTrace& trace;
};

struct OpResult {
    bool ok = false;
    std::string reason;          // on failure
    std::set<int> touched;       // edges of the exchange subgraph T
    int swaps = 0;
    int result_edge = -1;        // op-specific: edge now carrying the moved color
    int partner_edge = -1;       // place_low_color_in_clique: opposite-clique edge
    static OpResult fail(std::string why) { return {false, std::move(why), {}, 0, -1, -1}; }
};

namespace detail {

// RAII transaction: restores coloring and trace unless committed.
struct Txn {
    SwapCtx& cx;
    EdgeColoring h_before;
    SwapTrace::State t_before;
    bool committed = false;
    explicit Txn(SwapCtx& c) : cx(c), h_before(c.h), t_before(c.trace.snapshot()) {}
    void commit() { committed = true; }
    ~Txn() {
        if (!committed) {
            cx.h = h_before;
            cx.trace.restore(std::move(t_before));
        }
    }
};

inline int far_end(const GraphIndex& g, int e, int v) {
    auto [a, b] = g.ends(e);
    return a == v ? b : a;
}

// The unique candidate 2-colored 4-cycle containing edge e and color c2
// (paired with e's current color), or nullopt if it does not close.
inline std::optional<Cycle4> four_cycle_through(const GraphIndex& g, const EdgeColoring& h,
                                                int e, int c2) {
    int c1 = h.color(e);
    if (c1 == 0 || c1 == c2) return std::nullopt;
    auto [x, y] = g.ends(e);
    int ex = h.at(x, c2), ey = h.at(y, c2);
    if (ex < 0 || ey < 0) return std::nullopt;
    int x2 = far_end(g, ex, x), y2 = far_end(g, ey, y);
    if (h.color(g.edge_id(x2, y2)) != c1) return std::nullopt;
    return Cycle4{x, y, y2, x2, c1, c2};
}

// Full admissibility of one swap: matching, lists, prescriptions (except the
// explicitly allowed ids), avoided colors, overload state of colors and
// vertices; optionally every edge must lie in K_{n,n}.
inline bool swap_admissible(const SwapCtx& cx, const Cycle4& cy, const std::set<int>& avoided,
                            const std::set<int>& allow_prescribed, bool require_knn) {
    if (!cycle_matches(cx.h, cy)) return false;
    if (avoided.count(cy.c1) || avoided.count(cy.c2)) return false;
    if (cx.trace.color_overloaded(cy.c1) || cx.trace.color_overloaded(cy.c2)) return false;
    for (int v : {cy.a, cy.b, cy.c, cy.d})
        if (cx.trace.vertex_overloaded(v)) return false;
    auto es = cy.edge_ids();
    for (int k = 0; k < 4; k++) {
        if (require_knn && cx.g.classify_edge(es[k]) != Part::Knn) return false;
        if (cx.phi.colored(es[k]) && !allow_prescribed.count(es[k])) return false;
        int next = (k % 2 == 0) ? cy.c2 : cy.c1;
        if (cx.L.forbids(es[k], next)) return false;
    }
    return true;
}

inline void do_swap(SwapCtx& cx, const Cycle4& cy, std::set<int>& touched) {
    auto es = cy.edge_ids();
    std::array<int, 4> old{};
    for (int k = 0; k < 4; k++) old[k] = cx.h.color(es[k]);
    apply_swap(cx.h, cy);
    for (int k = 0; k < 4; k++) {
        cx.trace.mark(es[k], old[k], cx.h.color(es[k]));
        touched.insert(es[k]);
    }
    cx.trace.note_swap(cy);
}

// Recolor `e` to c2 by swapping the closing 4-cycle on (h(e), c2).
inline bool try_prep_swap(SwapCtx& cx, int e, int c2, const std::set<int>& avoided,
                          const std::set<int>& allow_prescribed, bool require_knn,
                          std::set<int>& touched) {
    if (cx.h.color(e) == c2) return true;
    auto cy = four_cycle_through(cx.g, cx.h, e, c2);
    if (!cy || !swap_admissible(cx, *cy, avoided, allow_prescribed, require_knn)) return false;
    do_swap(cx, *cy, touched);
    return true;
}

// First-edge validity shared by the chain lemmas: a K_{n,n} edge whose color
// may be exchanged.  `low` selects whether the color must be in 1..n.
inline bool valid_first_edge(const SwapCtx& cx, int e, bool low, const std::set<int>& avoided,
                             bool may_be_prescribed) {
    if (cx.g.classify_edge(e) != Part::Knn) return false;
    int c = cx.h.color(e);
    if (c == 0 || (low ? c > cx.g.n : c <= cx.g.n)) return false;
    if (avoided.count(c) || cx.trace.color_overloaded(c)) return false;
    if (!may_be_prescribed && cx.phi.colored(e)) return false;
    auto [u, v] = cx.g.ends(e);
    return !cx.trace.vertex_overloaded(u) && !cx.trace.vertex_overloaded(v);
}

}  // namespace detail

// ---- exchange_adjacent_knn (budget 16) ----------------------------------
//
// Exchange the colors of two adjacent K_{n,n} edges e_first = u1 u2 and
// e_second = u1 v2, both low-colored.  Composition: pick w on u1's side,
// align h(u2 w) and h(w v2) with up to two preparatory swaps, then swap the
// alternating cycle u1-u2-w-v2.  All edges stay inside K_{n,n}.
inline OpResult exchange_adjacent_knn(SwapCtx& cx, int e_first, int e_second,
                                      const std::set<int>& avoided,
                                      const std::set<int>& allow_prescribed = {}) {
    const GraphIndex& g = cx.g;
    if (e_first == e_second) return OpResult::fail("same edge");
    auto [a1, a2] = g.ends(e_first);
    auto [b1, b2] = g.ends(e_second);
    int u1 = (a1 == b1 || a1 == b2) ? a1 : a2;
    if (u1 != b1 && u1 != b2) return OpResult::fail("edges not adjacent");
    int u2 = detail::far_end(g, e_first, u1), v2 = detail::far_end(g, e_second, u1);

    int cx_col = cx.h.color(e_first), cy_col = cx.h.color(e_second);
    if (cx_col == cy_col || cx_col == 0 || cy_col == 0) return OpResult::fail("bad colors");
    for (int e : {e_first, e_second}) {
        if (g.classify_edge(e) != Part::Knn) return OpResult::fail("edge outside Knn");
        if (cx.phi.colored(e) && !allow_prescribed.count(e)) return OpResult::fail("prescribed edge");
    }
    for (int c : {cx_col, cy_col}) {
        if (c > g.n) return OpResult::fail("color not low");
        if (avoided.count(c)) return OpResult::fail("color avoided");
        if (cx.trace.color_overloaded(c)) return OpResult::fail("color overloaded");
    }
    for (int v : {u1, u2, v2})
        if (cx.trace.vertex_overloaded(v)) return OpResult::fail("vertex overloaded");

    // candidate third vertices on u1's side, cheapest alignment first
    std::vector<int> cand;
    int w0 = cx.h.at(u2, cy_col) >= 0 ? detail::far_end(g, cx.h.at(u2, cy_col), u2) : -1;
    int w1 = cx.h.at(v2, cx_col) >= 0 ? detail::far_end(g, cx.h.at(v2, cx_col), v2) : -1;
    auto side_ok = [&](int w) {
        return w >= 0 && w != u1 && g.p_side(w) == g.p_side(u1) &&
               g.classify(w, u2) == Part::Knn;
    };
    if (side_ok(w0)) cand.push_back(w0);
    if (side_ok(w1) && w1 != w0) cand.push_back(w1);
    for (int i = 1; i <= g.n; i++) {
        int w = g.p_side(u1) ? g.p_vertex(i) : g.q_vertex(i);
        if (side_ok(w) && w != w0 && w != w1) cand.push_back(w);
    }

    for (int w : cand) {
        detail::Txn txn(cx);
        int sc0 = cx.trace.swap_count();
        OpResult res;
        res.touched.insert(e_first);
        res.touched.insert(e_second);
        int ew_u2 = g.edge_id(u2, w), ew_v2 = g.edge_id(w, v2);
        if (!detail::try_prep_swap(cx, ew_u2, cy_col, avoided, allow_prescribed, true, res.touched))
            continue;
        if (!detail::try_prep_swap(cx, ew_v2, cx_col, avoided, allow_prescribed, true, res.touched))
            continue;
        Cycle4 final{u1, u2, w, v2, cx_col, cy_col};
        if (!detail::swap_admissible(cx, final, avoided, allow_prescribed, true)) continue;
        detail::do_swap(cx, final, res.touched);
        if (cx.h.color(e_first) != cy_col || cx.h.color(e_second) != cx_col) continue;
        if (static_cast<int>(res.touched.size()) > 16) continue;
        res.ok = true;
        res.swaps = cx.trace.swap_count() - sc0;
        res.result_edge = e_second;
        txn.commit();
        return res;
    }
    return OpResult::fail("no admissible third vertex");
}

// ---- pull_color_to_neighbor_knn (budget 34) -----------------------------
//
// First edge u1 u2 is K_{n,n}-low colored c1; afterwards h(u1 v2) = c1.
// Composition: find v1 with h(v1 v2) = c1, pick an auxiliary low color c2,
// exchange u1 v2 with u1's c2-edge and u2 v1 with u2's c2-edge (lemma above),
// then swap the alternating cycle u1-u2-v1-v2.
inline OpResult pull_color_to_neighbor_knn(SwapCtx& cx, int u1, int u2, int v2,
                                           const std::set<int>& avoided,
                                           bool first_may_be_prescribed = false) {
    const GraphIndex& g = cx.g;
    int e_first = g.edge_id(u1, u2);
    int c1 = cx.h.color(e_first);
    if (!detail::valid_first_edge(cx, e_first, true, avoided, first_may_be_prescribed))
        return OpResult::fail("invalid first edge");
    if (v2 == u2 || g.p_side(v2) == g.p_side(u1)) return OpResult::fail("bad target vertex");
    int e_target = g.edge_id(u1, v2);
    if (!detail::valid_first_edge(cx, e_target, true, avoided, false))
        return OpResult::fail("invalid target edge");

    int ev = cx.h.at(v2, c1);
    if (ev < 0) return OpResult::fail("no c1 edge at v2");
    int v1 = detail::far_end(g, ev, v2);
    if (v1 == u1 || g.classify_edge(ev) != Part::Knn) return OpResult::fail("bad v1");
    if (cx.phi.colored(ev) || cx.trace.is_disturbed(ev)) return OpResult::fail("v1v2 unusable");
    int e_cross = g.edge_id(u2, v1);
    if (!detail::valid_first_edge(cx, e_cross, true, avoided, false))
        return OpResult::fail("invalid u2v1 edge");
    if (cx.L.forbids(e_target, c1) || cx.L.forbids(e_cross, c1))
        return OpResult::fail("c1 conflicts with lists");

    std::set<int> sub_avoid = avoided;
    sub_avoid.insert(c1);

    for (int c2 = 1; c2 <= g.n; c2++) {
        if (c2 == c1 || avoided.count(c2) || cx.trace.color_overloaded(c2)) continue;
        if (cx.L.forbids(e_first, c2) || cx.L.forbids(ev, c2)) continue;
        detail::Txn txn(cx);
        int sc0 = cx.trace.swap_count();
        OpResult res;
        res.touched = {e_first, e_target, ev, e_cross};

        int e1 = cx.h.at(u1, c2);
        if (e1 < 0 || !detail::valid_first_edge(cx, e1, true, avoided, false)) continue;
        auto r1 = exchange_adjacent_knn(cx, e_target, e1, sub_avoid);
        if (!r1.ok) continue;
        res.touched.insert(r1.touched.begin(), r1.touched.end());

        int e2 = cx.h.at(u2, c2);
        if (e2 < 0 || !detail::valid_first_edge(cx, e2, true, avoided, false)) continue;
        auto r2 = exchange_adjacent_knn(cx, e_cross, e2, sub_avoid);
        if (!r2.ok) continue;
        res.touched.insert(r2.touched.begin(), r2.touched.end());

        Cycle4 final{u1, u2, v1, v2, c1, c2};
        std::set<int> allow = first_may_be_prescribed ? std::set<int>{e_first} : std::set<int>{};
        if (!detail::swap_admissible(cx, final, avoided, allow, true)) continue;
        detail::do_swap(cx, final, res.touched);
        if (cx.h.color(e_target) != c1) continue;
        if (static_cast<int>(res.touched.size()) > 34) continue;
        res.ok = true;
        res.swaps = cx.trace.swap_count() - sc0;
        res.result_edge = e_target;
        txn.commit();
        return res;
    }
    return OpResult::fail("no admissible auxiliary color");
}

// ---- push_clique_color_to_knn (budget 34) -------------------------------
//
// First edge u1 v1 is a clique edge colored c1 > n; afterwards
// h(u1 u2) = c1 for the requested opposite-side vertex u2.  Composition:
// locate the c1-edge u2 v2 in the opposite clique, recolor u1 u2 and v1 v2 to
// an auxiliary low color by two exchanges, then swap the mixed cycle
// u1-u2-v2-v1 (two K_{n,n} edges, one edge of each clique).
inline OpResult push_clique_color_to_knn(SwapCtx& cx, int u1, int v1, int u2,
                                         const std::set<int>& avoided,
                                         bool first_may_be_prescribed = false) {
    const GraphIndex& g = cx.g;
    int e_first = g.edge_id(u1, v1);
    int c1 = cx.h.color(e_first);
    Part part = g.classify_edge(e_first);
    if (part == Part::Knn) return OpResult::fail("first edge not in a clique");
    if (c1 <= g.n || c1 == 0) return OpResult::fail("first edge not high");
    if (avoided.count(c1) || cx.trace.color_overloaded(c1)) return OpResult::fail("c1 unusable");
    if (cx.phi.colored(e_first) && !first_may_be_prescribed) return OpResult::fail("prescribed");
    if (g.p_side(u2) == g.p_side(u1)) return OpResult::fail("u2 on wrong side");

    int eg2 = cx.h.at(u2, c1);
    if (eg2 < 0) return OpResult::fail("no c1 edge at u2");
    Part want = (part == Part::G1) ? Part::G2 : Part::G1;
    if (g.classify_edge(eg2) != want) return OpResult::fail("partner not in opposite clique");
    if (cx.phi.colored(eg2) || cx.trace.is_disturbed(eg2)) return OpResult::fail("partner unusable");
    int v2 = detail::far_end(g, eg2, u2);

    int e_uu = g.edge_id(u1, u2), e_vv = g.edge_id(v1, v2);
    if (!detail::valid_first_edge(cx, e_uu, true, avoided, false) ||
        !detail::valid_first_edge(cx, e_vv, true, avoided, false))
        return OpResult::fail("knn edges invalid");
    if (cx.L.forbids(e_uu, c1) || cx.L.forbids(e_vv, c1))
        return OpResult::fail("c1 conflicts with lists");

    // prescribed colors at the four corners; the clique edges u1v1 / u2v2
    // will receive the auxiliary color and must not become requested
    auto presc_at = [&](int v, int skip_edge) {
        std::set<int> s;
        for (int c = 1; c <= g.m; c++) {
            int pe = cx.phi.at(v, c);
            if (pe >= 0 && pe != skip_edge) s.insert(cx.phi.color(pe));
        }
        return s;
    };
    std::set<int> banned;
    for (auto& s : {presc_at(u1, e_first), presc_at(v1, e_first), presc_at(u2, eg2), presc_at(v2, eg2)})
        banned.insert(s.begin(), s.end());

    std::set<int> sub_avoid = avoided;
    sub_avoid.insert(c1);

    for (int c2 = 1; c2 <= g.n; c2++) {
        if (avoided.count(c2) || cx.trace.color_overloaded(c2) || banned.count(c2)) continue;
        if (cx.L.forbids(e_first, c2) || cx.L.forbids(eg2, c2)) continue;
        detail::Txn txn(cx);
        int sc0 = cx.trace.swap_count();
        OpResult res;
        res.touched = {e_first, eg2, e_uu, e_vv};

        int e1 = cx.h.at(u1, c2);
        if (e1 < 0 || !detail::valid_first_edge(cx, e1, true, avoided, false)) continue;
        auto r1 = exchange_adjacent_knn(cx, e_uu, e1, sub_avoid);
        if (!r1.ok) continue;
        res.touched.insert(r1.touched.begin(), r1.touched.end());

        int e2 = cx.h.at(v1, c2);
        if (e2 < 0 || !detail::valid_first_edge(cx, e2, true, avoided, false)) continue;
        auto r2 = exchange_adjacent_knn(cx, e_vv, e2, sub_avoid);
        if (!r2.ok) continue;
        res.touched.insert(r2.touched.begin(), r2.touched.end());

        Cycle4 final{u1, u2, v2, v1, c2, c1};
        std::set<int> allow = first_may_be_prescribed ? std::set<int>{e_first} : std::set<int>{};
        if (!detail::swap_admissible(cx, final, avoided, allow, false)) continue;
        detail::do_swap(cx, final, res.touched);
        if (cx.h.color(e_uu) != c1) continue;
        if (static_cast<int>(res.touched.size()) > 34) continue;
        res.ok = true;
        res.swaps = cx.trace.swap_count() - sc0;
        res.result_edge = e_uu;
        txn.commit();
        return res;
    }
    return OpResult::fail("no admissible auxiliary color");
}

// ---- pull_high_color_along_knn (budget 67) ------------------------------
//
// First edge u1 u2 in K_{n,n} colored c1 > n; afterwards h(u1 v2) = c1.
// Composition: find v2 whose clique carries a c1-edge v2 x, recolor u1 v2 and
// u2 v1 to an auxiliary low color (two exchanges), push the clique c1 onto
// v1 v2 (lemma above), then swap the alternating cycle u1-u2-v1-v2.
inline OpResult pull_high_color_along_knn(SwapCtx& cx, int u1, int u2, int v2,
                                          const std::set<int>& avoided,
                                          bool first_may_be_prescribed = false) {
    const GraphIndex& g = cx.g;
    int e_first = g.edge_id(u1, u2);
    int c1 = cx.h.color(e_first);
    if (g.classify_edge(e_first) != Part::Knn || c1 <= g.n || c1 == 0)
        return OpResult::fail("first edge not high knn");
    if (avoided.count(c1) || cx.trace.color_overloaded(c1)) return OpResult::fail("c1 unusable");
    if (cx.phi.colored(e_first) && !first_may_be_prescribed) return OpResult::fail("prescribed");
    if (v2 == u2 || g.p_side(v2) != g.p_side(u2)) return OpResult::fail("bad target vertex");

    int ex = cx.h.at(v2, c1);
    if (ex < 0 || g.classify_edge(ex) == Part::Knn) return OpResult::fail("no clique c1 at v2");
    if (cx.phi.colored(ex) || cx.trace.is_disturbed(ex)) return OpResult::fail("v2x unusable");

    int e_target = g.edge_id(u1, v2);
    if (!detail::valid_first_edge(cx, e_target, true, avoided, false))
        return OpResult::fail("invalid target edge");
    if (cx.L.forbids(e_target, c1)) return OpResult::fail("c1 in L(target)");

    std::set<int> sub_avoid = avoided;
    sub_avoid.insert(c1);

    // v1 lives on u1's side (the cycle u1-u2-v1-v2 alternates sides);
    // u2v1 gets the aux color and v1v2 receives c1 via the clique push.
    for (int i = 1; i <= g.n; i++) {
        int v1 = g.p_side(u1) ? g.p_vertex(i) : g.q_vertex(i);
        if (v1 == u1) continue;
        int e_cross = g.edge_id(u2, v1);
        int e_vv = g.edge_id(v1, v2);
        if (!detail::valid_first_edge(cx, e_cross, true, avoided, false)) continue;
        if (!detail::valid_first_edge(cx, e_vv, true, avoided, false)) continue;
        if (cx.L.forbids(e_cross, c1) || cx.L.forbids(e_vv, c1)) continue;

        for (int c2 = 1; c2 <= g.n; c2++) {
            if (avoided.count(c2) || cx.trace.color_overloaded(c2)) continue;
            if (cx.L.forbids(e_first, c2) || cx.L.forbids(e_vv, c2)) continue;
            detail::Txn txn(cx);
            int sc0 = cx.trace.swap_count();
            OpResult res;
            res.touched = {e_first, e_target, e_cross, e_vv, ex};

            int e1 = cx.h.at(u1, c2);
            if (e1 < 0 || !detail::valid_first_edge(cx, e1, true, avoided, false)) continue;
            auto r1 = exchange_adjacent_knn(cx, e_target, e1, sub_avoid);
            if (!r1.ok) continue;
            res.touched.insert(r1.touched.begin(), r1.touched.end());

            int e2 = cx.h.at(u2, c2);
            if (e2 < 0 || !detail::valid_first_edge(cx, e2, true, avoided, false)) continue;
            auto r2 = exchange_adjacent_knn(cx, e_cross, e2, sub_avoid);
            if (!r2.ok) continue;
            res.touched.insert(r2.touched.begin(), r2.touched.end());

            auto [xa, xb] = g.ends(ex);
            int xv = (xa == v2) ? xb : xa;
            // the inner push moves c1 itself, so c1 must stay usable for it;
            // shield the freshly placed c2 edges instead
            std::set<int> push_avoid = avoided;
            push_avoid.insert(c2);
            auto r3 = push_clique_color_to_knn(cx, v2, xv, v1, push_avoid);
            if (!r3.ok || cx.h.color(e_vv) != c1) continue;
            res.touched.insert(r3.touched.begin(), r3.touched.end());

            Cycle4 final{u1, u2, v1, v2, c1, c2};
            std::set<int> allow = first_may_be_prescribed ? std::set<int>{e_first} : std::set<int>{};
            if (!detail::swap_admissible(cx, final, avoided, allow, true)) continue;
            detail::do_swap(cx, final, res.touched);
            if (cx.h.color(e_target) != c1) continue;
            if (static_cast<int>(res.touched.size()) > 67) continue;
            res.ok = true;
            res.swaps = cx.trace.swap_count() - sc0;
            res.result_edge = e_target;
            txn.commit();
            return res;
        }
    }
    return OpResult::fail("no admissible v1/auxiliary color");
}

// ---- place_low_color_in_clique (budget 70) ------------------------------
//
// Produce an edge of the requested clique colored c1 <= n (and one of the
// opposite clique as well).  Composition: pick a non-overloaded clique color
// c2 with edges uv (requested clique) and xy (opposite), pull c1 onto ux and
// vy (lemma above, twice), then swap the mixed cycle u-v-y-x.  The exchange
// subgraph contains no prescribed edge.
inline OpResult place_low_color_in_clique(SwapCtx& cx, int c1, Part clique,
                                          const std::set<int>& avoided) {
    const GraphIndex& g = cx.g;
    if (c1 < 1 || c1 > g.n) return OpResult::fail("c1 not low");
    if (avoided.count(c1) || cx.trace.color_overloaded(c1)) return OpResult::fail("c1 unusable");
    Part other = (clique == Part::G1) ? Part::G2 : Part::G1;
    if (clique == Part::Knn) return OpResult::fail("need a clique part");

    auto presc_at = [&](int v, int skip_edge) {
        for (int c = 1; c <= g.m; c++) {
            int pe = cx.phi.at(v, c);
            if (pe >= 0 && pe != skip_edge && cx.phi.color(pe) == c1) return true;
        }
        return false;
    };

    for (int c2 = g.n + 1; c2 <= g.m; c2++) {
        if (avoided.count(c2) || cx.trace.color_overloaded(c2)) continue;
        // snapshot: the class sets mutate during the attempts below
        std::vector<int> klass(cx.h.class_edges(c2).begin(), cx.h.class_edges(c2).end());
        for (int euv : klass) {
            if (g.classify_edge(euv) != clique) continue;
            if (cx.phi.colored(euv) || cx.trace.is_disturbed(euv)) continue;
            if (cx.L.forbids(euv, c1)) continue;
            auto [u, v] = g.ends(euv);
            if (presc_at(u, euv) || presc_at(v, euv)) continue;
            int e1 = cx.h.at(u, c1), e2 = cx.h.at(v, c1);
            // checked precondition: the c1-edges at u and v lie in K_{n,n}
            if (e1 < 0 || e2 < 0) continue;
            if (g.classify_edge(e1) != Part::Knn || g.classify_edge(e2) != Part::Knn) continue;
            if (cx.trace.is_disturbed(e1) || cx.trace.is_disturbed(e2)) continue;
            if (cx.phi.colored(e1) || cx.phi.colored(e2)) continue;

            for (int exy : klass) {
                if (g.classify_edge(exy) != other) continue;
                if (cx.phi.colored(exy) || cx.trace.is_disturbed(exy)) continue;
                if (cx.L.forbids(exy, c1)) continue;
                auto [x, y] = g.ends(exy);
                if (presc_at(x, exy) || presc_at(y, exy)) continue;
                for (int swap_xy = 0; swap_xy < 2; swap_xy++) {
                    int xx = swap_xy ? y : x, yy = swap_xy ? x : y;
                    int e_ux = g.edge_id(u, xx), e_vy = g.edge_id(v, yy);
                    if (cx.L.forbids(e_ux, c2) || cx.L.forbids(e_vy, c2)) continue;
                    detail::Txn txn(cx);
                    int sc0 = cx.trace.swap_count();
                    OpResult res;
                    res.touched = {euv, exy, e_ux, e_vy};

                    if (cx.h.color(e_ux) != c1) {
                        int w1 = detail::far_end(g, e1, u);
                        auto r1 = pull_color_to_neighbor_knn(cx, u, w1, xx, avoided);
                        if (!r1.ok || cx.h.color(e_ux) != c1) continue;
                        res.touched.insert(r1.touched.begin(), r1.touched.end());
                    } else if (cx.phi.colored(e_ux)) {
                        continue;
                    }

                    if (cx.h.color(e_vy) != c1) {
                        int e2b = cx.h.at(v, c1);
                        if (e2b < 0 || g.classify_edge(e2b) != Part::Knn) continue;
                        if (cx.phi.colored(e2b) || cx.trace.is_disturbed(e2b)) continue;
                        int w2 = detail::far_end(g, e2b, v);
                        auto r2 = pull_color_to_neighbor_knn(cx, v, w2, yy, avoided);
                        if (!r2.ok || cx.h.color(e_vy) != c1) continue;
                        res.touched.insert(r2.touched.begin(), r2.touched.end());
                    } else if (cx.phi.colored(e_vy)) {
                        continue;
                    }

                    Cycle4 final{u, v, yy, xx, c2, c1};
                    if (!detail::swap_admissible(cx, final, avoided, {}, false)) continue;
                    detail::do_swap(cx, final, res.touched);
                    if (cx.h.color(euv) != c1 || cx.h.color(exy) != c1) continue;
                    if (static_cast<int>(res.touched.size()) > 70) continue;
                    res.ok = true;
                    res.swaps = cx.trace.swap_count() - sc0;
                    res.result_edge = euv;
                    res.partner_edge = exy;
                    txn.commit();
                    return res;
                }
            }
        }
    }
    return OpResult::fail("no admissible clique pair");
}

}  // namespace kex

// Step V and the full pipeline.  correct_edge brings one requested edge to
// its requested color phi'(e) through composed swaps; solve() runs
// hypotheses -> standard coloring -> relabeling -> conflict absorption ->
// corrections -> verification and reports the stage reached.
//
// Correction budgets (edges of the exchange subgraph):
//   case 1: K_{n,n} edge, low target    69
//   case 2: K_{n,n} edge, high target  136
//   case 3: clique edge, low target    139
//   case 4: clique edge, high target   205
#pragma once

#include <chrono>
#include <deque>

#include "extend.hpp"
#include "permute.hpp"
#include "swap_engine.hpp"

namespace kex {

struct CorrectionOutcome {
    bool ok = false;
    std::string reason;
    std::set<int> touched;
    int case_used = 0;
    int swaps = 0;
};

namespace detail {

// Flip colors c1 <-> c2 along the maximal (c1,c2)-component containing e.
// In a proper coloring the component is a path or an even cycle, so the flip
// preserves properness; with max_len = 1 this is the direct recoloring of an
// edge whose endpoints both miss the other color.
inline CorrectionOutcome kempe_flip(SwapCtx& cx, int e, int c1, int c2, int max_len,
                                    const std::set<int>& allow_prescribed) {
    const GraphIndex& g = cx.g;
    EdgeColoring& h = cx.h;
    if (h.color(e) != c1 || c1 == c2) return {false, "kempe: bad colors", {}, 0, 0};
    std::vector<int> comp{e};
    auto [u, v] = g.ends(e);
    bool closed = false;
    auto walk = [&](int from_v, std::vector<int>& out) {
        int cur = from_v, want = c2;
        while (static_cast<int>(comp.size() + out.size()) <= max_len + 1) {
            int f = h.at(cur, want);
            if (f < 0) return;
            if (f == e) {
                closed = true;
                return;
            }
            out.push_back(f);
            cur = far_end(g, f, cur);
            want = (want == c1) ? c2 : c1;
        }
    };
    std::vector<int> right, left;
    walk(v, right);
    if (!closed) walk(u, left);
    comp.insert(comp.end(), right.begin(), right.end());
    comp.insert(comp.end(), left.begin(), left.end());
    if (static_cast<int>(comp.size()) > max_len) return {false, "kempe: component too long", {}, 0, 0};
    if (cx.trace.color_overloaded(c1) || cx.trace.color_overloaded(c2))
        return {false, "kempe: color overloaded", {}, 0, 0};
    for (int f : comp) {
        int nc = (h.color(f) == c1) ? c2 : c1;
        if (cx.L.forbids(f, nc)) return {false, "kempe: list blocks flip", {}, 0, 0};
        if (cx.phi.colored(f) && !allow_prescribed.count(f) && h.color(f) == cx.phi.color(f))
            return {false, "kempe: correctly colored prescribed edge on path", {}, 0, 0};
        auto [a, b] = g.ends(f);
        if (cx.trace.vertex_overloaded(a) || cx.trace.vertex_overloaded(b))
            return {false, "kempe: vertex overloaded", {}, 0, 0};
    }
    std::vector<int> old(comp.size());
    for (size_t i = 0; i < comp.size(); i++) {
        old[i] = h.color(comp[i]);
        h.clear(comp[i]);
    }
    CorrectionOutcome res;
    for (size_t i = 0; i < comp.size(); i++) {
        int nc = (old[i] == c1) ? c2 : c1;
        h.set(comp[i], nc);
        cx.trace.mark(comp[i], old[i], nc);
        res.touched.insert(comp[i]);
    }
    cx.trace.note_path(static_cast<int>(comp.size()));
    res.ok = true;
    return res;
}

// prescribed but currently mis-colored: touching it is fine, it stays queued
inline bool miscolored_prescribed(const SwapCtx& cx, int e) {
    return cx.phi.colored(e) && cx.h.color(e) != cx.phi.color(e);
}

// Put color c (low or high) on the K_{n,n} edge between `near` and `other`.
// Strategies, cheapest first: (0) close the 4-cycle through the target
// directly; (1) source from at(near, c) or at(other, c) -- a clique source
// is pushed, a K_{n,n} source is pulled; (2) flip the bounded
// (h(target), c)-component, which covers the endpoints-miss-c corner.
inline bool source_color_onto(SwapCtx& cx, int target, int near, int other, int c,
                              const std::set<int>& avoided, std::set<int>& touched,
                              int flip_len = 40) {
    const GraphIndex& g = cx.g;
    if (cx.h.color(target) == c) return true;
    std::set<int> allow_t;
    if (miscolored_prescribed(cx, target)) allow_t.insert(target);
    else if (cx.phi.colored(target)) return false;
    if (detail::try_prep_swap(cx, target, c, {}, allow_t, false, touched)) return true;
    // the sourced color itself is not a free choice of the sub-operations
    std::set<int> sub = avoided;
    sub.erase(c);
    for (int side = 0; side < 2; side++) {
        int a = side == 0 ? near : other;
        int b = side == 0 ? other : near;
        int src = cx.h.at(a, c);
        if (src < 0) continue;
        bool presc_ok = miscolored_prescribed(cx, src);
        OpResult r;
        if (c > g.n) {
            if (g.classify_edge(src) == Part::Knn)
                r = pull_high_color_along_knn(cx, a, far_end(g, src, a), b, sub, presc_ok);
            else
                r = push_clique_color_to_knn(cx, a, far_end(g, src, a), b, sub, presc_ok);
        } else {
            if (g.classify_edge(src) != Part::Knn) continue;
            r = pull_color_to_neighbor_knn(cx, a, far_end(g, src, a), b, sub, presc_ok);
        }
        if (r.ok && cx.h.color(target) == c) {
            touched.insert(r.touched.begin(), r.touched.end());
            return true;
        }
    }
    auto r = kempe_flip(cx, target, cx.h.color(target), c, flip_len, allow_t);
    if (r.ok) {
        touched.insert(r.touched.begin(), r.touched.end());
        return true;
    }
    return false;
}

}  // namespace detail

// ---- case 1: K_{n,n} edge, low target (budget 69) -----------------------
inline CorrectionOutcome correct_case1(SwapCtx& cx, int e, int c2) {
    const GraphIndex& g = cx.g;
    EdgeColoring& h = cx.h;
    auto [u, v] = g.ends(e);
    int c1 = h.color(e);
    const int BUDGET = 69;

    // (i) lucky: the (c1,c2) 4-cycle through e closes directly
    {
        int eu = h.at(u, c2), ev = h.at(v, c2);
        if (eu >= 0 && ev >= 0) {
            int w = detail::far_end(g, eu, u), w2 = detail::far_end(g, ev, v);
            if (h.color(g.edge_id(w, w2)) == c1) {
                Cycle4 lucky{u, v, w2, w, c1, c2};
                std::set<int> allow{e};
                if (detail::miscolored_prescribed(cx, eu)) allow.insert(eu);
                if (detail::miscolored_prescribed(cx, ev)) allow.insert(ev);
                if (detail::swap_admissible(cx, lucky, {}, allow, false)) {
                    CorrectionOutcome res;
                    detail::do_swap(cx, lucky, res.touched);
                    res.ok = true;
                    res.case_used = 1;
                    res.swaps = 1;
                    return res;
                }
            }
        }
    }

    // (ii) general: a free c1-edge xy of K_{n,n}; two closing swaps put c2 on
    // uy and vx, then the alternating cycle u-v-x-y is swapped.  Undisturbed
    // candidates first; disturbed ones are a second pass (every swap is
    // re-verified concretely, so disturbance only costs analysis slack).
    std::vector<int> cand_xy(h.class_edges(c1).begin(), h.class_edges(c1).end());
    for (int pass = 0; pass < 2; pass++)
    for (int xy : cand_xy) {
        if (xy == e || g.classify_edge(xy) != Part::Knn) continue;
        if (cx.phi.colored(xy) || cx.L.forbids(xy, c2)) continue;
        if (cx.trace.is_disturbed(xy) != (pass == 1)) continue;
        auto [x, y] = g.ends(xy);
        if (g.p_side(x) != g.p_side(u)) std::swap(x, y);
        int e_uy = g.edge_id(u, y), e_vx = g.edge_id(v, x);
        detail::Txn txn(cx);
        int sc0 = cx.trace.swap_count();
        CorrectionOutcome res;
        res.touched = {e, xy, e_uy, e_vx};
        int eu = h.at(u, c2);
        std::set<int> allow1;
        if (eu >= 0 && detail::miscolored_prescribed(cx, eu)) allow1.insert(eu);
        if (h.color(e_uy) != c2 &&
            !detail::try_prep_swap(cx, e_uy, c2, {}, allow1, false, res.touched))
            continue;
        int ev = h.at(v, c2);
        std::set<int> allow2;
        if (ev >= 0 && detail::miscolored_prescribed(cx, ev)) allow2.insert(ev);
        if (h.color(e_vx) != c2 &&
            !detail::try_prep_swap(cx, e_vx, c2, {}, allow2, false, res.touched))
            continue;
        Cycle4 final{u, v, x, y, c1, c2};
        std::set<int> allowF{e};
        if (detail::miscolored_prescribed(cx, e_uy)) allowF.insert(e_uy);
        if (detail::miscolored_prescribed(cx, e_vx)) allowF.insert(e_vx);
        if (!detail::swap_admissible(cx, final, {}, allowF, true)) continue;
        detail::do_swap(cx, final, res.touched);
        if (h.color(e) != c2) continue;
        if (static_cast<int>(res.touched.size()) > BUDGET) continue;
        res.ok = true;
        res.case_used = 1;
        res.swaps = cx.trace.swap_count() - sc0;
        txn.commit();
        return res;
    }

    // (iii) Kempe fallback: when u or v misses c2 no 4-cycle through e
    // exists; flip the whole (c1,c2)-component (also the last resort when no
    // candidate xy worked)
    auto r = detail::kempe_flip(cx, e, c1, c2, BUDGET, {e});
    if (r.ok) {
        r.case_used = 1;
        return r;
    }
    return {false, "case 1 exhausted: " + r.reason, {}, 1, 0};
}

// ---- case 2: K_{n,n} edge, high target (budget 136) ---------------------
inline CorrectionOutcome correct_case2(SwapCtx& cx, int e, int c2) {
    const GraphIndex& g = cx.g;
    EdgeColoring& h = cx.h;
    auto [u, v] = g.ends(e);
    int c1 = h.color(e);
    const int BUDGET = 136;
    std::set<int> avoided{c1, c2};

    std::vector<int> cand_xy(h.class_edges(c1).begin(), h.class_edges(c1).end());
    for (int pass = 0; pass < 2; pass++)
    for (int xy : cand_xy) {
        if (xy == e || g.classify_edge(xy) != Part::Knn) continue;
        if (cx.phi.colored(xy) || cx.L.forbids(xy, c2)) continue;
        if (cx.trace.is_disturbed(xy) != (pass == 1)) continue;
        auto [x, y] = g.ends(xy);
        if (g.p_side(x) != g.p_side(u)) std::swap(x, y);
        int e_uy = g.edge_id(u, y), e_vx = g.edge_id(v, x);
        detail::Txn txn(cx);
        int sc0 = cx.trace.swap_count();
        CorrectionOutcome res;
        res.touched = {e, xy, e_uy, e_vx};
        if (!detail::source_color_onto(cx, e_uy, u, y, c2, avoided, res.touched)) continue;
        if (!detail::source_color_onto(cx, e_vx, v, x, c2, avoided, res.touched)) continue;
        Cycle4 final{u, v, x, y, c1, c2};
        std::set<int> allowF{e};
        if (detail::miscolored_prescribed(cx, e_uy)) allowF.insert(e_uy);
        if (detail::miscolored_prescribed(cx, e_vx)) allowF.insert(e_vx);
        if (!detail::swap_admissible(cx, final, {}, allowF, true)) continue;
        detail::do_swap(cx, final, res.touched);
        if (h.color(e) != c2) continue;
        if (static_cast<int>(res.touched.size()) > BUDGET) continue;
        res.ok = true;
        res.case_used = 2;
        res.swaps = cx.trace.swap_count() - sc0;
        txn.commit();
        return res;
    }

    auto r = detail::kempe_flip(cx, e, c1, c2, BUDGET, {e});
    if (r.ok) {
        r.case_used = 2;
        return r;
    }
    return {false, "case 2 exhausted: " + r.reason, {}, 2, 0};
}

// ---- cases 3 and 4: clique edge (budgets 139 and 205) -------------------
//
// e = uv lies in a clique; the final mixed cycle u-v-y-x uses an edge xy of
// the opposite clique colored c1 plus the K_{n,n} edges vy and ux carrying
// c2.  When no opposite c1-edge exists and c1 is low, one is manufactured
// with place_low_color_in_clique.
inline CorrectionOutcome correct_clique(SwapCtx& cx, int e, int c2) {
    const GraphIndex& g = cx.g;
    EdgeColoring& h = cx.h;
    auto [u, v] = g.ends(e);
    int c1 = h.color(e);
    bool high_target = c2 > g.n;
    const int BUDGET = high_target ? 205 : 139;
    const int case_id = high_target ? 4 : 3;
    Part mine = g.classify_edge(e);
    Part other = (mine == Part::G1) ? Part::G2 : Part::G1;
    std::set<int> avoided{c1, c2};

    {
        detail::Txn outer(cx);
        int sc0 = cx.trace.swap_count();
        std::set<int> placed_touched;

        std::vector<int> cand, cand_disturbed;
        for (int xy : h.class_edges(c1)) {
            if (g.classify_edge(xy) != other) continue;
            if (cx.phi.colored(xy) || cx.L.forbids(xy, c2)) continue;
            (cx.trace.is_disturbed(xy) ? cand_disturbed : cand).push_back(xy);
        }
        if (cand.empty() && c1 <= g.n) {
            auto pl = place_low_color_in_clique(cx, c1, other, {c2});
            if (pl.ok) {
                placed_touched = pl.touched;
                cand.push_back(pl.result_edge);
            }
        }
        // disturbed candidates as last resort; stale entries whose color moved
        // under the placement are rejected by the final admissibility check
        cand.insert(cand.end(), cand_disturbed.begin(), cand_disturbed.end());

        for (int xy : cand) {
            auto [x0, y0] = g.ends(xy);
            for (int flip = 0; flip < 2; flip++) {
                int x = flip ? y0 : x0, y = flip ? x0 : y0;
                // a pending request for c2 at x or y would clash with the swap
                if (cx.phi.at(x, c2) >= 0 || cx.phi.at(y, c2) >= 0) continue;
                int e_ux = g.edge_id(u, x), e_vy = g.edge_id(v, y);
                if (cx.L.forbids(xy, c2)) continue;
                detail::Txn txn(cx);
                CorrectionOutcome res;
                res.touched = placed_touched;
                res.touched.insert({e, xy, e_ux, e_vy});
                if (!detail::source_color_onto(cx, e_ux, u, x, c2, avoided, res.touched)) continue;
                if (!detail::source_color_onto(cx, e_vy, v, y, c2, avoided, res.touched)) continue;
                Cycle4 final{u, v, y, x, c1, c2};
                std::set<int> allowF{e};
                if (detail::miscolored_prescribed(cx, e_ux)) allowF.insert(e_ux);
                if (detail::miscolored_prescribed(cx, e_vy)) allowF.insert(e_vy);
                if (!detail::swap_admissible(cx, final, {}, allowF, false)) continue;
                detail::do_swap(cx, final, res.touched);
                if (h.color(e) != c2) continue;
                if (static_cast<int>(res.touched.size()) > BUDGET) continue;
                res.ok = true;
                res.case_used = case_id;
                res.swaps = cx.trace.swap_count() - sc0;
                txn.commit();
                outer.commit();
                return res;
            }
        }
    }  // roll back any speculative placement before the fallback

    auto r = detail::kempe_flip(cx, e, c1, c2, BUDGET, {e});
    if (r.ok) {
        r.case_used = case_id;
        return r;
    }
    return {false, "case " + std::to_string(case_id) + " exhausted: " + r.reason, {}, case_id, 0};
}

// Bring edge e to its requested color target.  If the direct case fails,
// retry once through an intermediate color: recoloring e first refreshes the
// partner pool (class of its current color) that the cases draw from.
inline CorrectionOutcome correct_edge(SwapCtx& cx, int e, int target) {
    const GraphIndex& g = cx.g;
    int c1 = cx.h.color(e);
    if (c1 == target) return {true, "", {}, 0, 0};
    if (cx.trace.color_overloaded(c1) || cx.trace.color_overloaded(target))
        return {false, "correction colors overloaded", {}, 0, 0};
    bool knn = g.classify_edge(e) == Part::Knn;
    auto run = [&](int to) {
        if (knn) return to <= g.n ? correct_case1(cx, e, to) : correct_case2(cx, e, to);
        return correct_clique(cx, e, to);
    };
    auto primary = run(target);
    if (primary.ok) return primary;
    for (int c3 = 1; c3 <= g.n; c3++) {
        if (c3 == c1 || c3 == target) continue;
        if (cx.L.forbids(e, c3) || cx.trace.color_overloaded(c3)) continue;
        detail::Txn txn(cx);
        auto r1 = run(c3);
        if (!r1.ok) continue;
        auto r2 = run(target);
        if (!r2.ok) continue;  // txn rolls the intermediate back
        r2.touched.insert(r1.touched.begin(), r1.touched.end());
        r2.swaps += r1.swaps;
        txn.commit();
        return r2;
    }
    return primary;
}

// ---- pipeline -----------------------------------------------------------

struct SolveOptions {
    std::string preset = "relaxed";
    std::uint64_t seed = 0;
    int relabel_tries = 1000;
    bool h_preamble_variant = false;
    int correction_cap_mult = 10;
    // fresh relabelings drawn after a failed extension or correction round;
    // the sampling argument promises success per draw only with positive
    // probability, so resampling is the finite-scale reading of it
    int restart_tries = 24;
};

struct VerifyReport {
    bool ok = false;
    std::vector<std::string> problems;
};

// Independent final check: properness and completeness from the raw color
// array, list avoidance, precoloring agreement.
inline VerifyReport verify_solution(const GraphIndex& g, const EdgeColoring& h,
                                    const EdgeColoring& phi, const ListAssignment& L) {
    VerifyReport r;
    std::vector<std::set<int>> seen(g.vertices);
    for (int e = 0; e < g.edge_count; e++) {
        int c = h.color(e);
        auto [u, v] = g.ends(e);
        if (c < 1 || c > g.m) {
            r.problems.push_back("edge " + std::to_string(e) + " uncolored or out of range");
            continue;
        }
        if (!seen[u].insert(c).second)
            r.problems.push_back("color " + std::to_string(c) + " repeated at vertex " + std::to_string(u));
        if (!seen[v].insert(c).second)
            r.problems.push_back("color " + std::to_string(c) + " repeated at vertex " + std::to_string(v));
        if (L.forbids(e, c))
            r.problems.push_back("edge " + std::to_string(e) + " colored from its forbidden list");
    }
    for (int e = 0; e < g.edge_count; e++)
        if (phi.colored(e) && h.color(e) != phi.color(e))
            r.problems.push_back("precolored edge " + std::to_string(e) + " not honored");
    r.ok = r.problems.empty();
    return r;
}

// Recount the trace bookkeeping from scratch; the incremental counters must
// match, and every edge differing from h' must be in the disturbed set.
inline std::vector<std::string> audit_trace(const GraphIndex& g, const SwapTrace& tr,
                                            const EdgeColoring& hprime, const EdgeColoring& h) {
    std::vector<std::string> problems;
    std::vector<int> by_color(g.m + 1, 0), at_vertex(g.vertices, 0);
    for (int e : tr.disturbed()) {
        by_color[h.color(e)]++;
        auto [u, v] = g.ends(e);
        at_vertex[u]++;
        at_vertex[v]++;
    }
    for (int c = 1; c <= g.m; c++)
        if (by_color[c] != tr.disturbed_with_color(c))
            problems.push_back("color " + std::to_string(c) + ": recount " + std::to_string(by_color[c]) +
                               " vs tracked " + std::to_string(tr.disturbed_with_color(c)));
    for (int v = 0; v < g.vertices; v++)
        if (at_vertex[v] != tr.disturbed_at_vertex(v))
            problems.push_back("vertex " + std::to_string(v) + ": recount " + std::to_string(at_vertex[v]) +
                               " vs tracked " + std::to_string(tr.disturbed_at_vertex(v)));
    for (int e = 0; e < g.edge_count; e++)
        if (h.color(e) != hprime.color(e) && !tr.is_disturbed(e))
            problems.push_back("edge " + std::to_string(e) + " changed but not tracked");
    return problems;
}

struct SolveResult {
    bool ok = false;
    std::string stage;  // last stage completed, "done" on success
    std::string error;
    ParameterSet ps;
    EdgeColoring h_standard, hprime, h;
    EdgeColoring phi_prime;
    Relabeling rel;
    int relabel_tries = 0;
    ConditionReport hyp_report, cond_report, extend_report;
    std::vector<int> conflict_edges;
    SwapTrace trace;
    int requested = 0;       // edges with a phi' request
    int initial_mis = 0;     // requests not already met by h'
    int corrections = 0;     // successful correct_edge calls
    int restarts = 0;        // relabelings beyond the first
    double wall_ms = 0;
};

inline SolveResult solve(const GraphIndex& g, const EdgeColoring& phi, const ListAssignment& L,
                         const SolveOptions& opt) {
    auto t0 = std::chrono::steady_clock::now();
    SolveResult res;
    auto finish = [&](bool ok, std::string stage, std::string error = "") -> SolveResult& {
        res.ok = ok;
        res.stage = std::move(stage);
        res.error = std::move(error);
        res.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        return res;
    };
    bool strict = opt.preset == "paper";
    res.ps = ParameterSet::make(opt.preset, g.n, g.m, opt.h_preamble_variant);

    res.hyp_report = check_instance_hypotheses(g, phi, L, res.ps);
    if (!res.hyp_report.ok())
        return finish(false, "hypotheses", "instance violates density/sparsity hypotheses:\n" +
                                               res.hyp_report.summary());

    res.h_standard = build_standard_coloring(g);

    Rng rng(opt.seed);
    std::string last_stage = "relabel", last_error = "no attempt made";
    for (int attempt = 0; attempt <= opt.restart_tries; attempt++) {
        res.restarts = attempt;
        auto sample = sample_good_relabeling(g, res.h_standard, phi, L, res.ps, rng, opt.relabel_tries);
        res.rel = sample.rel;
        res.hprime = sample.hprime;
        res.cond_report = sample.report;
        res.relabel_tries = sample.tries;
        if (!sample.ok)  // further restarts would rerun the same exhausted sampler
            return finish(false, "relabel", "no relabeling satisfied the conditions after " +
                                                std::to_string(opt.relabel_tries) + " tries:\n" +
                                                sample.report.summary());

        auto ext = extend_to_phi_prime(g, res.hprime, phi, L, res.ps);
        res.extend_report = ext.report;
        res.conflict_edges = ext.conflict_edges;
        if (!ext.ok) {
            last_stage = "extend";
            last_error = ext.error;
            continue;  // conflicts depend on the draw; a fresh h' may absorb
        }
        if (strict && !ext.report.ok()) {
            last_stage = "extend";
            last_error = "absorption bounds violated:\n" + ext.report.summary();
            continue;
        }
        res.phi_prime = ext.phi_prime;

        res.h = res.hprime;
        res.trace = SwapTrace(g, res.ps);
        res.trace.init_baseline(res.hprime, L, res.phi_prime);
        SwapCtx cx{g, res.h, L, res.phi_prime, res.trace};

        // three phases by request kind, ascending edge id inside each
        std::array<std::deque<int>, 3> queue;
        std::set<int> queued;
        auto phase_of = [&](int e) {
            if (g.classify_edge(e) != Part::Knn) return 2;
            return res.phi_prime.color(e) <= g.n ? 0 : 1;
        };
        auto enqueue = [&](int e) {
            if (queued.insert(e).second) queue[phase_of(e)].push_back(e);
        };
        res.requested = res.initial_mis = res.corrections = 0;
        for (int e = 0; e < g.edge_count; e++)
            if (res.phi_prime.colored(e)) {
                res.requested++;
                if (res.h.color(e) != res.phi_prime.color(e)) {
                    enqueue(e);
                    res.initial_mis++;
                }
            }

        int cap = std::max(50, opt.correction_cap_mult * res.initial_mis);
        int tried = 0, fails_since_progress = 0;
        bool warned_H = false, round_ok = true;
        std::string round_err;
        while (round_ok) {
            int e = -1;
            for (auto& q : queue)
                if (!q.empty()) {
                    e = q.front();
                    q.pop_front();
                    break;
                }
            if (e < 0) break;
            queued.erase(e);
            int target = res.phi_prime.color(e);
            if (res.h.color(e) == target) continue;
            if (++tried > cap) {
                round_ok = false;
                round_err = "correction cap exceeded (" + std::to_string(cap) + ")";
                break;
            }
            auto out = correct_edge(cx, e, target);
            if (!out.ok) {
                // a later correction can unblock this edge; retry it after
                // the rest of the queue, but stop once a full round stalls
                if (++fails_since_progress > static_cast<int>(queued.size())) {
                    round_ok = false;
                    round_err = "edge " + std::to_string(e) + " -> color " + std::to_string(target) +
                                " failed: " + out.reason;
                    break;
                }
                enqueue(e);
                continue;
            }
            fails_since_progress = 0;
            res.corrections++;
            for (int f : out.touched)
                if (res.phi_prime.colored(f) && res.h.color(f) != res.phi_prime.color(f)) enqueue(f);
            for (int c = 1; c <= g.m; c++)
                if (res.trace.disturbed_with_color(c) > res.ps.H_n) {
                    std::string msg = "H(n) exceeded for color " + std::to_string(c) + ": " +
                                      std::to_string(res.trace.disturbed_with_color(c)) + " > " +
                                      std::to_string(res.ps.H_n);
                    if (strict) {
                        round_ok = false;
                        round_err = msg;
                        break;
                    }
                    if (!warned_H) {
                        res.trace.warn(msg);
                        warned_H = true;
                    }
                }
        }
        if (!round_ok) {
            last_stage = "correct";
            last_error = round_err;
            continue;
        }

        // internal-consistency failures are bugs, not bad draws: no retry
        auto audit = audit_trace(g, res.trace, res.hprime, res.h);
        if (!audit.empty()) return finish(false, "correct", "trace audit failed: " + audit.front());

        auto ver = verify_solution(g, res.h, phi, L);
        if (!ver.ok) return finish(false, "verify", ver.problems.front());
        return finish(true, "done");
    }
    return finish(false, last_stage, last_error);
}

}  // namespace kex

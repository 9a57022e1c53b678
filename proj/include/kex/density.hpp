// Density/sparsity hypotheses and the chapter-3 acceptance conditions for a
// relabeled standard coloring h'.
//
// alpha-dense precoloring phi: at most alpha*m precolored edges at every
// vertex and in every color class, phi proper, phi(e) not in L(e).
// beta-sparse lists L: |L(e)| <= beta*m and every color appears in the lists
// of at most beta*m edges at each vertex.
// Conditions (a)-(i) follow the step-II acceptance test: (a) bounds the
// number of K_{n,n} edges short of allowed strong cycles, (b)-(e) bound
// conflicts/prescriptions inside K_{n,n}, (f)-(i) the same inside G1/G2.
#pragma once

#include <sstream>

#include "model.hpp"
#include "standard_coloring.hpp"

namespace kex {

struct ConditionReport {
    struct Item {
        std::string id;       // "alpha-vertex", "a", "b", ...
        bool pass = true;
        int limit = 0;        // allowed maximum
        int worst = 0;        // worst observed value
        std::string witness;  // where the worst occurs
    };
    std::vector<Item> items;

    bool ok() const {
        for (auto& it : items)
            if (!it.pass) return false;
        return true;
    }
    const Item* find(const std::string& id) const {
        for (auto& it : items)
            if (it.id == id) return &it;
        return nullptr;
    }
    std::string summary() const {
        std::ostringstream os;
        for (auto& it : items) {
            os << it.id << ": " << (it.pass ? "ok" : "FAIL") << " (worst " << it.worst
               << ", limit " << it.limit;
            if (!it.witness.empty()) os << ", at " << it.witness;
            os << ")\n";
        }
        return os.str();
    }
};

namespace detail {

inline void push_item(ConditionReport& rep, std::string id, int limit, int worst,
                      std::string witness) {
    rep.items.push_back({std::move(id), worst <= limit, limit, worst, std::move(witness)});
}

}  // namespace detail

// phi must be a proper partial coloring (guaranteed by EdgeColoring), with at
// most alpha*m precolored edges per vertex and per color.
inline ConditionReport check_alpha_dense(const GraphIndex& g, const EdgeColoring& phi,
                                         const ParameterSet& ps) {
    ConditionReport rep;
    int worst_v = 0, worst_c = 0;
    std::string wv, wc;
    std::vector<int> at_vertex(g.vertices, 0);
    for (int e = 0; e < g.edge_count; e++) {
        if (!phi.colored(e)) continue;
        auto [u, v] = g.ends(e);
        at_vertex[u]++;
        at_vertex[v]++;
    }
    for (int v = 0; v < g.vertices; v++)
        if (at_vertex[v] > worst_v) { worst_v = at_vertex[v]; wv = "vertex " + std::to_string(v); }
    for (int c = 1; c <= g.m; c++)
        if (phi.class_size(c) > worst_c) { worst_c = phi.class_size(c); wc = "color " + std::to_string(c); }
    detail::push_item(rep, "alpha-vertex", ps.alpha_m, worst_v, wv);
    detail::push_item(rep, "alpha-color", ps.alpha_m, worst_c, wc);
    return rep;
}

inline ConditionReport check_beta_sparse(const GraphIndex& g, const ListAssignment& L,
                                         const ParameterSet& ps) {
    ConditionReport rep;
    int worst_sz = 0, worst_vc = 0;
    std::string ws, wvc;
    for (int e = 0; e < g.edge_count; e++)
        if (static_cast<int>(L.list(e).size()) > worst_sz) {
            worst_sz = static_cast<int>(L.list(e).size());
            ws = "edge " + std::to_string(e);
        }
    for (int v = 0; v < g.vertices; v++)
        for (int c = 1; c <= g.m; c++)
            if (L.vertex_color_count(v, c) > worst_vc) {
                worst_vc = L.vertex_color_count(v, c);
                wvc = "vertex " + std::to_string(v) + ", color " + std::to_string(c);
            }
    detail::push_item(rep, "beta-size", ps.beta_m, worst_sz, ws);
    detail::push_item(rep, "beta-vertex-color", ps.beta_m, worst_vc, wvc);
    return rep;
}

// Theorem hypotheses for an instance: alpha-density, beta-sparsity and
// phi(e) not in L(e) for every precolored edge.
inline ConditionReport check_instance_hypotheses(const GraphIndex& g, const EdgeColoring& phi,
                                                 const ListAssignment& L, const ParameterSet& ps) {
    ConditionReport rep = check_alpha_dense(g, phi, ps);
    for (auto& it : check_beta_sparse(g, L, ps).items) rep.items.push_back(it);
    int bad = 0;
    std::string w;
    for (int e = 0; e < g.edge_count; e++)
        if (phi.colored(e) && L.forbids(e, phi.color(e))) {
            if (bad == 0) w = "edge " + std::to_string(e);
            bad++;
        }
    detail::push_item(rep, "phi-not-in-list", 0, bad, w);
    return rep;
}

// True iff exchanging the two colors around the (matching) cycle creates no
// conflict with L and touches no prescribed edge.
inline bool is_allowed_cycle(const GraphIndex& g, const EdgeColoring& h, const ListAssignment& L,
                             const EdgeColoring& phi, const Cycle4& cy) {
    if (!cycle_matches(h, cy)) return false;
    auto es = cy.edge_ids();
    // after the swap edges 0,2 carry c2 and edges 1,3 carry c1
    for (int k = 0; k < 4; k++) {
        if (phi.colored(es[k])) return false;
        int next = (k % 2 == 0) ? cy.c2 : cy.c1;
        if (L.forbids(es[k], next)) return false;
    }
    return true;
}

// Conditions (a)-(i) on a relabeled coloring h'.  A conflict edge is an edge
// with h'(e) in L(e).  Part-wise bounds: (b)-(e) restrict to K_{n,n} edges,
// (f)-(i) to clique edges.
inline ConditionReport check_hprime_conditions(const GraphIndex& g, const EdgeColoring& hprime,
                                               const EdgeColoring& phi, const ListAssignment& L,
                                               const ParameterSet& ps) {
    ConditionReport rep;
    int n = g.n, m = g.m, r = n / 2;

    // (a): all but 3n+7 K_{n,n} edges lie in >= r - eps_n allowed strong cycles
    int thr = std::max(0, r - ps.eps_n);
    int short_edges = 0;
    std::string wa;
    if (thr > 0) {
        for (int e = 0; e < g.edge_count; e++) {
            if (g.classify_edge(e) != Part::Knn) continue;
            int allowed = 0;
            for (auto& cy : strong_cycles_through(g, hprime, e))
                if (is_allowed_cycle(g, hprime, L, phi, cy)) allowed++;
            if (allowed < thr) {
                if (short_edges == 0) wa = "edge " + std::to_string(e);
                short_edges++;
            }
        }
    }
    detail::push_item(rep, "a", 3 * n + 7, short_edges, wa);

    // conflict scan, split by part
    std::vector<int> confl_vertex_knn(g.vertices, 0), confl_vertex_cl(g.vertices, 0);
    std::vector<int> confl_color_knn(m + 1, 0), confl_color_cl(m + 1, 0);
    std::vector<int> presc_color_knn(m + 1, 0), presc_color_cl(m + 1, 0);
    std::map<std::pair<int, int>, int> pair_knn, pair_cl;  // (c1 in list, c2 = h'(e))
    for (int e = 0; e < g.edge_count; e++) {
        bool knn = g.classify_edge(e) == Part::Knn;
        int c2 = hprime.color(e);
        if (phi.colored(e)) (knn ? presc_color_knn : presc_color_cl)[phi.color(e)]++;
        if (c2 != 0 && L.forbids(e, c2)) {
            auto [u, v] = g.ends(e);
            (knn ? confl_vertex_knn : confl_vertex_cl)[u]++;
            (knn ? confl_vertex_knn : confl_vertex_cl)[v]++;
            (knn ? confl_color_knn : confl_color_cl)[c2]++;
        }
        if (c2 != 0)
            for (int c1 : L.list(e)) (knn ? pair_knn : pair_cl)[{c1, c2}]++;
    }
    auto worst_of = [](const std::vector<int>& v, int from, std::string what) {
        int worst = 0;
        std::string w;
        for (int i = from; i < static_cast<int>(v.size()); i++)
            if (v[i] > worst) { worst = v[i]; w = what + " " + std::to_string(i); }
        return std::make_pair(worst, w);
    };
    auto worst_pair = [](const std::map<std::pair<int, int>, int>& mp) {
        int worst = 0;
        std::string w;
        for (auto& [k, cnt] : mp)
            if (cnt > worst) {
                worst = cnt;
                w = "pair (" + std::to_string(k.first) + "," + std::to_string(k.second) + ")";
            }
        return std::make_pair(worst, w);
    };

    auto [wb, sb] = worst_of(confl_vertex_knn, 0, "vertex");
    detail::push_item(rep, "b", ps.cprime_n, wb, sb);
    auto [wc, sc] = worst_of(confl_color_knn, 1, "color");
    detail::push_item(rep, "c", ps.c_n, wc, sc);
    auto [wd, sd] = worst_of(presc_color_knn, 1, "color");
    detail::push_item(rep, "d", ps.c_n, wd, sd);
    auto [we, se] = worst_pair(pair_knn);
    detail::push_item(rep, "e", ps.c_n, we, se);
    auto [wf, sf] = worst_of(confl_vertex_cl, 0, "vertex");
    detail::push_item(rep, "f", ps.cprime_n, wf, sf);
    auto [wg, sg] = worst_of(confl_color_cl, 1, "color");
    detail::push_item(rep, "g", ps.c_n, wg, sg);
    auto [wh, sh] = worst_of(presc_color_cl, 1, "color");
    detail::push_item(rep, "h", ps.c_n, wh, sh);
    auto [wi, si] = worst_pair(pair_cl);
    detail::push_item(rep, "i", ps.c_n, wi, si);
    return rep;
}

}  // namespace kex

// Step III: absorb conflicts into the prescription.  A conflict edge has
// h'(e) in L(e); it cannot keep that color, so it receives a requested color
// phi'(e) outside L(e).  The requests extend the original precoloring phi to
// a larger partial proper coloring phi'; the correction step later realizes
// every request by swap chains.  Feasibility: each conflict edge must have
//   m - beta*m - 2*alpha*m - 2c(n) - 2n*c(n)/f(n) >= 1
// admissible colors (total minus list, minus prescriptions at both ends,
// minus overloaded colors).  Conflict edges are processed in ascending edge
// id; the smallest admissible color is chosen; a color used for f(n)
// absorptions is overloaded and no longer eligible.
#pragma once

#include <sstream>

#include "density.hpp"
#include "model.hpp"

namespace kex {

// counts how many conflict edges were absorbed into each color
struct OverloadLedger {
    std::vector<int> used;  // per color
    int f_n = 1;

    OverloadLedger() = default;
    OverloadLedger(int m, int f) : used(m + 1, 0), f_n(std::max(1, f)) {}
    bool overloaded(int c) const { return used[c] >= f_n; }
    void note(int c) { used[c]++; }
};

struct ExtendResult {
    bool ok = false;
    EdgeColoring phi_prime;           // phi plus one request per conflict edge
    std::vector<int> conflict_edges;  // ascending
    OverloadLedger ledger;
    ConditionReport report;  // feasibility + output bounds
    std::string error;       // first hard failure
};

inline ExtendResult extend_to_phi_prime(const GraphIndex& g, const EdgeColoring& hprime,
                                        const EdgeColoring& phi, const ListAssignment& L,
                                        const ParameterSet& ps) {
    ExtendResult res;
    res.phi_prime = phi;
    res.ledger = OverloadLedger(g.m, ps.f_n);

    // recorded as shortfall <= 0 so pass means the inequality holds
    int slack = g.m - ps.beta_m - 2 * ps.alpha_m - 2 * ps.c_n -
                (2 * g.n * ps.c_n) / std::max(1, ps.f_n);
    detail::push_item(res.report, "extend-feasible", 0, 1 - slack, "slack " + std::to_string(slack));

    // colors prescribed at each vertex, maintained as requests are added
    std::vector<std::set<int>> presc_at(g.vertices);
    for (int e = 0; e < g.edge_count; e++)
        if (phi.colored(e)) {
            auto [u, v] = g.ends(e);
            presc_at[u].insert(phi.color(e));
            presc_at[v].insert(phi.color(e));
        }

    for (int e = 0; e < g.edge_count; e++)
        if (hprime.colored(e) && L.forbids(e, hprime.color(e))) res.conflict_edges.push_back(e);

    for (int e : res.conflict_edges) {
        // a precolored conflict edge already carries a prescription outside
        // its list (phi(e) not in L(e) by hypothesis), so the correction step
        // clears the conflict without a fresh request
        if (res.phi_prime.colored(e)) continue;
        auto [u, v] = g.ends(e);
        int chosen = 0;
        for (int c = 1; c <= g.m; c++) {
            if (L.forbids(e, c)) continue;
            if (presc_at[u].count(c) || presc_at[v].count(c)) continue;
            if (res.ledger.overloaded(c)) continue;
            chosen = c;
            break;
        }
        if (chosen == 0) {
            res.error = "no admissible request for conflict edge " + std::to_string(e);
            return res;
        }
        res.phi_prime.set(e, chosen);
        res.ledger.note(chosen);
        presc_at[u].insert(chosen);
        presc_at[v].insert(chosen);
    }

    // output bounds: per-vertex and per-color request totals
    std::vector<int> per_vertex(g.vertices, 0);
    std::vector<int> per_color(g.m + 1, 0);
    for (int e = 0; e < g.edge_count; e++)
        if (res.phi_prime.colored(e)) {
            auto [u, v] = g.ends(e);
            per_vertex[u]++;
            per_vertex[v]++;
            per_color[res.phi_prime.color(e)]++;
        }
    int worst_v = 0;
    for (int v = 0; v < g.vertices; v++) worst_v = std::max(worst_v, per_vertex[v]);
    detail::push_item(res.report, "extend-vertex", ps.alpha_m + ps.c_n, worst_v, "");
    int worst_c = 0;
    for (int c = 1; c <= g.m; c++) worst_c = std::max(worst_c, per_color[c]);
    detail::push_item(res.report, "extend-color", ps.alpha_m + ps.f_n, worst_c, "");

    // per-color request load split by part, the quantity the correction step
    // budgets against
    std::vector<int> presc_knn(g.m + 1, 0), presc_cl(g.m + 1, 0);
    for (int e = 0; e < g.edge_count; e++)
        if (res.phi_prime.colored(e))
            (g.classify_edge(e) == Part::Knn ? presc_knn : presc_cl)[res.phi_prime.color(e)]++;
    int wk = 0, wc2 = 0;
    for (int c = 1; c <= g.m; c++) {
        wk = std::max(wk, presc_knn[c]);
        wc2 = std::max(wc2, presc_cl[c]);
    }
    detail::push_item(res.report, "extend-presc-knn", 2 * ps.c_n + ps.P_n, wk, "");
    detail::push_item(res.report, "extend-presc-clique", 2 * ps.c_n + ps.P_n, wc2, "");

    res.ok = true;
    return res;
}

}  // namespace kex

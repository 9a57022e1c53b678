// Exact feasibility oracle (small p) and the random instance generator.
//
// The oracle decides by backtracking whether the instance admits any proper
// t-edge-coloring honoring the precoloring and avoiding the forbidden lists.
// Branching uses most-constrained-edge-first; among the colors never used
// anywhere yet only the lowest is tried (they are interchangeable).
#pragma once

#include <bit>
#include <cmath>
#include <cstdint>

#include "io.hpp"
#include "model.hpp"
#include "rng.hpp"

namespace kex {

struct OracleResult {
    bool feasible = false;
    bool aborted = false;  // node cap hit before a decision
    std::map<std::pair<int, int>, int> colors;
    long long nodes = 0;
};

namespace detail {

struct OracleState {
    int p, t;
    std::vector<std::pair<int, int>> edges;       // index -> (u,v)
    std::vector<std::uint32_t> forbid;            // list mask per edge
    std::vector<int> fixed;                       // precolor or 0
    std::vector<int> color;                       // current assignment
    std::vector<std::uint32_t> at_vertex;         // used-color mask per vertex
    std::uint32_t used_global = 0;                // colors used anywhere
    std::vector<int> used_count;                  // edges per color
    long long nodes = 0;
    long long cap = -1;
    bool aborted = false;

    std::uint32_t all_mask() const { return (t >= 32) ? ~0u : ((1u << t) - 1); }

    std::uint32_t admissible(int e) const {
        auto [u, v] = edges[e];
        std::uint32_t bad = forbid[e] | at_vertex[u] | at_vertex[v];
        std::uint32_t ok = all_mask() & ~bad;
        if (fixed[e]) ok &= (1u << (fixed[e] - 1));
        return ok;
    }

    bool solve() {
        if (cap >= 0 && nodes >= cap) {
            aborted = true;
            return false;
        }
        nodes++;
        // most constrained uncolored edge
        int best = -1, best_cnt = 1 << 30;
        for (int e = 0; e < static_cast<int>(edges.size()); e++) {
            if (color[e]) continue;
            int cnt = std::popcount(admissible(e));
            if (cnt == 0) return false;
            if (cnt < best_cnt) {
                best_cnt = cnt;
                best = e;
            }
        }
        if (best < 0) return true;  // complete
        std::uint32_t ok = admissible(best);
        auto [u, v] = edges[best];
        bool tried_fresh = false;
        for (int c = 1; c <= t; c++) {
            std::uint32_t bit = 1u << (c - 1);
            if (!(ok & bit)) continue;
            bool fresh = !(used_global & bit);
            if (fresh) {
                // untouched colors are interchangeable: try only the lowest
                if (tried_fresh) continue;
                tried_fresh = true;
            }
            color[best] = c;
            at_vertex[u] |= bit;
            at_vertex[v] |= bit;
            std::uint32_t old_global = used_global;
            used_global |= bit;
            used_count[c]++;
            if (solve()) return true;
            used_count[c]--;
            used_global = old_global;
            at_vertex[u] &= ~bit;
            at_vertex[v] &= ~bit;
            color[best] = 0;
            if (aborted) return false;
        }
        return false;
    }
};

}  // namespace detail

// node_cap < 0 means unlimited.  p is limited to 12: the search is exact.
inline OracleResult oracle_solve(const Instance& inst, long long node_cap = -1) {
    if (inst.p > 12) throw std::invalid_argument("oracle_solve: p > 12 not supported");
    detail::OracleState st;
    st.p = inst.p;
    st.t = inst.t;
    st.cap = node_cap;
    for (int u = 0; u < inst.p; u++)
        for (int v = u + 1; v < inst.p; v++) st.edges.push_back({u, v});
    int ec = static_cast<int>(st.edges.size());
    st.forbid.assign(ec, 0);
    st.fixed.assign(ec, 0);
    st.color.assign(ec, 0);
    st.at_vertex.assign(inst.p, 0);
    st.used_count.assign(inst.t + 1, 0);
    auto eid = [&](std::pair<int, int> e) {
        // triangular index over the same (u<v) enumeration as st.edges
        int k = 0;
        for (int u = 0; u < e.first; u++) k += inst.p - 1 - u;
        return k + (e.second - e.first - 1);
    };
    for (auto& [e, cl] : inst.lists)
        for (int c : cl) st.forbid[eid(e)] |= 1u << (c - 1);
    OracleResult res;
    for (auto& [e, c] : inst.precolor) {
        int id = eid(e);
        st.fixed[id] = c;
        if (st.forbid[id] & (1u << (c - 1))) return res;  // phi(e) in L(e): infeasible
    }
    // place the precolors first (fail fast on improper phi)
    for (int id = 0; id < ec; id++)
        if (st.fixed[id]) {
            auto [u, v] = st.edges[id];
            std::uint32_t bit = 1u << (st.fixed[id] - 1);
            if ((st.at_vertex[u] | st.at_vertex[v]) & bit) return res;
            st.color[id] = st.fixed[id];
            st.at_vertex[u] |= bit;
            st.at_vertex[v] |= bit;
            st.used_global |= bit;
            st.used_count[st.fixed[id]]++;
        }
    res.feasible = st.solve();
    res.nodes = st.nodes;
    res.aborted = st.aborted;
    if (res.feasible)
        for (int id = 0; id < ec; id++) res.colors[st.edges[id]] = st.color[id];
    return res;
}

// ---- instance generator -------------------------------------------------

struct GenOptions {
    int p = 8;
    std::uint64_t seed = 0;
    double alpha = 0.15;  // precoloring density target and caps
    double beta = 0.15;   // list size and per-(vertex,color) cap
};

// Random instance satisfying the density/sparsity hypotheses by
// construction: ceil(alpha*t*p/4) precolored edges with per-vertex and
// per-color caps floor(alpha*t), proper; every edge gets floor(beta*t)
// forbidden colors under the per-(vertex,color) cap, never phi(e).
inline Instance generate_instance(const GenOptions& opt) {
    int n = (opt.p + 1) / 2;
    if (n < 2) throw std::invalid_argument("generate_instance: p must be at least 3");
    GraphIndex host = build_index(n);
    Instance inst;
    inst.p = opt.p;
    inst.t = host.m;
    Rng rng(opt.seed);

    int alpha_cap = static_cast<int>(opt.alpha * inst.t);
    int target_pre = (static_cast<int>(std::ceil(opt.alpha * inst.t * opt.p / 4.0)));
    target_pre = std::min(target_pre, opt.p / 2);  // properness headroom
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < opt.p; u++)
        for (int v = u + 1; v < opt.p; v++) pairs.push_back({u, v});

    std::vector<int> per_vertex(opt.p, 0), per_color(inst.t + 1, 0);
    std::vector<std::uint32_t> at_vertex(opt.p, 0);
    int attempts = 0, placed = 0;
    while (placed < target_pre && attempts < 200 * (target_pre + 1)) {
        attempts++;
        auto e = pairs[rng.below(pairs.size())];
        if (inst.precolor.count(e)) continue;
        if (per_vertex[e.first] >= alpha_cap || per_vertex[e.second] >= alpha_cap) continue;
        int c = rng.range(1, inst.t);
        if (per_color[c] >= alpha_cap) continue;
        std::uint32_t bit = 1u << (c - 1);
        if ((at_vertex[e.first] | at_vertex[e.second]) & bit) continue;
        inst.precolor[e] = c;
        per_vertex[e.first]++;
        per_vertex[e.second]++;
        per_color[c]++;
        at_vertex[e.first] |= bit;
        at_vertex[e.second] |= bit;
        placed++;
    }

    int list_size = static_cast<int>(opt.beta * inst.t);
    int beta_cap = list_size;  // same bound for the per-(vertex,color) count
    std::vector<std::vector<int>> vc_count(opt.p, std::vector<int>(inst.t + 1, 0));
    if (list_size > 0)
        for (auto& e : pairs) {
            std::set<int> chosen;
            int tries = 0;
            while (static_cast<int>(chosen.size()) < list_size && tries < 50 * inst.t) {
                tries++;
                int c = rng.range(1, inst.t);
                if (chosen.count(c)) continue;
                auto it = inst.precolor.find(e);
                if (it != inst.precolor.end() && it->second == c) continue;
                if (vc_count[e.first][c] >= beta_cap || vc_count[e.second][c] >= beta_cap) continue;
                chosen.insert(c);
                vc_count[e.first][c]++;
                vc_count[e.second][c]++;
            }
            if (!chosen.empty()) inst.lists[e] = std::vector<int>(chosen.begin(), chosen.end());
        }
    return inst;
}

}  // namespace kex

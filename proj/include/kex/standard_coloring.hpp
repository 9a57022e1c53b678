// Standard proper m-edge-colorings of K_{2n} and the strong-cycle census.
//
// K_{2n} is split as K_{n,n} + G1 + G2.  The K_{n,n} part always uses colors
// 1..n, the cliques use n+1..m; m = 2n-1 for even n, 2n for odd n.  For even
// n the K_{n,n} square is the block-circulant of equation (1); for odd n it
// comes from curated tables (n <= 31) or a deterministic structured
// construction (n >= 33).
#pragma once

#include <chrono>
#include <map>
#include <numeric>
#include <vector>

#include "baked_squares.hpp"
#include "model.hpp"

namespace kex {

// x reduced to 1..k ("mod k" with representative k instead of 0)
inline int modk(int x, int k) {
    int v = x % k;
    if (v <= 0) v += k;
    return v;
}

namespace detail {

// Structured square for odd n: lows 1..r are involutions built from disjoint
// Skolem-style anchor pairs on coprime difference classes, highs complete the
// square by repeated bipartite matching.  Deterministic; returns empty on
// failure (possible for some highly composite n).
inline std::vector<int> structured_square(int n) {
    int r = n / 2;
    std::vector<int> classes;
    for (int e = 1; e <= r; e++)
        if (std::gcd(e, n) == 1) classes.push_back(e);
    int ncls = (r + 1) / 2;
    if (static_cast<int>(classes.size()) < ncls) return {};
    classes.resize(ncls);

    // pack disjoint anchor pairs {w_e, w_e + e}
    std::vector<bool> used(n, false);
    std::vector<int> W(ncls, -1);
    auto rec = [&](auto&& self, int k) -> bool {
        if (k == ncls) return true;
        int e = classes[k];
        for (int w = 0; w < n; w++) {
            int w2 = (w + e) % n;
            if (used[w] || used[w2]) continue;
            used[w] = used[w2] = true;
            W[k] = w;
            if (self(self, k + 1)) return true;
            used[w] = used[w2] = false;
            W[k] = -1;
        }
        return false;
    };
    if (!rec(rec, 0)) return {};

    std::vector<int> L(static_cast<size_t>(n) * n, 0);
    auto place_pairing = [&](int e, int z, int color) -> bool {
        // involution: z fixed, then pairs {z+(2t-1)e, z+2te}
        auto put = [&](int x, int y) -> bool {
            int& cell = L[static_cast<size_t>(x) * n + y];
            if (cell != 0) return false;
            cell = color;
            return true;
        };
        if (!put(z, z)) return false;
        for (int t = 1; t <= n / 2; t++) {
            int a = (z + (2 * t - 1) * e) % n;
            int b = (z + 2 * t * e) % n;
            if (!put(a, b) || !put(b, a)) return false;
        }
        return true;
    };
    int low = 0;
    for (int k = 0; k < ncls; k++) {
        int e = classes[k];
        if (!place_pairing(e, W[k], ++low)) return {};
        if (low < r && !place_pairing(e, (W[k] + e) % n, ++low)) return {};
    }
    if (low != r) return {};

    // complete with colors r+1..n, one perfect matching per color
    for (int c = r + 1; c <= n; c++) {
        std::vector<int> match_row(n, -1), match_col(n, -1);
        auto aug = [&](auto&& self, int u, std::vector<bool>& seen) -> bool {
            for (int v = 0; v < n; v++) {
                if (L[static_cast<size_t>(u) * n + v] != 0 || seen[v]) continue;
                seen[v] = true;
                if (match_col[v] < 0 || self(self, match_col[v], seen)) {
                    match_row[u] = v;
                    match_col[v] = u;
                    return true;
                }
            }
            return false;
        };
        for (int u = 0; u < n; u++) {
            std::vector<bool> seen(n, false);
            if (!aug(aug, u, seen)) return {};
        }
        for (int u = 0; u < n; u++) L[static_cast<size_t>(u) * n + match_row[u]] = c;
    }
    return L;
}

// K_{n,n} square for odd n: baked table, else structured, else sum-circulant.
inline const std::vector<int>& odd_knn_square(int n) {
    static std::map<int, std::vector<int>> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<int> sq;
    if (const int* baked = baked::square_for(n)) {
        sq.assign(baked, baked + static_cast<size_t>(n) * n);
    } else {
        sq = structured_square(n);
        if (sq.empty()) {
            sq.resize(static_cast<size_t>(n) * n);
            for (int i = 1; i <= n; i++)
                for (int j = 1; j <= n; j++)
                    sq[static_cast<size_t>(i - 1) * n + (j - 1)] = modk(i + j, n);
        }
    }
    return cache.emplace(n, std::move(sq)).first->second;
}

}  // namespace detail

// Color of p_i q_j (1-based i, j).
inline int knn_color(int n, int i, int j) {
    if (n % 2 == 0) {
        int r = n / 2;
        if (i <= r && j <= r) return modk(j - i + 1, r);
        if (i > r && j > r) return modk(i - j + 1, r);
        if (i <= r) return modk(j - i + 1, r) + r;  // i <= r < j
        return modk(i - j + 1, r) + r;              // j <= r < i
    }
    return detail::odd_knn_square(n)[static_cast<size_t>(i - 1) * n + (j - 1)];
}

// Color of p_i p_j (G1) and q_i q_j (G2); both sides use the same formula.
inline int clique_color(int n, int i, int j) {
    if (n % 2 == 1) return modk(i + j, n) + n;
    if (i <= n - 1 && j <= n - 1) return modk(i + j, n - 1) + n;
    int k = std::min(i, j);  // edge to p_n / q_n
    return modk(2 * k, n - 1) + n;
}

inline EdgeColoring build_standard_coloring(const GraphIndex& g) {
    EdgeColoring h(g);
    int n = g.n;
    for (int i = 1; i <= n; i++)
        for (int j = 1; j <= n; j++)
            h.set(g.edge_id(g.p_vertex(i), g.q_vertex(j)), knn_color(n, i, j));
    for (int i = 1; i <= n; i++)
        for (int j = i + 1; j <= n; j++) {
            int c = clique_color(n, i, j);
            h.set(g.edge_id(g.p_vertex(i), g.p_vertex(j)), c);
            h.set(g.edge_id(g.q_vertex(i), g.q_vertex(j)), c);
        }
    return h;
}

// ---- strong cycles ------------------------------------------------------

// Strong cycle: 2-colored 4-cycle inside K_{n,n} with exactly one color in
// {1..r}, r = floor(n/2).  Returns the (duplicate-free) strong cycles through
// a K_{n,n} edge; empty for clique edges.
inline std::vector<Cycle4> strong_cycles_through(const GraphIndex& g, const EdgeColoring& h, int e) {
    std::vector<Cycle4> out;
    if (g.classify_edge(e) != Part::Knn) return out;
    int r = g.n / 2;
    auto [u, v] = g.ends(e);
    if (!g.p_side(u)) std::swap(u, v);  // u on the p side
    int b = h.color(e);
    if (b == 0) return out;
    for (int c = 1; c <= g.n; c++) {
        if (c == b || (b <= r) == (c <= r)) continue;  // need exactly one low
        int eu = h.at(u, c), ev = h.at(v, c);
        if (eu < 0 || ev < 0) continue;
        auto [a1, a2] = g.ends(eu);
        int w = (a1 == u) ? a2 : a1;  // q-side end of u's c-edge
        auto [b1, b2] = g.ends(ev);
        int z = (b1 == v) ? b2 : b1;  // p-side end of v's c-edge
        if (!g.p_side(z) || g.p_side(w)) continue;  // stay inside K_{n,n}
        int closing = g.edge_id(z, w);
        if (h.color(closing) == b) out.push_back({u, v, z, w, b, c});
    }
    return out;
}

// Strong 2-colored 4-cycles through a K_{n,n} edge that use one G1 and one G2
// edge (shape p-q-q-p).  The clique pair always carries a color > r, so the
// K_{n,n} pair color must be <= r for the cycle to be strong.
inline std::vector<Cycle4> strong_mixed_cycles_through(const GraphIndex& g, const EdgeColoring& h, int e) {
    std::vector<Cycle4> out;
    if (g.classify_edge(e) != Part::Knn) return out;
    int r = g.n / 2;
    auto [u, v] = g.ends(e);
    if (!g.p_side(u)) std::swap(u, v);
    int b = h.color(e);
    if (b == 0 || b > r) return out;
    for (int cc = g.n + 1; cc <= g.m; cc++) {
        int eu = h.at(u, cc), ev = h.at(v, cc);
        if (eu < 0 || ev < 0) continue;
        if (g.classify_edge(eu) != Part::G1 || g.classify_edge(ev) != Part::G2) continue;
        auto [a1, a2] = g.ends(eu);
        int k = (a1 == u) ? a2 : a1;  // p-side partner
        auto [b1, b2] = g.ends(ev);
        int l = (b1 == v) ? b2 : b1;  // q-side partner
        if (h.color(g.edge_id(k, l)) == b) out.push_back({u, v, l, k, b, cc});
    }
    return out;
}

struct StrongCycleCensus {
    int n = 0, r = 0;
    std::vector<int> internal_count;  // per edge id; -1 for clique edges
    std::vector<int> total_count;     // internal + mixed; -1 for clique edges
    int deficient_internal = 0;       // K_{n,n} edges with internal_count < r
    int deficient_total = 0;          // K_{n,n} edges with total_count < r
    int designated_vertex = -1;       // most deficient-total edges incident
    int deficient_excl_designated = 0;
    double wall_ms = 0;
};

inline StrongCycleCensus verify_strong_cycle_census(const GraphIndex& g, const EdgeColoring& h) {
    auto t0 = std::chrono::steady_clock::now();
    StrongCycleCensus cs;
    cs.n = g.n;
    cs.r = g.n / 2;
    cs.internal_count.assign(g.edge_count, -1);
    cs.total_count.assign(g.edge_count, -1);
    std::vector<int> per_vertex(g.vertices, 0);
    for (int e = 0; e < g.edge_count; e++) {
        if (g.classify_edge(e) != Part::Knn) continue;
        int ic = static_cast<int>(strong_cycles_through(g, h, e).size());
        int tc = ic + static_cast<int>(strong_mixed_cycles_through(g, h, e).size());
        cs.internal_count[e] = ic;
        cs.total_count[e] = tc;
        if (ic < cs.r) cs.deficient_internal++;
        if (tc < cs.r) {
            cs.deficient_total++;
            auto [u, v] = g.ends(e);
            per_vertex[u]++;
            per_vertex[v]++;
        }
    }
    cs.designated_vertex = 0;
    for (int v = 1; v < g.vertices; v++)
        if (per_vertex[v] > per_vertex[cs.designated_vertex]) cs.designated_vertex = v;
    cs.deficient_excl_designated = cs.deficient_total - per_vertex[cs.designated_vertex];
    cs.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return cs;
}

}  // namespace kex

// Core types for edge-coloring extension on K_{2n}: graph indexing, colorings,
// list assignments, parameter sets.
//
// Vertex convention: ids 0..n-1 are p_1..p_n (the G1 side), ids n..2n-1 are
// q_1..q_n (the G2 side).  Edge ids are dense triangular indices over the
// unordered pairs of 0..2n-1.  Colors are 1-based (1..m); 0 means uncolored.
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace kex {

enum class Part { Knn, G1, G2 };

inline const char* part_name(Part p) {
    switch (p) {
        case Part::Knn: return "Knn";
        case Part::G1: return "G1";
        default: return "G2";
    }
}

// ---- CompleteGraphIndex -------------------------------------------------

// K_{2n} = K_{n,n} (cross edges) plus the two one-sided cliques G1, G2.
// m = 2n-1 when n is even, 2n when n is odd.
struct GraphIndex {
    int n = 0;          // half order
    int m = 0;          // number of colors
    int vertices = 0;   // 2n
    int edge_count = 0; // n(2n-1)

    static int edge_id_of(int u, int v) {
        if (u > v) std::swap(u, v);
        return v * (v - 1) / 2 + u;
    }
    std::pair<int, int> ends(int e) const {
        // invert the triangular index: v is the largest with v(v-1)/2 <= e
        int v = static_cast<int>((1.0 + std::sqrt(1.0 + 8.0 * e)) / 2.0);
        while (v * (v - 1) / 2 > e) --v;
        while ((v + 1) * v / 2 <= e) ++v;
        return {e - v * (v - 1) / 2, v};
    }
    int edge_id(int u, int v) const { return edge_id_of(u, v); }

    bool p_side(int v) const { return v < n; }
    Part classify(int u, int v) const {
        bool pu = p_side(u), pv = p_side(v);
        if (pu != pv) return Part::Knn;
        return pu ? Part::G1 : Part::G2;
    }
    Part classify_edge(int e) const {
        auto [u, v] = ends(e);
        return classify(u, v);
    }
    // 1-based p/q index of a vertex (p_i has index i, q_j has index j)
    int side_index(int v) const { return p_side(v) ? v + 1 : v - n + 1; }
    int p_vertex(int i) const { return i - 1; }      // p_i, i in 1..n
    int q_vertex(int j) const { return n + j - 1; }  // q_j, j in 1..n
};

inline GraphIndex build_index(int n) {
    if (n < 2) throw std::invalid_argument("build_index: n must be >= 2, got " + std::to_string(n));
    GraphIndex g;
    g.n = n;
    g.m = (n % 2 == 0) ? 2 * n - 1 : 2 * n;
    g.vertices = 2 * n;
    g.edge_count = n * (2 * n - 1);
    return g;
}

// ---- EdgeColoring -------------------------------------------------------

// A (partial) proper edge coloring with two live indices:
//   at(v, c)      -> edge id of the c-colored edge incident to v, or -1
//   class_edges(c)-> ordered set of edges colored c
// set/clear keep both indices consistent; set refuses properness violations.
class EdgeColoring {
public:
    EdgeColoring() = default;
    explicit EdgeColoring(const GraphIndex& g)
        : n_(g.n), m_(g.m), color_(g.edge_count, 0),
          at_(static_cast<size_t>(g.vertices) * (g.m + 1), -1),
          class_edges_(g.m + 1) {}

    int n_half() const { return n_; }
    int colors() const { return m_; }
    int color(int e) const { return color_[e]; }
    bool colored(int e) const { return color_[e] != 0; }
    size_t edge_count() const { return color_.size(); }

    // edge id of the c-colored edge at v, or -1
    int at(int v, int c) const { return at_[slot(v, c)]; }
    bool free_at(int v, int c) const { return at_[slot(v, c)] < 0; }
    const std::set<int>& class_edges(int c) const { return class_edges_[c]; }
    int class_size(int c) const { return static_cast<int>(class_edges_[c].size()); }

    bool can_set(int e, int c) const {
        if (c < 1 || c > m_) return false;
        auto [u, v] = ends_of(e);
        int eu = at(u, c), ev = at(v, c);
        return (eu < 0 || eu == e) && (ev < 0 || ev == e);
    }

    void set(int e, int c) {
        if (c < 1 || c > m_) throw std::invalid_argument("EdgeColoring::set: color out of range");
        if (color_[e] == c) return;
        auto [u, v] = ends_of(e);
        if (color_[e] != 0) clear(e);
        if (at(u, c) >= 0 || at(v, c) >= 0)
            throw std::logic_error("EdgeColoring::set: properness violation at edge " + std::to_string(e));
        color_[e] = c;
        at_[slot(u, c)] = e;
        at_[slot(v, c)] = e;
        class_edges_[c].insert(e);
    }

    void clear(int e) {
        int c = color_[e];
        if (c == 0) return;
        auto [u, v] = ends_of(e);
        color_[e] = 0;
        at_[slot(u, c)] = -1;
        at_[slot(v, c)] = -1;
        class_edges_[c].erase(e);
    }

    int assigned_count() const {
        int k = 0;
        for (int c : color_) k += (c != 0);
        return k;
    }

    bool operator==(const EdgeColoring& o) const { return color_ == o.color_; }

private:
    int n_ = 0, m_ = 0;
    std::vector<int> color_;
    std::vector<int> at_;
    std::vector<std::set<int>> class_edges_;

    size_t slot(int v, int c) const { return static_cast<size_t>(v) * (m_ + 1) + c; }
    std::pair<int, int> ends_of(int e) const {
        GraphIndex g;
        g.n = n_;
        return g.ends(e);
    }
};

// ---- 2-colored 4-cycle --------------------------------------------------

// Cycle a-b-c-d-a with edge colors ab=c1, bc=c2, cd=c1, da=c2.
// Swapping exchanges c1 and c2 on the four edges; it is an involution.
struct Cycle4 {
    int a = -1, b = -1, c = -1, d = -1;
    int c1 = 0, c2 = 0;

    std::array<int, 4> edge_ids() const {
        return {GraphIndex::edge_id_of(a, b), GraphIndex::edge_id_of(b, c),
                GraphIndex::edge_id_of(c, d), GraphIndex::edge_id_of(d, a)};
    }
    // canonical form: lowest vertex first, lower of its two neighbors second
    Cycle4 canonical() const {
        std::array<int, 4> vs{a, b, c, d};
        int k = 0;
        for (int i = 1; i < 4; i++)
            if (vs[i] < vs[k]) k = i;
        int prev = vs[(k + 3) % 4], next = vs[(k + 1) % 4];
        Cycle4 r;
        if (next < prev) {
            r = {vs[k], vs[(k + 1) % 4], vs[(k + 2) % 4], vs[(k + 3) % 4], c1, c2};
            if (k % 2 == 1) std::swap(r.c1, r.c2);
        } else {
            r = {vs[k], vs[(k + 3) % 4], vs[(k + 2) % 4], vs[(k + 1) % 4], c1, c2};
            if (k % 2 == 0) std::swap(r.c1, r.c2);
        }
        return r;
    }
    bool operator==(const Cycle4& o) const {
        auto x = canonical(), y = o.canonical();
        return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d && x.c1 == y.c1 && x.c2 == y.c2;
    }
};

// true iff the cycle is well-formed and matches h's current colors
inline bool cycle_matches(const EdgeColoring& h, const Cycle4& cy) {
    if (cy.c1 == cy.c2 || cy.c1 < 1 || cy.c2 < 1) return false;
    std::array<int, 4> vs{cy.a, cy.b, cy.c, cy.d};
    for (int i = 0; i < 4; i++)
        for (int j = i + 1; j < 4; j++)
            if (vs[i] == vs[j]) return false;
    auto es = cy.edge_ids();
    return h.color(es[0]) == cy.c1 && h.color(es[1]) == cy.c2 &&
           h.color(es[2]) == cy.c1 && h.color(es[3]) == cy.c2;
}

// Exchange the two colors around the cycle.  Precondition: cycle_matches.
// Applying twice restores the original coloring.
inline void apply_swap(EdgeColoring& h, const Cycle4& cy) {
    auto es = cy.edge_ids();
    for (int e : es) h.clear(e);
    h.set(es[0], cy.c2);
    h.set(es[1], cy.c1);
    h.set(es[2], cy.c2);
    h.set(es[3], cy.c1);
}

inline void revert_swap(EdgeColoring& h, const Cycle4& cy) {
    Cycle4 back = cy;
    std::swap(back.c1, back.c2);
    apply_swap(h, back);
}

// ---- ListAssignment -----------------------------------------------------

// Forbidden-color lists with the (vertex, color) multiplicity index used by
// the beta-sparseness conditions.
class ListAssignment {
public:
    ListAssignment() = default;
    ListAssignment(const GraphIndex& g)
        : n_(g.n), m_(g.m), lists_(g.edge_count),
          vc_count_(static_cast<size_t>(g.vertices) * (g.m + 1), 0) {}

    const std::set<int>& list(int e) const { return lists_[e]; }
    bool forbids(int e, int c) const { return lists_[e].count(c) != 0; }
    int vertex_color_count(int v, int c) const { return vc_count_[slot(v, c)]; }

    void add(int e, int c) {
        if (c < 1 || c > m_) throw std::invalid_argument("ListAssignment::add: color out of range");
        if (!lists_[e].insert(c).second) return;
        auto [u, v] = ends_of(e);
        ++vc_count_[slot(u, c)];
        ++vc_count_[slot(v, c)];
    }

    int max_list_size() const {
        size_t k = 0;
        for (auto& l : lists_) k = std::max(k, l.size());
        return static_cast<int>(k);
    }

private:
    int n_ = 0, m_ = 0;
    std::vector<std::set<int>> lists_;
    std::vector<int> vc_count_;

    size_t slot(int v, int c) const { return static_cast<size_t>(v) * (m_ + 1) + c; }
    std::pair<int, int> ends_of(int e) const {
        GraphIndex g;
        g.n = n_;
        return g.ends(e);
    }
};

// ---- ParameterSet -------------------------------------------------------

// alpha, beta, d, epsilon, k plus the integer-valued n-dependent functions.
// Two presets: paper() uses the article's constants (meaningful only for
// astronomically large n), relaxed() scales them for desk-size instances.
struct ParameterSet {
    std::string name = "relaxed";
    double alpha = 0, beta = 0, d = 0, epsilon = 0, k = 0;
    int c_n = 0, cprime_n = 0, f_n = 0;
    int H_n = 0, P_n = 0;
    bool H_preamble_variant = false;  // see make(): 9/9/6/4 instead of 7/7/6/4

    // integer bounds with floors applied uniformly
    int alpha_m = 0;   // floor(alpha * m)
    int beta_m = 0;    // floor(beta * m)
    int eps_n = 0;     // floor(epsilon * n)
    int d_n = 0;       // ceil(d * n): overload threshold "at least dn"

    static ParameterSet make(const std::string& preset, int n, int m,
                             bool H_preamble_variant = false) {
        ParameterSet ps;
        ps.name = preset;
        if (preset == "paper") {
            ps.alpha = 1e-6;
            ps.beta = 1e-6;
            ps.d = 1.0 / 200;
            ps.epsilon = 1.0 / 50000;
            ps.k = 1.0 / 5000;
            ps.c_n = n / 50000;
            ps.f_n = n / 10000;
        } else if (preset == "relaxed") {
            // Desk-scale analogue: same structural roles, constants sized so
            // that small sparse instances satisfy the chapter-3 conditions.
            ps.alpha = 0.15;
            ps.beta = 0.15;
            ps.d = 2.0;
            ps.epsilon = 0.50;
            ps.k = 0.20;
            ps.c_n = std::max(2, n);
            ps.f_n = std::max(2, n / 2);
        } else {
            throw std::invalid_argument("ParameterSet: unknown preset '" + preset + "'");
        }
        ps.H_preamble_variant = H_preamble_variant;
        ps.cprime_n = ps.c_n / 2;
        ps.alpha_m = static_cast<int>(ps.alpha * m);
        ps.beta_m = static_cast<int>(ps.beta * m);
        ps.eps_n = static_cast<int>(ps.epsilon * n);
        ps.d_n = static_cast<int>(std::ceil(ps.d * n));
        ps.P_n = static_cast<int>(std::ceil(ps.d * n + ps.alpha * m)) + ps.f_n;
        int w = H_preamble_variant ? 9 : 7;
        ps.H_n = w * ps.alpha_m + w * ps.f_n + 6 * ps.c_n + 4 * ps.d_n;
        return ps;
    }
};

}  // namespace kex

// Step II: random relabeling of colors.  Low colors 1..n are permuted among
// themselves and clique colors n+1..m among themselves, so the segregation of
// the standard coloring is preserved.  sample_good_relabeling rejects until
// the chapter-3 conditions hold on the relabeled coloring.
#pragma once

#include "density.hpp"
#include "model.hpp"
#include "rng.hpp"

namespace kex {

struct Relabeling {
    // map[c] = new name of color c; map[0] = 0
    std::vector<int> map;

    static Relabeling identity(const GraphIndex& g) {
        Relabeling r;
        r.map.resize(g.m + 1);
        for (int c = 0; c <= g.m; c++) r.map[c] = c;
        return r;
    }

    int of(int c) const { return map[c]; }

    // valid iff lows map to lows and highs to highs, bijectively
    bool is_valid(const GraphIndex& g) const {
        if (static_cast<int>(map.size()) != g.m + 1 || map[0] != 0) return false;
        std::vector<bool> seen(g.m + 1, false);
        for (int c = 1; c <= g.m; c++) {
            int d = map[c];
            if (d < 1 || d > g.m || seen[d]) return false;
            if ((c <= g.n) != (d <= g.n)) return false;
            seen[d] = true;
        }
        return true;
    }

    Relabeling inverse() const {
        Relabeling r;
        r.map.assign(map.size(), 0);
        for (int c = 1; c < static_cast<int>(map.size()); c++) r.map[map[c]] = c;
        return r;
    }
};

inline Relabeling sample_relabeling(const GraphIndex& g, Rng& rng) {
    Relabeling r = Relabeling::identity(g);
    auto low = rng.permutation(g.n);             // values 0..n-1
    auto high = rng.permutation(g.m - g.n);      // values 0..m-n-1
    for (int c = 1; c <= g.n; c++) r.map[c] = low[c - 1] + 1;
    for (int c = g.n + 1; c <= g.m; c++) r.map[c] = g.n + 1 + high[c - g.n - 1];
    return r;
}

inline EdgeColoring apply_relabeling(const GraphIndex& g, const EdgeColoring& h, const Relabeling& rel) {
    EdgeColoring out(g);
    for (int e = 0; e < g.edge_count; e++)
        if (h.colored(e)) out.set(e, rel.of(h.color(e)));
    return out;
}

struct SampleResult {
    bool ok = false;
    int tries = 0;
    Relabeling rel;
    EdgeColoring hprime;
    ConditionReport report;  // report of the accepted try (or the last failed one)
};

// Rejection sampling: draw relabelings until check_hprime_conditions accepts.
inline SampleResult sample_good_relabeling(const GraphIndex& g, const EdgeColoring& h,
                                           const EdgeColoring& phi, const ListAssignment& L,
                                           const ParameterSet& ps, Rng& rng,
                                           int max_tries = 1000) {
    SampleResult res;
    for (res.tries = 1; res.tries <= max_tries; res.tries++) {
        res.rel = sample_relabeling(g, rng);
        res.hprime = apply_relabeling(g, h, res.rel);
        res.report = check_hprime_conditions(g, res.hprime, phi, L, ps);
        if (res.report.ok()) {
            res.ok = true;
            return res;
        }
    }
    res.tries = max_tries;
    return res;
}

}  // namespace kex

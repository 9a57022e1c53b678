// Instance-level driving: parse/host/solve/serialize glued together.  The
// CLI and the test suites call these instead of repeating the composition.
#pragma once

#include "io.hpp"
#include "oracle.hpp"
#include "orchestrator.hpp"

namespace kex {

struct InstanceSolve {
    bool ok = false;
    std::string stage;  // "host" for embedding failures, otherwise solver stage
    std::string error;
    HostInstance host;
    SolveResult core;
    std::string coloring_text;  // canonical "p t" + "edge u v c" lines
};

inline InstanceSolve solve_instance(const Instance& inst, const SolveOptions& opt) {
    InstanceSolve out;
    auto [hok, herr] = to_host(inst, out.host);
    if (!hok) {
        out.stage = "host";
        out.error = herr;
        return out;
    }
    out.core = solve(out.host.g, out.host.phi, out.host.L, opt);
    out.stage = out.core.stage;
    out.error = out.core.error;
    if (!out.core.ok) return out;
    out.coloring_text = serialize_coloring(inst, out.host.g, out.core.h);
    out.ok = true;
    return out;
}

// Corollary path: K_{2n-1} rides in K_{2n} with a phantom vertex; the
// returned text is already the restriction to the real p vertices.
inline InstanceSolve solve_odd(const Instance& inst, const SolveOptions& opt) {
    if (inst.p % 2 == 0) {
        InstanceSolve out;
        out.stage = "host";
        out.error = "solve_odd requires odd p, got " + std::to_string(inst.p);
        return out;
    }
    return solve_instance(inst, opt);
}

}  // namespace kex

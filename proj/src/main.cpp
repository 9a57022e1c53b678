// kexcli: generate / solve / verify / census / bench / export-dot.
// Exit codes: 0 success or feasible, 1 honest solver failure or verified
// infeasibility (distinguished on stderr), 2 usage or parse errors.
// Seeded subcommands write byte-identical stdout/file output across runs;
// timing goes to stderr (bench's wall_ms column is the one exception).
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "kex/driver.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

int write_out(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return kExitOk;
    }
    std::ofstream out(path);
    if (!out) {
        std::cerr << "error: cannot write " << path << "\n";
        return kExitUsage;
    }
    out << text;
    return kExitOk;
}

std::string trace_text(const kex::Instance& inst, const kex::SolveResult& res) {
    std::ostringstream os;
    os << "# trace p=" << inst.p << " t=" << inst.t << " swaps=" << res.trace.swap_count()
       << " path_flips=" << res.trace.path_flips() << " disturbed=" << res.trace.disturbed_count()
       << "\n";
    for (const auto& cy : res.trace.log())
        os << "swap " << cy.a + 1 << " " << cy.b + 1 << " " << cy.c + 1 << " " << cy.d + 1 << " "
           << cy.c1 << " " << cy.c2 << "\n";
    for (const auto& w : res.trace.warnings()) os << "# warning: " << w << "\n";
    return os.str();
}

int run_generate(int p, double alpha, double beta, std::uint64_t seed, const std::string& out) {
    kex::GenOptions go;
    go.p = p;
    go.alpha = alpha;
    go.beta = beta;
    go.seed = seed;
    kex::Instance inst;
    try {
        inst = kex::generate_instance(go);
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitUsage;
    }
    return write_out(out, kex::serialize_instance(inst));
}

int run_solve(const std::string& file, const std::string& preset, std::uint64_t seed,
              bool fallback_oracle, const std::string& out, const std::string& trace_file) {
    auto parsed = kex::parse_instance_file(file);
    if (!parsed.ok) {
        std::cerr << "parse error: " << file << ": " << parsed.error << "\n";
        return kExitUsage;
    }
    kex::SolveOptions opt;
    opt.preset = preset;
    opt.seed = seed;
    kex::InstanceSolve sol;
    try {
        sol = kex::solve_instance(parsed.inst, opt);
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitUsage;
    }
    if (sol.stage == "host") {
        std::cerr << "invalid instance: " << sol.error << "\n";
        return kExitUsage;
    }
    if (sol.ok) {
        std::cerr << "solved: " << sol.core.requested << " requests, " << sol.core.corrections
                  << " corrections, " << sol.core.trace.swap_count() << " swaps, "
                  << sol.core.restarts << " restarts, " << sol.core.wall_ms << " ms\n";
        for (const auto& w : sol.core.trace.warnings()) std::cerr << "warning: " << w << "\n";
        if (!trace_file.empty()) {
            int rc = write_out(trace_file, trace_text(parsed.inst, sol.core));
            if (rc != kExitOk) return rc;
        }
        return write_out(out, sol.coloring_text);
    }
    std::cerr << "solver failed at stage " << sol.stage << ": " << sol.error << "\n";
    if (fallback_oracle && parsed.inst.p <= 12) {
        auto orr = kex::oracle_solve(parsed.inst, 50000000);
        if (orr.aborted) {
            std::cerr << "oracle: search aborted at node cap, feasibility unknown\n";
            return kExitFail;
        }
        if (!orr.feasible) {
            std::cerr << "oracle: instance verified infeasible by exhaustive search\n";
            return kExitFail;
        }
        std::cerr << "oracle: found a coloring after " << orr.nodes << " nodes\n";
        std::ostringstream os;
        os << parsed.inst.p << " " << parsed.inst.t << "\n";
        for (auto& [e, c] : orr.colors)
            os << "edge " << e.first + 1 << " " << e.second + 1 << " " << c << "\n";
        if (!trace_file.empty()) {
            int rc = write_out(trace_file, "# trace p=" + std::to_string(parsed.inst.p) +
                                               " coloring from oracle, no swaps\n");
            if (rc != kExitOk) return rc;
        }
        return write_out(out, os.str());
    }
    return kExitFail;
}

int run_verify(const std::string& inst_file, const std::string& col_file) {
    auto parsed = kex::parse_instance_file(inst_file);
    if (!parsed.ok) {
        std::cerr << "parse error: " << inst_file << ": " << parsed.error << "\n";
        return kExitUsage;
    }
    auto col = kex::parse_coloring_file(col_file);
    if (!col.ok) {
        std::cerr << "parse error: " << col_file << ": " << col.error << "\n";
        return kExitUsage;
    }
    auto problems = kex::verify_instance_coloring(parsed.inst, col.col);
    if (problems.empty()) {
        std::cout << "OK\n";
        return kExitOk;
    }
    for (auto& p : problems) std::cout << "FAIL " << p << "\n";
    return kExitFail;
}

int run_census(int n, bool full, const std::string& out) {
    if (n < 2) {
        std::cerr << "error: census needs n >= 2\n";
        return kExitUsage;
    }
    kex::GraphIndex g = kex::build_index(n);
    kex::EdgeColoring h = kex::build_standard_coloring(g);
    auto cs = kex::verify_strong_cycle_census(g, h);
    std::ostringstream os;
    os << "n " << n << " r " << cs.r << " m " << g.m << "\n";
    os << "internal counts (rows p_i, cols q_j):\n";
    for (int i = 1; i <= n; i++) {
        for (int j = 1; j <= n; j++)
            os << cs.internal_count[g.edge_id(g.p_vertex(i), g.q_vertex(j))] << (j == n ? "" : " ");
        os << "\n";
    }
    os << "deficient internal " << cs.deficient_internal << "\n";
    if (full) {
        os << "total counts (internal + mixed):\n";
        for (int i = 1; i <= n; i++) {
            for (int j = 1; j <= n; j++)
                os << cs.total_count[g.edge_id(g.p_vertex(i), g.q_vertex(j))] << (j == n ? "" : " ");
            os << "\n";
        }
        os << "deficient total " << cs.deficient_total << "\n";
        os << "designated vertex " << cs.designated_vertex + 1 << "\n";
        os << "deficient excluding designated " << cs.deficient_excl_designated << "\n";
        os << "budget 3n+7 = " << 3 * n + 7 << "\n";
    }
    std::cerr << "census wall " << cs.wall_ms << " ms\n";
    return write_out(out, os.str());
}

int run_bench(const std::string& p_range, int seeds, double alpha, double beta,
              const std::string& csv) {
    int plo = 0, phi = 0;
    char sep = 0;
    std::istringstream rs(p_range);
    if (rs >> plo && (rs >> sep >> phi)) {
        if (sep != ':' && sep != '-') {
            std::cerr << "error: bad --p-range, want A:B\n";
            return kExitUsage;
        }
    } else
        phi = plo;
    if (plo < 3 || phi < plo) {
        std::cerr << "error: bad --p-range\n";
        return kExitUsage;
    }
    std::ostringstream os;
    os << "p,seed,stage_reached,swaps,disturbed,wall_ms,verified\n";
    for (int p = plo; p <= phi; p++)
        for (int s = 0; s < seeds; s++) {
            kex::GenOptions go;
            go.p = p;
            go.alpha = alpha;
            go.beta = beta;
            go.seed = static_cast<std::uint64_t>(1000) * p + s;
            kex::Instance inst = kex::generate_instance(go);
            kex::SolveOptions opt;
            opt.seed = s;
            auto sol = kex::solve_instance(inst, opt);
            int verified = 0;
            if (sol.ok) {
                std::istringstream cs(sol.coloring_text);
                auto col = kex::parse_coloring(cs);
                verified = col.ok && kex::verify_instance_coloring(inst, col.col).empty() ? 1 : 0;
            }
            os << p << "," << s << "," << sol.stage << "," << sol.core.trace.swap_count() << ","
               << sol.core.trace.disturbed_count() << "," << sol.core.wall_ms << "," << verified
               << "\n";
        }
    return write_out(csv, os.str());
}

int run_export_dot(const std::string& col_file, const std::string& inst_file,
                   const std::string& out) {
    auto col = kex::parse_coloring_file(col_file);
    if (!col.ok) {
        std::cerr << "parse error: " << col_file << ": " << col.error << "\n";
        return kExitUsage;
    }
    kex::Instance inst;
    if (!inst_file.empty()) {
        auto parsed = kex::parse_instance_file(inst_file);
        if (!parsed.ok) {
            std::cerr << "parse error: " << inst_file << ": " << parsed.error << "\n";
            return kExitUsage;
        }
        inst = parsed.inst;
    } else {
        inst.p = col.col.p;
        inst.t = col.col.t;
    }
    return write_out(out, kex::export_dot(inst, &col.col));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"list-avoiding edge coloring extension on complete graphs"};
    app.require_subcommand(1);

    auto* gen = app.add_subcommand("generate", "random instance satisfying the hypotheses");
    int gen_p = 8;
    double gen_alpha = 0.15, gen_beta = 0.15;
    std::uint64_t gen_seed = 0;
    std::string gen_out;
    gen->add_option("--p", gen_p, "vertex count (host is K_{p} or K_{p+1})");
    gen->add_option("--alpha", gen_alpha, "precoloring density");
    gen->add_option("--beta", gen_beta, "list density");
    gen->add_option("--seed", gen_seed, "rng seed");
    gen->add_option("-o,--out", gen_out, "output file (default stdout)");

    auto* sol = app.add_subcommand("solve", "extend an instance to a full proper coloring");
    std::string sol_file, sol_preset = "relaxed", sol_out, sol_trace;
    std::uint64_t sol_seed = 0;
    bool sol_fallback = false;
    sol->add_option("file", sol_file, "instance file")->required();
    sol->add_option("--params", sol_preset, "parameter preset: paper|relaxed")
        ->check(CLI::IsMember({"paper", "relaxed"}));
    sol->add_option("--seed", sol_seed, "rng seed");
    sol->add_flag("--fallback-oracle", sol_fallback, "on failure, try exhaustive search (p <= 12)");
    sol->add_option("-o,--out", sol_out, "coloring output file (default stdout)");
    sol->add_option("--trace", sol_trace, "write the swap log to this file");

    auto* ver = app.add_subcommand("verify", "check a coloring file against an instance");
    std::string ver_inst, ver_col;
    ver->add_option("instance", ver_inst, "instance file")->required();
    ver->add_option("coloring", ver_col, "coloring file")->required();

    auto* cen = app.add_subcommand("census", "strong-cycle census of the standard coloring");
    int cen_n = 4;
    bool cen_full = false;
    std::string cen_out;
    cen->add_option("--n", cen_n, "half order (graph is K_{2n})")->required();
    cen->add_flag("--full", cen_full, "include mixed cycles, designated vertex, bound");
    cen->add_option("-o,--out", cen_out, "output file (default stdout)");

    auto* ben = app.add_subcommand("bench", "generate+solve sweep, CSV summary");
    std::string ben_range = "4:10", ben_csv;
    int ben_seeds = 5;
    double ben_alpha = 0.15, ben_beta = 0.15;
    ben->add_option("--p-range", ben_range, "A:B inclusive");
    ben->add_option("--seeds", ben_seeds, "seeds per p");
    ben->add_option("--alpha", ben_alpha, "precoloring density");
    ben->add_option("--beta", ben_beta, "list density");
    ben->add_option("--csv", ben_csv, "CSV output file (default stdout)");

    auto* dot = app.add_subcommand("export-dot", "Graphviz export of a coloring");
    std::string dot_col, dot_inst, dot_out;
    dot->add_option("coloring", dot_col, "coloring file")->required();
    dot->add_option("--instance", dot_inst, "instance file for list/precolor styling");
    dot->add_option("-o,--out", dot_out, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    if (gen->parsed()) return run_generate(gen_p, gen_alpha, gen_beta, gen_seed, gen_out);
    if (sol->parsed()) return run_solve(sol_file, sol_preset, sol_seed, sol_fallback, sol_out, sol_trace);
    if (ver->parsed()) return run_verify(ver_inst, ver_col);
    if (cen->parsed()) return run_census(cen_n, cen_full, cen_out);
    if (ben->parsed()) return run_bench(ben_range, ben_seeds, ben_alpha, ben_beta, ben_csv);
    if (dot->parsed()) return run_export_dot(dot_col, dot_inst, dot_out);
    return kExitUsage;
}

#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "kex/driver.hpp"
#include "kex/oracle.hpp"

using namespace kex;

namespace {

InstanceParse parse_str(const std::string& s) {
    std::istringstream in(s);
    return parse_instance(in);
}

ColoringParse parse_col_str(const std::string& s) {
    std::istringstream in(s);
    return parse_coloring(in);
}

}  // namespace

TEST_CASE("instance serialize/parse roundtrip", "[io]") {
    GenOptions opt;
    opt.p = 7;
    opt.seed = 3;
    Instance inst = generate_instance(opt);
    std::string s = serialize_instance(inst);
    auto parsed = parse_str(s);
    REQUIRE(parsed.ok);
    REQUIRE(parsed.inst.p == inst.p);
    REQUIRE(parsed.inst.t == inst.t);
    REQUIRE(parsed.inst.precolor == inst.precolor);
    REQUIRE(parsed.inst.lists == inst.lists);
    REQUIRE(serialize_instance(parsed.inst) == s);
}

TEST_CASE("instance parser accepts comments and merges lists", "[io]") {
    auto parsed = parse_str(
        "# instance\n"
        "\n"
        "6 6   # p t\n"
        "precolor 1 2 3\n"
        "list 1 3 : 2 4\n"
        "list 3 1 : 4 5\n");
    REQUIRE(parsed.ok);
    REQUIRE(parsed.inst.p == 6);
    REQUIRE(parsed.inst.precolor.at({0, 1}) == 3);
    REQUIRE(parsed.inst.lists.at({0, 2}) == std::vector<int>{2, 4, 5});
}

TEST_CASE("instance parser rejects malformed input", "[io]") {
    SECTION("empty") {
        auto r = parse_str("");
        REQUIRE_FALSE(r.ok);
        REQUIRE(r.error.find("missing") != std::string::npos);
    }
    SECTION("header without t") { REQUIRE_FALSE(parse_str("5\n").ok); }
    SECTION("p too small") { REQUIRE_FALSE(parse_str("2 3\n").ok); }
    SECTION("unknown keyword") {
        auto r = parse_str("6 6\nfrobnicate 1 2\n");
        REQUIRE_FALSE(r.ok);
        REQUIRE(r.error.find("frobnicate") != std::string::npos);
    }
    SECTION("loop edge") { REQUIRE_FALSE(parse_str("6 6\nprecolor 1 1 3\n").ok); }
    SECTION("vertex out of range") { REQUIRE_FALSE(parse_str("6 6\nprecolor 1 7 3\n").ok); }
    SECTION("color out of range") { REQUIRE_FALSE(parse_str("6 6\nprecolor 1 2 9\n").ok); }
    SECTION("duplicate precolor under normalization") {
        auto r = parse_str("6 6\nprecolor 1 2 3\nprecolor 2 1 4\n");
        REQUIRE_FALSE(r.ok);
        REQUIRE(r.error.find("twice") != std::string::npos);
    }
    SECTION("list missing colon") { REQUIRE_FALSE(parse_str("6 6\nlist 1 2 3 4\n").ok); }
    SECTION("list color out of range") { REQUIRE_FALSE(parse_str("6 6\nlist 1 2 : 7\n").ok); }
}

TEST_CASE("coloring parser and its error cases", "[io]") {
    auto ok = parse_col_str("3 3\nedge 1 2 1\nedge 1 3 2\nedge 2 3 3\n");
    REQUIRE(ok.ok);
    REQUIRE(ok.col.colors.size() == 3);
    REQUIRE(ok.col.colors.at({0, 1}) == 1);
    REQUIRE_FALSE(parse_col_str("").ok);
    REQUIRE_FALSE(parse_col_str("3 3\nvertex 1 2 1\n").ok);
    REQUIRE_FALSE(parse_col_str("3 3\nedge 1 2 9\n").ok);
    auto dup = parse_col_str("3 3\nedge 1 2 1\nedge 2 1 2\n");
    REQUIRE_FALSE(dup.ok);
    REQUIRE(dup.error.find("twice") != std::string::npos);
}

TEST_CASE("host embedding", "[io]") {
    SECTION("even p maps straight onto K_2n") {
        Instance inst;
        inst.p = 6;
        inst.t = 6;
        inst.precolor[{0, 5}] = 4;
        inst.lists[{1, 2}] = {3};
        HostInstance host;
        auto [ok, err] = to_host(inst, host);
        REQUIRE(ok);
        REQUIRE(host.g.n == 3);
        REQUIRE(host.g.vertices == 6);
        REQUIRE(host.real_vertices == 6);
        REQUIRE(host.phi.color(host.g.edge_id(0, 5)) == 4);
        REQUIRE(host.L.forbids(host.g.edge_id(1, 2), 3));
    }
    SECTION("odd p adds an unconstrained phantom vertex") {
        Instance inst;
        inst.p = 5;
        inst.t = 6;
        inst.precolor[{0, 4}] = 2;
        HostInstance host;
        auto [ok, err] = to_host(inst, host);
        REQUIRE(ok);
        REQUIRE(host.g.vertices == 6);
        REQUIRE(host.real_vertices == 5);
        REQUIRE(host.phi.color(host.g.edge_id(0, 4)) == 2);
        // no constraint touches the phantom vertex 5
        for (int v = 0; v < 5; v++) {
            int e = host.g.edge_id(v, 5);
            REQUIRE_FALSE(host.phi.colored(e));
            REQUIRE(host.L.list(e).empty());
        }
    }
    SECTION("t mismatch is rejected") {
        Instance inst;
        inst.p = 6;
        inst.t = 5;
        HostInstance host;
        auto [ok, err] = to_host(inst, host);
        REQUIRE_FALSE(ok);
        REQUIRE(err.find("t = 6") != std::string::npos);
    }
    SECTION("improper precoloring is rejected") {
        Instance inst;
        inst.p = 6;
        inst.t = 6;
        inst.precolor[{0, 1}] = 1;
        inst.precolor[{0, 2}] = 1;
        HostInstance host;
        auto [ok, err] = to_host(inst, host);
        REQUIRE_FALSE(ok);
        REQUIRE(err.find("not proper") != std::string::npos);
    }
}

TEST_CASE("serialize_coloring is canonical and verifiable", "[io]") {
    GraphIndex g = build_index(3);
    EdgeColoring h = build_standard_coloring(g);
    Instance inst;
    inst.p = 6;
    inst.t = 6;
    std::string s = serialize_coloring(inst, g, h);
    REQUIRE(s.substr(0, 4) == "6 6\n");
    REQUIRE(s.find("edge 1 2 ") == 4);  // rows ordered u-major, v-minor
    auto parsed = parse_col_str(s);
    REQUIRE(parsed.ok);
    REQUIRE(parsed.col.colors.size() == 15);
    REQUIRE(verify_instance_coloring(inst, parsed.col).empty());
    // odd p: the serialization is restricted to real edges
    Instance odd;
    odd.p = 5;
    odd.t = 6;
    auto podd = parse_col_str(serialize_coloring(odd, g, h));
    REQUIRE(podd.ok);
    REQUIRE(podd.col.colors.size() == 10);
    REQUIRE(verify_instance_coloring(odd, podd.col).empty());
}

TEST_CASE("verify_instance_coloring catches each violation", "[io]") {
    GraphIndex g = build_index(3);
    EdgeColoring h = build_standard_coloring(g);
    Instance inst;
    inst.p = 6;
    inst.t = 6;
    auto base = parse_col_str(serialize_coloring(inst, g, h)).col;

    SECTION("clean passes") { REQUIRE(verify_instance_coloring(inst, base).empty()); }
    SECTION("header mismatch") {
        auto col = base;
        col.p = 7;
        auto pr = verify_instance_coloring(inst, col);
        REQUIRE(pr.size() == 1);
        REQUIRE(pr.front().find("header") != std::string::npos);
    }
    SECTION("missing edge") {
        auto col = base;
        col.colors.erase({0, 1});
        auto pr = verify_instance_coloring(inst, col);
        REQUIRE_FALSE(pr.empty());
        REQUIRE(pr.front().find("missing") != std::string::npos);
    }
    SECTION("improper pair") {
        auto col = base;
        col.colors[{0, 1}] = col.colors[{0, 2}];
        auto pr = verify_instance_coloring(inst, col);
        REQUIRE_FALSE(pr.empty());
        REQUIRE(pr.front().find("repeated") != std::string::npos);
    }
    SECTION("forbidden color used") {
        auto bad = inst;
        bad.lists[{0, 1}] = {base.colors.at({0, 1})};
        auto pr = verify_instance_coloring(bad, base);
        REQUIRE_FALSE(pr.empty());
        REQUIRE(pr.front().find("forbidden") != std::string::npos);
    }
    SECTION("precolor ignored") {
        auto bad = inst;
        bad.precolor[{0, 1}] = base.colors.at({0, 1}) % 6 + 1;
        auto pr = verify_instance_coloring(bad, base);
        REQUIRE_FALSE(pr.empty());
        REQUIRE(pr.front().find("precolor") != std::string::npos);
    }
}

TEST_CASE("export_dot emits the expected structure", "[io]") {
    Instance inst;
    inst.p = 4;
    inst.t = 3;
    inst.precolor[{0, 1}] = 2;
    inst.lists[{2, 3}] = {1};
    SECTION("without a coloring") {
        std::string dot = export_dot(inst);
        REQUIRE(dot.find("graph instance {") == 0);
        REQUIRE(dot.find("v1 -- v2 [label=\"2\",penwidth=2];") != std::string::npos);
        REQUIRE(dot.find("v3 -- v4 [style=dashed,tooltip=\"forbid 1\"];") != std::string::npos);
        REQUIRE(dot.find("v1 -- v3;") != std::string::npos);
        REQUIRE(dot.back() == '\n');
    }
    SECTION("with a coloring every edge is labeled") {
        ColoringFile col;
        col.p = 4;
        col.t = 3;
        col.colors[{0, 1}] = 2;
        col.colors[{0, 2}] = 1;
        col.colors[{0, 3}] = 3;
        col.colors[{1, 2}] = 3;
        col.colors[{1, 3}] = 1;
        col.colors[{2, 3}] = 2;
        std::string dot = export_dot(inst, &col);
        REQUIRE(dot.find("v1 -- v2 [label=\"2\",penwidth=2];") != std::string::npos);
        REQUIRE(dot.find("v1 -- v3 [label=\"1\"];") != std::string::npos);
        REQUIRE(dot.find("v3 -- v4 [label=\"2\",style=dashed") != std::string::npos);
    }
}

TEST_CASE("driver solves instances end to end", "[io]") {
    SECTION("generated even instance") {
        GenOptions gopt;
        gopt.p = 8;
        gopt.seed = 2;
        Instance inst = generate_instance(gopt);
        SolveOptions sopt;
        sopt.seed = 2;
        auto out = solve_instance(inst, sopt);
        INFO(out.stage << ": " << out.error);
        REQUIRE(out.ok);
        auto col = parse_col_str(out.coloring_text);
        REQUIRE(col.ok);
        REQUIRE(verify_instance_coloring(inst, col.col).empty());
    }
    SECTION("odd instance through the phantom") {
        GenOptions gopt;
        gopt.p = 7;
        gopt.seed = 2;
        Instance inst = generate_instance(gopt);
        SolveOptions sopt;
        sopt.seed = 2;
        auto out = solve_odd(inst, sopt);
        INFO(out.stage << ": " << out.error);
        REQUIRE(out.ok);
        auto col = parse_col_str(out.coloring_text);
        REQUIRE(col.ok);
        REQUIRE(col.col.colors.size() == 21);
        REQUIRE(verify_instance_coloring(inst, col.col).empty());
    }
    SECTION("solve_odd rejects even instances") {
        Instance inst;
        inst.p = 6;
        inst.t = 6;
        SolveOptions sopt;
        auto out = solve_odd(inst, sopt);
        REQUIRE_FALSE(out.ok);
        REQUIRE(out.stage == "host");
    }
    SECTION("host failure surfaces as its own stage") {
        Instance inst;
        inst.p = 6;
        inst.t = 4;
        SolveOptions sopt;
        auto out = solve_instance(inst, sopt);
        REQUIRE_FALSE(out.ok);
        REQUIRE(out.stage == "host");
    }
}

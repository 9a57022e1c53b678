// File formats and host embedding.
//
// Instance file: "#" starts a comment, first data line is "p t", then
//   precolor u v c        (1-based vertices, 1-based color)
//   list u v : c1 c2 ...  (forbidden colors for edge uv)
// Coloring file: first data line "p t", then "edge u v c" per edge.
//
// The solver always works on K_{2n}; an odd instance (p = 2n-1) is embedded
// by adding one unconstrained phantom vertex, and the output is restricted
// to the real edges.
#pragma once

#include <fstream>
#include <istream>
#include <map>
#include <sstream>

#include "model.hpp"

namespace kex {

struct Instance {
    int p = 0;  // number of vertices
    int t = 0;  // number of colors
    std::map<std::pair<int, int>, int> precolor;            // 0-based (u<v) -> color
    std::map<std::pair<int, int>, std::vector<int>> lists;  // 0-based (u<v) -> colors

    int edge_count() const { return p * (p - 1) / 2; }
};

struct InstanceParse {
    bool ok = false;
    Instance inst;
    std::string error;
};

namespace detail {

inline std::string strip_comment(const std::string& line) {
    auto pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

inline std::pair<int, int> norm_pair(int u, int v) {
    return u < v ? std::make_pair(u, v) : std::make_pair(v, u);
}

}  // namespace detail

inline InstanceParse parse_instance(std::istream& in) {
    InstanceParse out;
    Instance& inst = out.inst;
    std::string line;
    int lineno = 0;
    bool header = false;
    auto fail = [&](const std::string& why) {
        out.error = "line " + std::to_string(lineno) + ": " + why;
        return out;
    };
    while (std::getline(in, line)) {
        lineno++;
        std::istringstream ls(detail::strip_comment(line));
        if (!header) {
            int p, t;
            if (!(ls >> p)) continue;  // blank / comment-only line
            if (!(ls >> t)) return fail("expected \"p t\" header");
            if (p < 3) return fail("p must be at least 3");
            inst.p = p;
            inst.t = t;
            header = true;
            continue;
        }
        std::string kw;
        if (!(ls >> kw)) continue;
        if (kw == "precolor") {
            int u, v, c;
            if (!(ls >> u >> v >> c)) return fail("expected \"precolor u v c\"");
            if (u < 1 || u > inst.p || v < 1 || v > inst.p || u == v)
                return fail("bad vertex pair " + std::to_string(u) + "," + std::to_string(v));
            if (c < 1 || c > inst.t) return fail("color " + std::to_string(c) + " out of range");
            auto key = detail::norm_pair(u - 1, v - 1);
            if (inst.precolor.count(key)) return fail("edge precolored twice");
            inst.precolor[key] = c;
        } else if (kw == "list") {
            int u, v;
            std::string colon;
            if (!(ls >> u >> v >> colon) || colon != ":")
                return fail("expected \"list u v : c1 c2 ...\"");
            if (u < 1 || u > inst.p || v < 1 || v > inst.p || u == v)
                return fail("bad vertex pair " + std::to_string(u) + "," + std::to_string(v));
            auto key = detail::norm_pair(u - 1, v - 1);
            std::set<int> colors(inst.lists[key].begin(), inst.lists[key].end());
            int c;
            while (ls >> c) {
                if (c < 1 || c > inst.t) return fail("color " + std::to_string(c) + " out of range");
                colors.insert(c);
            }
            inst.lists[key].assign(colors.begin(), colors.end());
        } else {
            return fail("unknown keyword \"" + kw + "\"");
        }
    }
    if (!header) {
        out.error = "empty input: missing \"p t\" header";
        return out;
    }
    out.ok = true;
    return out;
}

inline InstanceParse parse_instance_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        InstanceParse out;
        out.error = "cannot open " + path;
        return out;
    }
    return parse_instance(in);
}

inline std::string serialize_instance(const Instance& inst) {
    std::ostringstream os;
    os << inst.p << " " << inst.t << "\n";
    for (auto& [e, c] : inst.precolor)
        os << "precolor " << e.first + 1 << " " << e.second + 1 << " " << c << "\n";
    for (auto& [e, cl] : inst.lists) {
        if (cl.empty()) continue;
        os << "list " << e.first + 1 << " " << e.second + 1 << " :";
        for (int c : cl) os << " " << c;
        os << "\n";
    }
    return os.str();
}

// ---- host embedding -----------------------------------------------------

struct HostInstance {
    GraphIndex g;
    EdgeColoring phi;
    ListAssignment L;
    int real_vertices = 0;  // p; host vertex p (0-based) is the phantom if p is odd
};

// Build the K_{2n} solver input.  Fails if t does not match the color count
// of the host or the precoloring is not proper.
inline std::pair<bool, std::string> to_host(const Instance& inst, HostInstance& out) {
    int n = (inst.p + 1) / 2;
    if (n < 2) return {false, "instance too small: p = " + std::to_string(inst.p)};
    out.g = build_index(n);
    if (inst.t != out.g.m)
        return {false, "instance declares t = " + std::to_string(inst.t) + " but K_" +
                           std::to_string(inst.p) + " requires t = " + std::to_string(out.g.m)};
    out.real_vertices = inst.p;
    out.phi = EdgeColoring(out.g);
    out.L = ListAssignment(out.g);
    for (auto& [e, c] : inst.precolor) {
        int id = out.g.edge_id(e.first, e.second);
        if (!out.phi.can_set(id, c))
            return {false, "precoloring not proper at edge " + std::to_string(e.first + 1) + "," +
                               std::to_string(e.second + 1)};
        out.phi.set(id, c);
    }
    for (auto& [e, cl] : inst.lists)
        for (int c : cl) out.L.add(out.g.edge_id(e.first, e.second), c);
    return {true, ""};
}

// ---- coloring files -----------------------------------------------------

struct ColoringFile {
    int p = 0, t = 0;
    std::map<std::pair<int, int>, int> colors;  // 0-based (u<v) -> color
};

struct ColoringParse {
    bool ok = false;
    ColoringFile col;
    std::string error;
};

inline ColoringParse parse_coloring(std::istream& in) {
    ColoringParse out;
    std::string line;
    int lineno = 0;
    bool header = false;
    auto fail = [&](const std::string& why) {
        out.error = "line " + std::to_string(lineno) + ": " + why;
        return out;
    };
    while (std::getline(in, line)) {
        lineno++;
        std::istringstream ls(detail::strip_comment(line));
        if (!header) {
            if (!(ls >> out.col.p)) continue;
            if (!(ls >> out.col.t)) return fail("expected \"p t\" header");
            header = true;
            continue;
        }
        std::string kw;
        if (!(ls >> kw)) continue;
        if (kw != "edge") return fail("unknown keyword \"" + kw + "\"");
        int u, v, c;
        if (!(ls >> u >> v >> c)) return fail("expected \"edge u v c\"");
        if (u < 1 || u > out.col.p || v < 1 || v > out.col.p || u == v)
            return fail("bad vertex pair");
        if (c < 1 || c > out.col.t) return fail("color out of range");
        auto key = detail::norm_pair(u - 1, v - 1);
        if (out.col.colors.count(key)) return fail("edge colored twice");
        out.col.colors[key] = c;
    }
    if (!header) {
        out.error = "empty input: missing \"p t\" header";
        return out;
    }
    out.ok = true;
    return out;
}

inline ColoringParse parse_coloring_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        ColoringParse out;
        out.error = "cannot open " + path;
        return out;
    }
    return parse_coloring(in);
}

// Restrict a host coloring to the real edges and serialize.
inline std::string serialize_coloring(const Instance& inst, const GraphIndex& g,
                                      const EdgeColoring& h) {
    std::ostringstream os;
    os << inst.p << " " << inst.t << "\n";
    for (int u = 0; u < inst.p; u++)
        for (int v = u + 1; v < inst.p; v++)
            os << "edge " << u + 1 << " " << v + 1 << " " << h.color(g.edge_id(u, v)) << "\n";
    return os.str();
}

// Full independent check of a coloring file against an instance.
inline std::vector<std::string> verify_instance_coloring(const Instance& inst,
                                                         const ColoringFile& col) {
    std::vector<std::string> problems;
    auto edge_name = [](std::pair<int, int> e) {
        return std::to_string(e.first + 1) + "," + std::to_string(e.second + 1);
    };
    if (col.p != inst.p || col.t != inst.t) {
        problems.push_back("coloring header (" + std::to_string(col.p) + "," + std::to_string(col.t) +
                           ") does not match instance (" + std::to_string(inst.p) + "," +
                           std::to_string(inst.t) + ")");
        return problems;
    }
    std::vector<std::set<int>> seen(inst.p);
    for (int u = 0; u < inst.p; u++)
        for (int v = u + 1; v < inst.p; v++) {
            auto key = std::make_pair(u, v);
            auto it = col.colors.find(key);
            if (it == col.colors.end()) {
                problems.push_back("edge " + edge_name(key) + " missing");
                continue;
            }
            int c = it->second;
            if (!seen[u].insert(c).second)
                problems.push_back("color " + std::to_string(c) + " repeated at vertex " +
                                   std::to_string(u + 1));
            if (!seen[v].insert(c).second)
                problems.push_back("color " + std::to_string(c) + " repeated at vertex " +
                                   std::to_string(v + 1));
        }
    for (auto& [e, cl] : inst.lists) {
        auto it = col.colors.find(e);
        if (it != col.colors.end())
            for (int c : cl)
                if (c == it->second)
                    problems.push_back("edge " + edge_name(e) + " uses forbidden color " +
                                       std::to_string(c));
    }
    for (auto& [e, c] : inst.precolor) {
        auto it = col.colors.find(e);
        if (it != col.colors.end() && it->second != c)
            problems.push_back("edge " + edge_name(e) + " ignores precolor " + std::to_string(c));
    }
    return problems;
}

// ---- DOT export ---------------------------------------------------------

// Graphviz rendering: with a coloring every edge is labeled; without one,
// precolored edges are bold-labeled and edges with forbidden lists dashed.
inline std::string export_dot(const Instance& inst, const ColoringFile* col = nullptr) {
    std::ostringstream os;
    os << "graph instance {\n  layout=circo;\n  node [shape=circle];\n";
    for (int v = 0; v < inst.p; v++) os << "  v" << v + 1 << ";\n";
    for (int u = 0; u < inst.p; u++)
        for (int v = u + 1; v < inst.p; v++) {
            auto key = std::make_pair(u, v);
            os << "  v" << u + 1 << " -- v" << v + 1;
            std::vector<std::string> attrs;
            if (col) {
                auto it = col->colors.find(key);
                if (it != col->colors.end())
                    attrs.push_back("label=\"" + std::to_string(it->second) + "\"");
            }
            if (inst.precolor.count(key)) {
                if (!col)
                    attrs.push_back("label=\"" + std::to_string(inst.precolor.at(key)) + "\"");
                attrs.push_back("penwidth=2");
            }
            auto lit = inst.lists.find(key);
            if (lit != inst.lists.end() && !lit->second.empty()) {
                attrs.push_back("style=dashed");
                std::string forb = "forbid";
                for (int c : lit->second) forb += " " + std::to_string(c);
                attrs.push_back("tooltip=\"" + forb + "\"");
            }
            if (!attrs.empty()) {
                os << " [";
                for (size_t i = 0; i < attrs.size(); i++) os << (i ? "," : "") << attrs[i];
                os << "]";
            }
            os << ";\n";
        }
    os << "}\n";
    return os.str();
}

}  // namespace kex

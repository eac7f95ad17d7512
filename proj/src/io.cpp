#include "mimic/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

namespace mimic {

namespace {

[[noreturn]] void fail(int line, const std::string& what) {
    throw InputError("line " + std::to_string(line) + ": " + what);
}

bool parse_int(const std::string& tok, long long& out) {
    if (tok.empty()) return false;
    size_t i = tok[0] == '-' ? 1 : 0;
    if (i == tok.size()) return false;
    for (; i < tok.size(); ++i)
        if (tok[i] < '0' || tok[i] > '9') return false;
    try {
        out = std::stoll(tok);
    } catch (...) {
        return false;
    }
    return true;
}

}  // namespace

std::vector<VertexId> GraphInput::vertex_list() const {
    std::vector<VertexId> out(n);
    for (int i = 0; i < n; ++i) out[i] = i + 1;
    return out;
}

GraphInput parse_graph_text(std::istream& in) {
    GraphInput g;
    bool have_header = false;
    long long m_declared = 0, k_declared = 0;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string kind;
        if (!(ls >> kind)) continue;  // blank line
        if (kind == "c") continue;
        if (kind == "p") {
            if (have_header) fail(lineno, "duplicate header");
            long long n;
            std::string a, b, cc, extra;
            if (!(ls >> a >> b >> cc)) fail(lineno, "header needs 'p <n> <m> <k>'");
            if (ls >> extra) fail(lineno, "trailing tokens in header");
            if (!parse_int(a, n) || !parse_int(b, m_declared) || !parse_int(cc, k_declared))
                fail(lineno, "header fields must be integers");
            if (n < 1) fail(lineno, "vertex count must be positive");
            g.n = static_cast<int>(n);
            have_header = true;
            continue;
        }
        if (!have_header) fail(lineno, "record before 'p' header");
        if (kind == "e") {
            std::string a, b, w;
            if (!(ls >> a >> b >> w)) fail(lineno, "edge needs 'e <u> <v> <w>'");
            long long u, v, wt;
            if (!parse_int(a, u) || !parse_int(b, v)) fail(lineno, "edge endpoints must be integers");
            if (!parse_int(w, wt)) fail(lineno, "edge weight must be an integer (fractional capacities unsupported)");
            if (u < 1 || u > g.n || v < 1 || v > g.n) fail(lineno, "edge endpoint out of range");
            if (wt < 1) fail(lineno, "edge weight must be >= 1");
            g.edges.push_back({static_cast<VertexId>(u), static_cast<VertexId>(v), wt});
            continue;
        }
        if (kind == "t") {
            std::string a;
            if (!(ls >> a)) fail(lineno, "terminal needs 't <v>'");
            long long v;
            if (!parse_int(a, v)) fail(lineno, "terminal id must be an integer");
            if (v < 1 || v > g.n) fail(lineno, "terminal out of range");
            for (VertexId old : g.terminals)
                if (old == v) fail(lineno, "duplicate terminal");
            g.terminals.push_back(static_cast<VertexId>(v));
            continue;
        }
        fail(lineno, "unknown record type '" + kind + "'");
    }
    if (!have_header) throw InputError("line 1: missing 'p' header");
    if (static_cast<long long>(g.edges.size()) != m_declared)
        throw InputError("header declares " + std::to_string(m_declared) + " edges, file has " +
                         std::to_string(g.edges.size()));
    if (static_cast<long long>(g.terminals.size()) != k_declared)
        throw InputError("header declares " + std::to_string(k_declared) + " terminals, file has " +
                         std::to_string(g.terminals.size()));
    return g;
}

GraphInput read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    return parse_graph_text(in);
}

std::string format_graph_text(const Multigraph& g, const TerminalSet& t) {
    std::map<VertexId, int> renumber;
    for (VertexId v : g.vertices()) renumber[v] = static_cast<int>(renumber.size()) + 1;

    struct Line {
        int u, v;
        EdgeId id;
    };
    std::vector<Line> lines;
    lines.reserve(g.edges().size());
    for (const EdgeRec& e : g.edges()) {
        int u = renumber.at(e.u), v = renumber.at(e.v);
        if (u > v) std::swap(u, v);
        lines.push_back({u, v, e.id});
    }
    std::sort(lines.begin(), lines.end(), [](const Line& a, const Line& b) {
        return std::tie(a.u, a.v, a.id) < std::tie(b.u, b.v, b.id);
    });

    std::ostringstream out;
    out << "p " << g.vertex_count() << " " << lines.size() << " " << t.size() << "\n";
    for (const Line& l : lines) out << "e " << l.u << " " << l.v << " 1\n";
    for (VertexId v : t.order()) out << "t " << renumber.at(v) << "\n";
    return out.str();
}

void write_graph_file(const std::string& path, const Multigraph& g, const TerminalSet& t) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw InputError("cannot write '" + tmp + "'");
        out << format_graph_text(g, t);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) throw InputError("cannot rename into '" + path + "'");
}

}  // namespace mimic

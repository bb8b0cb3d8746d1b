#include "hygirth/io.hpp"

#include <fstream>
#include <sstream>

#include "hygirth/error.hpp"

namespace hygirth {

namespace {

// Next non-comment, non-blank line; false at end of stream.
bool next_content_line(std::istream& in, std::string& line) {
    while (std::getline(in, line)) {
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        return true;
    }
    return false;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) fail("ParseError", "cannot open " + path + " for writing");
    return out;
}

std::ifstream open_in(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("ParseError", "cannot open " + path);
    return in;
}

}  // namespace

AnyHypergraph read_hyg(std::istream& in) {
    std::string line;
    if (!next_content_line(in, line)) fail("ParseError", "missing hypergraph header");
    std::istringstream header(line);
    std::string tag, flag;
    int n = -1, m = -1;
    header >> tag >> n >> m;
    if (tag != "hypergraph" || n < 0 || m < 0)
        fail("ParseError", "expected 'hypergraph <n> <m>' header");
    bool multi = false;
    if (header >> flag) {
        if (flag != "multi") fail("ParseError", "unknown header flag '" + flag + "'");
        multi = true;
        std::string extra;
        if (header >> extra) fail("ParseError", "trailing header token '" + extra + "'");
    }
    std::vector<std::vector<int>> edges;
    for (int i = 0; i < m; ++i) {
        if (!next_content_line(in, line)) fail("ParseError", "fewer edge lines than declared");
        std::istringstream es(line);
        std::vector<int> edge;
        int v;
        while (es >> v) edge.push_back(v);
        if (!es.eof()) fail("ParseError", "malformed edge line: " + line);
        edges.push_back(std::move(edge));
    }
    // Structural problems in the declared edges are parse errors here.
    try {
        if (multi) return MultiHypergraph(n, std::move(edges));
        return Hypergraph(n, std::move(edges));
    } catch (const Error& e) {
        fail("ParseError", e.what());
    }
}

AnyHypergraph read_hyg_file(const std::string& path) {
    auto in = open_in(path);
    return read_hyg(in);
}

Hypergraph read_simple_hyg_file(const std::string& path) {
    auto any = read_hyg_file(path);
    if (auto* h = std::get_if<Hypergraph>(&any)) return std::move(*h);
    fail("ParseError", path + " holds a multihypergraph where a simple one is required");
}

namespace {

template <typename H>
void write_hyg_impl(std::ostream& out, const H& h, bool multi) {
    out << "hypergraph " << h.n() << ' ' << h.m();
    if (multi) out << " multi";
    out << '\n';
    for (const auto& e : h.edges()) {
        for (std::size_t i = 0; i < e.size(); ++i) out << (i ? " " : "") << e[i];
        out << '\n';
    }
}

}  // namespace

void write_hyg(std::ostream& out, const Hypergraph& h) { write_hyg_impl(out, h, false); }
void write_hyg(std::ostream& out, const MultiHypergraph& h) { write_hyg_impl(out, h, true); }

void write_hyg_file(const std::string& path, const Hypergraph& h) {
    auto out = open_out(path);
    write_hyg(out, h);
}

void write_hyg_file(const std::string& path, const MultiHypergraph& h) {
    auto out = open_out(path);
    write_hyg(out, h);
}

Graph read_elg(std::istream& in) {
    std::string line;
    if (!next_content_line(in, line)) fail("ParseError", "missing graph header");
    std::istringstream header(line);
    std::string tag;
    int n = -1, m = -1;
    header >> tag >> n >> m;
    if (tag != "graph" || n < 0 || m < 0) fail("ParseError", "expected 'graph <n> <m>' header");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < m; ++i) {
        if (!next_content_line(in, line)) fail("ParseError", "fewer edge lines than declared");
        std::istringstream es(line);
        int u, v;
        if (!(es >> u >> v)) fail("ParseError", "malformed edge line: " + line);
        edges.emplace_back(u, v);
    }
    try {
        return Graph(n, std::move(edges));
    } catch (const Error& e) {
        fail("ParseError", e.what());
    }
}

Graph read_elg_file(const std::string& path) {
    auto in = open_in(path);
    return read_elg(in);
}

void write_elg(std::ostream& out, const Graph& g) {
    out << "graph " << g.n() << ' ' << g.m() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

void write_elg_file(const std::string& path, const Graph& g) {
    auto out = open_out(path);
    write_elg(out, g);
}

}  // namespace hygirth

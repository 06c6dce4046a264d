#include "eck/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace eck {

namespace {

[[noreturn]] void fail(int line, const std::string& message) {
    throw std::invalid_argument("line " + std::to_string(line) + ": " + message);
}

bool parse_int(const std::string& token, long long& out) {
    if (token.empty()) return false;
    std::size_t pos = 0;
    try {
        out = std::stoll(token, &pos);
    } catch (const std::exception&) {
        return false;
    }
    return pos == token.size();
}

long long expect_int(const std::string& token, int line, const char* what) {
    long long value;
    if (!parse_int(token, value)) fail(line, std::string("expected ") + what + ", got '" + token + "'");
    return value;
}

}  // namespace

Graph read_graph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    long long n = -1, m = -1;
    std::vector<std::pair<Vertex, Vertex>> edges;

    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream tokens(line);
        std::string kind;
        if (!(tokens >> kind)) continue;  // blank line
        if (kind == "c") continue;

        if (kind == "p") {
            if (n >= 0) fail(line_no, "duplicate header");
            std::string a, b, extra;
            if (!(tokens >> a >> b)) fail(line_no, "header needs vertex and edge counts");
            if (tokens >> extra) fail(line_no, "trailing tokens after header");
            n = expect_int(a, line_no, "vertex count");
            m = expect_int(b, line_no, "edge count");
            if (n < 0 || m < 0) fail(line_no, "counts must be non-negative");
        } else if (kind == "e") {
            if (n < 0) fail(line_no, "edge before header");
            if (static_cast<long long>(edges.size()) == m)
                fail(line_no, "more edge lines than the declared " + std::to_string(m));
            std::string a, b, extra;
            if (!(tokens >> a >> b)) fail(line_no, "edge needs two endpoints");
            if (tokens >> extra) fail(line_no, "trailing tokens after edge");
            long long u = expect_int(a, line_no, "vertex id");
            long long v = expect_int(b, line_no, "vertex id");
            if (u < 0 || u >= n || v < 0 || v >= n)
                fail(line_no, "vertex out of range [0," + std::to_string(n) + ")");
            edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
        } else {
            fail(line_no, "unknown line type '" + kind + "'");
        }
    }

    if (n < 0) throw std::invalid_argument("missing 'p <n> <m>' header");
    if (static_cast<long long>(edges.size()) != m)
        throw std::invalid_argument("header declares " + std::to_string(m) + " edges, file has " +
                                    std::to_string(edges.size()));
    return Graph(static_cast<int>(n), edges);
}

std::string write_graph(const Graph& g) {
    std::ostringstream out;
    out << "p " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const Edge& e : g.edges()) out << "e " << e.u << ' ' << e.v << '\n';
    return out.str();
}

std::vector<Colour> read_colouring(const std::string& text, const Graph& g) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    std::vector<Colour> colours(static_cast<std::size_t>(g.edge_count()), uncoloured);
    int assigned = 0;

    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream tokens(line);
        std::string a, b, c, extra;
        if (!(tokens >> a)) continue;  // blank line
        if (!(tokens >> b >> c)) fail(line_no, "expected '<u> <v> <colour>'");
        if (tokens >> extra) fail(line_no, "trailing tokens");
        long long u = expect_int(a, line_no, "vertex id");
        long long v = expect_int(b, line_no, "vertex id");
        long long colour = expect_int(c, line_no, "colour");
        if (u < 0 || u >= g.vertex_count() || v < 0 || v >= g.vertex_count())
            fail(line_no, "vertex out of range [0," + std::to_string(g.vertex_count()) + ")");
        EdgeId e = g.find_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
        if (e < 0)
            fail(line_no, "(" + std::to_string(u) + "," + std::to_string(v) + ") is not an edge");
        if (colours[static_cast<std::size_t>(e)] != uncoloured)
            fail(line_no, "edge (" + std::to_string(u) + "," + std::to_string(v) +
                              ") coloured twice");
        if (colour < 1) fail(line_no, "colours are positive integers");
        colours[static_cast<std::size_t>(e)] = static_cast<Colour>(colour);
        ++assigned;
    }

    if (assigned != g.edge_count())
        throw std::invalid_argument("colouring covers " + std::to_string(assigned) + " of " +
                                    std::to_string(g.edge_count()) + " edges");
    return colours;
}

std::string write_colouring(const Graph& g, std::span<const Colour> colours) {
    if (static_cast<int>(colours.size()) != g.edge_count())
        throw std::invalid_argument("colour vector size does not match edge count");
    std::ostringstream out;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (colours[static_cast<std::size_t>(e)] == uncoloured)
            throw std::invalid_argument("cannot serialize an incomplete colouring");
        out << g.edge(e).u << ' ' << g.edge(e).v << ' ' << colours[static_cast<std::size_t>(e)]
            << '\n';
    }
    return out.str();
}

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

}  // namespace

Graph read_graph_file(const std::string& path) { return read_graph(slurp(path)); }

std::vector<Colour> read_colouring_file(const std::string& path, const Graph& g) {
    return read_colouring(slurp(path), g);
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open '" + path + "' for writing");
    out << text;
    if (!out) throw std::invalid_argument("failed writing '" + path + "'");
}

}  // namespace eck

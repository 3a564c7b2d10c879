#include "subcount/graph.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include <absl/container/flat_hash_set.h>

#include "subcount/errors.hpp"

namespace subcount {

namespace {

std::uint64_t pack_edge(Vertex u, Vertex v) {
    if (u > v) std::swap(u, v);
    return (static_cast<std::uint64_t>(u) << 32) | v;
}

}  // namespace

UndirectedGraph UndirectedGraph::from_edges(Vertex n, std::span<const Edge> edges) {
    UndirectedGraph g;
    g.n_ = n;
    g.m_ = edges.size();
    g.offsets_.assign(static_cast<std::size_t>(n) + 1, 0);

    absl::flat_hash_set<std::uint64_t> seen;
    seen.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u >= n || v >= n) throw Error("edge endpoint out of range");
        if (u == v) throw Error("self-loop on vertex " + std::to_string(u));
        if (!seen.insert(pack_edge(u, v)).second)
            throw Error("duplicate edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
        g.offsets_[u + 1]++;
        g.offsets_[v + 1]++;
    }
    for (Vertex v = 0; v < n; ++v) g.offsets_[v + 1] += g.offsets_[v];

    g.adj_.resize(2 * edges.size());
    std::vector<std::uint64_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    for (auto [u, v] : edges) {
        g.adj_[cursor[u]++] = v;
        g.adj_[cursor[v]++] = u;
    }
    for (Vertex v = 0; v < n; ++v)
        std::sort(g.adj_.begin() + g.offsets_[v], g.adj_.begin() + g.offsets_[v + 1]);
    return g;
}

UndirectedGraph UndirectedGraph::from_edges(Vertex n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
}

bool UndirectedGraph::has_edge(Vertex u, Vertex v) const {
    if (u >= n_ || v >= n_) return false;
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> UndirectedGraph::edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v : neighbors(u))
            if (u < v) out.emplace_back(u, v);
    return out;
}

UndirectedGraph parse_edge_list(std::istream& in) {
    std::vector<Edge> edges;
    absl::flat_hash_set<std::uint64_t> seen;
    Vertex max_id = 0;
    bool any_vertex = false;

    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t i = 0;
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i == line.size() || line[i] == '#') continue;

        std::istringstream ls(line.substr(i));
        std::uint64_t a = 0, b = 0;
        if (!(ls >> a >> b))
            throw ParseError(lineno, "expected two nonnegative integers, got \"" + line + "\"");
        std::string rest;
        if (ls >> rest) throw ParseError(lineno, "trailing token \"" + rest + "\"");
        if (a > std::numeric_limits<Vertex>::max() - 1 || b > std::numeric_limits<Vertex>::max() - 1)
            throw ParseError(lineno, "vertex id too large");

        auto u = static_cast<Vertex>(a), v = static_cast<Vertex>(b);
        if (u == v) throw SelfLoopError(lineno, "self-loop on vertex " + std::to_string(u));
        if (!seen.insert(pack_edge(u, v)).second)
            throw DuplicateEdgeError(
                lineno, "duplicate edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
        edges.emplace_back(u, v);
        max_id = std::max({max_id, u, v});
        any_vertex = true;
    }
    return UndirectedGraph::from_edges(any_vertex ? max_id + 1 : 0, edges);
}

UndirectedGraph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    return parse_edge_list(in);
}

UndirectedGraph load_edge_list(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    return parse_edge_list(in);
}

void write_edge_list(const UndirectedGraph& g, std::ostream& out) {
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

std::string write_edge_list(const UndirectedGraph& g) {
    std::ostringstream out;
    write_edge_list(g, out);
    return out.str();
}

void save_edge_list(const UndirectedGraph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot open " + path + " for writing");
    write_edge_list(g, out);
}

}  // namespace subcount

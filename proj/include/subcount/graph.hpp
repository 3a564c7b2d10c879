#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace subcount {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph over dense vertex ids 0..n-1, stored as CSR with
/// ascending neighbor lists. Immutable after construction; safe to share
/// read-only across threads.
class UndirectedGraph {
public:
    UndirectedGraph() = default;

    /// Builds a graph with `n` vertices (isolated ids permitted). Throws
    /// Error on out-of-range endpoints, self-loops, or duplicate edges.
    static UndirectedGraph from_edges(Vertex n, std::span<const Edge> edges);
    static UndirectedGraph from_edges(Vertex n, std::initializer_list<Edge> edges);

    Vertex vertex_count() const { return n_; }
    std::uint64_t edge_count() const { return m_; }

    std::span<const Vertex> neighbors(Vertex v) const {
        return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
    }
    std::uint32_t degree(Vertex v) const {
        return static_cast<std::uint32_t>(offsets_[v + 1] - offsets_[v]);
    }
    bool has_edge(Vertex u, Vertex v) const;

    /// Edges with min endpoint first, sorted lexicographically.
    std::vector<Edge> edges() const;

    bool operator==(const UndirectedGraph& other) const = default;

private:
    Vertex n_ = 0;
    std::uint64_t m_ = 0;
    std::vector<std::uint64_t> offsets_{0};
    std::vector<Vertex> adj_;
};

/// Parses the "u v" edge-list format: one edge per line, whitespace
/// separated, '#' comment lines and blank lines ignored. Vertices are the
/// integers that appear; n = max id + 1. Duplicate edges and self-loops are
/// errors, not silently dropped.
UndirectedGraph parse_edge_list(std::istream& in);
UndirectedGraph parse_edge_list(const std::string& text);
UndirectedGraph load_edge_list(const std::string& path);

/// Canonical inverse of parse_edge_list: min endpoint first, lexicographic
/// order, one edge per line. parse(write(g)) == g.
void write_edge_list(const UndirectedGraph& g, std::ostream& out);
std::string write_edge_list(const UndirectedGraph& g);
void save_edge_list(const UndirectedGraph& g, const std::string& path);

}  // namespace subcount

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "subcount/graph.hpp"

namespace subcount {

/// Result of min-degree peeling: `order[i]` is the vertex removed at step i,
/// `rank` is the inverse permutation, and `degeneracy` is the maximum
/// residual degree seen at any removal.
struct DegeneracyOrdering {
    std::vector<Vertex> order;
    std::vector<Vertex> rank;
    std::uint32_t degeneracy = 0;
};

/// Peels minimum-degree vertices with a bucket queue (lazy stale entries,
/// per-bucket min-id pops), so ties break deterministically on the smallest
/// vertex id.
DegeneracyOrdering degeneracy_ordering(const UndirectedGraph& g);

/// DAG obtained by directing every edge {u,v} from the earlier to the later
/// endpoint of a total vertex order. Out-neighbor lists ascending; immutable
/// after construction.
class OrientedGraph {
public:
    OrientedGraph() = default;

    Vertex vertex_count() const { return n_; }
    std::uint64_t edge_count() const { return m_; }

    std::span<const Vertex> out_neighbors(Vertex v) const {
        return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
    }
    std::uint32_t out_degree(Vertex v) const {
        return static_cast<std::uint32_t>(offsets_[v + 1] - offsets_[v]);
    }
    std::uint32_t in_degree(Vertex v) const { return in_degree_[v]; }
    std::uint32_t max_out_degree() const;

    bool has_edge(Vertex u, Vertex v) const;

    /// Position of v in the ordering used to orient.
    Vertex rank(Vertex v) const { return rank_[v]; }
    std::span<const Vertex> ordering() const { return order_; }

    /// All directed edges, grouped by tail in ascending order. Kept
    /// flattened so counting workers can split the range.
    std::span<const Edge> edges() const { return edges_; }

private:
    friend OrientedGraph orient(const UndirectedGraph&, std::span<const Vertex>);

    Vertex n_ = 0;
    std::uint64_t m_ = 0;
    std::vector<std::uint64_t> offsets_{0};
    std::vector<Vertex> adj_;
    std::vector<std::uint32_t> in_degree_;
    std::vector<Vertex> order_;
    std::vector<Vertex> rank_;
    std::vector<Edge> edges_;
};

/// Orients g along `order` (edge {u,v} becomes (u,v) iff u precedes v).
/// Throws InvalidOrderingError if `order` is not a permutation of 0..n-1.
OrientedGraph orient(const UndirectedGraph& g, std::span<const Vertex> order);

OrientedGraph orient_by_degeneracy(const UndirectedGraph& g);

/// True iff every out-degree under orient(g, order) is at most k; a witness
/// ordering passing this certifies degeneracy <= k.
bool verify_degeneracy_upper_bound(const UndirectedGraph& g, std::span<const Vertex> order,
                                   std::uint32_t k);

}  // namespace subcount

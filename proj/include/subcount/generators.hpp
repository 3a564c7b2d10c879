#pragma once

#include <cstdint>

#include "subcount/graph.hpp"

namespace subcount {

/// Erdos-Renyi G(n,p); each pair independently with probability p.
UndirectedGraph gnp(Vertex n, double p, std::uint64_t seed);

/// Uniform random simple graph with exactly m edges.
UndirectedGraph gnm(Vertex n, std::uint64_t m, std::uint64_t seed);

/// Preferential attachment: clique seed on d+1 vertices, then each new
/// vertex attaches to d distinct existing vertices sampled proportional to
/// degree. Degeneracy is at most d.
UndirectedGraph preferential_attachment(Vertex n, std::uint32_t d, std::uint64_t seed);

/// Replaces every edge by a length-2 path; the result has degeneracy <= 2.
UndirectedGraph subdivide(const UndirectedGraph& g);

/// Subdivision of a random graph sized so the output has about
/// `target_edges` edges.
UndirectedGraph subdivided_gnm(std::uint64_t target_edges, std::uint64_t seed);

UndirectedGraph complete_graph(Vertex n);
UndirectedGraph complete_bipartite(Vertex a, Vertex b);
UndirectedGraph cycle_graph(Vertex n);
UndirectedGraph path_graph(Vertex n);
UndirectedGraph star_graph(Vertex leaves);
UndirectedGraph petersen_graph();
UndirectedGraph hypercube_q3();

/// Disjoint union; the second graph's ids are shifted past the first's.
UndirectedGraph disjoint_union(const UndirectedGraph& a, const UndirectedGraph& b);

}  // namespace subcount

#include "subcount/generators.hpp"

#include <random>

#include <absl/container/flat_hash_set.h>

#include "subcount/errors.hpp"

namespace subcount {

namespace {

std::uint64_t pack(Vertex u, Vertex v) {
    if (u > v) std::swap(u, v);
    return (static_cast<std::uint64_t>(u) << 32) | v;
}

}  // namespace

UndirectedGraph gnp(Vertex n, double p, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (coin(rng)) edges.emplace_back(u, v);
    return UndirectedGraph::from_edges(n, edges);
}

UndirectedGraph gnm(Vertex n, std::uint64_t m, std::uint64_t seed) {
    const std::uint64_t max_edges = static_cast<std::uint64_t>(n) * (n - 1) / 2;
    if (m > max_edges) throw UnsupportedError("gnm: m exceeds the number of vertex pairs");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Vertex> pick(0, n - 1);
    absl::flat_hash_set<std::uint64_t> seen;
    std::vector<Edge> edges;
    edges.reserve(m);
    while (edges.size() < m) {
        Vertex u = pick(rng), v = pick(rng);
        if (u == v) continue;
        if (!seen.insert(pack(u, v)).second) continue;
        if (u > v) std::swap(u, v);
        edges.emplace_back(u, v);
    }
    return UndirectedGraph::from_edges(n, edges);
}

UndirectedGraph preferential_attachment(Vertex n, std::uint32_t d, std::uint64_t seed) {
    if (d < 1 || n < d + 1) throw UnsupportedError("preferential_attachment needs n >= d+1 >= 2");
    std::mt19937_64 rng(seed);
    std::vector<Edge> edges;
    std::vector<Vertex> endpoints;  // one entry per edge endpoint: degree-weighted pool
    for (Vertex u = 0; u < d + 1; ++u)
        for (Vertex v = u + 1; v < d + 1; ++v) {
            edges.emplace_back(u, v);
            endpoints.push_back(u);
            endpoints.push_back(v);
        }
    std::vector<Vertex> targets;
    for (Vertex v = d + 1; v < n; ++v) {
        targets.clear();
        while (targets.size() < d) {
            std::uniform_int_distribution<std::size_t> pick(0, endpoints.size() - 1);
            Vertex t = endpoints[pick(rng)];
            bool dup = false;
            for (Vertex x : targets) dup |= (x == t);
            if (!dup) targets.push_back(t);
        }
        for (Vertex t : targets) {
            edges.emplace_back(t, v);
            endpoints.push_back(t);
            endpoints.push_back(v);
        }
    }
    return UndirectedGraph::from_edges(n, edges);
}

UndirectedGraph subdivide(const UndirectedGraph& g) {
    std::vector<Edge> edges;
    edges.reserve(2 * g.edge_count());
    Vertex next = g.vertex_count();
    for (auto [u, v] : g.edges()) {
        edges.emplace_back(u, next);
        edges.emplace_back(next, v);
        ++next;
    }
    return UndirectedGraph::from_edges(next, edges);
}

UndirectedGraph subdivided_gnm(std::uint64_t target_edges, std::uint64_t seed) {
    std::uint64_t base_m = std::max<std::uint64_t>(1, target_edges / 2);
    Vertex base_n = static_cast<Vertex>(std::max<std::uint64_t>(4, base_m / 2));
    return subdivide(gnm(base_n, base_m, seed));
}

UndirectedGraph complete_graph(Vertex n) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return UndirectedGraph::from_edges(n, edges);
}

UndirectedGraph complete_bipartite(Vertex a, Vertex b) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < a; ++u)
        for (Vertex v = 0; v < b; ++v) edges.emplace_back(u, a + v);
    return UndirectedGraph::from_edges(a + b, edges);
}

UndirectedGraph cycle_graph(Vertex n) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u + 1 < n; ++u) edges.emplace_back(u, u + 1);
    edges.emplace_back(0, n - 1);
    return UndirectedGraph::from_edges(n, edges);
}

UndirectedGraph path_graph(Vertex n) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u + 1 < n; ++u) edges.emplace_back(u, u + 1);
    return UndirectedGraph::from_edges(n, edges);
}

UndirectedGraph star_graph(Vertex leaves) {
    std::vector<Edge> edges;
    for (Vertex v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
    return UndirectedGraph::from_edges(leaves + 1, edges);
}

UndirectedGraph petersen_graph() {
    std::vector<Edge> edges;
    for (Vertex i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);            // outer cycle
        edges.emplace_back(5 + i, 5 + (i + 2) % 5);    // inner pentagram
        edges.emplace_back(i, 5 + i);                  // spokes
    }
    return UndirectedGraph::from_edges(10, edges);
}

UndirectedGraph hypercube_q3() {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < 8; ++u)
        for (unsigned b = 0; b < 3; ++b) {
            Vertex v = u ^ (1u << b);
            if (u < v) edges.emplace_back(u, v);
        }
    return UndirectedGraph::from_edges(8, edges);
}

UndirectedGraph disjoint_union(const UndirectedGraph& a, const UndirectedGraph& b) {
    std::vector<Edge> edges = a.edges();
    for (auto [u, v] : b.edges())
        edges.emplace_back(u + a.vertex_count(), v + a.vertex_count());
    return UndirectedGraph::from_edges(a.vertex_count() + b.vertex_count(), edges);
}

}  // namespace subcount

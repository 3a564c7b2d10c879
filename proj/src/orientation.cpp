#include "subcount/orientation.hpp"

#include <algorithm>

#include "subcount/errors.hpp"

namespace subcount {

DegeneracyOrdering degeneracy_ordering(const UndirectedGraph& g) {
    const Vertex n = g.vertex_count();
    DegeneracyOrdering out;
    out.order.reserve(n);
    out.rank.assign(n, 0);

    std::vector<std::uint32_t> deg(n);
    std::uint32_t max_deg = 0;
    for (Vertex v = 0; v < n; ++v) {
        deg[v] = g.degree(v);
        max_deg = std::max(max_deg, deg[v]);
    }

    // bucket[d] is a min-heap on vertex id; entries go stale when a vertex's
    // degree drops, so each pop is validated against deg[].
    std::vector<std::vector<Vertex>> bucket(max_deg + 1);
    for (Vertex v = 0; v < n; ++v) bucket[deg[v]].push_back(v);
    for (auto& b : bucket) std::make_heap(b.begin(), b.end(), std::greater<>());

    std::vector<char> removed(n, 0);
    std::uint32_t d = 0;
    for (Vertex step = 0; step < n; ++step) {
        while (d > 0 && !bucket[d - 1].empty()) --d;
        Vertex v = 0;
        for (;; ++d) {
            auto& b = bucket[d];
            bool found = false;
            while (!b.empty()) {
                std::pop_heap(b.begin(), b.end(), std::greater<>());
                Vertex cand = b.back();
                b.pop_back();
                if (!removed[cand] && deg[cand] == d) {
                    v = cand;
                    found = true;
                    break;
                }
            }
            if (found) break;
        }
        out.degeneracy = std::max(out.degeneracy, d);
        removed[v] = 1;
        out.rank[v] = step;
        out.order.push_back(v);
        for (Vertex w : g.neighbors(v)) {
            if (removed[w]) continue;
            --deg[w];
            bucket[deg[w]].push_back(w);
            std::push_heap(bucket[deg[w]].begin(), bucket[deg[w]].end(), std::greater<>());
        }
    }
    return out;
}

OrientedGraph orient(const UndirectedGraph& g, std::span<const Vertex> order) {
    const Vertex n = g.vertex_count();
    if (order.size() != n) throw InvalidOrderingError("ordering size does not match vertex count");
    std::vector<Vertex> rank(n, n);
    for (Vertex i = 0; i < n; ++i) {
        Vertex v = order[i];
        if (v >= n || rank[v] != n) throw InvalidOrderingError("ordering is not a permutation");
        rank[v] = i;
    }

    OrientedGraph og;
    og.n_ = n;
    og.m_ = g.edge_count();
    og.order_.assign(order.begin(), order.end());
    og.rank_ = std::move(rank);
    og.offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
    og.in_degree_.assign(n, 0);

    for (Vertex u = 0; u < n; ++u)
        for (Vertex v : g.neighbors(u))
            if (og.rank_[u] < og.rank_[v]) {
                og.offsets_[u + 1]++;
                og.in_degree_[v]++;
            }
    for (Vertex v = 0; v < n; ++v) og.offsets_[v + 1] += og.offsets_[v];

    og.adj_.resize(og.m_);
    std::vector<std::uint64_t> cursor(og.offsets_.begin(), og.offsets_.end() - 1);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v : g.neighbors(u))
            if (og.rank_[u] < og.rank_[v]) og.adj_[cursor[u]++] = v;
    // neighbor lists inherit ascending order from g

    og.edges_.reserve(og.m_);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v : og.out_neighbors(u)) og.edges_.emplace_back(u, v);
    return og;
}

OrientedGraph orient_by_degeneracy(const UndirectedGraph& g) {
    return orient(g, degeneracy_ordering(g).order);
}

std::uint32_t OrientedGraph::max_out_degree() const {
    std::uint32_t best = 0;
    for (Vertex v = 0; v < n_; ++v) best = std::max(best, out_degree(v));
    return best;
}

bool OrientedGraph::has_edge(Vertex u, Vertex v) const {
    if (u >= n_ || v >= n_) return false;
    auto nb = out_neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

bool verify_degeneracy_upper_bound(const UndirectedGraph& g, std::span<const Vertex> order,
                                   std::uint32_t k) {
    const Vertex n = g.vertex_count();
    if (order.size() != n) throw InvalidOrderingError("ordering size does not match vertex count");
    std::vector<Vertex> rank(n, n);
    for (Vertex i = 0; i < n; ++i) {
        Vertex v = order[i];
        if (v >= n || rank[v] != n) throw InvalidOrderingError("ordering is not a permutation");
        rank[v] = i;
    }
    for (Vertex u = 0; u < n; ++u) {
        std::uint32_t out = 0;
        for (Vertex v : g.neighbors(u))
            if (rank[u] < rank[v]) ++out;
        if (out > k) return false;
    }
    return true;
}

}  // namespace subcount

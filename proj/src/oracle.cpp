#include "subcount/oracle.hpp"

#include <algorithm>
#include <vector>

#include "subcount/errors.hpp"

namespace subcount {

namespace {

bool sorted_contains(const std::vector<Vertex>& v, Vertex x) {
    return std::binary_search(v.begin(), v.end(), x);
}

// BFS order over the pattern so that every vertex after the first has an
// already-placed neighbor to anchor its candidate pool.
std::vector<unsigned> bfs_order(unsigned k, const std::vector<std::vector<unsigned>>& nb) {
    std::vector<unsigned> order{0};
    std::vector<char> seen(k, 0);
    seen[0] = 1;
    for (std::size_t head = 0; head < order.size(); ++head)
        for (unsigned w : nb[order[head]])
            if (!seen[w]) seen[w] = 1, order.push_back(w);
    return order;
}

}  // namespace

BigInt oracle_count(const UndirectedGraph& g, const Pattern& h) {
    const unsigned k = h.k;
    const Vertex n = g.vertex_count();
    if (n < k) return 0;

    // The oracle keeps its own adjacency copies and membership tests.
    std::vector<std::vector<Vertex>> adj(n);
    for (Vertex v = 0; v < n; ++v) {
        auto nb = g.neighbors(v);
        adj[v].assign(nb.begin(), nb.end());
    }

    std::vector<std::vector<unsigned>> pnb(k);
    for (auto [a, b] : h.edges) {
        pnb[a].push_back(b);
        pnb[b].push_back(a);
    }
    std::vector<unsigned> order = bfs_order(k, pnb);
    std::vector<unsigned> pos(k);
    for (unsigned i = 0; i < k; ++i) pos[order[i]] = i;

    // For each placement step: the anchor position and every earlier
    // position the new vertex must be adjacent to.
    std::vector<unsigned> anchor(k, 0);
    std::vector<std::vector<unsigned>> must(k);
    for (unsigned i = 1; i < k; ++i) {
        unsigned v = order[i];
        for (unsigned w : pnb[v])
            if (pos[w] < i) must[i].push_back(pos[w]);
        anchor[i] = must[i].front();
    }

    std::uint64_t steps = 0;
    std::uint64_t embeddings = 0;
    std::vector<Vertex> img(k);

    auto dfs = [&](auto&& self, unsigned i) -> void {
        if (i == k) {
            ++embeddings;
            return;
        }
        if (i == 0) {
            for (Vertex c = 0; c < n; ++c) {
                img[0] = c;
                self(self, 1);
            }
            return;
        }
        for (Vertex c : adj[img[anchor[i]]]) {
            if (++steps > kOracleStepBudget)
                throw TooLargeError("oracle enumeration budget exhausted");
            bool ok = true;
            for (unsigned j = 0; ok && j < i; ++j) ok = (img[j] != c);
            for (unsigned mp : must[i]) {
                if (!ok) break;
                if (mp != anchor[i]) ok = sorted_contains(adj[img[mp]], c);
            }
            if (!ok) continue;
            img[i] = c;
            self(self, i + 1);
        }
    };
    dfs(dfs, 0);

    TinyGraph tg = tiny_from_edges(k, h.edges);
    std::uint64_t aut = automorphism_count_undirected(tg);
    BigInt total = embeddings;
    if (total % aut != 0)
        throw InternalInvariantError("oracle total " + total.str() +
                                     " not divisible by |Aut| = " + std::to_string(aut));
    return total / aut;
}

BigInt oracle_directed_count(const OrientedGraph& g, const TinyGraph& dag) {
    const unsigned k = dag.k;
    const Vertex n = g.vertex_count();
    if (n < k) return 0;

    std::vector<std::vector<Vertex>> fwd(n), rev(n);
    for (auto [u, v] : g.edges()) {
        fwd[u].push_back(v);
        rev[v].push_back(u);
    }
    for (auto& v : fwd) std::sort(v.begin(), v.end());
    for (auto& v : rev) std::sort(v.begin(), v.end());

    std::vector<std::vector<unsigned>> pnb(k);
    for (unsigned a = 0; a < k; ++a)
        for (unsigned b = 0; b < k; ++b)
            if (dag.edge(a, b)) {
                pnb[a].push_back(b);
                pnb[b].push_back(a);
            }
    std::vector<unsigned> order = bfs_order(k, pnb);
    std::vector<unsigned> pos(k);
    for (unsigned i = 0; i < k; ++i) pos[order[i]] = i;

    // must[i]: (earlier position, true if the arc runs earlier -> new).
    std::vector<std::vector<std::pair<unsigned, bool>>> must(k);
    for (unsigned i = 1; i < k; ++i) {
        unsigned v = order[i];
        for (unsigned w = 0; w < k; ++w) {
            if (dag.edge(w, v) && pos[w] < i) must[i].emplace_back(pos[w], true);
            if (dag.edge(v, w) && pos[w] < i) must[i].emplace_back(pos[w], false);
        }
    }

    std::uint64_t steps = 0;
    std::uint64_t embeddings = 0;
    std::vector<Vertex> img(k);

    auto dfs = [&](auto&& self, unsigned i) -> void {
        if (i == k) {
            ++embeddings;
            return;
        }
        if (i == 0) {
            for (Vertex c = 0; c < n; ++c) {
                img[0] = c;
                self(self, 1);
            }
            return;
        }
        auto [ap, a_in] = must[i].front();
        const std::vector<Vertex>& pool = a_in ? fwd[img[ap]] : rev[img[ap]];
        for (Vertex c : pool) {
            if (++steps > kOracleStepBudget)
                throw TooLargeError("oracle enumeration budget exhausted");
            bool ok = true;
            for (unsigned j = 0; ok && j < i; ++j) ok = (img[j] != c);
            for (auto [mp, in] : must[i]) {
                if (!ok) break;
                if (mp == ap && in == a_in) continue;
                ok = in ? sorted_contains(fwd[img[mp]], c) : sorted_contains(rev[img[mp]], c);
            }
            if (!ok) continue;
            img[i] = c;
            self(self, i + 1);
        }
    };
    dfs(dfs, 0);

    std::uint64_t aut = automorphism_count_directed(dag);
    BigInt total = embeddings;
    if (total % aut != 0)
        throw InternalInvariantError("oracle directed total " + total.str() +
                                     " not divisible by |Aut| = " + std::to_string(aut));
    return total / aut;
}

}  // namespace subcount

#include "subcount/canonical.hpp"

#include <limits>

#include "subcount/errors.hpp"

namespace subcount {

TinyGraph tiny_from_arcs(unsigned k, std::span<const std::pair<std::uint32_t, std::uint32_t>> arcs) {
    if (k > 16) throw UnsupportedError("TinyGraph supports at most 16 vertices");
    TinyGraph g;
    g.k = k;
    for (auto [u, v] : arcs) g.add_arc(u, v);
    return g;
}

TinyGraph tiny_from_edges(unsigned k, std::span<const std::pair<std::uint32_t, std::uint32_t>> edges) {
    if (k > 16) throw UnsupportedError("TinyGraph supports at most 16 vertices");
    TinyGraph g;
    g.k = k;
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

namespace {

// Finds the lexicographically smallest per-level bit segments over all
// relabelings. Placing new label t after labels 0..t-1 contributes the bits
// between t and each earlier label; branches whose segment exceeds the best
// known are cut, and a strictly smaller segment resets everything deeper.
// The number of permutations attaining the minimum is |Aut|.
template <bool Directed>
struct CanonSearch {
    const TinyGraph& g;
    std::array<std::uint32_t, 16> best{};
    std::array<unsigned, 16> sel{};
    std::uint16_t used = 0;
    std::uint64_t hits = 0;

    explicit CanonSearch(const TinyGraph& graph) : g(graph) {
        best.fill(std::numeric_limits<std::uint32_t>::max());
    }

    std::uint32_t segment(unsigned t, unsigned x) const {
        std::uint32_t seg = 0;
        for (unsigned s = 0; s < t; ++s) {
            if constexpr (Directed) {
                seg = (seg << 2) | (std::uint32_t(g.edge(sel[s], x)) << 1) |
                      std::uint32_t(g.edge(x, sel[s]));
            } else {
                seg = (seg << 1) | std::uint32_t(g.edge(sel[s], x));
            }
        }
        return seg;
    }

    void dfs(unsigned t) {
        if (t == g.k) {
            ++hits;
            return;
        }
        for (unsigned x = 0; x < g.k; ++x) {
            if (used & (1u << x)) continue;
            std::uint32_t seg = segment(t, x);
            if (seg > best[t]) continue;
            if (seg < best[t]) {
                best[t] = seg;
                for (unsigned i = t + 1; i < g.k; ++i)
                    best[i] = std::numeric_limits<std::uint32_t>::max();
                hits = 0;
            }
            sel[t] = x;
            used |= std::uint16_t(1u << x);
            dfs(t + 1);
            used &= std::uint16_t(~(1u << x));
        }
    }

    CanonicalForm run() {
        if (g.k == 0) return {0, 1};
        dfs(0);
        unsigned __int128 code = 0;
        for (unsigned t = 1; t < g.k; ++t) {
            unsigned bits = Directed ? 2 * t : t;
            code = (code << bits) | best[t];
        }
        return {code, hits};
    }
};

}  // namespace

CanonicalForm canonical_form_directed(const TinyGraph& g) {
    if (g.k > 11) throw UnsupportedError("directed canonical form supports at most 11 vertices");
    return CanonSearch<true>(g).run();
}

CanonicalForm canonical_form_undirected(const TinyGraph& g) {
    if (g.k > 16) throw UnsupportedError("undirected canonical form supports at most 16 vertices");
    return CanonSearch<false>(g).run();
}

std::uint64_t automorphism_count_directed(const TinyGraph& g) {
    return canonical_form_directed(g).automorphisms;
}

std::uint64_t automorphism_count_undirected(const TinyGraph& g) {
    return canonical_form_undirected(g).automorphisms;
}

}  // namespace subcount

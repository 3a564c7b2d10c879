#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <utility>

namespace subcount {

/// Adjacency of a graph on at most 16 vertices, one bitmask row per vertex.
/// Undirected graphs store symmetric rows.
struct TinyGraph {
    unsigned k = 0;
    std::array<std::uint16_t, 16> row{};  // row[i] bit j set iff edge i->j

    bool edge(unsigned i, unsigned j) const { return (row[i] >> j) & 1u; }
    void add_arc(unsigned i, unsigned j) { row[i] |= std::uint16_t(1u << j); }
    void add_edge(unsigned i, unsigned j) { add_arc(i, j), add_arc(j, i); }
};

TinyGraph tiny_from_arcs(unsigned k, std::span<const std::pair<std::uint32_t, std::uint32_t>> arcs);
TinyGraph tiny_from_edges(unsigned k, std::span<const std::pair<std::uint32_t, std::uint32_t>> edges);

struct CanonicalForm {
    unsigned __int128 code = 0;  // minimum adjacency encoding over all relabelings
    std::uint64_t automorphisms = 0;
};

/// Minimum adjacency encoding over all k! relabelings, found by prefix
/// branch-and-bound; `automorphisms` is the number of permutations attaining
/// the minimum, which equals |Aut|. Directed encodings use two bits per
/// vertex pair (k <= 11), undirected one (k <= 16).
CanonicalForm canonical_form_directed(const TinyGraph& g);
CanonicalForm canonical_form_undirected(const TinyGraph& g);

std::uint64_t automorphism_count_directed(const TinyGraph& g);
std::uint64_t automorphism_count_undirected(const TinyGraph& g);

}  // namespace subcount

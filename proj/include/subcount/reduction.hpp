#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "subcount/bigint.hpp"
#include "subcount/graph.hpp"

namespace subcount {

/// Where a gadget path vertex came from: the source edge (u,v), which of
/// the one or two parallel paths it lies on ('V' is the shorter), and its
/// 1-based position along that path.
struct GadgetVertexProvenance {
    Vertex gadget_vertex;
    Vertex source_u;
    Vertex source_v;
    char path_tag;  // 'V' or 'U'
    std::uint32_t index;
};

/// Reduction output: every source edge replaced by one path of length
/// k/3 (k divisible by 3) or two parallel paths of lengths floor(k/3) and
/// floor(k/3)+1 (otherwise). Original vertices keep their ids; path
/// vertices are appended in source-edge lexicographic order. The witness
/// ordering (path vertices before originals) certifies degeneracy <= 2.
struct GadgetGraph {
    UndirectedGraph graph;
    std::uint32_t k = 0;
    Vertex source_n = 0;
    std::vector<GadgetVertexProvenance> provenance;
    std::vector<Vertex> witness_ordering;
};

GadgetGraph build_gadget(const UndirectedGraph& g, std::uint32_t k);

/// Sidecar text map: "gadget_vertex source_u source_v path_tag index".
void write_provenance(const GadgetGraph& gg, std::ostream& out);

struct CountRelationReport {
    std::uint32_t k = 0;
    BigInt triangles;
    BigInt cycle_count;  // C_k matches in the gadget
    BigInt expected;
    bool pass = false;
};

/// Checks C_k(G_k) == triangles(G) for k divisible by 3 and == 3*triangles
/// otherwise. Triangles come from the engine, gadget cycles from the
/// oracle. k >= 6, k != 8.
CountRelationReport verify_count_relation(const UndirectedGraph& g, std::uint32_t k);

struct TailedC7Report {
    BigInt triangles;
    BigInt tailed_c7_count;  // in the k=8 gadget
    bool pass = false;
};

/// Checks the detection biconditional for k = 8: the gadget contains a
/// tailed 7-cycle iff the input contains a triangle.
TailedC7Report verify_tailed_c7(const UndirectedGraph& g);

}  // namespace subcount

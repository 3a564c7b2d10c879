#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "subcount/canonical.hpp"
#include "subcount/graph.hpp"

namespace subcount {

/// Small connected pattern to count. Edges are stored min-endpoint-first in
/// lexicographic order.
struct Pattern {
    std::uint32_t k = 0;
    std::vector<Edge> edges;
    std::string name;

    bool is_star() const;  // K_{1,k-1}; the center is the unique max-degree vertex
    Vertex star_center() const;
};

/// Validates simplicity and connectivity (k >= 2) and canonicalizes edge order.
Pattern make_pattern(std::uint32_t k, std::vector<Edge> edges, std::string name);

Pattern pattern_path(std::uint32_t k);     // path on k vertices
Pattern pattern_cycle(std::uint32_t k);    // C_k
Pattern pattern_clique(std::uint32_t k);   // K_k
Pattern pattern_star(std::uint32_t leaves);
Pattern pattern_tailed_c7();               // 7-cycle with one pendant edge

Pattern pattern_from_edge_list_text(const std::string& text, std::string name);
Pattern pattern_from_file(const std::string& path);

/// All connected k-vertex patterns up to isomorphism with stable names;
/// k in {3,4,5} (2, 6, and 21 patterns).
const std::vector<Pattern>& catalog(std::uint32_t k);

/// Catalog patterns plus the named extras (C6..C12, C7-tailed, K6).
const Pattern& named_pattern(const std::string& name);
std::vector<std::string> named_pattern_names();

/// One largest directed rooted tree subgraph, vertices listed in BFS order
/// from the root with parent positions.
struct Drts {
    std::uint8_t size = 0;
    std::array<std::uint8_t, 8> vertex{};
    std::array<std::uint8_t, 8> parent{};  // parent[i] < i is a position; parent[0] unused
};

enum class PlanKind : std::uint8_t {
    full,             // tree spans the whole orientation
    one_vertex,       // one vertex left; counted from HM2
    two_adjacent,     // two vertices joined by an arc; counted from HM3
    two_independent,  // two non-adjacent vertices; counted from HM2 products
    star_closed_form, // star pattern; counted from degree binomials
};

/// How to extend a tree match to a full match of the orientation. Masks are
/// over tree positions: bit p set means the remainder vertex has an arc to
/// the vertex at position p.
struct CompletionPlan {
    PlanKind kind = PlanKind::full;
    std::uint8_t s_first = 0;
    std::uint8_t s_second = 0;
    std::uint8_t star_in_edges = 0;  // in-degree of the star center
};

/// One isomorphism class of acyclic orientations of a pattern, with
/// everything the counting engine needs precomputed.
struct PatternOrientation {
    std::uint8_t k = 0;
    TinyGraph dag;                   // representative labeling
    unsigned __int128 iso_code = 0;  // canonical form of the class
    std::uint64_t aut = 0;           // |Aut| of the orientation
    Drts drts;
    /// Arcs of the orientation with both ends in the tree that are not tree
    /// arcs, as (tail position, head position).
    std::vector<std::pair<std::uint8_t, std::uint8_t>> chords;
    std::array<std::uint8_t, 2> remainder{};  // pattern vertices outside the tree
    std::uint8_t remainder_size = 0;
    CompletionPlan plan{};
    bool applicable = true;
    bool remainder_in_in_wedge = false;

    std::vector<Edge> arcs() const;
    std::string describe_arcs() const;
};

/// All acyclic orientations of h up to isomorphism, sorted by canonical
/// form. Orientations the engine cannot complete are returned with
/// applicable = false rather than throwing. Requires k <= 8.
std::vector<PatternOrientation> acyclic_orientations(const Pattern& h);

/// BFS tree from each source, keeping a maximum-size one (ties by smallest
/// shape signature, then smallest vertex sequence).
Drts largest_drts(const TinyGraph& dag);

/// Direction-preserving vertex permutations fixing the arc set.
std::uint64_t automorphism_count(const TinyGraph& dag);

/// Completion plan for an orientation; throws EngineInapplicableError when
/// more than two vertices fall outside the tree (and the pattern is not a
/// star) or the plan would need wider index keys than HM2/HM3 store.
CompletionPlan build_completion_plan(const Pattern& h, const PatternOrientation& o);

}  // namespace subcount

#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "subcount/bigint.hpp"
#include "subcount/graph.hpp"
#include "subcount/hash_index.hpp"
#include "subcount/orientation.hpp"
#include "subcount/pattern.hpp"

namespace subcount {

/// Injective assignment of graph vertices to tree positions t0..t{size-1}.
struct TreeMatch {
    std::array<Vertex, 8> img{};
    std::uint8_t size = 0;
};

struct ClassCount {
    unsigned __int128 iso_code = 0;
    std::uint64_t aut = 0;
    BigInt raw;       // labeled matches of the orientation
    BigInt distinct;  // raw / aut, division exact
};

struct CountReport {
    std::string pattern;
    std::uint32_t k = 0;
    std::uint32_t kappa = 0;  // max out-degree of the orientation used
    std::uint64_t n = 0;
    std::uint64_t m = 0;
    std::vector<ClassCount> classes;
    BigInt total;  // distinct matches of the pattern
    double seconds = 0.0;
    int threads = 1;
};

/// Orientation classes plus which index maps their plans consult.
struct PatternPrep {
    Pattern pattern;
    std::vector<PatternOrientation> classes;
    bool needs_hm2 = false;
    bool needs_hm3 = false;
};

/// Precomputes orientation classes and completion plans; throws
/// EngineInapplicableError if any orientation cannot be completed.
PatternPrep prepare_pattern(const Pattern& h);

/// Visits every injective match of the tree in g exactly once: the root
/// edge ranges over g's edges and each later position draws from the
/// out-neighbors of its parent's image.
void enumerate_tree_matches(const OrientedGraph& g, const Drts& drts,
                            const std::function<void(const TreeMatch&)>& visit);

/// True iff every non-tree arc of the orientation with both ends in the
/// tree maps to a directed edge of g (checked in HM1).
bool validate_match(const TreeMatch& tm, const PatternOrientation& o, const HashIndex& idx);

/// Ways to extend a validated tree match to a full match of the
/// orientation, per its completion plan, with injectivity corrections.
/// Throws InternalInvariantError if an intermediate goes negative.
unsigned __int128 count_completions(const TreeMatch& tm, const PatternOrientation& o,
                                    const HashIndex& idx, const OrientedGraph& g);

/// Counts distinct matches of h in g over the degeneracy orientation.
CountReport count_pattern(const UndirectedGraph& g, const Pattern& h, int threads = 1);

/// Same, but orienting along a caller-supplied total order (counts do not
/// depend on the order chosen).
CountReport count_pattern_with_ordering(const UndirectedGraph& g, const Pattern& h,
                                        std::span<const Vertex> order, int threads = 1);

/// Counting core against a prebuilt orientation and index.
CountReport count_pattern_oriented(const OrientedGraph& og, const HashIndex& idx,
                                   const PatternPrep& prep, int threads = 1);

/// Counts every catalog(k) pattern, sharing one orientation and one index.
/// Star patterns are cross-checked against the undirected closed form.
std::vector<CountReport> count_all(const UndirectedGraph& g, std::uint32_t k, int threads = 1);

std::string to_hex(unsigned __int128 v);

}  // namespace subcount

#pragma once

#include <cstdint>

#include "subcount/bigint.hpp"
#include "subcount/canonical.hpp"
#include "subcount/graph.hpp"
#include "subcount/orientation.hpp"
#include "subcount/pattern.hpp"

namespace subcount {

/// Enumeration budget: partial assignments examined before giving up with
/// TooLargeError.
inline constexpr std::uint64_t kOracleStepBudget = 1'000'000'000;

/// Distinct matches of h in g by exhaustive enumeration of injective
/// edge-preserving maps, divided by |Aut(h)| (division checked exact).
/// Shares no match logic with the counting engine.
BigInt oracle_count(const UndirectedGraph& g, const Pattern& h);

/// Distinct direction-preserving matches of the DAG `dag` in the oriented
/// graph, divided by |Aut(dag)|. Used to check per-orientation-class totals.
BigInt oracle_directed_count(const OrientedGraph& g, const TinyGraph& dag);

}  // namespace subcount

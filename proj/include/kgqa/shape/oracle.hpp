#pragma once

#include <cstddef>

#include "kgqa/shape/shapes.hpp"

namespace kgqa::shape {

inline constexpr std::size_t kOracleMaxEdges = 8;

/// Exhaustive re-statement of classify_structure for small graphs. Chains
/// and cycles are found by enumerating node orderings, trees by counting
/// simple paths between every node pair, and petals by searching sets of
/// disjoint centre-to-node paths. Exponential; throws kgqa::Error
/// ("TooLarge") above kOracleMaxEdges edges.
ShapeSet oracle_classify(const QueryGraph& graph);

}  // namespace kgqa::shape

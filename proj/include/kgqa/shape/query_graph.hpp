#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "kgqa/sparql/ast.hpp"

namespace kgqa::shape {

/// Undirected edge between two node indices, labelled by the predicate of
/// the triple pattern it came from.
struct Edge {
  std::size_t a = 0;
  std::size_t b = 0;
  sparql::Term label;
  std::size_t pattern_index = 0;

  bool self_loop() const { return a == b; }
};

/// Undirected multigraph over the subjects and objects of a query's triple
/// patterns. Every node is an endpoint of at least one edge. Filters never
/// contribute edges.
struct QueryGraph {
  std::vector<sparql::Term> nodes;
  std::vector<Edge> edges;

  /// Number of connected components (0 for the empty graph).
  std::size_t component_count() const;
};

/// One node per distinct subject/object term, one edge per pattern.
QueryGraph build_query_graph(std::span<const sparql::TriplePattern> patterns);

/// Graph over `node_count` anonymous nodes with the given endpoint pairs.
/// Nodes are named ?n0, ?n1, ...; edge labels are a fixed IRI. Used for
/// synthetic graphs in tests and the oracle sweep.
QueryGraph make_graph(std::size_t node_count,
                      std::span<const std::pair<std::size_t, std::size_t>> edges);

}  // namespace kgqa::shape

#pragma once

#include <algorithm>
#include <map>
#include <random>
#include <utility>
#include <vector>

#include "kgqa/shape/query_graph.hpp"

namespace kgqa::fixtures {

using EdgePairs = std::vector<std::pair<std::size_t, std::size_t>>;

/// Drops isolated nodes and renumbers the rest densely.
inline shape::QueryGraph compact_graph(const EdgePairs& edges) {
  std::map<std::size_t, std::size_t> ids;
  for (auto [a, b] : edges) {
    ids.emplace(a, ids.size());
    ids.emplace(b, ids.size());
  }
  EdgePairs renamed;
  for (auto [a, b] : edges) renamed.emplace_back(ids[a], ids[b]);
  return shape::make_graph(ids.size(), renamed);
}

/// Every multiset of 1..max_edges edges over `nodes` nodes, loops included.
inline std::vector<EdgePairs> all_multigraphs(std::size_t nodes, std::size_t max_edges) {
  EdgePairs kinds;
  for (std::size_t a = 0; a < nodes; ++a) {
    for (std::size_t b = a; b < nodes; ++b) kinds.emplace_back(a, b);
  }
  std::vector<EdgePairs> out;
  EdgePairs current;
  auto rec = [&](auto&& self, std::size_t from) -> void {
    if (!current.empty()) out.push_back(current);
    if (current.size() == max_edges) return;
    for (std::size_t k = from; k < kinds.size(); ++k) {
      current.push_back(kinds[k]);
      self(self, k);
      current.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

/// Random graph with at most `max_edges` edges: a forest of random trees,
/// then extra edges (some parallel, some loops) to create cycles and petals.
inline EdgePairs random_graph(std::mt19937& rng, std::size_t max_edges) {
  std::uniform_int_distribution<std::size_t> tree_edges(1, max_edges);
  std::size_t budget = tree_edges(rng);
  std::size_t nodes = budget + 1;
  EdgePairs edges;
  std::uniform_int_distribution<int> coin(0, 9);
  for (std::size_t v = 1; v < nodes; ++v) {
    // Occasionally start a new tree to get a forest.
    if (coin(rng) == 0) continue;
    std::uniform_int_distribution<std::size_t> parent(0, v - 1);
    edges.emplace_back(parent(rng), v);
  }
  std::uniform_int_distribution<std::size_t> pick(0, nodes - 1);
  while (edges.size() < max_edges && coin(rng) < 6) {
    auto a = pick(rng);
    auto b = coin(rng) == 0 ? a : pick(rng);
    edges.emplace_back(a, b);
  }
  if (edges.empty()) edges.emplace_back(0, 1);
  for (auto& e : edges) {
    if (coin(rng) < 5) std::swap(e.first, e.second);
  }
  std::shuffle(edges.begin(), edges.end(), rng);
  return edges;
}

}  // namespace kgqa::fixtures

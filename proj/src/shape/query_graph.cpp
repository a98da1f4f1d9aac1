#include "kgqa/shape/query_graph.hpp"

#include <map>
#include <numeric>
#include <string>

namespace kgqa::shape {

namespace {

std::size_t find(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

}  // namespace

std::size_t QueryGraph::component_count() const {
  std::vector<std::size_t> parent(nodes.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::size_t count = nodes.size();
  for (const auto& e : edges) {
    auto ra = find(parent, e.a);
    auto rb = find(parent, e.b);
    if (ra != rb) {
      parent[ra] = rb;
      --count;
    }
  }
  return count;
}

QueryGraph build_query_graph(std::span<const sparql::TriplePattern> patterns) {
  QueryGraph g;
  std::map<sparql::Term, std::size_t> index;
  auto node = [&](const sparql::Term& t) {
    auto [it, inserted] = index.emplace(t, g.nodes.size());
    if (inserted) g.nodes.push_back(t);
    return it->second;
  };
  for (std::size_t i = 0; i < patterns.size(); ++i) {
    auto a = node(patterns[i].subject);
    auto b = node(patterns[i].object);
    g.edges.push_back({a, b, patterns[i].predicate, i});
  }
  return g;
}

QueryGraph make_graph(std::size_t node_count,
                      std::span<const std::pair<std::size_t, std::size_t>> edges) {
  QueryGraph g;
  for (std::size_t i = 0; i < node_count; ++i) {
    g.nodes.push_back(sparql::Term::variable("n" + std::to_string(i)));
  }
  for (std::size_t i = 0; i < edges.size(); ++i) {
    g.edges.push_back({edges[i].first, edges[i].second, sparql::Term::iri("urn:kgqa:p"), i});
  }
  return g;
}

}  // namespace kgqa::shape

#include "kgqa/shape/shapes.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace kgqa::shape {

std::optional<Shape> shape_from_name(std::string_view name) {
  for (auto s : kAllShapes) {
    if (shape_name(s) == name) return s;
  }
  return std::nullopt;
}

std::vector<Shape> ShapeSet::shapes() const {
  std::vector<Shape> out;
  for (auto s : kAllShapes) {
    if (has(s)) out.push_back(s);
  }
  return out;
}

std::vector<std::string> ShapeSet::names() const {
  std::vector<std::string> out;
  for (auto s : shapes()) out.emplace_back(shape_name(s));
  return out;
}

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<std::size_t> parent_;
};

struct Component {
  std::size_t nodes = 0;
  std::size_t edges = 0;
  bool loop = false;
  std::size_t max_degree = 0;
};

// Every attachment at `c` is a tree or a petal.
bool flower_center(const QueryGraph& g, std::size_t c, const std::vector<std::size_t>& degree) {
  const std::size_t n = g.nodes.size();
  UnionFind uf(n);
  for (const auto& e : g.edges) {
    if (e.a != c && e.b != c) uf.unite(e.a, e.b);
  }
  // Per attachment root: node count, edge count, edges to c.
  std::vector<std::size_t> members(n, 0), edge_count(n, 0), to_center(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    if (v != c) ++members[uf.find(v)];
  }
  for (const auto& e : g.edges) {
    if (e.a == c && e.b == c) return false;
    std::size_t other = e.a == c ? e.b : e.a;
    auto root = uf.find(other);
    ++edge_count[root];
    if (e.a == c || e.b == c) ++to_center[root];
  }
  for (std::size_t root = 0; root < n; ++root) {
    if (root == c || members[root] == 0 || uf.find(root) != root) continue;
    if (edge_count[root] == members[root]) continue;  // tree
    const std::size_t dc = to_center[root];
    if (dc < 2) return false;
    // Petal: one node d with degree dc, every other member has degree 2.
    std::size_t candidates = 0;
    bool ok = true;
    for (std::size_t v = 0; v < n && ok; ++v) {
      if (v == c || uf.find(v) != root) continue;
      if (degree[v] == 2 && dc != 2) continue;
      if (degree[v] == dc) {
        ++candidates;
      } else if (degree[v] != 2) {
        ok = false;
      }
    }
    // With dc == 2 every member has degree 2 and any of them can be d.
    if (!ok || candidates == 0 || (dc != 2 && candidates != 1)) return false;
  }
  return true;
}

}  // namespace

ShapeSet classify_structure(const QueryGraph& g) {
  ShapeSet out;
  out.applicable = true;
  const std::size_t n = g.nodes.size();
  const std::size_t m = g.edges.size();
  if (m == 0) return out;

  std::vector<std::set<std::size_t>> neighbours(n);
  std::vector<std::size_t> degree(n, 0);
  std::set<std::pair<std::size_t, std::size_t>> seen_pairs;
  bool any_loop = false;
  bool any_multi = false;
  UnionFind uf(n);
  for (const auto& e : g.edges) {
    degree[e.a] += 1;
    degree[e.b] += 1;
    uf.unite(e.a, e.b);
    if (e.self_loop()) {
      any_loop = true;
      continue;
    }
    neighbours[e.a].insert(e.b);
    neighbours[e.b].insert(e.a);
    auto key = std::minmax(e.a, e.b);
    if (!seen_pairs.insert(key).second) any_multi = true;
  }

  std::vector<Component> comps(n);
  for (std::size_t v = 0; v < n; ++v) {
    auto& c = comps[uf.find(v)];
    ++c.nodes;
    c.max_degree = std::max(c.max_degree, neighbours[v].size());
  }
  for (const auto& e : g.edges) {
    auto& c = comps[uf.find(e.a)];
    ++c.edges;
    if (e.self_loop()) c.loop = true;
  }

  std::size_t component_count = 0;
  bool all_chain = true;
  bool all_tree = true;
  bool first_tree = false;
  bool first_chain = false;
  for (std::size_t v = 0; v < n; ++v) {
    if (uf.find(v) != v) continue;
    const auto& c = comps[v];
    bool tree = !c.loop && c.edges + 1 == c.nodes;
    bool chain = tree && c.max_degree <= 2;
    all_tree = all_tree && tree;
    all_chain = all_chain && chain;
    if (component_count == 0) {
      first_tree = tree;
      first_chain = chain;
    }
    ++component_count;
  }
  const bool connected = component_count == 1;

  std::size_t hubs = 0;
  bool all_degree_two = true;
  for (std::size_t v = 0; v < n; ++v) {
    if (neighbours[v].size() >= 3) ++hubs;
    if (neighbours[v].size() != 2) all_degree_two = false;
  }

  const bool chain = connected && first_chain;
  const bool tree = connected && first_tree;
  const bool cycle = connected && !any_loop && !any_multi && n >= 3 && m == n && all_degree_two;

  out.set(Shape::SingleEdge, m == 1 && !any_loop);
  out.set(Shape::Chain, chain);
  out.set(Shape::Cycle, cycle);
  out.set(Shape::ChainSet, all_chain);
  out.set(Shape::Tree, tree);
  out.set(Shape::Star, tree && hubs == 1);
  out.set(Shape::Forest, all_tree);

  bool flower = false;
  if (connected && !any_loop && !chain && !cycle) {
    for (std::size_t c = 0; c < n && !flower; ++c) flower = flower_center(g, c, degree);
  }
  out.set(Shape::Flower, flower);
  return out;
}

ShapeSet classify_shapes(const QueryGraph& graph, analysis::QueryClass query_class) {
  if (query_class == analysis::QueryClass::Other) return ShapeSet{};
  return classify_structure(graph);
}

}  // namespace kgqa::shape

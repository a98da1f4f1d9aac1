#include "kgqa/shape/oracle.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "kgqa/error.hpp"

namespace kgqa::shape {

namespace {

using EdgeList = std::vector<std::pair<std::size_t, std::size_t>>;

struct Sub {
  std::vector<std::size_t> nodes;
  EdgeList edges;
};

bool has_loop(const EdgeList& edges) {
  return std::any_of(edges.begin(), edges.end(), [](auto& e) { return e.first == e.second; });
}

std::size_t edges_between(const EdgeList& edges, std::size_t u, std::size_t v) {
  std::size_t n = 0;
  for (auto [a, b] : edges) {
    if ((a == u && b == v) || (a == v && b == u)) ++n;
  }
  return n;
}

// Is there an ordering x0..xk of all nodes whose consecutive pairs (plus
// xk-x0 when closed) are exactly the edges, each once?
bool ordering_exists(const Sub& g, bool closed) {
  const std::size_t n = g.nodes.size();
  if (n < 2 || (closed && n < 3) || has_loop(g.edges)) return false;
  if (g.edges.size() != (closed ? n : n - 1)) return false;
  std::vector<std::size_t> order;
  std::vector<bool> used(n, false);
  std::function<bool()> extend = [&]() -> bool {
    if (order.size() == n) {
      return !closed || edges_between(g.edges, order.back(), order.front()) == 1;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (used[i]) continue;
      if (!order.empty() && edges_between(g.edges, order.back(), g.nodes[i]) != 1) continue;
      used[i] = true;
      order.push_back(g.nodes[i]);
      if (extend()) return true;
      order.pop_back();
      used[i] = false;
    }
    return false;
  };
  return extend();
}

std::set<std::size_t> reachable(const EdgeList& edges, std::size_t from, std::size_t banned) {
  std::set<std::size_t> seen{from};
  std::vector<std::size_t> stack{from};
  while (!stack.empty()) {
    auto v = stack.back();
    stack.pop_back();
    for (auto [a, b] : edges) {
      for (auto [x, y] : {std::pair{a, b}, std::pair{b, a}}) {
        if (x == v && y != banned && seen.insert(y).second) stack.push_back(y);
      }
    }
  }
  return seen;
}

Sub induced(const EdgeList& edges, const std::set<std::size_t>& nodes) {
  Sub s;
  s.nodes.assign(nodes.begin(), nodes.end());
  for (auto e : edges) {
    if (nodes.count(e.first) && nodes.count(e.second)) s.edges.push_back(e);
  }
  return s;
}

std::vector<Sub> components(const Sub& g) {
  std::vector<Sub> out;
  std::set<std::size_t> done;
  for (auto v : g.nodes) {
    if (done.count(v)) continue;
    auto comp = reachable(g.edges, v, static_cast<std::size_t>(-1));
    done.insert(comp.begin(), comp.end());
    out.push_back(induced(g.edges, comp));
  }
  return out;
}

// Simple paths from u to v, each as the list of edge indices it uses.
std::vector<std::vector<std::size_t>> simple_paths(const EdgeList& edges, std::size_t u,
                                                   std::size_t v) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> path;
  std::set<std::size_t> visited{u};
  std::function<void(std::size_t)> walk = [&](std::size_t at) {
    if (at == v) {
      out.push_back(path);
      return;
    }
    for (std::size_t i = 0; i < edges.size(); ++i) {
      auto [a, b] = edges[i];
      if (a == b || (a != at && b != at)) continue;
      auto next = a == at ? b : a;
      if (visited.count(next)) continue;
      visited.insert(next);
      path.push_back(i);
      walk(next);
      path.pop_back();
      visited.erase(next);
    }
  };
  walk(u);
  return out;
}

// Exactly one path between any two nodes.
bool is_tree(const Sub& g) {
  if (g.nodes.empty() || has_loop(g.edges)) return false;
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    for (std::size_t j = i + 1; j < g.nodes.size(); ++j) {
      if (simple_paths(g.edges, g.nodes[i], g.nodes[j]).size() != 1) return false;
    }
  }
  return true;
}

// Two or more internally disjoint c-d paths that together use every edge
// of `g` exactly once.
bool is_petal(const Sub& g, std::size_t c, std::size_t d) {
  auto paths = simple_paths(g.edges, c, d);
  std::vector<std::set<std::size_t>> inner(paths.size());
  for (std::size_t p = 0; p < paths.size(); ++p) {
    std::size_t at = c;
    for (auto ei : paths[p]) {
      auto [a, b] = g.edges[ei];
      at = a == at ? b : a;
      if (at != d) inner[p].insert(at);
    }
  }
  std::vector<bool> edge_used(g.edges.size(), false);
  std::set<std::size_t> node_used;
  std::function<bool(std::size_t, std::size_t)> pick = [&](std::size_t from,
                                                         std::size_t chosen) -> bool {
    if (std::all_of(edge_used.begin(), edge_used.end(), [](bool b) { return b; })) {
      return chosen >= 2;
    }
    for (std::size_t p = from; p < paths.size(); ++p) {
      bool free = std::none_of(paths[p].begin(), paths[p].end(),
                               [&](std::size_t e) { return edge_used[e]; }) &&
                  std::none_of(inner[p].begin(), inner[p].end(),
                               [&](std::size_t v) { return node_used.count(v) > 0; });
      if (!free) continue;
      for (auto e : paths[p]) edge_used[e] = true;
      node_used.insert(inner[p].begin(), inner[p].end());
      bool ok = pick(p + 1, chosen + 1);
      for (auto e : paths[p]) edge_used[e] = false;
      for (auto v : inner[p]) node_used.erase(v);
      if (ok) return true;
    }
    return false;
  };
  return pick(0, 0);
}

bool flower_at(const Sub& g, std::size_t c) {
  std::set<std::size_t> done;
  for (auto v : g.nodes) {
    if (v == c || done.count(v)) continue;
    auto part = reachable(g.edges, v, c);
    done.insert(part.begin(), part.end());
    auto with_center = part;
    with_center.insert(c);
    auto attachment = induced(g.edges, with_center);
    if (is_tree(attachment)) continue;
    bool petal = std::any_of(part.begin(), part.end(),
                             [&](std::size_t d) { return is_petal(attachment, c, d); });
    if (!petal) return false;
  }
  return true;
}

}  // namespace

ShapeSet oracle_classify(const QueryGraph& graph) {
  if (graph.edges.size() > kOracleMaxEdges) {
    throw Error("TooLarge", "oracle accepts at most " + std::to_string(kOracleMaxEdges) +
                                " edges, got " + std::to_string(graph.edges.size()));
  }
  ShapeSet out;
  out.applicable = true;
  if (graph.edges.empty()) return out;

  Sub g;
  for (std::size_t i = 0; i < graph.nodes.size(); ++i) g.nodes.push_back(i);
  for (const auto& e : graph.edges) g.edges.emplace_back(e.a, e.b);

  auto comps = components(g);
  const bool connected = comps.size() == 1;
  const bool loops = has_loop(g.edges);

  const bool chain = ordering_exists(g, false);
  const bool cycle = ordering_exists(g, true);
  const bool tree = connected && is_tree(g);

  std::size_t hubs = 0;
  for (auto v : g.nodes) {
    std::set<std::size_t> nb;
    for (auto [a, b] : g.edges) {
      if (a == b) continue;
      if (a == v) nb.insert(b);
      if (b == v) nb.insert(a);
    }
    if (nb.size() > 2) ++hubs;
  }

  bool flower = false;
  if (connected && !loops && !chain && !cycle) {
    for (auto c : g.nodes) {
      if (flower_at(g, c)) {
        flower = true;
        break;
      }
    }
  }

  out.set(Shape::SingleEdge, g.edges.size() == 1 && !loops);
  out.set(Shape::Chain, chain);
  out.set(Shape::Cycle, cycle);
  out.set(Shape::ChainSet, std::all_of(comps.begin(), comps.end(),
                                       [](const Sub& s) { return ordering_exists(s, false); }));
  out.set(Shape::Tree, tree);
  out.set(Shape::Star, tree && hubs == 1);
  out.set(Shape::Forest,
          std::all_of(comps.begin(), comps.end(), [](const Sub& s) { return is_tree(s); }));
  out.set(Shape::Flower, flower);
  return out;
}

}  // namespace kgqa::shape

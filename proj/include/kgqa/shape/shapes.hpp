#pragma once

#include <array>
#include <bitset>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kgqa/analysis/query_class.hpp"
#include "kgqa/shape/query_graph.hpp"

namespace kgqa::shape {

enum class Shape { SingleEdge, Chain, Cycle, ChainSet, Tree, Star, Flower, Forest };

inline constexpr std::array<Shape, 8> kAllShapes = {
    Shape::SingleEdge, Shape::Chain, Shape::Cycle, Shape::ChainSet,
    Shape::Tree,       Shape::Star,  Shape::Flower, Shape::Forest};

/// Serialized names, part of the report contract.
constexpr std::string_view shape_name(Shape s) {
  switch (s) {
    case Shape::SingleEdge: return "Single-Edge";
    case Shape::Chain: return "Chain";
    case Shape::Cycle: return "Cycle";
    case Shape::ChainSet: return "Chain-Set";
    case Shape::Tree: return "Tree";
    case Shape::Star: return "Star";
    case Shape::Flower: return "Flower";
    case Shape::Forest: return "Forest";
  }
  return "";
}

std::optional<Shape> shape_from_name(std::string_view name);

/// Set of shapes a query exhibits. Shapes overlap by subsumption
/// (Single-Edge => Chain => Chain-Set and Tree, Tree => Forest,
/// Star => Tree). `applicable` is false for queries outside CQ/CQ_F/CQ_OF,
/// in which case no flag is set.
class ShapeSet {
 public:
  bool applicable = false;

  bool has(Shape s) const { return flags_.test(static_cast<std::size_t>(s)); }
  void set(Shape s, bool on = true) { flags_.set(static_cast<std::size_t>(s), on); }
  bool none() const { return flags_.none(); }

  std::vector<Shape> shapes() const;
  std::vector<std::string> names() const;

  bool operator==(const ShapeSet&) const = default;

 private:
  std::bitset<8> flags_;
};

/// Shapes of the graph itself, ignoring query class (applicable = true).
///
/// Degrees are counted over distinct neighbours; connectivity and
/// acyclicity over the multigraph, so parallel edges form a petal rather
/// than a tree and a self-loop rules out Chain, Tree, Star, Cycle and
/// Flower.
///
/// Flower: connected, neither a Chain nor a simple Cycle, and some centre
/// node c such that every attachment at c is a tree (chains included) or a
/// petal. The attachments at c are the components of G - c, each taken
/// together with c and the edges joining it to c. A petal is an attachment
/// formed by two or more internally node-disjoint paths from c to a single
/// node d.
ShapeSet classify_structure(const QueryGraph& graph);

/// classify_structure for CQ / CQ_F / CQ_OF queries; an inapplicable empty
/// set for class Other.
ShapeSet classify_shapes(const QueryGraph& graph, analysis::QueryClass query_class);

}  // namespace kgqa::shape

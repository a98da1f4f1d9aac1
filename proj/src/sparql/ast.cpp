#include "kgqa/sparql/ast.hpp"

#include <cctype>

#include "kgqa/sparql/parser.hpp"

namespace kgqa::sparql {

bool operator==(const BasicPattern& a, const BasicPattern& b) { return a.triples == b.triples; }
bool operator==(const GroupPattern& a, const GroupPattern& b) { return a.elements == b.elements; }
bool operator==(const FilterPattern& a, const FilterPattern& b) {
  return a.expression == b.expression && a.variables == b.variables &&
         a.not_exists == b.not_exists && a.inner == b.inner;
}
bool operator==(const UnionPattern& a, const UnionPattern& b) {
  return a.left == b.left && a.right == b.right;
}
bool operator==(const OptionalPattern& a, const OptionalPattern& b) { return a.inner == b.inner; }
bool operator==(const MinusPattern& a, const MinusPattern& b) { return a.inner == b.inner; }
bool operator==(const GraphPattern& a, const GraphPattern& b) { return a.node == b.node; }

bool structurally_equal(const QueryAst& a, const QueryAst& b) {
  return a.type == b.type && a.where == b.where && a.modifiers == b.modifiers &&
         a.prefixes == b.prefixes;
}

std::string leading_aggregate(const std::string& expression) {
  std::size_t i = 0;
  while (i < expression.size() && std::isspace(static_cast<unsigned char>(expression[i]))) ++i;
  std::string name;
  while (i < expression.size() && std::isalpha(static_cast<unsigned char>(expression[i]))) {
    name += static_cast<char>(std::toupper(static_cast<unsigned char>(expression[i])));
    ++i;
  }
  while (i < expression.size() && std::isspace(static_cast<unsigned char>(expression[i]))) ++i;
  if (i >= expression.size() || expression[i] != '(') return {};
  if (name == "COUNT" || name == "SUM" || name == "AVG" || name == "MIN" || name == "MAX") {
    return name;
  }
  return {};
}

namespace {

void collect(const GroupPattern& g, std::vector<TriplePattern>& out);

void collect(const GraphPattern& gp, std::vector<TriplePattern>& out) {
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, BasicPattern>) {
          out.insert(out.end(), n.triples.begin(), n.triples.end());
        } else if constexpr (std::is_same_v<T, GroupPattern>) {
          collect(n, out);
        } else if constexpr (std::is_same_v<T, FilterPattern>) {
          if (n.inner) collect(**n.inner, out);
        } else if constexpr (std::is_same_v<T, UnionPattern>) {
          collect(*n.left, out);
          collect(*n.right, out);
        } else {
          collect(*n.inner, out);
        }
      },
      gp.node);
}

void collect(const GroupPattern& g, std::vector<TriplePattern>& out) {
  for (const auto& e : g.elements) collect(e, out);
}

}  // namespace

std::vector<TriplePattern> collect_triple_patterns(const QueryAst& ast) {
  std::vector<TriplePattern> out;
  collect(ast.where, out);
  return out;
}

}  // namespace kgqa::sparql

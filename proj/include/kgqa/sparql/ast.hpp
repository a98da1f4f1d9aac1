#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "kgqa/box.hpp"

namespace kgqa::sparql {

inline constexpr const char* kRdfType = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";
inline constexpr const char* kXsd = "http://www.w3.org/2001/XMLSchema#";

enum class TermKind { Variable, Iri, Literal };

/// An RDF term or variable in a triple pattern.
///
/// Variables store their name without the `?`/`$` sigil. IRIs are always
/// fully expanded. Literals keep the unescaped lexical form plus an optional
/// datatype IRI or language tag (never both).
struct Term {
  TermKind kind = TermKind::Variable;
  std::string lexical;
  std::string datatype;
  std::string language;

  static Term variable(std::string name) { return {TermKind::Variable, std::move(name), {}, {}}; }
  static Term iri(std::string value) { return {TermKind::Iri, std::move(value), {}, {}}; }
  static Term literal(std::string lexical, std::string datatype = {}, std::string language = {}) {
    return {TermKind::Literal, std::move(lexical), std::move(datatype), std::move(language)};
  }

  bool is_variable() const { return kind == TermKind::Variable; }

  auto operator<=>(const Term&) const = default;
  bool operator==(const Term&) const = default;
};

struct TriplePattern {
  Term subject;
  Term predicate;
  Term object;

  bool operator==(const TriplePattern&) const = default;
};

struct GraphPattern;

struct BasicPattern {
  std::vector<TriplePattern> triples;
};

struct GroupPattern {
  std::vector<GraphPattern> elements;
};

/// FILTER constraint. The expression is kept as source text; `variables`
/// holds the sorted, distinct names it mentions. `FILTER NOT EXISTS { ... }`
/// sets `not_exists` and carries the inner group.
struct FilterPattern {
  std::string expression;
  std::vector<std::string> variables;
  bool not_exists = false;
  std::optional<Box<GroupPattern>> inner;
};

/// Binary union; `A UNION B UNION C` nests to the left.
struct UnionPattern {
  Box<GraphPattern> left;
  Box<GraphPattern> right;
};

struct OptionalPattern {
  Box<GroupPattern> inner;
};

struct MinusPattern {
  Box<GroupPattern> inner;
};

struct GraphPattern {
  std::variant<BasicPattern, GroupPattern, FilterPattern, UnionPattern, OptionalPattern,
               MinusPattern>
      node;
};

bool operator==(const BasicPattern& a, const BasicPattern& b);
bool operator==(const GroupPattern& a, const GroupPattern& b);
bool operator==(const FilterPattern& a, const FilterPattern& b);
bool operator==(const UnionPattern& a, const UnionPattern& b);
bool operator==(const OptionalPattern& a, const OptionalPattern& b);
bool operator==(const MinusPattern& a, const MinusPattern& b);
bool operator==(const GraphPattern& a, const GraphPattern& b);

/// One SELECT item: `?v`, `(expr AS ?v)` or a bare aggregate call.
struct Projection {
  std::string variable;    // empty for a bare aggregate without alias
  std::string expression;  // empty for a plain variable

  bool operator==(const Projection&) const = default;
};

struct OrderCondition {
  std::string expression;
  bool ascending = true;

  bool operator==(const OrderCondition&) const = default;
};

struct SolutionModifiers {
  bool distinct = false;
  bool reduced = false;  // accepted, never counted by the analyses
  bool select_all = false;
  std::vector<Projection> projection;
  std::vector<std::string> group_by;
  std::optional<std::string> having;
  std::vector<OrderCondition> order_by;
  std::optional<std::uint64_t> limit;
  std::optional<std::uint64_t> offset;

  bool operator==(const SolutionModifiers&) const = default;
};

enum class QueryType { Select, Ask };

struct QueryAst {
  QueryType type = QueryType::Select;
  GroupPattern where;
  SolutionModifiers modifiers;
  /// Declared prefixes in source order (prefix name without ':', IRI base).
  std::vector<std::pair<std::string, std::string>> prefixes;
  std::string source_text;
};

/// Equality of everything except the original source text.
bool structurally_equal(const QueryAst& a, const QueryAst& b);

/// Returns the aggregate function name (upper case) if `expression` starts
/// with COUNT/SUM/AVG/MIN/MAX followed by '(' , otherwise an empty string.
std::string leading_aggregate(const std::string& expression);

}  // namespace kgqa::sparql

#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kgqa/error.hpp"
#include "kgqa/sparql/ast.hpp"

namespace kgqa::sparql {

/// Malformed input. Carries the 1-based position and the offending token
/// ("<EOF>" at end of input).
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& message, std::size_t line, std::size_t column, std::string token);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& token() const { return token_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string token_;
};

/// Well-formed SPARQL outside the supported subset (CONSTRUCT, property
/// paths, subqueries, SERVICE, ...). `feature()` names the construct.
class UnsupportedFeature : public Error {
 public:
  UnsupportedFeature(std::string feature, std::size_t line, std::size_t column);

  const std::string& feature() const { return feature_; }

 private:
  std::string feature_;
};

/// Prefixes that benchmark queries commonly use without declaring them
/// (rdf, rdfs, xsd, owl, foaf, dbo, dbp, dbr, res, yago, skos, wd, wdt, ...).
const std::vector<std::pair<std::string, std::string>>& well_known_prefixes();

struct ParseOptions {
  /// Consulted for prefixed names whose prefix the query does not declare.
  std::vector<std::pair<std::string, std::string>> implicit_prefixes = well_known_prefixes();
  /// Maximum nesting of `{ }` groups.
  std::size_t max_depth = 64;
};

QueryAst parse_query(std::string_view text, const ParseOptions& options = {});

/// Canonical text: one clause per line, two-space indent per group depth.
/// parse_query(print_query(ast)) is structurally equal to `ast`.
std::string print_query(const QueryAst& ast);

/// Every triple pattern of the query in source order, including those in
/// OPTIONAL, UNION, MINUS and NOT EXISTS blocks. Duplicates are kept.
std::vector<TriplePattern> collect_triple_patterns(const QueryAst& ast);

}  // namespace kgqa::sparql

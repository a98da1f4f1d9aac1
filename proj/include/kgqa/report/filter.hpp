#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "kgqa/report/report.hpp"

namespace kgqa::report {

struct Range {
  std::optional<double> min;
  std::optional<double> max;

  bool contains(double v) const { return (!min || v >= *min) && (!max || v <= *max); }
};

enum class Field { Id, Type, Wh, Shape, Class, Signature, Keyword, Triples, F1, Correct, Processed, HasQuery, QueryStatus };

struct Clause {
  Field field;
  std::string text;  // canonical value for name-like fields
  Range range;       // Triples, F1
  bool flag = false; // Correct, Processed, HasQuery
};

/// Conjunction of clauses over per-question report records. Query clauses
/// never match records without a parsed query; evaluation clauses never
/// match records of an analysis report.
class Filter {
 public:
  /// "field=value" strings, e.g. "type=How", "shape=Star", "triples=2..3",
  /// "f1=0.5..", "correct=false". Throws Error("UnknownField") and
  /// Error("InvalidArgument").
  static Filter parse(std::span<const std::string> clauses);
  /// A JSON object {field: value | [value, ...]} (each array element is
  /// its own clause) or an array of "field=value" strings.
  static Filter from_json(const nlohmann::ordered_json& predicate);

  void add(std::string_view field, std::string_view value);
  bool matches(const nlohmann::ordered_json& record) const;
  const std::vector<Clause>& clauses() const { return clauses_; }

 private:
  std::vector<Clause> clauses_;
};

/// Records of `report` (a serialized report document) that pass.
std::vector<nlohmann::ordered_json> filter_questions(const nlohmann::ordered_json& report, const Filter& filter);
std::vector<nlohmann::ordered_json> filter_questions(const Report& report, const Filter& filter);

}  // namespace kgqa::report

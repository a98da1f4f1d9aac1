#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kgqa/nlq/question.hpp"
#include "kgqa/sparql/ast.hpp"

namespace kgqa::bench {

enum class AnswerKind { Bindings, Boolean };

/// Gold or system answers. Binding values are kept as lexical text (IRI,
/// literal value or number), deduplicated and sorted.
struct AnswerSet {
  AnswerKind kind = AnswerKind::Bindings;
  bool boolean_value = false;
  std::vector<std::string> values;

  static AnswerSet bindings(std::vector<std::string> values);
  static AnswerSet boolean(bool value);

  bool operator==(const AnswerSet&) const = default;
};

enum class QueryStatus { Parsed, ParseFailed, Absent };

std::string_view query_status_name(QueryStatus s);  // "parsed", "parseFailed", "absent"

struct QueryInfo {
  QueryStatus status = QueryStatus::Absent;
  std::string text;   // source text, empty when absent
  std::string error;  // parse error message when ParseFailed
  std::optional<sparql::QueryAst> ast;

  /// Parses `text`; a SyntaxError or UnsupportedFeature becomes ParseFailed.
  static QueryInfo from_text(std::string text);
  static QueryInfo absent() { return {}; }

  friend bool operator==(const QueryInfo& a, const QueryInfo& b);
};

struct BenchmarkEntry {
  std::string question_id;
  nlq::Nlq nlq;
  QueryInfo query;
  AnswerSet gold;
  std::string language = "en";

  bool operator==(const BenchmarkEntry&) const;
};

struct Benchmark {
  std::string name;
  int version = 0;
  std::string target_kg;
  std::vector<BenchmarkEntry> entries;

  std::size_t parse_failures() const;
  /// Nullptr when the id is unknown.
  const BenchmarkEntry* find(std::string_view question_id) const;

  bool operator==(const Benchmark&) const = default;
};

/// Question-identity key: lower-cased tokens joined by single spaces.
std::string normalized_question(const nlq::Nlq& question);

/// Entry built from raw parts; throws Error("MalformedFile") when the
/// question has no tokens.
BenchmarkEntry make_entry(std::string id, std::string_view question, QueryInfo query,
                          AnswerSet gold, std::string language = "en");

}  // namespace kgqa::bench

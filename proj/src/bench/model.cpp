#include "kgqa/bench/model.hpp"

#include <algorithm>
#include <cctype>

#include "kgqa/error.hpp"
#include "kgqa/sparql/parser.hpp"

namespace kgqa::bench {

AnswerSet AnswerSet::bindings(std::vector<std::string> values) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  AnswerSet a;
  a.values = std::move(values);
  return a;
}

AnswerSet AnswerSet::boolean(bool value) {
  AnswerSet a;
  a.kind = AnswerKind::Boolean;
  a.boolean_value = value;
  return a;
}

std::string_view query_status_name(QueryStatus s) {
  switch (s) {
    case QueryStatus::Parsed: return "parsed";
    case QueryStatus::ParseFailed: return "parseFailed";
    case QueryStatus::Absent: return "absent";
  }
  return "absent";
}

QueryInfo QueryInfo::from_text(std::string text) {
  QueryInfo q;
  q.text = std::move(text);
  try {
    q.ast = sparql::parse_query(q.text);
    q.status = QueryStatus::Parsed;
  } catch (const Error& e) {
    q.status = QueryStatus::ParseFailed;
    q.error = e.what();
  }
  return q;
}

bool operator==(const QueryInfo& a, const QueryInfo& b) {
  if (a.status != b.status || a.text != b.text || a.error != b.error) return false;
  if (a.ast.has_value() != b.ast.has_value()) return false;
  return !a.ast || sparql::structurally_equal(*a.ast, *b.ast);
}

bool BenchmarkEntry::operator==(const BenchmarkEntry& o) const {
  return question_id == o.question_id && nlq.tokens == o.nlq.tokens &&
         nlq.raw_text == o.nlq.raw_text && query == o.query && gold == o.gold &&
         language == o.language;
}

std::size_t Benchmark::parse_failures() const {
  return static_cast<std::size_t>(std::count_if(entries.begin(), entries.end(), [](const auto& e) {
    return e.query.status == QueryStatus::ParseFailed;
  }));
}

const BenchmarkEntry* Benchmark::find(std::string_view question_id) const {
  for (const auto& e : entries) {
    if (e.question_id == question_id) return &e;
  }
  return nullptr;
}

std::string normalized_question(const nlq::Nlq& question) {
  std::string out;
  for (const auto& t : question.tokens) {
    if (!out.empty()) out += ' ';
    for (char c : t) out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return out;
}

BenchmarkEntry make_entry(std::string id, std::string_view question, QueryInfo query,
                          AnswerSet gold, std::string language) {
  BenchmarkEntry e;
  try {
    e.nlq = nlq::tokenize(question, id);
  } catch (const Error&) {
    throw Error("MalformedFile", "question '" + id + "' has no text");
  }
  e.question_id = std::move(id);
  e.query = std::move(query);
  e.gold = std::move(gold);
  e.language = std::move(language);
  return e;
}

}  // namespace kgqa::bench

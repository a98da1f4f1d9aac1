#pragma once

#include <istream>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kgqa/bench/model.hpp"

namespace kgqa::eval {

/// Where system answers come from. `answer` returns nullopt when nothing
/// usable came back; callers treat that as an empty answer.
class AnswerSource {
 public:
  virtual ~AnswerSource() = default;
  virtual std::optional<bench::AnswerSet> answer(const bench::BenchmarkEntry& entry) = 0;
};

/// {"predictions": [{"id", "answers": [..]} | {"id", "boolean": b}]}
class PredictionsFile : public AnswerSource {
 public:
  static PredictionsFile parse(std::string_view json);
  static PredictionsFile load(const std::string& path);

  std::optional<bench::AnswerSet> answer(const bench::BenchmarkEntry& entry) override;
  std::size_t size() const { return answers_.size(); }

 private:
  std::map<std::string, bench::AnswerSet, std::less<>> answers_;
};

/// POSTs {"question", "lang"} to a QA system and reads {"answers": [..]} or
/// {"boolean": b}. A URL without a path gets "/answer".
class QaEndpoint : public AnswerSource {
 public:
  QaEndpoint(const std::string& url, double timeout_seconds);

  std::optional<bench::AnswerSet> answer(const bench::BenchmarkEntry& entry) override;

 private:
  std::string origin_;
  std::string path_;
  double timeout_;
};

/// Parses a QA response body; nullopt when it has neither field.
std::optional<bench::AnswerSet> parse_qa_response(std::string_view body);

/// Asks for every entry with up to `parallel` requests in flight. Results
/// follow entry order; failures become empty bindings.
std::vector<bench::AnswerSet> fetch_answers(AnswerSource& source,
                                            std::span<const bench::BenchmarkEntry> entries,
                                            std::size_t parallel = 4);

}  // namespace kgqa::eval

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "kgqa/analysis/stats.hpp"
#include "kgqa/bench/model.hpp"
#include "kgqa/bench/overlap.hpp"
#include "kgqa/eval/evaluate.hpp"
#include "kgqa/nlq/question.hpp"

namespace kgqa::report {

inline constexpr int kSchemaVersion = 1;

enum class ReportMode { Analysis, Evaluation };

struct QuestionRecord {
  std::string question_id;
  std::string question;
  std::string language;
  nlq::QuestionType type;
  bench::QueryInfo query;
  std::optional<analysis::QueryFeatures> features;  // parsed queries only
  std::optional<eval::PerQuestionResult> evaluation;
};

struct EvaluationSection {
  double theta = 0;
  bool strict = false;
  bool macro_over_processed = false;
  eval::EvaluationScores scores;
  std::vector<eval::SweepRow> sweep;
  eval::GroupedResults groups;
};

struct Report {
  ReportMode mode = ReportMode::Analysis;
  std::string name;
  int version = 0;
  std::string target_kg;
  std::size_t question_count = 0;
  std::size_t parse_failures = 0;
  std::optional<analysis::BenchmarkQueryStats> query_stats;  // absent without parsed queries
  nlq::QuestionTypeStats question_types;
  std::optional<bench::OverlapReport> overlap;
  std::optional<EvaluationSection> evaluation;
  std::vector<QuestionRecord> questions;
};

/// Analysis report, or an evaluation report when `evaluation` is given.
/// Throws Error("EmptyInput") for an empty benchmark and
/// Error("InconsistentInputs") when the evaluation does not line up with
/// the benchmark's questions.
Report build_report(const bench::Benchmark& benchmark,
                    const std::optional<bench::OverlapReport>& overlap = std::nullopt,
                    const eval::EvaluationResult* evaluation = nullptr,
                    const eval::EvalConfig& config = {});

nlohmann::ordered_json to_json(const Report& report);

/// The one serialization used by every writer: two-space indent and a
/// trailing newline.
std::string serialize(const Report& report);

nlohmann::ordered_json answers_json(const bench::AnswerSet& answers);

}  // namespace kgqa::report

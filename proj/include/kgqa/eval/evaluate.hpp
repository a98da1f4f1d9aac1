#pragma once

#include <string>
#include <vector>

#include "kgqa/bench/model.hpp"
#include "kgqa/eval/grouping.hpp"
#include "kgqa/eval/scoring.hpp"
#include "kgqa/eval/sources.hpp"

namespace kgqa::eval {

struct EvalConfig {
  double theta = 0.0;
  bool strict = false;
  std::string qa_endpoint;       // live mode
  std::string predictions_path;  // offline mode, preferred when both are set
  double timeout_seconds = 30.0;
  std::size_t parallel = 4;
  NormalizationOptions normalization;
  bool yes_no_coercion = true;
  bool macro_over_processed = false;

  /// Throws Error("InvalidArgument") for theta outside [0,1], a
  /// non-positive timeout or zero parallelism.
  void validate() const;
  CorrectnessRule rule() const { return {theta, strict}; }
};

struct EvaluationResult {
  std::vector<PerQuestionResult> questions;
  EvaluationScores scores;
  std::vector<SweepRow> sweep;
  GroupedResults groups;
};

/// Scores already collected answers (parallel to the entries). Throws
/// Error("EmptyBenchmark") and Error("DimensionMismatch").
EvaluationResult evaluate_answers(const EvalConfig& config, const bench::Benchmark& benchmark,
                                  std::span<const bench::AnswerSet> answers);

EvaluationResult evaluate(const EvalConfig& config, const bench::Benchmark& benchmark,
                          AnswerSource& source);

/// Builds the source from the config. Throws Error("ConfigError") when
/// neither a predictions file nor an endpoint is given.
EvaluationResult evaluate(const EvalConfig& config, const bench::Benchmark& benchmark);

}  // namespace kgqa::eval

#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "kgqa/bench/model.hpp"

namespace kgqa::eval {

/// Answer matching switches. IRIs always compare exactly once brackets are
/// removed; the remaining rules only touch literals.
struct NormalizationOptions {
  bool trim = true;
  bool strip_datatype = true;   // "5"^^xsd:integer -> 5
  bool ignore_language = true;  // "Berlin"@en -> Berlin
  bool numeric = true;          // 1.50, 1.5 and "1.5"^^xsd:double compare equal
  bool expand_prefixes = true;  // dbr:Ottawa -> http://dbpedia.org/resource/Ottawa
};

std::string normalize_value(std::string_view value, const NormalizationOptions& options = {});

/// Sorted, deduplicated normalized values. A boolean becomes {"true"} or
/// {"false"}.
std::vector<std::string> normalized_set(const bench::AnswerSet& answers,
                                        const NormalizationOptions& options = {});

struct Score {
  double precision = 0;
  double recall = 0;
  double f1 = 0;
  std::size_t answer_count = 0;  // |A| after normalization
  std::size_t gold_count = 0;    // |G| after normalization
  std::size_t overlap = 0;       // |A ∩ G|
};

/// Harmonic mean; 0 when both inputs are 0.
double f1(double precision, double recall);

/// Scores one answer set against gold. With `yes_no` set, non-boolean gold
/// is read as Boolean(non-empty) first.
Score score_question(const bench::AnswerSet& answers, const bench::AnswerSet& gold,
                     const NormalizationOptions& options = {}, bool yes_no = false);

struct CorrectnessRule {
  double theta = 0.0;
  bool strict = false;  // F = 1 required; implied at theta >= 1
};

/// A question counts as correct when it was processed and its F passes the
/// rule.
bool is_correct(bool processed, double f, const CorrectnessRule& rule);

struct PerQuestionResult {
  std::string question_id;
  bench::AnswerSet answers;
  bench::AnswerSet gold;
  bool yes_no_coerced = false;
  Score score;
  bool processed = false;  // the system returned something
  bool correct = false;
};

struct EvaluationScores {
  double micro_precision = 0, micro_recall = 0, micro_f1 = 0;
  double macro_precision = 0, macro_recall = 0, macro_f1 = 0;
  double global_precision = 0, global_recall = 0, global_f1 = 0;
  std::size_t questions = 0;  // |Q|
  std::size_t processed = 0;  // |S|
  std::size_t correct = 0;    // |C|
};

/// Micro sums run over every question. Macro averages divide by all
/// questions, or by processed ones with `macro_over_processed`.
EvaluationScores compute_scores(std::span<const PerQuestionResult> results,
                                const CorrectnessRule& rule, bool macro_over_processed = false);

struct SweepRow {
  double theta = 0;
  double precision = 0;
  double recall = 0;
  double f1 = 0;
  std::size_t correct = 0;
};

/// 0.0, 0.1, ..., 1.0.
std::vector<double> default_sweep_steps();

std::vector<SweepRow> threshold_sweep(std::span<const PerQuestionResult> results,
                                      std::span<const double> steps);

}  // namespace kgqa::eval

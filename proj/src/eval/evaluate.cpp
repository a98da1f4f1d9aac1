#include "kgqa/eval/evaluate.hpp"

#include "kgqa/error.hpp"
#include "kgqa/nlq/question.hpp"

namespace kgqa::eval {

void EvalConfig::validate() const {
  if (!(theta >= 0.0 && theta <= 1.0)) throw Error("InvalidArgument", "theta must lie in [0, 1]");
  if (!(timeout_seconds > 0)) throw Error("InvalidArgument", "timeout must be positive");
  if (parallel == 0) throw Error("InvalidArgument", "parallelism must be at least 1");
}

EvaluationResult evaluate_answers(const EvalConfig& config, const bench::Benchmark& benchmark,
                                  std::span<const bench::AnswerSet> answers) {
  config.validate();
  if (benchmark.entries.empty()) throw Error("EmptyBenchmark", "benchmark has no questions");
  if (answers.size() != benchmark.entries.size()) {
    throw Error("DimensionMismatch", "answer count differs from question count");
  }
  EvaluationResult out;
  out.questions.reserve(answers.size());
  for (std::size_t i = 0; i < answers.size(); ++i) {
    const auto& e = benchmark.entries[i];
    PerQuestionResult r;
    r.question_id = e.question_id;
    r.answers = answers[i];
    r.gold = e.gold;
    bool yes_no = config.yes_no_coercion && e.gold.kind == bench::AnswerKind::Bindings &&
                  nlq::classify_question(e.nlq).category == nlq::QuestionCategory::YesNo;
    r.yes_no_coerced = yes_no;
    r.score = score_question(r.answers, r.gold, config.normalization, yes_no);
    r.processed = r.score.answer_count > 0;
    r.correct = is_correct(r.processed, r.score.f1, config.rule());
    out.questions.push_back(std::move(r));
  }
  out.scores = compute_scores(out.questions, config.rule(), config.macro_over_processed);
  auto steps = default_sweep_steps();
  out.sweep = threshold_sweep(out.questions, steps);
  out.groups = group_results(benchmark.entries, out.questions);
  return out;
}

EvaluationResult evaluate(const EvalConfig& config, const bench::Benchmark& benchmark,
                          AnswerSource& source) {
  config.validate();
  if (benchmark.entries.empty()) throw Error("EmptyBenchmark", "benchmark has no questions");
  auto answers = fetch_answers(source, benchmark.entries, config.parallel);
  return evaluate_answers(config, benchmark, answers);
}

EvaluationResult evaluate(const EvalConfig& config, const bench::Benchmark& benchmark) {
  if (!config.predictions_path.empty()) {
    auto p = PredictionsFile::load(config.predictions_path);
    return evaluate(config, benchmark, p);
  }
  if (!config.qa_endpoint.empty()) {
    QaEndpoint qa(config.qa_endpoint, config.timeout_seconds);
    return evaluate(config, benchmark, qa);
  }
  throw Error("ConfigError", "either a predictions file or a QA endpoint is required");
}

}  // namespace kgqa::eval

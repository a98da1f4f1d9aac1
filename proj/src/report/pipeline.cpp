#include "kgqa/report/pipeline.hpp"

#include "kgqa/bench/overlap.hpp"
#include "kgqa/error.hpp"

namespace kgqa::report {

bench::Benchmark analysis_subject(std::span<const bench::Benchmark> benchmarks) {
  if (benchmarks.empty()) throw Error("EmptyInput", "no benchmark to analyze");
  if (benchmarks.size() == 1) return benchmarks.front();
  return bench::deduplicate(benchmarks);
}

Report analysis_report(std::span<const bench::Benchmark> benchmarks) {
  auto subject = analysis_subject(benchmarks);
  std::optional<bench::OverlapReport> overlap;
  if (benchmarks.size() > 1) overlap = bench::overlap_analysis(benchmarks);
  return build_report(subject, overlap);
}

Report evaluation_report(const bench::Benchmark& benchmark, const eval::EvalConfig& config,
                         eval::AnswerSource& source) {
  auto result = eval::evaluate(config, benchmark, source);
  return build_report(benchmark, std::nullopt, &result, config);
}

}  // namespace kgqa::report

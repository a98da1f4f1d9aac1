#pragma once

#include <span>

#include "kgqa/bench/model.hpp"
#include "kgqa/eval/evaluate.hpp"
#include "kgqa/report/report.hpp"

namespace kgqa::report {

/// Analysis report over one benchmark, or over the deduplicated union of
/// several (oldest first) with their overlap table. Both the CLI and the
/// service go through here.
Report analysis_report(std::span<const bench::Benchmark> benchmarks);

/// Merged benchmark the analysis above describes.
bench::Benchmark analysis_subject(std::span<const bench::Benchmark> benchmarks);

Report evaluation_report(const bench::Benchmark& benchmark, const eval::EvalConfig& config,
                         eval::AnswerSource& source);

}  // namespace kgqa::report

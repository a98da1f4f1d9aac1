#pragma once

#include <span>
#include <string>
#include <vector>

#include "kgqa/bench/model.hpp"

namespace kgqa::bench {

/// Union keyed by normalized question text; for repeated questions the
/// entry from the newest benchmark wins. Input is ordered oldest first.
/// Ids that would clash are prefixed with "<benchmark name>/".
Benchmark deduplicate(std::span<const Benchmark> benchmarks);

struct OverlapRow {
  std::string name;
  int version = 0;
  std::size_t total = 0;
  std::size_t repeated_same_query = 0;
  std::size_t repeated_changed_query = 0;
  std::size_t new_questions = 0;
};

struct OverlapReport {
  std::vector<OverlapRow> rows;
};

/// For each benchmark (oldest first): questions whose normalized text
/// appears in any older benchmark, split by whether the query matches the
/// most recent older occurrence (canonical print for parsed queries, raw
/// text otherwise). Throws Error("NeedTwoBenchmarks").
OverlapReport overlap_analysis(std::span<const Benchmark> benchmarks);

/// True when two entries carry the same query.
bool same_query(const QueryInfo& a, const QueryInfo& b);

}  // namespace kgqa::bench

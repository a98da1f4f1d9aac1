#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "kgqa/analysis/features.hpp"
#include "kgqa/bench/model.hpp"
#include "kgqa/eval/scoring.hpp"

namespace kgqa::eval {

inline constexpr const char* kNoQueryGroup = "(no query)";
inline constexpr const char* kNoShapeGroup = "(not applicable)";

/// Second-level key: query class, keyword signature and triple count.
struct GroupKey {
  analysis::QueryClass query_class = analysis::QueryClass::CQ;
  std::string signature;
  std::size_t triples = 0;

  /// "(CQ, select-distinct-and, T=2)"
  std::string label() const;

  auto operator<=>(const GroupKey&) const = default;
};

struct GroupCell {
  std::size_t correct = 0;
  std::size_t incorrect = 0;
  std::vector<std::string> question_ids;
};

struct ShapeGroup {
  std::string shape;  // shape name, kNoShapeGroup or kNoQueryGroup
  std::map<GroupKey, GroupCell> cells;

  std::size_t correct() const;
  std::size_t incorrect() const;
};

/// Only processed questions are grouped. A question appears under every
/// shape flag it carries; queries outside the shape classes go under
/// kNoShapeGroup and entries without a parsed query under kNoQueryGroup.
struct GroupedResults {
  std::vector<ShapeGroup> shapes;  // shape order, then the two fallbacks

  const ShapeGroup* find(std::string_view shape) const;
};

/// `entries` and `results` are parallel.
GroupedResults group_results(std::span<const bench::BenchmarkEntry> entries,
                             std::span<const PerQuestionResult> results);

}  // namespace kgqa::eval

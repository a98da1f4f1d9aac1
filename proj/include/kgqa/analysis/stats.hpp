#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "kgqa/analysis/features.hpp"

namespace kgqa::analysis {

/// Absolute count with its percentage of a denominator, rounded to two
/// decimals.
struct CountShare {
  std::size_t count = 0;
  double percent = 0.0;
};

CountShare share(std::size_t count, std::size_t total);

struct KeywordRow {
  Keyword keyword;
  CountShare value;
};

struct HistogramRow {
  std::string bucket;  // "0" (only when present), "1" .. "10", "11+"
  CountShare value;
};

struct OperatorRow {
  OperatorCombo combo;
  CountShare value;
};

struct OperatorBlock {
  std::string name;  // "CPF", "Optional", "Union"
  std::vector<OperatorRow> rows;
  CountShare subtotal;
};

struct ShapeRow {
  shape::Shape shape;
  CountShare value;
};

/// Shape distribution over one population of queries.
struct ShapeDistribution {
  std::string population;  // "all", "CQ", "CQ_F", "CQ_OF"
  std::size_t queries = 0;
  std::vector<ShapeRow> rows;
};

struct BenchmarkQueryStats {
  std::size_t total = 0;
  std::vector<KeywordRow> keywords;
  std::vector<HistogramRow> triples;
  std::vector<OperatorBlock> operators;
  /// Distribution over all queries ("all"; queries of class Other count in
  /// the denominator but exhibit no shape), then over CQ, CQ_F and CQ_OF.
  /// Classes are cumulative: CQ_F includes CQ queries and so on.
  std::vector<ShapeDistribution> shapes;
};

/// Throws kgqa::Error("EmptyInput") for an empty list.
BenchmarkQueryStats aggregate_benchmark_stats(std::span<const QueryFeatures> features);

}  // namespace kgqa::analysis

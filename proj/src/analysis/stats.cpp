#include "kgqa/analysis/stats.hpp"

#include <array>
#include <algorithm>
#include <cmath>
#include <optional>

#include "kgqa/error.hpp"

namespace kgqa::analysis {

CountShare share(std::size_t count, std::size_t total) {
  if (total == 0) return {count, 0.0};
  double pct = 100.0 * static_cast<double>(count) / static_cast<double>(total);
  return {count, std::round(pct * 100.0) / 100.0};
}

namespace {

OperatorBlock block(std::string name, const std::vector<int>& combos,
                    const std::array<std::size_t, 16>& counts, std::size_t total) {
  OperatorBlock b;
  b.name = std::move(name);
  std::size_t sum = 0;
  for (int i : combos) {
    b.rows.push_back({OperatorCombo::from_index(i), share(counts[i], total)});
    sum += counts[i];
  }
  b.subtotal = share(sum, total);
  return b;
}

ShapeDistribution distribution(std::string population, std::span<const QueryFeatures> features,
                               std::optional<QueryClass> within) {
  ShapeDistribution d;
  d.population = std::move(population);
  std::array<std::size_t, shape::kAllShapes.size()> counts{};
  for (const auto& f : features) {
    if (within && !within_class(f.query_class, *within)) continue;
    ++d.queries;
    for (std::size_t i = 0; i < shape::kAllShapes.size(); ++i) {
      if (f.shapes.has(shape::kAllShapes[i])) ++counts[i];
    }
  }
  for (std::size_t i = 0; i < shape::kAllShapes.size(); ++i) {
    d.rows.push_back({shape::kAllShapes[i], share(counts[i], d.queries)});
  }
  return d;
}

}  // namespace

BenchmarkQueryStats aggregate_benchmark_stats(std::span<const QueryFeatures> features) {
  if (features.empty()) throw Error("EmptyInput", "no queries to aggregate");
  BenchmarkQueryStats s;
  s.total = features.size();

  for (auto k : kAllKeywords) {
    std::size_t n = 0;
    for (const auto& f : features) n += f.keywords.has(k) ? 1 : 0;
    s.keywords.push_back({k, share(n, s.total)});
  }

  std::array<std::size_t, 12> buckets{};  // 0, 1..10, 11+
  for (const auto& f : features) buckets[std::min<std::size_t>(f.triple_count, 11)]++;
  if (buckets[0] > 0) s.triples.push_back({"0", share(buckets[0], s.total)});
  for (std::size_t t = 1; t <= 10; ++t) {
    s.triples.push_back({std::to_string(t), share(buckets[t], s.total)});
  }
  s.triples.push_back({"11+", share(buckets[11], s.total)});

  std::array<std::size_t, 16> combos{};
  for (const auto& f : features) combos[f.combo.index()]++;
  // Index bits: A=1, F=2, O=4, U=8.
  s.operators.push_back(block("CPF", {0, 2, 1, 3}, combos, s.total));
  s.operators.push_back(block("Optional", {4, 6, 5, 7}, combos, s.total));
  std::vector<int> with_union;
  for (int i = 8; i < 16; ++i) {
    if (combos[i] > 0) with_union.push_back(i);
  }
  s.operators.push_back(block("Union", with_union, combos, s.total));

  s.shapes.push_back(distribution("all", features, std::nullopt));
  s.shapes.push_back(distribution("CQ", features, QueryClass::CQ));
  s.shapes.push_back(distribution("CQ_F", features, QueryClass::CQ_F));
  s.shapes.push_back(distribution("CQ_OF", features, QueryClass::CQ_OF));
  return s;
}

}  // namespace kgqa::analysis

#include "kgqa/eval/grouping.hpp"

#include "kgqa/error.hpp"

namespace kgqa::eval {

std::string GroupKey::label() const {
  return "(" + std::string(analysis::class_name(query_class)) + ", " + signature +
         ", T=" + std::to_string(triples) + ")";
}

std::size_t ShapeGroup::correct() const {
  std::size_t n = 0;
  for (const auto& [k, c] : cells) n += c.correct;
  return n;
}

std::size_t ShapeGroup::incorrect() const {
  std::size_t n = 0;
  for (const auto& [k, c] : cells) n += c.incorrect;
  return n;
}

const ShapeGroup* GroupedResults::find(std::string_view shape) const {
  for (const auto& g : shapes) {
    if (g.shape == shape) return &g;
  }
  return nullptr;
}

GroupedResults group_results(std::span<const bench::BenchmarkEntry> entries,
                             std::span<const PerQuestionResult> results) {
  if (entries.size() != results.size()) {
    throw Error("DimensionMismatch", "entries and results differ in length");
  }
  std::vector<ShapeGroup> slots;
  for (auto s : shape::kAllShapes) slots.push_back({std::string(shape::shape_name(s)), {}});
  slots.push_back({kNoShapeGroup, {}});
  slots.push_back({kNoQueryGroup, {}});
  const std::size_t no_shape = slots.size() - 2, no_query = slots.size() - 1;

  auto add = [&](std::size_t slot, const GroupKey& key, const PerQuestionResult& r) {
    auto& cell = slots[slot].cells[key];
    (r.correct ? cell.correct : cell.incorrect) += 1;
    cell.question_ids.push_back(r.question_id);
  };

  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& r = results[i];
    if (!r.processed) continue;
    const auto& q = entries[i].query;
    if (q.status != bench::QueryStatus::Parsed || !q.ast) {
      add(no_query, GroupKey{analysis::QueryClass::Other, "", 0}, r);
      continue;
    }
    auto f = analysis::extract_features(*q.ast);
    GroupKey key{f.query_class, f.keywords.signature(), f.triple_count};
    auto flags = f.shapes.shapes();
    if (!f.shapes.applicable || flags.empty()) {
      add(no_shape, key, r);
      continue;
    }
    for (auto s : flags) add(static_cast<std::size_t>(s), key, r);
  }

  GroupedResults out;
  for (auto& g : slots) {
    if (!g.cells.empty()) out.shapes.push_back(std::move(g));
  }
  return out;
}

}  // namespace kgqa::eval

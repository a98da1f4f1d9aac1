#include "kgqa/bench/overlap.hpp"

#include <map>
#include <set>
#include <unordered_map>

#include "kgqa/error.hpp"
#include "kgqa/sparql/parser.hpp"

namespace kgqa::bench {

namespace {

std::string trimmed(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

bool same_query(const QueryInfo& a, const QueryInfo& b) {
  if (a.status != b.status) return false;
  switch (a.status) {
    case QueryStatus::Absent: return true;
    case QueryStatus::ParseFailed: return trimmed(a.text) == trimmed(b.text);
    case QueryStatus::Parsed: return sparql::print_query(*a.ast) == sparql::print_query(*b.ast);
  }
  return false;
}

Benchmark deduplicate(std::span<const Benchmark> benchmarks) {
  Benchmark out;
  for (const auto& b : benchmarks) {
    if (!out.name.empty()) out.name += "+";
    out.name += b.name;
    out.version = std::max(out.version, b.version);
    if (out.target_kg.empty()) out.target_kg = b.target_kg;
  }
  if (benchmarks.size() == 1) out.name = benchmarks[0].name;

  // Position of each question key in `out`, and the source of each entry.
  std::unordered_map<std::string, std::size_t> slot;
  std::vector<const Benchmark*> source;
  for (const auto& b : benchmarks) {
    for (const auto& e : b.entries) {
      auto key = normalized_question(e.nlq);
      auto it = slot.find(key);
      if (it == slot.end()) {
        slot.emplace(key, out.entries.size());
        out.entries.push_back(e);
        source.push_back(&b);
      } else {
        out.entries[it->second] = e;
        source[it->second] = &b;
      }
    }
  }

  // Keep ids unique: the first holder keeps the bare id.
  std::set<std::string> used;
  for (std::size_t i = 0; i < out.entries.size(); ++i) {
    auto& e = out.entries[i];
    std::string id = e.question_id;
    if (used.count(id)) {
      id = source[i]->name + "/" + e.question_id;
      for (int n = 2; used.count(id); ++n) {
        id = source[i]->name + "/" + e.question_id + "#" + std::to_string(n);
      }
    }
    used.insert(id);
    e.question_id = id;
    e.nlq.question_id = id;
  }
  return out;
}

OverlapReport overlap_analysis(std::span<const Benchmark> benchmarks) {
  if (benchmarks.size() < 2) {
    throw Error("NeedTwoBenchmarks", "overlap analysis needs at least two benchmarks");
  }
  OverlapReport report;
  // Most recent older occurrence of each question key.
  std::unordered_map<std::string, const QueryInfo*> older;
  for (const auto& b : benchmarks) {
    OverlapRow row;
    row.name = b.name;
    row.version = b.version;
    row.total = b.entries.size();
    std::vector<std::pair<std::string, const QueryInfo*>> seen_here;
    for (const auto& e : b.entries) {
      auto key = normalized_question(e.nlq);
      auto it = older.find(key);
      if (it == older.end()) {
        ++row.new_questions;
      } else if (same_query(*it->second, e.query)) {
        ++row.repeated_same_query;
      } else {
        ++row.repeated_changed_query;
      }
      seen_here.emplace_back(std::move(key), &e.query);
    }
    for (auto& [key, q] : seen_here) older[key] = q;
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace kgqa::bench

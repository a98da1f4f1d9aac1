#include "kgqa/eval/scoring.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <regex>

#include "kgqa/sparql/parser.hpp"

namespace kgqa::eval {

namespace {

std::string_view trimmed(std::string_view s) {
  auto space = [](char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v'; };
  while (!s.empty() && space(s.front())) s.remove_prefix(1);
  while (!s.empty() && space(s.back())) s.remove_suffix(1);
  return s;
}

bool absolute_iri(std::string_view s) {
  static const std::regex scheme(R"(^[A-Za-z][A-Za-z0-9+.-]*://\S*$)");
  if (std::regex_match(s.begin(), s.end(), scheme)) return true;
  return s.starts_with("urn:") || s.starts_with("mailto:");
}

std::string canonical_number(double d) {
  if (d == 0) return "0";
  if (std::floor(d) == d && std::fabs(d) < 1e15) {
    return std::to_string(static_cast<long long>(d));
  }
  char buf[64];
  auto [p, ec] = std::to_chars(buf, buf + sizeof buf, d);
  return std::string(buf, p);
}

}  // namespace

std::string normalize_value(std::string_view value, const NormalizationOptions& options) {
  std::string_view s = options.trim ? trimmed(value) : value;

  if (s.size() >= 2 && s.front() == '<' && s.back() == '>' &&
      s.find_first_of(" \t\n<>", 1) == s.size() - 1) {
    return std::string(s.substr(1, s.size() - 2));
  }
  if (absolute_iri(s)) return std::string(s);

  std::string lex;
  if (s.size() >= 2 && s.front() == '"' && s.rfind('"') > 0) {
    auto close = s.rfind('"');
    auto suffix = s.substr(close + 1);
    if (suffix.starts_with("^^")) {
      if (!options.strip_datatype) return std::string(s);
    } else if (suffix.starts_with("@")) {
      if (!options.ignore_language) return std::string(s);
    } else if (!suffix.empty()) {
      return std::string(s);
    }
    lex = std::string(s.substr(1, close - 1));
  } else {
    static const std::regex prefixed(R"(^([A-Za-z][A-Za-z0-9_.-]*):(\S*)$)");
    static const std::regex tagged(R"(^([\s\S]+)@[A-Za-z]{1,8}(-[A-Za-z0-9]{1,8})*$)");
    std::string text(s);
    std::smatch m;
    if (std::regex_match(text, m, prefixed)) {
      if (options.expand_prefixes) {
        for (const auto& [name, base] : sparql::well_known_prefixes()) {
          if (name == m[1].str()) return base + m[2].str();
        }
      }
      return text;
    }
    if (options.ignore_language && std::regex_match(text, m, tagged)) {
      lex = m[1].str();
    } else {
      lex = std::move(text);
    }
  }
  if (options.trim) lex = std::string(trimmed(lex));

  if (options.numeric) {
    static const std::regex number(R"(^[+-]?([0-9]+(\.[0-9]*)?|\.[0-9]+)([eE][+-]?[0-9]+)?$)");
    if (std::regex_match(lex, number)) {
      double d = std::strtod(lex.c_str(), nullptr);
      if (std::isfinite(d)) return canonical_number(d);
    }
  }
  return lex;
}

std::vector<std::string> normalized_set(const bench::AnswerSet& answers,
                                        const NormalizationOptions& options) {
  if (answers.kind == bench::AnswerKind::Boolean) {
    return {answers.boolean_value ? "true" : "false"};
  }
  std::vector<std::string> out;
  out.reserve(answers.values.size());
  for (const auto& v : answers.values) out.push_back(normalize_value(v, options));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

double f1(double precision, double recall) {
  if (precision + recall <= 0) return 0;
  return 2 * precision * recall / (precision + recall);
}

Score score_question(const bench::AnswerSet& answers, const bench::AnswerSet& gold,
                     const NormalizationOptions& options, bool yes_no) {
  auto g = gold;
  if (yes_no && g.kind == bench::AnswerKind::Bindings) g = bench::AnswerSet::boolean(!g.values.empty());
  auto a_set = normalized_set(answers, options);
  auto g_set = normalized_set(g, options);

  Score s;
  s.answer_count = a_set.size();
  s.gold_count = g_set.size();
  std::vector<std::string> common;
  std::set_intersection(a_set.begin(), a_set.end(), g_set.begin(), g_set.end(),
                        std::back_inserter(common));
  s.overlap = common.size();
  s.precision = s.answer_count ? static_cast<double>(s.overlap) / s.answer_count : 0.0;
  s.recall = s.gold_count ? static_cast<double>(s.overlap) / s.gold_count : 0.0;
  s.f1 = f1(s.precision, s.recall);
  return s;
}

bool is_correct(bool processed, double f, const CorrectnessRule& rule) {
  if (!processed) return false;
  if (rule.strict || rule.theta >= 1.0) return f >= 1.0 - 1e-12;
  return f > rule.theta;
}

EvaluationScores compute_scores(std::span<const PerQuestionResult> results,
                                const CorrectnessRule& rule, bool macro_over_processed) {
  EvaluationScores e;
  e.questions = results.size();
  std::size_t overlap = 0, answered = 0, gold = 0;
  double sum_p = 0, sum_r = 0, sum_f = 0;
  for (const auto& r : results) {
    overlap += r.score.overlap;
    answered += r.score.answer_count;
    gold += r.score.gold_count;
    sum_p += r.score.precision;
    sum_r += r.score.recall;
    sum_f += r.score.f1;
    if (r.processed) ++e.processed;
    if (is_correct(r.processed, r.score.f1, rule)) ++e.correct;
  }
  e.micro_precision = answered ? static_cast<double>(overlap) / answered : 0.0;
  e.micro_recall = gold ? static_cast<double>(overlap) / gold : 0.0;
  e.micro_f1 = f1(e.micro_precision, e.micro_recall);

  std::size_t denom = macro_over_processed ? e.processed : e.questions;
  if (denom) {
    e.macro_precision = sum_p / denom;
    e.macro_recall = sum_r / denom;
    e.macro_f1 = sum_f / denom;
  }

  e.global_precision = e.processed ? static_cast<double>(e.correct) / e.processed : 0.0;
  e.global_recall = e.questions ? static_cast<double>(e.correct) / e.questions : 0.0;
  e.global_f1 = f1(e.global_precision, e.global_recall);
  return e;
}

std::vector<double> default_sweep_steps() {
  std::vector<double> out;
  for (int i = 0; i <= 10; ++i) out.push_back(i / 10.0);
  return out;
}

std::vector<SweepRow> threshold_sweep(std::span<const PerQuestionResult> results,
                                      std::span<const double> steps) {
  std::vector<SweepRow> out;
  for (double theta : steps) {
    auto s = compute_scores(results, CorrectnessRule{theta, false});
    out.push_back({theta, s.global_precision, s.global_recall, s.global_f1, s.correct});
  }
  return out;
}

}  // namespace kgqa::eval

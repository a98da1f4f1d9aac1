#include "kgqa/report/report.hpp"

#include <set>

#include "kgqa/error.hpp"

namespace kgqa::report {

using nlohmann::ordered_json;

namespace {

ordered_json share_json(const analysis::CountShare& s) {
  return {{"count", s.count}, {"percent", s.percent}};
}

template <typename Key>
ordered_json row(const char* key, const Key& value, const analysis::CountShare& s) {
  ordered_json j;
  j[key] = value;
  j["count"] = s.count;
  j["percent"] = s.percent;
  return j;
}

ordered_json stats_json(const analysis::BenchmarkQueryStats& s) {
  ordered_json j;
  j["total"] = s.total;
  auto& kw = j["keywords"] = ordered_json::array();
  for (const auto& r : s.keywords) {
    auto o = row("keyword", std::string(analysis::keyword_name(r.keyword)), r.value);
    o["slug"] = std::string(analysis::keyword_slug(r.keyword));
    kw.push_back(std::move(o));
  }
  auto& tri = j["triples"] = ordered_json::array();
  for (const auto& r : s.triples) tri.push_back(row("bucket", r.bucket, r.value));
  auto& ops = j["operators"] = ordered_json::array();
  for (const auto& b : s.operators) {
    ordered_json block;
    block["block"] = b.name;
    auto& rows = block["rows"] = ordered_json::array();
    for (const auto& r : b.rows) rows.push_back(row("combo", r.combo.label(), r.value));
    block["subtotal"] = share_json(b.subtotal);
    ops.push_back(std::move(block));
  }
  auto& shapes = j["shapes"] = ordered_json::array();
  for (const auto& d : s.shapes) {
    ordered_json pop;
    pop["population"] = d.population;
    pop["queries"] = d.queries;
    auto& rows = pop["rows"] = ordered_json::array();
    for (const auto& r : d.rows) rows.push_back(row("shape", std::string(shape::shape_name(r.shape)), r.value));
    shapes.push_back(std::move(pop));
  }
  return j;
}

ordered_json types_json(const nlq::QuestionTypeStats& s) {
  ordered_json j;
  j["total"] = s.total;
  auto& cats = j["categories"] = ordered_json::array();
  for (const auto& r : s.categories) cats.push_back(row("category", std::string(nlq::category_name(r.category)), r.value));
  auto& wh = j["wh"] = ordered_json::array();
  for (const auto& r : s.wh) wh.push_back(row("subtype", std::string(nlq::wh_subtype_name(r.subtype)), r.value));
  return j;
}

ordered_json prf(double p, double r, double f) { return {{"precision", p}, {"recall", r}, {"f1", f}}; }

ordered_json evaluation_json(const EvaluationSection& e) {
  ordered_json j;
  j["theta"] = e.theta;
  j["strict"] = e.strict;
  j["macroOverProcessed"] = e.macro_over_processed;
  const auto& s = e.scores;
  j["scores"] = {{"micro", prf(s.micro_precision, s.micro_recall, s.micro_f1)},
                 {"macro", prf(s.macro_precision, s.macro_recall, s.macro_f1)},
                 {"global", prf(s.global_precision, s.global_recall, s.global_f1)},
                 {"questions", s.questions},
                 {"processed", s.processed},
                 {"correct", s.correct}};
  auto& sweep = j["sweep"] = ordered_json::array();
  for (const auto& r : e.sweep) {
    sweep.push_back({{"theta", r.theta}, {"precision", r.precision}, {"recall", r.recall}, {"f1", r.f1}, {"correct", r.correct}});
  }
  auto& groups = j["groups"] = ordered_json::array();
  for (const auto& g : e.groups.shapes) {
    ordered_json sg;
    sg["shape"] = g.shape;
    sg["correct"] = g.correct();
    sg["incorrect"] = g.incorrect();
    auto& cells = sg["cells"] = ordered_json::array();
    for (const auto& [key, cell] : g.cells) {
      cells.push_back({{"class", std::string(analysis::class_name(key.query_class))},
                       {"signature", key.signature},
                       {"triples", key.triples},
                       {"label", key.label()},
                       {"correct", cell.correct},
                       {"incorrect", cell.incorrect},
                       {"questionIds", cell.question_ids}});
    }
    groups.push_back(std::move(sg));
  }
  return j;
}

ordered_json query_json(const QuestionRecord& q) {
  ordered_json j;
  j["status"] = std::string(bench::query_status_name(q.query.status));
  if (q.query.status != bench::QueryStatus::Absent) j["text"] = q.query.text;
  if (q.query.status == bench::QueryStatus::ParseFailed) j["error"] = q.query.error;
  if (q.features) {
    const auto& f = *q.features;
    std::vector<std::string> kws;
    for (auto k : f.keywords.keywords()) kws.emplace_back(analysis::keyword_slug(k));
    j["keywords"] = kws;
    j["signature"] = f.keywords.signature();
    j["triples"] = f.triple_count;
    j["operators"] = f.combo.label();
    j["class"] = std::string(analysis::class_name(f.query_class));
    j["cpf"] = f.cpf;
    j["shapesApplicable"] = f.shapes.applicable;
    j["shapes"] = f.shapes.names();
  }
  return j;
}

ordered_json question_json(const QuestionRecord& q) {
  ordered_json j;
  j["id"] = q.question_id;
  j["question"] = q.question;
  j["language"] = q.language;
  ordered_json type = {{"category", std::string(nlq::category_name(q.type.category))}};
  if (q.type.category == nlq::QuestionCategory::Wh) type["wh"] = std::string(nlq::wh_subtype_name(q.type.wh));
  j["type"] = std::move(type);
  j["query"] = query_json(q);
  if (q.evaluation) {
    const auto& e = *q.evaluation;
    j["evaluation"] = {{"answers", answers_json(e.answers)},
                       {"gold", answers_json(e.gold)},
                       {"yesNoCoerced", e.yes_no_coerced},
                       {"precision", e.score.precision},
                       {"recall", e.score.recall},
                       {"f1", e.score.f1},
                       {"processed", e.processed},
                       {"correct", e.correct}};
  }
  return j;
}

}  // namespace

ordered_json answers_json(const bench::AnswerSet& answers) {
  if (answers.kind == bench::AnswerKind::Boolean) return {{"boolean", answers.boolean_value}};
  return {{"values", answers.values}};
}

Report build_report(const bench::Benchmark& benchmark, const std::optional<bench::OverlapReport>& overlap,
                    const eval::EvaluationResult* evaluation, const eval::EvalConfig& config) {
  if (benchmark.entries.empty()) throw Error("EmptyInput", "benchmark has no questions");
  Report r;
  r.mode = evaluation ? ReportMode::Evaluation : ReportMode::Analysis;
  r.name = benchmark.name;
  r.version = benchmark.version;
  r.target_kg = benchmark.target_kg;
  r.question_count = benchmark.entries.size();
  r.parse_failures = benchmark.parse_failures();
  r.overlap = overlap;

  std::vector<analysis::QueryFeatures> features;
  std::vector<nlq::Nlq> questions;
  for (const auto& e : benchmark.entries) {
    QuestionRecord q;
    q.question_id = e.question_id;
    q.question = e.nlq.raw_text;
    q.language = e.language;
    q.type = nlq::classify_question(e.nlq);
    q.query = e.query;
    q.query.ast.reset();
    if (e.query.status == bench::QueryStatus::Parsed && e.query.ast) {
      q.features = analysis::extract_features(*e.query.ast);
      features.push_back(*q.features);
    }
    questions.push_back(e.nlq);
    r.questions.push_back(std::move(q));
  }
  if (!features.empty()) r.query_stats = analysis::aggregate_benchmark_stats(features);
  r.question_types = nlq::question_type_stats(questions);

  if (evaluation) {
    if (evaluation->questions.size() != benchmark.entries.size()) {
      throw Error("InconsistentInputs", "evaluation covers a different number of questions");
    }
    std::set<std::string> ids;
    for (std::size_t i = 0; i < evaluation->questions.size(); ++i) {
      const auto& pq = evaluation->questions[i];
      if (pq.question_id != benchmark.entries[i].question_id) {
        throw Error("InconsistentInputs", "evaluation result '" + pq.question_id + "' does not match question '" +
                                              benchmark.entries[i].question_id + "'");
      }
      r.questions[i].evaluation = pq;
      ids.insert(pq.question_id);
    }
    for (const auto& g : evaluation->groups.shapes) {
      for (const auto& [k, cell] : g.cells) {
        for (const auto& id : cell.question_ids) {
          if (!ids.count(id)) throw Error("InconsistentInputs", "group references unknown question '" + id + "'");
        }
      }
    }
    EvaluationSection s;
    s.theta = config.theta;
    s.strict = config.strict;
    s.macro_over_processed = config.macro_over_processed;
    s.scores = evaluation->scores;
    s.sweep = evaluation->sweep;
    s.groups = evaluation->groups;
    r.evaluation = std::move(s);
  }
  return r;
}

ordered_json to_json(const Report& r) {
  ordered_json j;
  j["schemaVersion"] = kSchemaVersion;
  j["mode"] = r.mode == ReportMode::Analysis ? "analysis" : "evaluation";
  j["benchmark"] = {{"name", r.name},
                    {"version", r.version},
                    {"targetKg", r.target_kg},
                    {"questions", r.question_count},
                    {"parseFailures", r.parse_failures}};
  if (r.query_stats) j["queryStats"] = stats_json(*r.query_stats);
  j["questionTypes"] = types_json(r.question_types);
  if (r.overlap) {
    auto& rows = j["overlap"]["rows"] = ordered_json::array();
    for (const auto& o : r.overlap->rows) {
      rows.push_back({{"name", o.name},
                      {"version", o.version},
                      {"total", o.total},
                      {"repeatedSameQuery", o.repeated_same_query},
                      {"repeatedChangedQuery", o.repeated_changed_query},
                      {"newQuestions", o.new_questions}});
    }
  }
  if (r.evaluation) j["evaluation"] = evaluation_json(*r.evaluation);
  auto& qs = j["questions"] = ordered_json::array();
  for (const auto& q : r.questions) qs.push_back(question_json(q));
  return j;
}

std::string serialize(const Report& report) {
  return to_json(report).dump(2, ' ', false, nlohmann::ordered_json::error_handler_t::replace) + "\n";
}

}  // namespace kgqa::report

#include "kgqa/cli/cli.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "kgqa/bench/io.hpp"
#include "kgqa/error.hpp"
#include "kgqa/eval/evaluate.hpp"
#include "kgqa/nlq/similar.hpp"
#include "kgqa/report/filter.hpp"
#include "kgqa/report/pipeline.hpp"
#include "kgqa/report/tables.hpp"
#include "kgqa/service/service.hpp"
#include "kgqa/updater/updater.hpp"

namespace kgqa::cli {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("IoError", "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << text;
  if (!out) throw Error("IoError", "cannot write " + path);
}

bench::Benchmark load(const std::string& path) {
  auto b = bench::load_benchmark_file(path);
  if (b.name.empty()) b.name = fs::path(path).stem().string();
  return b;
}

enum class OutKind { Json, Csv };

OutKind out_kind(const std::string& path) {
  auto ext = fs::path(path).extension().string();
  for (auto& c : ext) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (ext == ".csv") return OutKind::Csv;
  return OutKind::Json;
}

// One table goes to the path itself; several become <stem>-<table>.csv.
void write_csv(const std::string& path, const std::vector<report::Table>& tables) {
  if (tables.size() == 1) {
    write_text(path, report::render_csv(tables.front()));
    return;
  }
  fs::path p(path);
  for (const auto& t : tables) {
    auto target = p.parent_path() / (p.stem().string() + "-" + t.name + ".csv");
    write_text(target.string(), report::render_csv(t));
  }
}

std::string dump(const ordered_json& j) {
  return j.dump(2, ' ', false, ordered_json::error_handler_t::replace) + "\n";
}

// Emits a result: JSON or CSV to --out, else text tables to stdout.
void emit(const std::string& out_path, const ordered_json& doc, const std::string& doc_text,
          const std::vector<report::Table>& tables, std::ostream& out) {
  if (out_path.empty()) {
    out << report::render_text(tables);
  } else if (out_kind(out_path) == OutKind::Csv) {
    write_csv(out_path, tables);
  } else {
    write_text(out_path, doc_text.empty() ? dump(doc) : doc_text);
  }
}

// A config file is a JSON object of flag names (without dashes) to values.
// Keys the command line already sets are skipped, so flags win.
std::vector<std::string> merge_config(std::vector<std::string> args) {
  std::optional<std::string> path;
  std::vector<std::string> rest;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config") {
      if (i + 1 >= args.size()) throw CLI::ArgumentMismatch("--config", 1, 0);
      path = args[++i];
    } else if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
    } else {
      rest.push_back(args[i]);
    }
  }
  if (!path) return rest;
  ordered_json cfg;
  try {
    cfg = ordered_json::parse(read_text(*path));
  } catch (const ordered_json::exception& e) {
    throw Error("ConfigError", *path + ": " + e.what());
  }
  if (!cfg.is_object()) throw Error("ConfigError", *path + ": expected a JSON object");
  std::set<std::string> given;
  for (const auto& a : rest) {
    if (a.rfind("--", 0) == 0) given.insert(a.substr(2, a.find('=') == std::string::npos ? std::string::npos : a.find('=') - 2));
  }
  auto scalar = [&](const std::string& key, const ordered_json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number() || v.is_boolean()) return v.dump();
    throw Error("ConfigError", *path + ": value of '" + key + "' must be a string, number or boolean");
  };
  for (const auto& [key, value] : cfg.items()) {
    if (given.count(key)) continue;
    if (value.is_boolean()) {
      if (value.get<bool>()) rest.push_back("--" + key);
    } else if (value.is_array()) {
      for (const auto& v : value) {
        rest.push_back("--" + key);
        rest.push_back(scalar(key, v));
      }
    } else if (!value.is_null()) {
      rest.push_back("--" + key);
      rest.push_back(scalar(key, value));
    }
  }
  return rest;
}

struct EvalFlags {
  std::string benchmark;
  std::string predictions;
  std::string qa_endpoint;
  double theta = 0.0;
  bool strict = false;
  std::size_t parallel = 4;
  double timeout = 30.0;
  bool macro_over_processed = false;
  std::string out;

  void attach(CLI::App* cmd) {
    cmd->add_option("--benchmark", benchmark, "Benchmark file")->required();
    cmd->add_option("--predictions", predictions, "Predictions JSON file");
    cmd->add_option("--qa-endpoint", qa_endpoint, "QA system URL");
    cmd->add_option("--theta", theta, "Correctness threshold on F1")->check(CLI::Range(0.0, 1.0));
    cmd->add_flag("--strict", strict, "Only F1 = 1 counts as correct");
    cmd->add_option("--parallel", parallel, "Concurrent QA requests")->check(CLI::PositiveNumber);
    cmd->add_option("--timeout", timeout, "QA request timeout in seconds")->check(CLI::PositiveNumber);
    cmd->add_flag("--macro-over-processed", macro_over_processed, "Macro average over processed questions only");
    cmd->add_option("--out", out, "Write JSON or CSV");
  }

  report::Report run() const {
    eval::EvalConfig cfg;
    cfg.theta = theta;
    cfg.strict = strict;
    cfg.parallel = parallel;
    cfg.timeout_seconds = timeout;
    cfg.macro_over_processed = macro_over_processed;
    cfg.validate();
    auto b = load(benchmark);
    if (!predictions.empty()) {
      auto source = eval::PredictionsFile::load(predictions);
      return report::evaluation_report(b, cfg, source);
    }
    if (qa_endpoint.empty()) throw Error("ConfigError", "either --predictions or --qa-endpoint is required");
    eval::QaEndpoint source(qa_endpoint, timeout);
    return report::evaluation_report(b, cfg, source);
  }
};

std::vector<report::Table> pick(const std::vector<report::Table>& all, std::initializer_list<const char*> names) {
  std::vector<report::Table> out;
  for (const auto* n : names) {
    for (const auto& t : all) {
      if (t.name == n) out.push_back(t);
    }
  }
  return out;
}

}  // namespace

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Benchmark analysis and evaluation for question answering over knowledge graphs", "kgqa"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");
  app.add_option("--config", "JSON file of flag values; command-line flags win");

  // import
  std::string import_in, import_format, import_name, import_out;
  auto* import_cmd = app.add_subcommand("import", "Convert a QALD, TSV or native file to native JSON");
  import_cmd->add_option("--in", import_in, "Input file")->required();
  import_cmd->add_option("--format", import_format, "qald, tsv or json (detected when omitted)")
      ->check(CLI::IsMember({"qald", "tsv", "json", "native"}));
  import_cmd->add_option("--name", import_name, "Benchmark name");
  import_cmd->add_option("--out", import_out, "Output file (stdout when omitted)");

  // analyze
  std::vector<std::string> analyze_in;
  std::string analyze_out;
  auto* analyze_cmd = app.add_subcommand("analyze", "Query and question statistics");
  analyze_cmd->add_option("--benchmark", analyze_in, "Benchmark file; several are merged, oldest first")->required();
  analyze_cmd->add_option("--out", analyze_out, "Write the report as JSON, or tables as CSV");

  // overlap
  std::vector<std::string> overlap_in;
  std::string overlap_out;
  auto* overlap_cmd = app.add_subcommand("overlap", "Questions repeated across benchmark versions");
  overlap_cmd->add_option("--benchmark", overlap_in, "Benchmark files, oldest first")->required()->expected(2, 1 << 20);
  overlap_cmd->add_option("--out", overlap_out, "Write JSON or CSV");

  // evaluate, sweep
  EvalFlags eval_flags;
  auto* evaluate_cmd = app.add_subcommand("evaluate", "Score a QA system against gold answers");
  eval_flags.attach(evaluate_cmd);
  EvalFlags sweep_flags;
  auto* sweep_cmd = app.add_subcommand("sweep", "Scores across correctness thresholds (CSV)");
  sweep_flags.attach(sweep_cmd);

  // similar
  std::string similar_in, similar_question, similar_tagset = "upos", similar_annotations, similar_out;
  std::size_t similar_k = 5;
  auto* similar_cmd = app.add_subcommand("similar", "Questions with the closest part-of-speech profile");
  similar_cmd->add_option("--benchmark", similar_in, "Benchmark file")->required();
  similar_cmd->add_option("--question", similar_question, "Question id")->required();
  similar_cmd->add_option("--k", similar_k, "Number of neighbours")->check(CLI::PositiveNumber);
  similar_cmd->add_option("--tagset", similar_tagset, "upos or penn")->check(CLI::IsMember({"upos", "penn"}));
  similar_cmd->add_option("--annotations", similar_annotations, "TSV of gold part-of-speech tags");
  similar_cmd->add_option("--out", similar_out, "Write JSON or CSV");

  // filter
  std::string filter_report, filter_benchmark, filter_out;
  std::vector<std::string> filter_where;
  auto* filter_cmd = app.add_subcommand("filter", "Select questions of a report by predicate");
  auto* fr = filter_cmd->add_option("--report", filter_report, "Report JSON file");
  auto* fb = filter_cmd->add_option("--benchmark", filter_benchmark, "Benchmark file (analyzed first)");
  fr->excludes(fb);
  filter_cmd->add_option("--where", filter_where, "field=value clause; repeat for a conjunction")->required();
  filter_cmd->add_option("--out", filter_out, "Write matching records as JSON or CSV");

  // update-answers
  std::string update_in, update_out, update_endpoint, update_projection = "first";
  bool update_accept_empty = false;
  std::size_t update_parallel = 1;
  double update_timeout = 30.0;
  int update_retries = 2, update_delay = 0;
  std::uint64_t update_limit = 0;
  auto* update_cmd = app.add_subcommand("update-answers", "Refresh gold answers from a SPARQL endpoint");
  update_cmd->add_option("--endpoint", update_endpoint, "SPARQL endpoint URL")->required();
  update_cmd->add_option("--in", update_in, "Benchmark file")->required();
  update_cmd->add_option("--out", update_out, "Updated benchmark (native JSON)")->required();
  update_cmd->add_flag("--accept-empty", update_accept_empty, "Store empty results as the new gold");
  update_cmd->add_option("--parallel", update_parallel, "Concurrent connections")->check(CLI::PositiveNumber);
  update_cmd->add_option("--timeout", update_timeout, "Request timeout in seconds")->check(CLI::PositiveNumber);
  update_cmd->add_option("--retries", update_retries, "Retries for transient failures")->check(CLI::NonNegativeNumber);
  update_cmd->add_option("--delay-ms", update_delay, "Minimum gap between requests")->check(CLI::NonNegativeNumber);
  update_cmd->add_option("--result-limit", update_limit, "LIMIT added to unlimited SELECT queries");
  update_cmd->add_option("--projection", update_projection, "first (first variable) or tab (all, tab-joined)")
      ->check(CLI::IsMember({"first", "tab"}));

  // serve
  service::ServiceConfig serve_cfg;
  auto* serve_cmd = app.add_subcommand("serve", "Run the HTTP service");
  serve_cmd->add_option("--host", serve_cfg.host, "Listen address");
  serve_cmd->add_option("--port", serve_cfg.port, "Port (PORT)")->check(CLI::Range(0, 65535));
  serve_cmd->add_option("--data-dir", serve_cfg.data_dir, "Persistence directory (DATA_DIR)");
  serve_cmd->add_option("--workers", serve_cfg.workers, "Job worker threads (WORKERS)")->check(CLI::PositiveNumber);

  std::vector<std::string> args;
  try {
    args = merge_config(raw_args);
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << app.help();
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.code() << ": " << e.what() << "\n";
    return kExitUsage;
  }

  // CLI11 wants the arguments reversed when given as a vector.
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    if (!reversed.empty() && reversed.back() == "serve") serve_cfg = service::ServiceConfig::from_env();
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    auto* sub = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
    out << sub->help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    auto* sub = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
    // Required-option errors fire before unknown ones; name the stray flag.
    std::string unknown;
    for (const auto& a : args) {
      if (a.size() < 2 || a[0] != '-' || (a.size() > 1 && std::isdigit(static_cast<unsigned char>(a[1])))) continue;
      auto name = a.substr(0, a.find('='));
      if (name == "-h" || name == "--help" || name == "--help-all") continue;
      if (!sub->get_option_no_throw(name) && !app.get_option_no_throw(name)) {
        unknown = name;
        break;
      }
    }
    if (unknown.empty()) {
      err << "error: " << e.what() << "\n";
    } else {
      err << "error: unknown option " << unknown << "\n";
    }
    err << sub->help();
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.code() << ": " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (import_cmd->parsed()) {
      auto b = bench::import_bytes(read_text(import_in), import_name, import_format);
      if (b.name.empty()) b.name = fs::path(import_in).stem().string();
      auto text = bench::export_native(b);
      if (import_out.empty()) {
        out << text;
      } else {
        write_text(import_out, text);
      }
      err << b.entries.size() << " questions, " << b.parse_failures() << " unparsed queries\n";
    } else if (analyze_cmd->parsed()) {
      std::vector<bench::Benchmark> list;
      for (const auto& p : analyze_in) list.push_back(load(p));
      auto r = report::analysis_report(list);
      emit(analyze_out, {}, report::serialize(r), report::report_tables(r), out);
    } else if (overlap_cmd->parsed()) {
      std::vector<bench::Benchmark> list;
      for (const auto& p : overlap_in) list.push_back(load(p));
      auto r = report::analysis_report(list);
      emit(overlap_out, report::to_json(r)["overlap"], {}, pick(report::report_tables(r), {"overlap"}), out);
    } else if (evaluate_cmd->parsed()) {
      auto r = eval_flags.run();
      emit(eval_flags.out, {}, report::serialize(r), pick(report::report_tables(r), {"scores", "sweep", "groups"}), out);
    } else if (sweep_cmd->parsed()) {
      auto r = sweep_flags.run();
      auto tables = pick(report::report_tables(r), {"sweep"});
      if (sweep_flags.out.empty()) {
        out << report::render_csv(tables.front());
      } else {
        emit(sweep_flags.out, report::to_json(r)["evaluation"]["sweep"], {}, tables, out);
      }
    } else if (similar_cmd->parsed()) {
      auto b = load(similar_in);
      std::vector<nlq::Nlq> questions;
      for (const auto& e : b.entries) questions.push_back(e.nlq);
      auto set = *nlq::tagset_from_name(similar_tagset);
      std::optional<nlq::AnnotationTagger> annotated;
      if (!similar_annotations.empty()) annotated = nlq::AnnotationTagger::load_file(similar_annotations);
      nlq::BuiltinTagger builtin;
      const nlq::Tagger& tagger = annotated ? static_cast<const nlq::Tagger&>(*annotated) : builtin;
      nlq::SimilarityIndex index(questions, set, tagger);
      auto hits = index.neighbors(similar_question, similar_k);
      report::Table t{"similar", "Questions similar to " + similar_question, {"id", "distance", "question"}, {}};
      ordered_json list = ordered_json::array();
      for (const auto& n : hits) {
        const auto* e = b.find(n.question_id);
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.6f", n.distance);
        t.rows.push_back({n.question_id, buf, e->nlq.raw_text});
        list.push_back({{"id", n.question_id}, {"question", e->nlq.raw_text}, {"distance", n.distance}});
      }
      ordered_json doc = {{"questionId", similar_question}, {"tagset", similar_tagset}, {"k", similar_k}, {"neighbors", list}};
      emit(similar_out, doc, {}, {t}, out);
    } else if (filter_cmd->parsed()) {
      auto f = report::Filter::parse(filter_where);
      std::vector<ordered_json> hits;
      if (!filter_report.empty()) {
        ordered_json doc;
        try {
          doc = ordered_json::parse(read_text(filter_report));
        } catch (const ordered_json::exception& e) {
          throw Error("MalformedFile", filter_report + ": " + e.what());
        }
        hits = report::filter_questions(doc, f);
      } else if (!filter_benchmark.empty()) {
        std::vector<bench::Benchmark> list{load(filter_benchmark)};
        hits = report::filter_questions(report::analysis_report(list), f);
      } else {
        err << "error: filter needs --report or --benchmark\n" << filter_cmd->help();
        return kExitUsage;
      }
      report::Table t{"questions", std::to_string(hits.size()) + " matching questions", {"id", "type", "class", "question"}, {}};
      for (const auto& h : hits) {
        const auto& q = h["query"];
        t.rows.push_back({h["id"].get<std::string>(), h["type"]["category"].get<std::string>(),
                          q.contains("class") ? q["class"].get<std::string>() : "", h["question"].get<std::string>()});
      }
      ordered_json doc = {{"count", hits.size()}, {"questions", hits}};
      emit(filter_out, doc, {}, {t}, out);
    } else if (update_cmd->parsed()) {
      updater::EndpointConfig cfg;
      cfg.url = update_endpoint;
      cfg.timeout_seconds = update_timeout;
      cfg.max_retries = update_retries;
      cfg.delay_ms = update_delay;
      cfg.result_limit = update_limit;
      cfg.projection = update_projection == "tab" ? updater::Projection::TabJoined : updater::Projection::FirstVariable;
      cfg.validate();
      updater::UpdateOptions opts;
      opts.accept_empty = update_accept_empty;
      opts.parallel = update_parallel;
      auto [updated, outcomes] = updater::update_benchmark(cfg, load(update_in), opts);
      write_text(update_out, bench::export_native(updated));
      std::map<std::string, std::size_t> counts;
      for (const auto& o : outcomes) {
        ++counts[std::string(updater::update_status_name(o.status))];
        if (o.status == updater::UpdateStatus::EndpointError) err << o.question_id << ": " << o.message << "\n";
      }
      for (const auto& [name, n] : counts) err << name << ": " << n << "\n";
    } else if (serve_cmd->parsed()) {
      service::Service svc(serve_cfg);
      svc.run();
    }
  } catch (const Error& e) {
    err << "error: " << e.code() << ": " << e.what() << "\n";
    return kExitFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitOk;
}

}  // namespace kgqa::cli

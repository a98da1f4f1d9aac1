#include "kgqa/service/service.hpp"

#include <atomic>
#include <condition_variable>
#include <deque>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include <spdlog/spdlog.h>

#include "httplib.h"
#include "json.hpp"
#include "kgqa/bench/io.hpp"
#include "kgqa/error.hpp"
#include "kgqa/eval/evaluate.hpp"
#include "kgqa/nlq/similar.hpp"
#include "kgqa/report/filter.hpp"
#include "kgqa/report/pipeline.hpp"
#include "kgqa/updater/updater.hpp"

namespace kgqa::service {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

int http_status(const std::string& code) {
  if (code == "NotFound" || code == "UnknownQuestion") return 404;
  if (code == "JobNotDone") return 409;
  if (code == "IoError" || code == "Internal") return 500;
  return 400;
}

void send_json(httplib::Response& res, int status, const ordered_json& body) {
  res.status = status;
  res.set_content(body.dump(-1, ' ', false, ordered_json::error_handler_t::replace), "application/json");
}

void send_error(httplib::Response& res, const std::string& code, const std::string& message) {
  send_json(res, http_status(code), {{"error", {{"code", code}, {"message", message}}}});
}

ordered_json parse_body(const httplib::Request& req) {
  if (req.body.empty()) return ordered_json::object();
  try {
    return ordered_json::parse(req.body);
  } catch (const ordered_json::exception& e) {
    throw Error("MalformedRequest", std::string("request body is not JSON: ") + e.what());
  }
}

template <typename T>
T field(const ordered_json& body, const char* key, T fallback) {
  auto it = body.find(key);
  if (it == body.end() || it->is_null()) return fallback;
  try {
    return it->get<T>();
  } catch (const ordered_json::exception&) {
    throw Error("MalformedRequest", std::string("field '") + key + "' has the wrong type");
  }
}

void write_atomically(const fs::path& path, const std::string& text) {
  fs::create_directories(path.parent_path());
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << text;
    if (!out) throw Error("IoError", "cannot write " + tmp.string());
  }
  fs::rename(tmp, path);
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::size_t id_number(const std::string& id) {
  std::size_t n = 0;
  for (std::size_t i = 1; i < id.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(id[i]))) return 0;
    n = n * 10 + static_cast<std::size_t>(id[i] - '0');
  }
  return n;
}

enum class JobState { Queued, Running, Done, Failed };

const char* state_name(JobState s) {
  switch (s) {
    case JobState::Queued: return "queued";
    case JobState::Running: return "running";
    case JobState::Done: return "done";
    case JobState::Failed: return "failed";
  }
  return "";
}

struct StoredBenchmark {
  std::string id;
  bench::Benchmark benchmark;
};

struct StoredReport {
  std::string text;  // exactly what GET /reports/{id} returns
  ordered_json doc;
};

struct Job {
  std::string id;
  std::string kind;  // analyze, evaluate, update
  JobState state = JobState::Queued;
  std::size_t done = 0;
  std::size_t total = 0;
  std::string error_code;
  std::string error_message;
  std::vector<std::string> benchmark_ids;
  bool has_report = false;
  ordered_json result;  // update jobs
};

// Counts answered questions for job progress.
class ProgressSource : public eval::AnswerSource {
 public:
  ProgressSource(eval::AnswerSource& inner, std::function<void()> tick) : inner_(inner), tick_(std::move(tick)) {}
  std::optional<bench::AnswerSet> answer(const bench::BenchmarkEntry& entry) override {
    auto a = inner_.answer(entry);
    tick_();
    return a;
  }

 private:
  eval::AnswerSource& inner_;
  std::function<void()> tick_;
};

}  // namespace

ServiceConfig ServiceConfig::from_env() {
  ServiceConfig c;
  auto number = [](const char* name, long lo, long hi) -> std::optional<long> {
    const char* v = std::getenv(name);
    if (!v || !*v) return std::nullopt;
    char* end = nullptr;
    long n = std::strtol(v, &end, 10);
    if (*end != '\0' || n < lo || n > hi) {
      throw Error("InvalidArgument", std::string(name) + "='" + v + "' is out of range");
    }
    return n;
  };
  if (auto p = number("PORT", 0, 65535)) c.port = static_cast<int>(*p);
  if (auto w = number("WORKERS", 1, 256)) c.workers = static_cast<std::size_t>(*w);
  if (const char* d = std::getenv("DATA_DIR"); d && *d) c.data_dir = d;
  return c;
}

struct Service::Impl {
  ServiceConfig config;
  httplib::Server server;
  int bound_port = -1;
  std::thread listener;

  std::mutex mu;
  std::map<std::string, std::shared_ptr<const StoredBenchmark>> benchmarks;
  std::map<std::string, std::shared_ptr<Job>> jobs;
  std::map<std::string, std::shared_ptr<const StoredReport>> reports;
  std::size_t next_benchmark = 1;
  std::size_t next_job = 1;

  std::mutex similar_mu;
  std::map<std::pair<std::string, nlq::TagSet>, std::shared_ptr<const nlq::SimilarityIndex>> similar;

  // One evaluation at a time per QA endpoint.
  std::mutex endpoint_mu;
  std::map<std::string, std::shared_ptr<std::mutex>> endpoint_locks;

  std::mutex queue_mu;
  std::condition_variable queue_cv;
  std::deque<std::function<void()>> queue;
  bool stopping = false;
  std::vector<std::thread> workers;

  explicit Impl(ServiceConfig c) : config(std::move(c)) {
    if (config.workers == 0) throw Error("InvalidArgument", "at least one worker is required");
    load_data_dir();
    routes();
    for (std::size_t i = 0; i < config.workers; ++i) workers.emplace_back([this] { work(); });
  }

  ~Impl() {
    server.stop();
    if (listener.joinable()) listener.join();
    {
      std::lock_guard lock(queue_mu);
      stopping = true;
    }
    queue_cv.notify_all();
    for (auto& w : workers) w.join();
  }

  // Persistence

  fs::path data(const std::string& sub, const std::string& id) const {
    return fs::path(config.data_dir) / sub / (id + ".json");
  }

  void load_data_dir() {
    if (config.data_dir.empty()) return;
    fs::create_directories(fs::path(config.data_dir) / "benchmarks");
    fs::create_directories(fs::path(config.data_dir) / "reports");
    fs::create_directories(fs::path(config.data_dir) / "jobs");
    for (const auto& f : fs::directory_iterator(fs::path(config.data_dir) / "benchmarks")) {
      if (f.path().extension() != ".json") continue;
      auto id = f.path().stem().string();
      try {
        auto b = bench::import_generic(read_file(f.path()), bench::GenericFormat::Json);
        benchmarks[id] = std::make_shared<const StoredBenchmark>(StoredBenchmark{id, std::move(b)});
        next_benchmark = std::max(next_benchmark, id_number(id) + 1);
      } catch (const Error& e) {
        spdlog::warn("skipping stored benchmark {}: {}", f.path().string(), e.what());
      }
    }
    for (const auto& f : fs::directory_iterator(fs::path(config.data_dir) / "jobs")) {
      if (f.path().extension() != ".json") continue;
      try {
        auto j = ordered_json::parse(read_file(f.path()));
        auto job = std::make_shared<Job>();
        job->id = j.at("jobId").get<std::string>();
        job->kind = j.at("kind").get<std::string>();
        job->state = JobState::Done;
        job->done = job->total = j.at("progress").at("total").get<std::size_t>();
        job->benchmark_ids = j.at("benchmarkIds").get<std::vector<std::string>>();
        if (j.contains("result")) job->result = j["result"];
        if (j.contains("reportId")) {
          auto text = read_file(data("reports", job->id));
          auto doc = ordered_json::parse(text);
          reports[job->id] = std::make_shared<const StoredReport>(StoredReport{std::move(text), std::move(doc)});
          job->has_report = true;
        }
        next_job = std::max(next_job, id_number(job->id) + 1);
        jobs[job->id] = std::move(job);
      } catch (const std::exception& e) {
        spdlog::warn("skipping stored job {}: {}", f.path().string(), e.what());
      }
    }
  }

  // Jobs

  void work() {
    for (;;) {
      std::function<void()> task;
      {
        std::unique_lock lock(queue_mu);
        queue_cv.wait(lock, [this] { return stopping || !queue.empty(); });
        if (stopping && queue.empty()) return;
        task = std::move(queue.front());
        queue.pop_front();
      }
      task();
    }
  }

  std::shared_ptr<Job> new_job(const std::string& kind, std::vector<std::string> ids, std::size_t total) {
    std::lock_guard lock(mu);
    auto job = std::make_shared<Job>();
    job->id = "j" + std::to_string(next_job++);
    job->kind = kind;
    job->benchmark_ids = std::move(ids);
    job->total = total;
    jobs[job->id] = job;
    return job;
  }

  void set_state(Job& job, JobState s) {
    std::lock_guard lock(mu);
    job.state = s;
  }

  void tick(Job& job) {
    std::lock_guard lock(mu);
    if (job.done < job.total) ++job.done;
  }

  ordered_json job_json(const Job& job) const {
    ordered_json j;
    j["jobId"] = job.id;
    j["kind"] = job.kind;
    j["state"] = state_name(job.state);
    j["progress"] = {{"done", job.done}, {"total", job.total}};
    j["benchmarkIds"] = job.benchmark_ids;
    if (job.has_report) j["reportId"] = job.id;
    if (!job.result.is_null()) j["result"] = job.result;
    if (job.state == JobState::Failed) j["error"] = {{"code", job.error_code}, {"message", job.error_message}};
    return j;
  }

  void enqueue(std::shared_ptr<Job> job, std::function<void(Job&)> body) {
    {
      std::lock_guard lock(queue_mu);
      queue.push_back([this, job, body = std::move(body)] {
        set_state(*job, JobState::Running);
        try {
          body(*job);
        } catch (const Error& e) {
          fail(*job, e.code(), e.what());
        } catch (const std::exception& e) {
          fail(*job, "Internal", e.what());
        }
      });
    }
    queue_cv.notify_one();
  }

  void fail(Job& job, const std::string& code, const std::string& message) {
    spdlog::warn("job {} failed: {}: {}", job.id, code, message);
    std::lock_guard lock(mu);
    job.error_code = code;
    job.error_message = message;
    job.state = JobState::Failed;
  }

  // Publishes the report and marks the job done in one step, so readers
  // either see no report or the whole of it.
  void finish(Job& job, std::optional<std::string> report_text) {
    std::shared_ptr<const StoredReport> stored;
    if (report_text) {
      auto doc = ordered_json::parse(*report_text);
      stored = std::make_shared<const StoredReport>(StoredReport{std::move(*report_text), std::move(doc)});
      if (!config.data_dir.empty()) write_atomically(data("reports", job.id), stored->text);
    }
    std::lock_guard lock(mu);
    if (stored) {
      reports[job.id] = stored;
      job.has_report = true;
    }
    job.done = job.total;
    job.state = JobState::Done;
    if (!config.data_dir.empty()) write_atomically(data("jobs", job.id), job_json(job).dump(2) + "\n");
  }

  std::shared_ptr<const StoredBenchmark> find_benchmark(const std::string& id) {
    std::lock_guard lock(mu);
    auto it = benchmarks.find(id);
    if (it == benchmarks.end()) throw Error("NotFound", "unknown benchmark '" + id + "'");
    return it->second;
  }

  std::string store_benchmark(bench::Benchmark b) {
    std::lock_guard lock(mu);
    auto id = "b" + std::to_string(next_benchmark++);
    if (!config.data_dir.empty()) write_atomically(data("benchmarks", id), bench::export_native(b));
    benchmarks[id] = std::make_shared<const StoredBenchmark>(StoredBenchmark{id, std::move(b)});
    return id;
  }

  static ordered_json benchmark_json(const StoredBenchmark& s) {
    const auto& b = s.benchmark;
    return {{"id", s.id},
            {"name", b.name},
            {"version", b.version},
            {"targetKg", b.target_kg},
            {"questions", b.entries.size()},
            {"parseFailures", b.parse_failures()}};
  }

  std::shared_ptr<const StoredReport> find_report(const std::string& id) {
    std::lock_guard lock(mu);
    auto job = jobs.find(id);
    if (job == jobs.end()) throw Error("NotFound", "unknown report '" + id + "'");
    if (job->second->state != JobState::Done) {
      throw Error("JobNotDone", "job '" + id + "' is " + state_name(job->second->state));
    }
    auto it = reports.find(id);
    if (it == reports.end()) throw Error("NotFound", "job '" + id + "' produced no report");
    return it->second;
  }

  std::shared_ptr<const nlq::SimilarityIndex> similarity(const std::string& report_id, const StoredReport& r,
                                                         nlq::TagSet set) {
    {
      std::lock_guard lock(similar_mu);
      auto it = similar.find({report_id, set});
      if (it != similar.end()) return it->second;
    }
    auto index = build_similarity(r.doc, set);
    std::lock_guard lock(similar_mu);
    return similar.emplace(std::make_pair(report_id, set), index).first->second;
  }

  static std::shared_ptr<const nlq::SimilarityIndex> build_similarity(const ordered_json& doc, nlq::TagSet set) {
    std::vector<nlq::Nlq> questions;
    for (const auto& q : doc.at("questions")) {
      questions.push_back(nlq::tokenize(q.at("question").get<std::string>(), q.at("id").get<std::string>()));
    }
    static const nlq::BuiltinTagger tagger;
    return std::make_shared<const nlq::SimilarityIndex>(questions, set, tagger);
  }

  // Failure here only costs the cache; lookups rebuild lazily.
  void prebuild_similarity(const std::string& report_id, const std::string& text) {
    try {
      auto doc = ordered_json::parse(text);
      for (auto set : {nlq::TagSet::UPOS, nlq::TagSet::Penn}) {
        auto index = build_similarity(doc, set);
        std::lock_guard lock(similar_mu);
        similar[{report_id, set}] = index;
      }
    } catch (const std::exception& e) {
      spdlog::warn("similarity index for {} not built: {}", report_id, e.what());
    }
  }

  std::shared_ptr<std::mutex> endpoint_lock(const std::string& key) {
    std::lock_guard lock(endpoint_mu);
    auto& m = endpoint_locks[key];
    if (!m) m = std::make_shared<std::mutex>();
    return m;
  }

  // Handlers

  using Handler = std::function<void(const httplib::Request&, httplib::Response&)>;

  static Handler guarded(Handler h) {
    return [h = std::move(h)](const httplib::Request& req, httplib::Response& res) {
      try {
        h(req, res);
      } catch (const Error& e) {
        send_error(res, e.code(), e.what());
      } catch (const std::exception& e) {
        send_error(res, "Internal", e.what());
      }
    };
  }

  void routes() {
    server.set_payload_max_length(256u << 20);

    server.set_post_routing_handler([this](const httplib::Request&, httplib::Response& res) {
      res.set_header("Access-Control-Allow-Origin", config.cors_origin);
      res.set_header("Vary", "Origin");
    });
    server.Options(R"(.*)", [](const httplib::Request&, httplib::Response& res) {
      res.status = 204;
      res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
      res.set_header("Access-Control-Allow-Headers", "Content-Type");
      res.set_header("Access-Control-Max-Age", "600");
    });
    server.set_error_handler([](const httplib::Request& req, httplib::Response& res) {
      if (res.body.empty() && res.status == 404) send_error(res, "NotFound", "no route for " + req.method + " " + req.path);
    });

    server.Get("/healthz", guarded([](const httplib::Request&, httplib::Response& res) {
      send_json(res, 200, {{"status", "ok"}});
    }));

    server.Post("/benchmarks", guarded([this](const httplib::Request& req, httplib::Response& res) {
      auto b = bench::import_bytes(req.body, req.get_param_value("name"), req.get_param_value("format"));
      if (b.name.empty()) b.name = "upload";
      auto id = store_benchmark(std::move(b));
      send_json(res, 201, benchmark_json(*find_benchmark(id)));
    }));

    server.Get("/benchmarks", guarded([this](const httplib::Request&, httplib::Response& res) {
      ordered_json list = ordered_json::array();
      {
        std::lock_guard lock(mu);
        for (const auto& [id, b] : benchmarks) list.push_back(benchmark_json(*b));
      }
      send_json(res, 200, {{"benchmarks", list}});
    }));

    server.Get(R"(/benchmarks/([^/]+))", guarded([this](const httplib::Request& req, httplib::Response& res) {
      send_json(res, 200, benchmark_json(*find_benchmark(req.matches[1])));
    }));

    server.Post("/jobs/analyze", guarded([this](const httplib::Request& req, httplib::Response& res) {
      auto body = parse_body(req);
      auto ids = field<std::vector<std::string>>(body, "benchmarkIds", {});
      if (ids.empty()) throw Error("MalformedRequest", "benchmarkIds must list at least one benchmark");
      std::vector<std::shared_ptr<const StoredBenchmark>> inputs;
      std::size_t total = 0;
      for (const auto& id : ids) {
        inputs.push_back(find_benchmark(id));
        total += inputs.back()->benchmark.entries.size();
      }
      auto job = new_job("analyze", ids, total);
      enqueue(job, [this, inputs](Job& j) {
        std::vector<bench::Benchmark> list;
        for (const auto& s : inputs) list.push_back(s->benchmark);
        auto text = report::serialize(report::analysis_report(list));
        prebuild_similarity(j.id, text);
        finish(j, std::move(text));
      });
      send_json(res, 202, job_json(*job));
    }));

    server.Post("/jobs/evaluate", guarded([this](const httplib::Request& req, httplib::Response& res) {
      auto body = parse_body(req);
      auto id = field<std::string>(body, "benchmarkId", "");
      auto stored = find_benchmark(id);
      eval::EvalConfig cfg;
      cfg.theta = field<double>(body, "theta", 0.0);
      cfg.strict = field<bool>(body, "strict", false);
      cfg.parallel = field<std::size_t>(body, "parallel", 4);
      cfg.macro_over_processed = field<bool>(body, "macroOverProcessed", false);
      auto qa = field<ordered_json>(body, "qa", ordered_json::object());
      cfg.qa_endpoint = field<std::string>(qa, "endpoint", "");
      cfg.timeout_seconds = field<double>(qa, "timeout", 30.0);
      cfg.validate();
      std::optional<eval::PredictionsFile> predictions;
      if (body.contains("predictions")) {
        auto p = body["predictions"];
        if (p.is_array()) p = ordered_json{{"predictions", p}};
        predictions = eval::PredictionsFile::parse(p.dump());
      } else if (cfg.qa_endpoint.empty()) {
        throw Error("ConfigError", "either qa.endpoint or predictions is required");
      } else {
        net_check(cfg.qa_endpoint);
      }
      auto job = new_job("evaluate", {id}, stored->benchmark.entries.size());
      enqueue(job, [this, stored, cfg, predictions](Job& j) mutable {
        std::unique_ptr<eval::AnswerSource> source;
        std::unique_lock<std::mutex> hold;
        if (predictions) {
          source = std::make_unique<eval::PredictionsFile>(std::move(*predictions));
        } else {
          source = std::make_unique<eval::QaEndpoint>(cfg.qa_endpoint, cfg.timeout_seconds);
          hold = std::unique_lock(*endpoint_lock(cfg.qa_endpoint));
        }
        ProgressSource counted(*source, [this, &j] { tick(j); });
        auto text = report::serialize(report::evaluation_report(stored->benchmark, cfg, counted));
        prebuild_similarity(j.id, text);
        finish(j, std::move(text));
      });
      send_json(res, 202, job_json(*job));
    }));

    server.Post("/jobs/update", guarded([this](const httplib::Request& req, httplib::Response& res) {
      auto body = parse_body(req);
      auto id = field<std::string>(body, "benchmarkId", "");
      auto stored = find_benchmark(id);
      updater::EndpointConfig cfg;
      cfg.url = field<std::string>(body, "endpoint", "");
      cfg.timeout_seconds = field<double>(body, "timeout", 30.0);
      cfg.max_retries = field<int>(body, "retries", 2);
      cfg.delay_ms = field<int>(body, "delayMs", 0);
      cfg.result_limit = field<std::uint64_t>(body, "resultLimit", 0);
      auto projection = field<std::string>(body, "projection", "first");
      if (projection != "first" && projection != "tab") {
        throw Error("InvalidArgument", "projection must be 'first' or 'tab'");
      }
      cfg.projection = projection == "tab" ? updater::Projection::TabJoined : updater::Projection::FirstVariable;
      cfg.validate();
      updater::UpdateOptions opts;
      opts.accept_empty = field<bool>(body, "acceptEmpty", false);
      opts.parallel = field<std::size_t>(body, "parallel", 1);
      auto job = new_job("update", {id}, stored->benchmark.entries.size());
      enqueue(job, [this, stored, cfg, opts](Job& j) {
        auto [updated, outcomes] = updater::update_benchmark(cfg, stored->benchmark, opts);
        std::map<std::string, std::size_t> counts;
        ordered_json per = ordered_json::array();
        for (const auto& o : outcomes) {
          ++counts[std::string(updater::update_status_name(o.status))];
          ordered_json row = {{"id", o.question_id}, {"status", std::string(updater::update_status_name(o.status))}};
          if (!o.message.empty()) row["message"] = o.message;
          per.push_back(std::move(row));
        }
        auto new_id = store_benchmark(std::move(updated));
        {
          std::lock_guard lock(mu);
          j.result = {{"benchmarkId", new_id}, {"counts", counts}, {"outcomes", per}};
        }
        finish(j, std::nullopt);
      });
      send_json(res, 202, job_json(*job));
    }));

    server.Get(R"(/jobs/([^/]+))", guarded([this](const httplib::Request& req, httplib::Response& res) {
      std::lock_guard lock(mu);
      auto it = jobs.find(req.matches[1]);
      if (it == jobs.end()) throw Error("NotFound", "unknown job '" + std::string(req.matches[1]) + "'");
      send_json(res, 200, job_json(*it->second));
    }));

    server.Get(R"(/reports/([^/]+))", guarded([this](const httplib::Request& req, httplib::Response& res) {
      auto r = find_report(req.matches[1]);
      res.status = 200;
      res.set_content(r->text, "application/json");
    }));

    server.Post(R"(/reports/([^/]+)/filter)", guarded([this](const httplib::Request& req, httplib::Response& res) {
      auto r = find_report(req.matches[1]);
      auto body = parse_body(req);
      auto filter = report::Filter::from_json(body.contains("predicate") ? body["predicate"] : ordered_json());
      auto hits = report::filter_questions(r->doc, filter);
      send_json(res, 200, {{"reportId", std::string(req.matches[1])}, {"count", hits.size()}, {"questions", hits}});
    }));

    server.Get(R"(/questions/([^/]+)/(.+)/similar)", guarded([this](const httplib::Request& req, httplib::Response& res) {
      std::string report_id = req.matches[1], qid = req.matches[2];
      auto r = find_report(report_id);
      std::size_t k = 5;
      if (req.has_param("k")) {
        const auto v = req.get_param_value("k");
        char* end = nullptr;
        long n = std::strtol(v.c_str(), &end, 10);
        if (v.empty() || *end != '\0' || n < 1) throw Error("InvalidArgument", "k must be a positive integer");
        k = static_cast<std::size_t>(n);
      }
      auto name = req.has_param("tagset") ? req.get_param_value("tagset") : std::string("upos");
      auto parsed = nlq::tagset_from_name(name);
      if (!parsed) throw Error("InvalidArgument", "tagset must be 'upos' or 'penn'");
      auto set = *parsed;
      auto index = similarity(report_id, *r, set);
      std::map<std::string, std::string> text;
      for (const auto& q : r->doc.at("questions")) text[q["id"].get<std::string>()] = q["question"].get<std::string>();
      if (!text.count(qid)) throw Error("NotFound", "unknown question '" + qid + "'");
      ordered_json list = ordered_json::array();
      for (const auto& n : index->neighbors(qid, k)) {
        list.push_back({{"id", n.question_id}, {"question", text[n.question_id]}, {"distance", n.distance}});
      }
      send_json(res, 200,
                {{"reportId", report_id},
                 {"questionId", qid},
                 {"question", text[qid]},
                 {"tagset", std::string(nlq::tagset_name(set))},
                 {"k", k},
                 {"neighbors", list}});
    }));
  }

  static void net_check(const std::string& url);
};

void Service::Impl::net_check(const std::string& url) { eval::QaEndpoint probe(url, 1.0); }

Service::Service(ServiceConfig config) : impl_(std::make_unique<Impl>(std::move(config))) {}

Service::~Service() = default;

int Service::bind() {
  if (impl_->bound_port >= 0) return impl_->bound_port;
  const auto& c = impl_->config;
  int port = c.port == 0 ? impl_->server.bind_to_any_port(c.host) : (impl_->server.bind_to_port(c.host, c.port) ? c.port : -1);
  if (port < 0) throw Error("IoError", "cannot bind " + c.host + ":" + std::to_string(c.port));
  impl_->bound_port = port;
  return port;
}

void Service::run() {
  bind();
  spdlog::info("listening on {}:{}", impl_->config.host, impl_->bound_port);
  impl_->server.listen_after_bind();
}

void Service::start() {
  bind();
  impl_->listener = std::thread([this] { impl_->server.listen_after_bind(); });
  impl_->server.wait_until_ready();
}

void Service::stop() { impl_->server.stop(); }

int Service::port() const { return impl_->bound_port; }

}  // namespace kgqa::service

#include "kgqa/updater/updater.hpp"

#include <atomic>
#include <thread>

#include <spdlog/spdlog.h>

#include "httplib.h"
#include "json.hpp"
#include "kgqa/error.hpp"
#include "kgqa/net/url.hpp"
#include "kgqa/sparql/parser.hpp"

namespace kgqa::updater {

using nlohmann::json;

namespace {

std::string percent_encode(std::string_view s) {
  static const char* hex = "0123456789ABCDEF";
  std::string out;
  for (unsigned char c : s) {
    if (std::isalnum(c) || c == '-' || c == '_' || c == '.' || c == '~') {
      out += static_cast<char>(c);
    } else {
      out += '%';
      out += hex[c >> 4];
      out += hex[c & 15];
    }
  }
  return out;
}

bool retryable(const Error& e) {
  if (e.code() == "Timeout" || e.code() == "ConnectionError") return true;
  if (e.code() != "HttpError") return false;
  auto status = std::atoi(e.what() + 5);  // "HTTP nnn"
  return status == 429 || status >= 500;
}

}  // namespace

void EndpointConfig::validate() const {
  net::parse_url(url);
  if (!(timeout_seconds > 0)) throw Error("InvalidArgument", "timeout must be positive");
  if (max_retries < 0) throw Error("InvalidArgument", "retries must not be negative");
  if (delay_ms < 0) throw Error("InvalidArgument", "delay must not be negative");
}

std::string_view update_status_name(UpdateStatus s) {
  switch (s) {
    case UpdateStatus::Updated: return "updated";
    case UpdateStatus::EmptyResult: return "emptyResult";
    case UpdateStatus::QueryAbsent: return "queryAbsent";
    case UpdateStatus::ParseFailed: return "parseFailed";
    case UpdateStatus::EndpointError: return "endpointError";
  }
  return "";
}

bench::AnswerSet parse_sparql_results(std::string_view body, Projection projection) {
  json doc;
  try {
    doc = json::parse(body);
  } catch (const json::exception& e) {
    throw Error("MalformedResults", std::string("results are not JSON: ") + e.what());
  }
  if (!doc.is_object()) throw Error("MalformedResults", "results must be a JSON object");
  if (auto b = doc.find("boolean"); b != doc.end()) {
    if (!b->is_boolean()) throw Error("MalformedResults", "\"boolean\" must be true or false");
    return bench::AnswerSet::boolean(b->get<bool>());
  }
  auto results = doc.find("results");
  if (results == doc.end() || !results->is_object() || !results->contains("bindings") ||
      !(*results)["bindings"].is_array()) {
    throw Error("MalformedResults", "missing results.bindings");
  }
  std::vector<std::string> vars;
  if (auto head = doc.find("head"); head != doc.end() && head->is_object() && head->contains("vars")) {
    for (const auto& v : (*head)["vars"]) {
      if (!v.is_string()) throw Error("MalformedResults", "head.vars must hold strings");
      vars.push_back(v.get<std::string>());
    }
  }
  const auto& rows = (*results)["bindings"];
  if (vars.empty()) {
    // No head: take variables in first-seen order.
    for (const auto& row : rows) {
      if (!row.is_object()) continue;
      for (const auto& [k, v] : row.items()) {
        if (std::find(vars.begin(), vars.end(), k) == vars.end()) vars.push_back(k);
      }
    }
  }
  auto cell = [](const json& row, const std::string& var) -> std::optional<std::string> {
    auto it = row.find(var);
    if (it == row.end()) return std::nullopt;
    if (!it->is_object() || !it->contains("value") || !(*it)["value"].is_string()) {
      throw Error("MalformedResults", "binding for ?" + var + " lacks a string value");
    }
    return (*it)["value"].get<std::string>();
  };
  std::vector<std::string> values;
  for (const auto& row : rows) {
    if (!row.is_object()) throw Error("MalformedResults", "binding rows must be objects");
    if (vars.empty()) continue;
    if (projection == Projection::FirstVariable) {
      if (auto v = cell(row, vars.front())) values.push_back(*v);
    } else {
      std::string joined;
      bool any = false;
      for (std::size_t i = 0; i < vars.size(); ++i) {
        auto v = cell(row, vars[i]);
        if (i) joined += '\t';
        if (v) {
          joined += *v;
          any = true;
        }
      }
      if (any) values.push_back(std::move(joined));
    }
  }
  return bench::AnswerSet::bindings(std::move(values));
}

SparqlClient::SparqlClient(EndpointConfig config) : config_(std::move(config)) {
  config_.validate();
  auto u = net::parse_url(config_.url);
  origin_ = u.origin();
  path_ = u.path;
}

std::string SparqlClient::request_text(const sparql::QueryAst& ast) const {
  // Printed rather than the source text: undeclared prefixes come out as
  // full IRIs, so endpoints without predefined prefixes accept it.
  if (config_.result_limit == 0 || ast.type != sparql::QueryType::Select ||
      (ast.modifiers.limit && *ast.modifiers.limit <= config_.result_limit)) {
    return sparql::print_query(ast);
  }
  auto capped = ast;
  capped.modifiers.limit = config_.result_limit;
  return sparql::print_query(capped);
}

void SparqlClient::pace() {
  auto gap = std::chrono::milliseconds(config_.delay_ms);
  if (last_) {
    auto ready = *last_ + gap;
    auto now = std::chrono::steady_clock::now();
    if (now < ready) std::this_thread::sleep_for(ready - now);
  }
  last_ = std::chrono::steady_clock::now();
}

bench::AnswerSet SparqlClient::attempt(const std::string& query, sparql::QueryType type) {
  pace();
  ++requests_;
  httplib::Client client(origin_);
  auto secs = static_cast<time_t>(config_.timeout_seconds);
  auto usecs = static_cast<time_t>((config_.timeout_seconds - static_cast<double>(secs)) * 1e6);
  client.set_connection_timeout(secs, usecs);
  client.set_read_timeout(secs, usecs);
  client.set_write_timeout(secs, usecs);

  std::string target = path_ + (path_.find('?') == std::string::npos ? "?" : "&") + "query=" +
                       percent_encode(query);
  httplib::Headers headers = {{"Accept", "application/sparql-results+json"}};
  auto res = client.Get(target, headers);
  if (!res) {
    auto err = res.error();
    if (err == httplib::Error::Read || err == httplib::Error::ConnectionTimeout) {
      throw Error("Timeout", "endpoint did not answer within the timeout");
    }
    throw Error("ConnectionError", "request failed: " + httplib::to_string(err));
  }
  if (res->status != 200) throw Error("HttpError", "HTTP " + std::to_string(res->status));
  auto answers = parse_sparql_results(res->body, config_.projection);
  if (type == sparql::QueryType::Ask && answers.kind != bench::AnswerKind::Boolean) {
    throw Error("MalformedResults", "ASK query answered without a boolean");
  }
  return answers;
}

bench::AnswerSet SparqlClient::execute(const sparql::QueryAst& ast) {
  auto query = request_text(ast);
  for (int tries = 0;; ++tries) {
    try {
      return attempt(query, ast.type);
    } catch (const Error& e) {
      if (tries >= config_.max_retries || !retryable(e)) throw;
      spdlog::debug("retrying after {}: {}", e.code(), e.what());
    }
  }
}

bench::AnswerSet execute_query(const EndpointConfig& config, const sparql::QueryAst& ast) {
  SparqlClient client(config);
  return client.execute(ast);
}

std::pair<bench::Benchmark, std::vector<UpdateOutcome>> update_benchmark(
    const EndpointConfig& config, const bench::Benchmark& benchmark, const UpdateOptions& options) {
  config.validate();
  auto out = benchmark;
  std::vector<UpdateOutcome> outcomes(benchmark.entries.size());

  std::atomic<std::size_t> next{0};
  auto work = [&] {
    SparqlClient client(config);
    for (std::size_t i; (i = next.fetch_add(1)) < benchmark.entries.size();) {
      const auto& e = benchmark.entries[i];
      auto& o = outcomes[i];
      o.question_id = e.question_id;
      if (e.query.status == bench::QueryStatus::Absent) {
        o.status = UpdateStatus::QueryAbsent;
        continue;
      }
      if (e.query.status == bench::QueryStatus::ParseFailed || !e.query.ast) {
        o.status = UpdateStatus::ParseFailed;
        o.message = e.query.error;
        continue;
      }
      try {
        auto fresh = client.execute(*e.query.ast);
        bool empty = fresh.kind == bench::AnswerKind::Bindings && fresh.values.empty();
        if (empty && !options.accept_empty) {
          o.status = UpdateStatus::EmptyResult;
          continue;
        }
        o.status = UpdateStatus::Updated;
        o.new_gold = std::move(fresh);
      } catch (const Error& err) {
        o.status = UpdateStatus::EndpointError;
        o.message = err.code() + ": " + err.what();
        spdlog::warn("question {}: {}", e.question_id, o.message);
      }
    }
  };
  std::size_t n = std::min(std::max<std::size_t>(options.parallel, 1), benchmark.entries.size());
  if (n <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < n; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    if (outcomes[i].status == UpdateStatus::Updated) out.entries[i].gold = *outcomes[i].new_gold;
  }
  return {std::move(out), std::move(outcomes)};
}

}  // namespace kgqa::updater

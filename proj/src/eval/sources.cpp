#include "kgqa/eval/sources.hpp"

#include <atomic>
#include <fstream>
#include <sstream>
#include <thread>

#include <spdlog/spdlog.h>

#include "httplib.h"
#include "json.hpp"
#include "kgqa/error.hpp"
#include "kgqa/net/url.hpp"

namespace kgqa::eval {

using nlohmann::json;

namespace {

std::string value_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_object() && v.contains("value") && v["value"].is_string()) return v["value"].get<std::string>();
  return v.dump();
}

std::optional<bench::AnswerSet> answer_from(const json& j) {
  if (!j.is_object()) return std::nullopt;
  if (auto b = j.find("boolean"); b != j.end() && b->is_boolean()) {
    return bench::AnswerSet::boolean(b->get<bool>());
  }
  if (auto a = j.find("answers"); a != j.end() && a->is_array()) {
    std::vector<std::string> values;
    for (const auto& v : *a) values.push_back(value_text(v));
    return bench::AnswerSet::bindings(std::move(values));
  }
  return std::nullopt;
}

}  // namespace

PredictionsFile PredictionsFile::parse(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw Error("MalformedFile", std::string("$: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("predictions") || !doc["predictions"].is_array()) {
    throw Error("MalformedFile", "$.predictions: expected an array");
  }
  PredictionsFile out;
  const auto& list = doc["predictions"];
  for (std::size_t i = 0; i < list.size(); ++i) {
    const auto& p = list[i];
    std::string where = "$.predictions[" + std::to_string(i) + "]";
    if (!p.is_object() || !p.contains("id")) throw Error("MalformedFile", where + ".id: missing");
    const auto& id = p["id"];
    std::string key = id.is_string() ? id.get<std::string>() : id.is_number_integer() ? id.dump() : "";
    if (key.empty()) throw Error("MalformedFile", where + ".id: expected a string or integer");
    auto a = answer_from(p);
    if (!a) throw Error("MalformedFile", where + ": needs \"answers\" or \"boolean\"");
    if (!out.answers_.emplace(key, std::move(*a)).second) {
      throw Error("DuplicateQuestionId", "duplicate prediction id '" + key + "'");
    }
  }
  return out;
}

PredictionsFile PredictionsFile::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("IoError", "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

std::optional<bench::AnswerSet> PredictionsFile::answer(const bench::BenchmarkEntry& entry) {
  auto it = answers_.find(entry.question_id);
  if (it == answers_.end()) return std::nullopt;
  return it->second;
}

QaEndpoint::QaEndpoint(const std::string& url, double timeout_seconds) : timeout_(timeout_seconds) {
  auto u = net::parse_url(url);
  origin_ = u.origin();
  path_ = u.path == "/" ? "/answer" : u.path;
}

std::optional<bench::AnswerSet> parse_qa_response(std::string_view body) {
  try {
    return answer_from(json::parse(body));
  } catch (const json::exception&) {
    return std::nullopt;
  }
}

std::optional<bench::AnswerSet> QaEndpoint::answer(const bench::BenchmarkEntry& entry) {
  httplib::Client client(origin_);
  auto secs = static_cast<time_t>(timeout_);
  auto usecs = static_cast<time_t>((timeout_ - static_cast<double>(secs)) * 1e6);
  client.set_connection_timeout(secs, usecs);
  client.set_read_timeout(secs, usecs);
  client.set_write_timeout(secs, usecs);

  json body = {{"question", entry.nlq.raw_text}, {"lang", entry.language}};
  auto res = client.Post(path_, body.dump(), "application/json");
  if (!res) {
    spdlog::warn("question {}: QA request failed ({})", entry.question_id, httplib::to_string(res.error()));
    return std::nullopt;
  }
  if (res->status != 200) {
    spdlog::warn("question {}: QA system returned HTTP {}", entry.question_id, res->status);
    return std::nullopt;
  }
  auto parsed = parse_qa_response(res->body);
  if (!parsed) spdlog::warn("question {}: unreadable QA response", entry.question_id);
  return parsed;
}

std::vector<bench::AnswerSet> fetch_answers(AnswerSource& source,
                                            std::span<const bench::BenchmarkEntry> entries,
                                            std::size_t parallel) {
  std::vector<bench::AnswerSet> out(entries.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < entries.size();) {
      auto a = source.answer(entries[i]);
      if (a) out[i] = std::move(*a);
    }
  };
  std::size_t n = std::min(std::max<std::size_t>(parallel, 1), entries.size());
  if (n <= 1) {
    work();
    return out;
  }
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < n; ++t) pool.emplace_back(work);
  for (auto& t : pool) t.join();
  return out;
}

}  // namespace kgqa::eval

#include <gtest/gtest.h>

#include <atomic>
#include <chrono>
#include <mutex>

#include "kgqa/error.hpp"
#include "kgqa/sparql/parser.hpp"
#include "kgqa/updater/updater.hpp"
#include "support/benchmarks.hpp"
#include "support/mock_http.hpp"

using namespace kgqa::updater;
using kgqa::bench::AnswerSet;
namespace fx = kgqa::fixtures;
using Clock = std::chrono::steady_clock;

namespace {

template <typename F>
std::string error_code(F&& f) {
  try {
    f();
  } catch (const kgqa::Error& e) {
    return e.code();
  }
  return "";
}

const char* kTwoUris = R"({"head": {"vars": ["uri", "label"]}, "results": {"bindings": [
  {"uri": {"type": "uri", "value": "http://ex/B"}, "label": {"type": "literal", "value": "bee", "xml:lang": "en"}},
  {"uri": {"type": "uri", "value": "http://ex/A"}}]}})";

const char* kEmpty = R"({"head": {"vars": ["x"]}, "results": {"bindings": []}})";

// Answers by looking at the query text: p1 -> two IRIs, p2 -> empty,
// ASK -> true, p500 -> server error, p404 -> not found, slow -> delay.
struct Endpoint {
  std::mutex mu;
  std::vector<Clock::time_point> stamps;
  std::vector<std::string> queries;
  std::atomic<int> hits{0};

  void routes(httplib::Server& s) {
    s.Get("/sparql", [this](const httplib::Request& req, httplib::Response& res) {
      ++hits;
      auto q = req.get_param_value("query");
      {
        std::lock_guard lock(mu);
        stamps.push_back(Clock::now());
        queries.push_back(q);
      }
      EXPECT_EQ(req.get_header_value("Accept"), "application/sparql-results+json");
      if (q.find("p500") != std::string::npos) {
        res.status = 500;
      } else if (q.find("p404") != std::string::npos) {
        res.status = 404;
      } else if (q.find("slow") != std::string::npos) {
        std::this_thread::sleep_for(std::chrono::milliseconds(500));
        res.set_content(kEmpty, "application/json");
      } else if (q.find("garbled") != std::string::npos) {
        res.set_content("{\"results\": 3}", "application/json");
      } else if (q.rfind("ASK", 0) == 0 || q.find("\nASK") != std::string::npos) {
        res.set_content(R"({"head": {}, "boolean": true})", "application/json");
      } else if (q.find("p1") != std::string::npos) {
        res.set_content(kTwoUris, "application/sparql-results+json");
      } else {
        res.set_content(kEmpty, "application/json");
      }
    });
  }
};

EndpointConfig config_for(const fx::MockServer& s) {
  EndpointConfig c;
  c.url = s.url("/sparql");
  c.timeout_seconds = 2;
  c.max_retries = 2;
  return c;
}

kgqa::sparql::QueryAst q(const std::string& text) { return kgqa::sparql::parse_query(text); }

}  // namespace

TEST(ExecuteQuery, AskAndSelect) {
  Endpoint ep;
  fx::MockServer server([&](httplib::Server& s) { ep.routes(s); });
  auto cfg = config_for(server);
  EXPECT_EQ(execute_query(cfg, q("ASK { <http://ex/a> <http://ex/p> <http://ex/b> }")), AnswerSet::boolean(true));
  auto sel = execute_query(cfg, q("SELECT ?uri ?label WHERE { ?uri <http://ex/p1> ?label }"));
  EXPECT_EQ(sel, AnswerSet::bindings({"http://ex/A", "http://ex/B"}));

  cfg.projection = Projection::TabJoined;
  auto joined = execute_query(cfg, q("SELECT ?uri ?label WHERE { ?uri <http://ex/p1> ?label }"));
  EXPECT_EQ(joined.values, (std::vector<std::string>{"http://ex/A\t", "http://ex/B\tbee"}));
}

TEST(ExecuteQuery, UndeclaredPrefixesAreSentExpanded) {
  Endpoint ep;
  fx::MockServer server([&](httplib::Server& s) { ep.routes(s); });
  execute_query(config_for(server), q("SELECT ?x WHERE { ?x dbo:p1 dbr:Berlin }"));
  ASSERT_EQ(ep.queries.size(), 1u);
  EXPECT_NE(ep.queries[0].find("<http://dbpedia.org/ontology/p1>"), std::string::npos) << ep.queries[0];
  EXPECT_NO_THROW(kgqa::sparql::parse_query(ep.queries[0]));
}

TEST(ExecuteQuery, ResultLimitCap) {
  Endpoint ep;
  fx::MockServer server([&](httplib::Server& s) { ep.routes(s); });
  auto cfg = config_for(server);
  cfg.result_limit = 100;
  SparqlClient client(cfg);
  EXPECT_NE(client.request_text(q("SELECT ?x WHERE { ?x <http://ex/p> ?y }")).find("LIMIT 100"), std::string::npos);
  EXPECT_NE(client.request_text(q("SELECT ?x WHERE { ?x <http://ex/p> ?y } LIMIT 5")).find("LIMIT 5"), std::string::npos);
  EXPECT_NE(client.request_text(q("SELECT ?x WHERE { ?x <http://ex/p> ?y } LIMIT 500")).find("LIMIT 100"), std::string::npos);
  EXPECT_EQ(client.request_text(q("ASK { ?x <http://ex/p> ?y }")).find("LIMIT"), std::string::npos);
}

TEST(ExecuteQuery, ErrorsAndRetries) {
  Endpoint ep;
  fx::MockServer server([&](httplib::Server& s) { ep.routes(s); });
  auto cfg = config_for(server);
  SparqlClient client(cfg);
  try {
    client.execute(q("SELECT ?x WHERE { ?x <http://ex/p500> ?y }"));
    FAIL() << "expected HttpError";
  } catch (const kgqa::Error& e) {
    EXPECT_EQ(e.code(), "HttpError");
    EXPECT_STREQ(e.what(), "HTTP 500");
  }
  EXPECT_EQ(ep.hits.load(), 3);  // one try plus two retries

  ep.hits = 0;
  EXPECT_EQ(error_code([&] { client.execute(q("SELECT ?x WHERE { ?x <http://ex/p404> ?y }")); }), "HttpError");
  EXPECT_EQ(ep.hits.load(), 1);  // client errors are not retried

  EXPECT_EQ(error_code([&] { client.execute(q("SELECT ?x WHERE { ?x <http://ex/garbled> ?y }")); }),
            "MalformedResults");

  cfg.timeout_seconds = 0.1;
  cfg.max_retries = 0;
  EXPECT_EQ(error_code([&] { execute_query(cfg, q("SELECT ?x WHERE { ?x <http://ex/slow> ?y }")); }), "Timeout");

  EndpointConfig down;
  down.url = "http://127.0.0.1:1/sparql";
  down.max_retries = 0;
  EXPECT_EQ(error_code([&] { execute_query(down, q("SELECT ?x WHERE { ?x ?p ?y }")); }), "ConnectionError");

  EndpointConfig bad;
  bad.url = "ftp://x";
  EXPECT_EQ(error_code([&] { bad.validate(); }), "InvalidArgument");
  bad.url = "http://x";
  bad.timeout_seconds = 0;
  EXPECT_EQ(error_code([&] { bad.validate(); }), "InvalidArgument");
  bad.timeout_seconds = 1;
  bad.max_retries = -1;
  EXPECT_EQ(error_code([&] { bad.validate(); }), "InvalidArgument");
}

TEST(ParseResults, Shapes) {
  EXPECT_EQ(parse_sparql_results(R"({"boolean": false})", Projection::FirstVariable), AnswerSet::boolean(false));
  // No head: first-seen variable order.
  auto r = parse_sparql_results(R"({"results": {"bindings": [{"a": {"value": "1"}}, {"a": {"value": "2"}}]}})",
                                Projection::FirstVariable);
  EXPECT_EQ(r.values, (std::vector<std::string>{"1", "2"}));
  EXPECT_EQ(error_code([] { parse_sparql_results("[", Projection::FirstVariable); }), "MalformedResults");
  EXPECT_EQ(error_code([] { parse_sparql_results(R"({"boolean": "yes"})", Projection::FirstVariable); }),
            "MalformedResults");
  EXPECT_EQ(error_code([] {
              parse_sparql_results(R"({"head": {"vars": ["a"]}, "results": {"bindings": [{"a": {"type": "uri"}}]}})",
                                   Projection::FirstVariable);
            }),
            "MalformedResults");
}

TEST(UpdateBenchmark, MixedOutcomes) {
  Endpoint ep;
  fx::MockServer server([&](httplib::Server& s) { ep.routes(s); });
  kgqa::bench::Benchmark b;
  b.entries.push_back(fx::entry("fresh", "Which things have p1?", "SELECT ?uri WHERE { ?uri <http://ex/p1> ?o }", {"old"}));
  b.entries.push_back(fx::entry("none", "Who knows?", "", {"kept"}));
  b.entries.push_back(fx::entry("empty", "What has p2?", "SELECT ?x WHERE { ?x <http://ex/p2> ?o }", {"stale"}));
  auto [updated, outcomes] = update_benchmark(config_for(server), b);
  ASSERT_EQ(outcomes.size(), 3u);
  EXPECT_EQ(outcomes[0].status, UpdateStatus::Updated);
  EXPECT_EQ(outcomes[1].status, UpdateStatus::QueryAbsent);
  EXPECT_EQ(outcomes[2].status, UpdateStatus::EmptyResult);
  EXPECT_EQ(outcomes[0].new_gold->values, (std::vector<std::string>{"http://ex/A", "http://ex/B"}));
  EXPECT_EQ(updated.entries[0].gold.values, (std::vector<std::string>{"http://ex/A", "http://ex/B"}));
  EXPECT_EQ(updated.entries[1], b.entries[1]);
  EXPECT_EQ(updated.entries[2], b.entries[2]);

  auto [again, outcomes2] = update_benchmark(config_for(server), updated);
  EXPECT_EQ(again, updated);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(outcomes2[i].status, outcomes[i].status);

  UpdateOptions accept;
  accept.accept_empty = true;
  auto [emptied, outcomes3] = update_benchmark(config_for(server), b, accept);
  EXPECT_EQ(outcomes3[2].status, UpdateStatus::Updated);
  EXPECT_TRUE(emptied.entries[2].gold.values.empty());

  EXPECT_EQ(update_status_name(UpdateStatus::EmptyResult), "emptyResult");
  EXPECT_EQ(update_status_name(UpdateStatus::EndpointError), "endpointError");
}

TEST(UpdateBenchmark, EndpointDownLeavesBenchmarkUnchanged) {
  kgqa::bench::Benchmark b = fx::three_versions()[0];
  b.entries.push_back(fx::entry("absent", "No query here?", "", {"x"}));
  b.entries.push_back(fx::entry("broken", "Broken query here?", "SELECT ?x WHERE {", {"x"}));
  EndpointConfig down;
  down.url = "http://127.0.0.1:1/sparql";
  down.max_retries = 1;
  down.timeout_seconds = 0.5;
  auto [out, outcomes] = update_benchmark(down, b);
  EXPECT_EQ(out, b);
  ASSERT_EQ(outcomes.size(), b.entries.size());
  for (std::size_t i = 0; i < 10; ++i) {
    EXPECT_EQ(outcomes[i].status, UpdateStatus::EndpointError);
    EXPECT_FALSE(outcomes[i].message.empty());
  }
  EXPECT_EQ(outcomes[10].status, UpdateStatus::QueryAbsent);
  EXPECT_EQ(outcomes[11].status, UpdateStatus::ParseFailed);
}

TEST(UpdateBenchmark, PolitenessDelayAndParallelDeterminism) {
  Endpoint ep;
  fx::MockServer server([&](httplib::Server& s) { ep.routes(s); });
  auto b = fx::three_versions()[1];
  b.entries[3] = fx::entry("p1q", "Things with p1?", "SELECT ?u WHERE { ?u <http://ex/p1> ?o }", {"g"});
  auto cfg = config_for(server);
  cfg.delay_ms = 40;
  auto t0 = Clock::now();
  auto [seq, seq_out] = update_benchmark(cfg, b);
  auto total = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0);
  ASSERT_EQ(ep.stamps.size(), b.entries.size());
  EXPECT_GE(total.count(), 40 * static_cast<long>(b.entries.size() - 1));
  // Stamps are taken when the server gets round to the request, so a gap
  // can look a little shorter than the client's pacing.
  for (std::size_t i = 1; i < ep.stamps.size(); ++i) {
    auto gap = std::chrono::duration_cast<std::chrono::microseconds>(ep.stamps[i] - ep.stamps[i - 1]);
    EXPECT_GE(gap.count(), 38000) << "request " << i;
  }

  cfg.delay_ms = 0;
  UpdateOptions par;
  par.parallel = 4;
  auto [p, p_out] = update_benchmark(cfg, b, par);
  EXPECT_EQ(p, seq);
  ASSERT_EQ(p_out.size(), seq_out.size());
  for (std::size_t i = 0; i < p_out.size(); ++i) {
    EXPECT_EQ(p_out[i].question_id, b.entries[i].question_id);
    EXPECT_EQ(p_out[i].status, seq_out[i].status);
  }
}

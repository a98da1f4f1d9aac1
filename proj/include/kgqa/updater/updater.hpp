#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kgqa/bench/model.hpp"
#include "kgqa/sparql/ast.hpp"

namespace kgqa::updater {

enum class Projection {
  FirstVariable,  // values of the first projected variable
  TabJoined,      // every projected value of a row, joined with '\t'
};

struct EndpointConfig {
  std::string url;
  double timeout_seconds = 30.0;
  int max_retries = 2;
  int delay_ms = 0;               // minimum gap between requests on one connection
  std::uint64_t result_limit = 0;  // adds LIMIT to unlimited SELECTs; 0 leaves them alone
  Projection projection = Projection::FirstVariable;

  /// Throws Error("InvalidArgument").
  void validate() const;
};

/// One connection to a SPARQL endpoint. Requests made through the same
/// instance are spaced at least `delay_ms` apart, retries included.
class SparqlClient {
 public:
  explicit SparqlClient(EndpointConfig config);

  /// SELECT gives bindings, ASK a boolean. Throws Error with code
  /// "Timeout", "ConnectionError", "HttpError" (message "HTTP <status>")
  /// or "MalformedResults" once retries are spent.
  bench::AnswerSet execute(const sparql::QueryAst& ast);

  /// The query text actually sent.
  std::string request_text(const sparql::QueryAst& ast) const;

  std::size_t requests_sent() const { return requests_; }

 private:
  bench::AnswerSet attempt(const std::string& query, sparql::QueryType type);
  void pace();

  EndpointConfig config_;
  std::string origin_;
  std::string path_;
  std::optional<std::chrono::steady_clock::time_point> last_;
  std::size_t requests_ = 0;
};

bench::AnswerSet execute_query(const EndpointConfig& config, const sparql::QueryAst& ast);

/// Reads a SPARQL JSON results document. Throws Error("MalformedResults").
bench::AnswerSet parse_sparql_results(std::string_view body, Projection projection);

enum class UpdateStatus { Updated, EmptyResult, QueryAbsent, ParseFailed, EndpointError };

std::string_view update_status_name(UpdateStatus s);

struct UpdateOutcome {
  std::string question_id;
  UpdateStatus status = UpdateStatus::QueryAbsent;
  std::string message;  // endpoint error text
  std::optional<bench::AnswerSet> new_gold;
};

struct UpdateOptions {
  bool accept_empty = false;
  std::size_t parallel = 1;
};

/// Outcomes follow entry order. Only entries reported as Updated change.
std::pair<bench::Benchmark, std::vector<UpdateOutcome>> update_benchmark(
    const EndpointConfig& config, const bench::Benchmark& benchmark, const UpdateOptions& options = {});

}  // namespace kgqa::updater

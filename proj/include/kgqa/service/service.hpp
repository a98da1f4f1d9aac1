#pragma once

#include <memory>
#include <string>

namespace kgqa::service {

struct ServiceConfig {
  std::string host = "0.0.0.0";
  int port = 8080;               // 0 picks a free port
  std::string data_dir;          // empty keeps everything in memory
  std::size_t workers = 2;
  std::string cors_origin = "*";

  /// Defaults overridden by PORT, DATA_DIR and WORKERS when set. Throws
  /// Error("InvalidArgument") for unusable values.
  static ServiceConfig from_env();
};

/// JSON API over benchmarks, analysis/evaluation/update jobs and reports.
/// Jobs run on a bounded worker pool; handlers only enqueue them.
class Service {
 public:
  explicit Service(ServiceConfig config);
  ~Service();
  Service(const Service&) = delete;
  Service& operator=(const Service&) = delete;

  /// Binds the listening socket and returns the port. Throws
  /// Error("IoError") when binding fails.
  int bind();
  /// Serves until stop(); binds first if needed.
  void run();
  /// bind() and run() on a background thread.
  void start();
  void stop();
  int port() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace kgqa::service

#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace kgqa {

/// Base class of every error raised by the library.
///
/// `code()` is a stable, machine-readable identifier ("SyntaxError",
/// "EmptyInput", "UnknownQuestion", ...). The CLI prints it and the HTTP
/// service returns it in `{"error": {"code", "message"}}` bodies.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

}  // namespace kgqa

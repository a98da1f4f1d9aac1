#pragma once

#include <string>
#include <string_view>

namespace kgqa::net {

struct Url {
  std::string scheme;  // "http" or "https"
  std::string host;
  int port = 80;
  std::string path = "/";  // includes any query string

  /// "scheme://host:port", the form httplib clients accept.
  std::string origin() const;
};

/// Throws Error("InvalidArgument") for anything that is not an absolute
/// http(s) URL.
Url parse_url(std::string_view text);

}  // namespace kgqa::net

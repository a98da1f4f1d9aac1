#include "kgqa/net/url.hpp"

#include <charconv>

#include "kgqa/error.hpp"

namespace kgqa::net {

std::string Url::origin() const { return scheme + "://" + host + ":" + std::to_string(port); }

Url parse_url(std::string_view text) {
  auto bad = [&](const char* why) {
    return Error("InvalidArgument", "invalid URL '" + std::string(text) + "': " + why);
  };
  Url u;
  auto sep = text.find("://");
  if (sep == std::string_view::npos) throw bad("missing scheme");
  u.scheme = std::string(text.substr(0, sep));
  for (auto& c : u.scheme) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (u.scheme != "http" && u.scheme != "https") throw bad("only http and https are supported");
  u.port = u.scheme == "https" ? 443 : 80;

  auto rest = text.substr(sep + 3);
  auto slash = rest.find_first_of("/?");
  auto authority = rest.substr(0, slash);
  if (slash != std::string_view::npos) {
    u.path = std::string(rest.substr(slash));
    if (u.path.front() == '?') u.path.insert(u.path.begin(), '/');
  }
  if (authority.find('@') != std::string_view::npos) throw bad("credentials in URL are not supported");

  std::string_view host = authority;
  if (!authority.empty() && authority.front() == '[') {
    auto close = authority.find(']');
    if (close == std::string_view::npos) throw bad("unterminated IPv6 literal");
    host = authority.substr(1, close - 1);
    authority = authority.substr(close + 1);
    if (!authority.empty() && authority.front() != ':') throw bad("junk after IPv6 literal");
  } else {
    auto colon = authority.rfind(':');
    host = authority.substr(0, colon);
    authority = colon == std::string_view::npos ? std::string_view{} : authority.substr(colon);
  }
  if (!authority.empty()) {
    auto digits = authority.substr(1);
    int port = 0;
    auto [p, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), port);
    if (digits.empty() || ec != std::errc() || p != digits.data() + digits.size() || port <= 0 ||
        port > 65535) {
      throw bad("bad port");
    }
    u.port = port;
  }
  if (host.empty()) throw bad("missing host");
  u.host = std::string(host);
  return u;
}

}  // namespace kgqa::net

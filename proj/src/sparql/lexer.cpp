#include "kgqa/sparql/lexer.hpp"

#include <cstdint>

#include "kgqa/sparql/parser.hpp"

namespace kgqa::sparql {

namespace {

bool is_alpha(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }
bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_high(char c) { return static_cast<unsigned char>(c) >= 0x80; }
bool is_name_char(char c) { return is_alpha(c) || is_digit(c) || c == '_' || c == '-' || is_high(c); }
bool is_var_char(char c) { return is_alpha(c) || is_digit(c) || c == '_' || is_high(c); }
bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v'; }
bool is_hex(char c) { return is_digit(c) || (c >= 'a' && c <= 'f') || (c >= 'A' && c <= 'F'); }

bool iri_forbidden(char c) {
  auto u = static_cast<unsigned char>(c);
  if (u <= 0x20) return true;
  switch (c) {
    case '<': case '"': case '{': case '}': case '|': case '^': case '`': case '\\':
      return true;
    default:
      return false;
  }
}

void append_utf8(std::string& out, std::uint32_t cp) {
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
}

// Offset of the first byte that breaks UTF-8 well-formedness, or npos.
std::size_t invalid_utf8_at(std::string_view s) {
  std::size_t i = 0;
  while (i < s.size()) {
    auto c = static_cast<unsigned char>(s[i]);
    std::size_t len = 0;
    std::uint32_t cp = 0;
    if (c < 0x80) {
      ++i;
      continue;
    } else if ((c & 0xE0) == 0xC0) {
      len = 2;
      cp = c & 0x1F;
    } else if ((c & 0xF0) == 0xE0) {
      len = 3;
      cp = c & 0x0F;
    } else if ((c & 0xF8) == 0xF0) {
      len = 4;
      cp = c & 0x07;
    } else {
      return i;
    }
    if (i + len > s.size()) return i;
    for (std::size_t k = 1; k < len; ++k) {
      auto cc = static_cast<unsigned char>(s[i + k]);
      if ((cc & 0xC0) != 0x80) return i;
      cp = (cp << 6) | (cc & 0x3F);
    }
    bool overlong = (len == 2 && cp < 0x80) || (len == 3 && cp < 0x800) || (len == 4 && cp < 0x10000);
    if (overlong || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) return i;
    i += len;
  }
  return std::string_view::npos;
}

}  // namespace

Lexer::Lexer(std::string_view source) : src_(source) {}

char Lexer::peek(std::size_t ahead) const {
  return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
}

void Lexer::advance(std::size_t n) {
  for (std::size_t i = 0; i < n && pos_ < src_.size(); ++i) {
    char c = src_[pos_++];
    if (c == '\n') {
      ++line_;
      column_ = 1;
    } else if ((static_cast<unsigned char>(c) & 0xC0) != 0x80) {
      ++column_;
    }
  }
}

void Lexer::fail(const std::string& message, std::size_t line, std::size_t column,
                 const std::string& token) const {
  throw SyntaxError(message, line, column, token);
}

void Lexer::skip_space_and_comments() {
  while (pos_ < src_.size()) {
    char c = src_[pos_];
    if (is_space(c)) {
      advance();
    } else if (c == '#') {
      std::size_t start = pos_;
      while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      comments_.emplace_back(start, pos_);
    } else {
      break;
    }
  }
}

std::vector<Token> Lexer::tokenize() {
  if (auto bad = invalid_utf8_at(src_); bad != std::string_view::npos) {
    // Position is reported in code points up to the bad byte.
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i < bad; ++i) {
      if (src_[i] == '\n') {
        ++line;
        column = 1;
      } else if ((static_cast<unsigned char>(src_[i]) & 0xC0) != 0x80) {
        ++column;
      }
    }
    fail("invalid UTF-8", line, column, "\\x" + std::to_string(static_cast<unsigned char>(src_[bad])));
  }
  std::vector<Token> out;
  for (;;) {
    Token t = next();
    bool end = t.kind == TokenKind::End;
    out.push_back(std::move(t));
    if (end) break;
  }
  return out;
}

Token Lexer::next() {
  skip_space_and_comments();
  Token t;
  t.begin = pos_;
  t.line = line_;
  t.column = column_;
  if (pos_ >= src_.size()) {
    t.kind = TokenKind::End;
    t.end = pos_;
    return t;
  }
  char c = peek();

  if (c == '"' || c == '\'') return lex_string(t);
  if (is_digit(c)) return lex_number(t);

  if ((c == '?' || c == '$') && is_var_char(peek(1))) {
    advance();
    std::size_t start = pos_;
    while (pos_ < src_.size() && is_var_char(src_[pos_])) advance();
    t.kind = TokenKind::Variable;
    t.text = std::string(src_.substr(start, pos_ - start));
    t.end = pos_;
    return t;
  }

  if (c == '<') {
    std::size_t k = pos_ + 1;
    while (k < src_.size() && src_[k] != '>' && !iri_forbidden(src_[k])) ++k;
    if (k < src_.size() && src_[k] == '>') {
      t.kind = TokenKind::Iri;
      t.text = std::string(src_.substr(pos_ + 1, k - pos_ - 1));
      advance(k + 1 - pos_);
      t.end = pos_;
      return t;
    }
  }

  if (c == '@' && is_alpha(peek(1))) {
    advance();
    std::size_t start = pos_;
    while (is_alpha(peek())) advance();
    while (peek() == '-' && (is_alpha(peek(1)) || is_digit(peek(1)))) {
      advance();
      while (is_alpha(peek()) || is_digit(peek())) advance();
    }
    t.kind = TokenKind::LangTag;
    t.text = std::string(src_.substr(start, pos_ - start));
    t.end = pos_;
    return t;
  }

  if (c == '_' && peek(1) == ':') {
    advance(2);
    std::size_t start = pos_;
    while (pos_ < src_.size() && (is_name_char(src_[pos_]) || src_[pos_] == '.')) advance();
    while (pos_ > start && src_[pos_ - 1] == '.') --pos_, --column_;
    t.kind = TokenKind::BlankNode;
    t.text = std::string(src_.substr(start, pos_ - start));
    t.end = pos_;
    return t;
  }

  if (is_alpha(c) || c == '_' || c == ':' || is_high(c)) return lex_name(t);

  static constexpr const char* kTwoChar[] = {"&&", "||", "!=", "<=", ">=", "^^"};
  for (const char* op : kTwoChar) {
    if (c == op[0] && peek(1) == op[1]) {
      advance(2);
      t.kind = TokenKind::Symbol;
      t.text = op;
      t.end = pos_;
      return t;
    }
  }
  static constexpr std::string_view kSingle = "{}()[].,;*=<>!+-/|^?$@";
  if (kSingle.find(c) != std::string_view::npos) {
    advance();
    t.kind = TokenKind::Symbol;
    t.text = std::string(1, c);
    t.end = pos_;
    return t;
  }
  std::string shown = static_cast<unsigned char>(c) < 0x20
                          ? "\\x" + std::to_string(static_cast<unsigned char>(c))
                          : std::string(1, c);
  fail("unexpected character", t.line, t.column, shown);
}

Token Lexer::lex_string(Token t) {
  char q = peek();
  bool longq = peek(1) == q && peek(2) == q;
  advance(longq ? 3 : 1);
  std::string value;
  for (;;) {
    if (pos_ >= src_.size()) fail("unterminated string literal", t.line, t.column, std::string(1, q));
    char c = peek();
    if (longq) {
      if (c == q && peek(1) == q && peek(2) == q) {
        advance(3);
        break;
      }
    } else {
      if (c == q) {
        advance();
        break;
      }
      if (c == '\n' || c == '\r') fail("newline in string literal", line_, column_, "\\n");
    }
    if (c == '\\') {
      char e = peek(1);
      std::size_t el = line_, ec = column_;
      switch (e) {
        case 't': value += '\t'; advance(2); break;
        case 'b': value += '\b'; advance(2); break;
        case 'n': value += '\n'; advance(2); break;
        case 'r': value += '\r'; advance(2); break;
        case 'f': value += '\f'; advance(2); break;
        case '"': value += '"'; advance(2); break;
        case '\'': value += '\''; advance(2); break;
        case '\\': value += '\\'; advance(2); break;
        case 'u':
        case 'U': {
          std::size_t digits = e == 'u' ? 4 : 8;
          std::uint32_t cp = 0;
          for (std::size_t k = 0; k < digits; ++k) {
            char h = peek(2 + k);
            if (!is_hex(h)) fail("bad unicode escape", el, ec, "\\" + std::string(1, e));
            cp = cp * 16 + static_cast<std::uint32_t>(is_digit(h) ? h - '0' : (h | 0x20) - 'a' + 10);
          }
          if (cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF))
            fail("bad unicode escape", el, ec, "\\" + std::string(1, e));
          append_utf8(value, cp);
          advance(2 + digits);
          break;
        }
        default:
          fail("unknown escape sequence", el, ec, "\\" + std::string(1, e));
      }
      continue;
    }
    value += c;
    advance();
  }
  t.kind = TokenKind::String;
  t.text = std::move(value);
  t.end = pos_;
  return t;
}

Token Lexer::lex_number(Token t) {
  std::size_t start = pos_;
  t.number_type = "integer";
  while (is_digit(peek())) advance();
  if (peek() == '.' && is_digit(peek(1))) {
    advance();
    while (is_digit(peek())) advance();
    t.number_type = "decimal";
  }
  if ((peek() == 'e' || peek() == 'E') &&
      (is_digit(peek(1)) || ((peek(1) == '+' || peek(1) == '-') && is_digit(peek(2))))) {
    advance(2);
    while (is_digit(peek())) advance();
    t.number_type = "double";
  }
  t.kind = TokenKind::Number;
  t.text = std::string(src_.substr(start, pos_ - start));
  t.end = pos_;
  return t;
}

Token Lexer::lex_name(Token t) {
  std::size_t start = pos_;
  std::size_t k = pos_;
  while (k < src_.size() && (is_name_char(src_[k]) || src_[k] == '.')) ++k;
  if (k < src_.size() && src_[k] == ':') {
    // prefixed name: prefix ':' local
    advance(k + 1 - pos_);
    for (;;) {
      char c = peek();
      if (is_name_char(c) || c == ':' || c == '.') {
        advance();
      } else if (c == '%' && is_hex(peek(1)) && is_hex(peek(2))) {
        advance(3);
      } else if (c == '\\' && peek(1) != '\0' && std::string_view("_~.-!$&'()*+,;=/?#@%").find(peek(1)) != std::string_view::npos) {
        advance(2);
      } else {
        break;
      }
    }
    // A local name never ends with '.'; that dot terminates the triple.
    while (pos_ > k + 1 && src_[pos_ - 1] == '.' && src_[pos_ - 2] != '\\') {
      --pos_;
      --column_;
    }
    t.kind = TokenKind::PrefixedName;
  } else {
    while (pos_ < src_.size() && is_name_char(src_[pos_])) advance();
    t.kind = TokenKind::Word;
  }
  t.text = std::string(src_.substr(start, pos_ - start));
  t.end = pos_;
  return t;
}

std::string Lexer::slice(std::size_t begin, std::size_t end) const {
  std::string out;
  std::size_t i = begin;
  for (const auto& [cb, ce] : comments_) {
    if (ce <= i || cb >= end) continue;
    if (cb > i) out.append(src_.substr(i, cb - i));
    i = ce;
  }
  if (i < end) out.append(src_.substr(i, end - i));
  std::size_t a = 0, b = out.size();
  while (a < b && is_space(out[a])) ++a;
  while (b > a && is_space(out[b - 1])) --b;
  return out.substr(a, b - a);
}

}  // namespace kgqa::sparql

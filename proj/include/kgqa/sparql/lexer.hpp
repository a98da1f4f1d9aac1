#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace kgqa::sparql {

enum class TokenKind {
  Iri,           // <...>, text is the IRI without brackets
  PrefixedName,  // prefix:local, text as written
  Variable,      // ?x / $x, text is the name
  String,        // text is the unescaped content
  LangTag,       // @en, text without '@'
  Number,        // integer / decimal / double as written
  Word,          // keywords, function names, `a`, true/false
  Symbol,        // punctuation and operators
  BlankNode,     // _:label
  End,
};

struct Token {
  TokenKind kind = TokenKind::End;
  std::string text;
  std::size_t begin = 0;  // byte offsets into the source
  std::size_t end = 0;
  std::size_t line = 1;
  std::size_t column = 1;
  std::string number_type;  // for Number: "integer", "decimal" or "double"
};

/// Splits SPARQL text into tokens. `#` comments outside strings and IRIs
/// are dropped; their byte ranges are kept so that verbatim source slices
/// can be taken without them.
class Lexer {
 public:
  explicit Lexer(std::string_view source);

  /// Tokenizes the whole input; the last token is always End.
  /// Throws SyntaxError on invalid UTF-8, unterminated strings and
  /// characters that cannot start any token.
  std::vector<Token> tokenize();

  /// Source bytes in [begin, end) with comments removed and surrounding
  /// whitespace trimmed.
  std::string slice(std::size_t begin, std::size_t end) const;

 private:
  Token next();
  void skip_space_and_comments();
  char peek(std::size_t ahead = 0) const;
  void advance(std::size_t n = 1);
  [[noreturn]] void fail(const std::string& message, std::size_t line, std::size_t column,
                         const std::string& token) const;

  Token lex_string(Token t);
  Token lex_number(Token t);
  Token lex_name(Token t);

  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
  std::vector<std::pair<std::size_t, std::size_t>> comments_;
};

}  // namespace kgqa::sparql

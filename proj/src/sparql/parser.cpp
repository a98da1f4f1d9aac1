#include "kgqa/sparql/parser.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>

#include "kgqa/sparql/lexer.hpp"

namespace kgqa::sparql {

SyntaxError::SyntaxError(const std::string& message, std::size_t line, std::size_t column,
                         std::string token)
    : Error("SyntaxError", message + " at " + std::to_string(line) + ":" + std::to_string(column) +
                               " near '" + token + "'"),
      line_(line),
      column_(column),
      token_(std::move(token)) {}

UnsupportedFeature::UnsupportedFeature(std::string feature, std::size_t line, std::size_t column)
    : Error("UnsupportedFeature", "unsupported SPARQL feature: " + feature + " at " +
                                      std::to_string(line) + ":" + std::to_string(column)),
      feature_(std::move(feature)) {}

const std::vector<std::pair<std::string, std::string>>& well_known_prefixes() {
  static const std::vector<std::pair<std::string, std::string>> prefixes = {
      {"rdf", "http://www.w3.org/1999/02/22-rdf-syntax-ns#"},
      {"rdfs", "http://www.w3.org/2000/01/rdf-schema#"},
      {"xsd", "http://www.w3.org/2001/XMLSchema#"},
      {"owl", "http://www.w3.org/2002/07/owl#"},
      {"foaf", "http://xmlns.com/foaf/0.1/"},
      {"skos", "http://www.w3.org/2004/02/skos/core#"},
      {"dc", "http://purl.org/dc/elements/1.1/"},
      {"dct", "http://purl.org/dc/terms/"},
      {"geo", "http://www.w3.org/2003/01/geo/wgs84_pos#"},
      {"georss", "http://www.georss.org/georss/"},
      {"dbo", "http://dbpedia.org/ontology/"},
      {"dbp", "http://dbpedia.org/property/"},
      {"dbr", "http://dbpedia.org/resource/"},
      {"res", "http://dbpedia.org/resource/"},
      {"dbc", "http://dbpedia.org/resource/Category:"},
      {"yago", "http://dbpedia.org/class/yago/"},
      {"wd", "http://www.wikidata.org/entity/"},
      {"wdt", "http://www.wikidata.org/prop/direct/"},
      {"p", "http://www.wikidata.org/prop/"},
      {"ps", "http://www.wikidata.org/prop/statement/"},
      {"pq", "http://www.wikidata.org/prop/qualifier/"},
      {"schema", "http://schema.org/"},
      {"ns", "http://rdf.freebase.com/ns/"},
  };
  return prefixes;
}

namespace {

std::string upper(std::string s) {
  for (auto& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return s;
}

const std::set<std::string>& aggregate_names() {
  static const std::set<std::string> names = {"COUNT", "SUM", "AVG", "MIN", "MAX"};
  return names;
}

class Parser {
 public:
  Parser(std::string_view text, const ParseOptions& options)
      : text_(text), options_(options), lexer_(text), toks_(lexer_.tokenize()) {}

  QueryAst parse() {
    QueryAst ast;
    ast.source_text = std::string(text_);
    parse_prologue(ast);
    declared_ = ast.prefixes;
    if (is_word(cur(), "SELECT")) {
      ast.type = QueryType::Select;
      parse_select_clause(ast);
    } else if (is_word(cur(), "ASK")) {
      ast.type = QueryType::Ask;
      advance();
    } else if (is_word(cur(), "CONSTRUCT") || is_word(cur(), "DESCRIBE")) {
      unsupported(upper(cur().text), cur());
    } else {
      error("expected SELECT or ASK", cur());
    }
    if (is_word(cur(), "FROM")) unsupported("FROM", cur());
    accept_word("WHERE");
    if (!is_symbol(cur(), "{")) error("expected '{'", cur());
    ast.where = parse_group(1);
    parse_modifiers(ast.modifiers);
    if (cur().kind != TokenKind::End) error("unexpected token after query", cur());
    check_bound_variables(ast);
    return ast;
  }

 private:
  // ---- token helpers -------------------------------------------------------

  const Token& cur() const { return toks_[i_]; }
  const Token& look(std::size_t n) const { return toks_[std::min(i_ + n, toks_.size() - 1)]; }
  void advance() {
    if (i_ + 1 < toks_.size()) ++i_;
  }

  static bool is_word(const Token& t, const char* kw) {
    return t.kind == TokenKind::Word && upper(t.text) == kw;
  }
  static bool is_symbol(const Token& t, const char* s) {
    return t.kind == TokenKind::Symbol && t.text == s;
  }
  bool accept_word(const char* kw) {
    if (!is_word(cur(), kw)) return false;
    advance();
    return true;
  }
  void expect_word(const char* kw) {
    if (!accept_word(kw)) error(std::string("expected ") + kw, cur());
  }
  void expect_symbol(const char* s) {
    if (!is_symbol(cur(), s)) error(std::string("expected '") + s + "'", cur());
    advance();
  }

  [[noreturn]] void error(const std::string& message, const Token& t) const {
    throw SyntaxError(message, t.line, t.column, shown(t));
  }
  [[noreturn]] void unsupported(const std::string& feature, const Token& t) const {
    throw UnsupportedFeature(feature, t.line, t.column);
  }
  static std::string shown(const Token& t) {
    switch (t.kind) {
      case TokenKind::End: return "<EOF>";
      case TokenKind::Iri: return "<" + t.text + ">";
      case TokenKind::Variable: return "?" + t.text;
      case TokenKind::String: return "\"" + t.text + "\"";
      case TokenKind::LangTag: return "@" + t.text;
      case TokenKind::BlankNode: return "_:" + t.text;
      default: return t.text;
    }
  }

  // ---- prologue / select ---------------------------------------------------

  void parse_prologue(QueryAst& ast) {
    for (;;) {
      if (is_word(cur(), "BASE")) unsupported("BASE", cur());
      if (!is_word(cur(), "PREFIX")) return;
      advance();
      const Token& name = cur();
      if (name.kind != TokenKind::PrefixedName || name.text.back() != ':' ||
          name.text.find(':') != name.text.size() - 1) {
        error("expected prefix name", name);
      }
      std::string prefix = name.text.substr(0, name.text.size() - 1);
      advance();
      if (cur().kind != TokenKind::Iri) error("expected IRI", cur());
      std::string base = cur().text;
      advance();
      auto it = std::find_if(ast.prefixes.begin(), ast.prefixes.end(),
                             [&](const auto& p) { return p.first == prefix; });
      if (it != ast.prefixes.end()) {
        it->second = base;
      } else {
        ast.prefixes.emplace_back(prefix, base);
      }
    }
  }

  void parse_select_clause(QueryAst& ast) {
    advance();  // SELECT
    auto& sm = ast.modifiers;
    if (accept_word("DISTINCT")) {
      sm.distinct = true;
    } else if (accept_word("REDUCED")) {
      sm.reduced = true;
    }
    if (is_symbol(cur(), "*")) {
      sm.select_all = true;
      advance();
      return;
    }
    for (;;) {
      const Token& t = cur();
      if (t.kind == TokenKind::Variable) {
        sm.projection.push_back({t.text, {}});
        to_check_.emplace_back(t.text, t);
        advance();
      } else if (is_symbol(t, "(")) {
        sm.projection.push_back(parse_aliased_expression());
        aliases_.insert(sm.projection.back().variable);
      } else if (t.kind == TokenKind::Word && aggregate_names().count(upper(t.text)) &&
                 is_symbol(look(1), "(")) {
        std::size_t begin = t.begin;
        advance();
        std::size_t end = skip_balanced(nullptr);
        sm.projection.push_back({{}, lexer_.slice(begin, end)});
      } else {
        break;
      }
    }
    if (sm.projection.empty()) error("expected projection", cur());
  }

  // '(' expr AS ?v ')'
  Projection parse_aliased_expression() {
    const Token& open = cur();
    advance();
    std::size_t begin = cur().begin;
    int depth = 0;
    for (;;) {
      const Token& t = cur();
      if (t.kind == TokenKind::End) error("unbalanced parentheses", t);
      if (is_symbol(t, "{") || is_symbol(t, "}")) error("unexpected brace in expression", t);
      if (is_word(t, "EXISTS")) unsupported("EXISTS inside expression", t);
      if (depth == 0 && is_word(t, "AS")) break;
      if (depth == 0 && is_symbol(t, ")")) error("expected AS", t);
      if (is_symbol(t, "(")) ++depth;
      if (is_symbol(t, ")")) --depth;
      check_prefixed(t);
      advance();
    }
    std::size_t end = cur().begin;
    if (end == begin) error("empty expression", open);
    advance();  // AS
    if (cur().kind != TokenKind::Variable) error("expected variable after AS", cur());
    Projection p{cur().text, lexer_.slice(begin, end)};
    advance();
    expect_symbol(")");
    return p;
  }

  // Skips a balanced '(' ... ')' starting at the current '(' token. Returns
  // the end offset of the closing parenthesis; collects variables.
  std::size_t skip_balanced(std::set<std::string>* vars) {
    if (!is_symbol(cur(), "(")) error("expected '('", cur());
    int depth = 0;
    for (;;) {
      const Token& t = cur();
      if (t.kind == TokenKind::End) error("unbalanced parentheses", t);
      if (is_symbol(t, "{") || is_symbol(t, "}")) error("unexpected brace in expression", t);
      if (is_word(t, "EXISTS")) unsupported("EXISTS inside expression", t);
      if (t.kind == TokenKind::Variable) {
        if (vars) vars->insert(t.text);
        expr_vars_.emplace_back(t.text, t);
      }
      check_prefixed(t);
      if (is_symbol(t, "(")) ++depth;
      if (is_symbol(t, ")")) --depth;
      std::size_t end = t.end;
      advance();
      if (depth == 0) return end;
    }
  }

  // A constraint: '(' expr ')' or a function call name(args).
  std::string parse_constraint(std::set<std::string>* vars) {
    const Token& t = cur();
    std::size_t begin = t.begin;
    if (is_symbol(t, "(")) {
      std::size_t end = skip_balanced(vars);
      return lexer_.slice(begin, end);
    }
    if ((t.kind == TokenKind::Word || t.kind == TokenKind::PrefixedName ||
         t.kind == TokenKind::Iri) &&
        is_symbol(look(1), "(")) {
      check_prefixed(t);
      advance();
      std::size_t end = skip_balanced(vars);
      return lexer_.slice(begin, end);
    }
    error("expected constraint", t);
  }

  // ---- graph patterns ------------------------------------------------------

  GroupPattern parse_group(std::size_t depth) {
    const Token& open = cur();
    expect_symbol("{");
    if (depth > options_.max_depth) error("group nesting too deep", open);
    if (is_word(cur(), "SELECT")) unsupported("subquery", cur());
    GroupPattern g;
    bool need_dot = false;
    for (;;) {
      const Token& t = cur();
      if (is_symbol(t, "}")) {
        advance();
        return g;
      }
      if (t.kind == TokenKind::End) error("expected '}'", t);
      if (is_symbol(t, ".")) {
        advance();
        need_dot = false;
        continue;
      }
      if (is_word(t, "FILTER")) {
        advance();
        g.elements.push_back(GraphPattern{parse_filter(depth)});
        need_dot = false;
      } else if (is_word(t, "OPTIONAL")) {
        advance();
        g.elements.push_back(GraphPattern{OptionalPattern{parse_group(depth + 1)}});
        need_dot = false;
      } else if (is_word(t, "MINUS")) {
        advance();
        g.elements.push_back(GraphPattern{MinusPattern{parse_group(depth + 1)}});
        need_dot = false;
      } else if (is_symbol(t, "{")) {
        GraphPattern left{parse_group(depth + 1)};
        while (accept_word("UNION")) {
          GraphPattern right{parse_group(depth + 1)};
          left = GraphPattern{UnionPattern{std::move(left), std::move(right)}};
        }
        g.elements.push_back(std::move(left));
        need_dot = false;
      } else if (t.kind == TokenKind::Word &&
                 (is_word(t, "BIND") || is_word(t, "VALUES") || is_word(t, "SERVICE") ||
                  is_word(t, "GRAPH"))) {
        unsupported(upper(t.text), t);
      } else if (is_word(t, "UNION")) {
        error("UNION without a preceding group", t);
      } else {
        if (need_dot) error("expected '.' between triple patterns", t);
        if (g.elements.empty() || !std::holds_alternative<BasicPattern>(g.elements.back().node)) {
          g.elements.push_back(GraphPattern{BasicPattern{}});
        }
        parse_triples_same_subject(std::get<BasicPattern>(g.elements.back().node).triples);
        need_dot = true;
      }
    }
  }

  FilterPattern parse_filter(std::size_t depth) {
    FilterPattern f;
    if (is_word(cur(), "NOT") && is_word(look(1), "EXISTS")) {
      advance();
      advance();
      GroupPattern inner = parse_group(depth + 1);
      std::set<std::string> vars;
      collect_group_vars(inner, vars);
      f.expression = "NOT EXISTS";
      f.variables.assign(vars.begin(), vars.end());
      f.not_exists = true;
      f.inner = Box<GroupPattern>(std::move(inner));
      return f;
    }
    if (is_word(cur(), "EXISTS")) unsupported("EXISTS", cur());
    std::set<std::string> vars;
    f.expression = parse_constraint(&vars);
    f.variables.assign(vars.begin(), vars.end());
    return f;
  }

  void parse_triples_same_subject(std::vector<TriplePattern>& out) {
    Term subject = parse_term(false);
    for (;;) {
      Term predicate = parse_verb();
      for (;;) {
        Term object = parse_term(false);
        out.push_back({subject, predicate, std::move(object)});
        if (is_symbol(cur(), ",")) {
          advance();
          continue;
        }
        break;
      }
      if (!is_symbol(cur(), ";")) return;
      while (is_symbol(cur(), ";")) advance();
      // trailing ';' before '.', '}' or another clause
      if (is_symbol(cur(), ".") || is_symbol(cur(), "}")) return;
    }
  }

  Term parse_verb() {
    const Token& t = cur();
    if (is_symbol(t, "^") || is_symbol(t, "!") || is_symbol(t, "(")) unsupported("property path", t);
    Term p;
    if (t.kind == TokenKind::Word && t.text == "a") {
      p = Term::iri(kRdfType);
      advance();
    } else if (t.kind == TokenKind::Variable) {
      p = Term::variable(t.text);
      advance();
    } else if (t.kind == TokenKind::Iri) {
      p = Term::iri(t.text);
      advance();
    } else if (t.kind == TokenKind::PrefixedName) {
      p = Term::iri(expand(t));
      advance();
    } else {
      error("expected predicate", t);
    }
    const Token& n = cur();
    if (is_symbol(n, "/") || is_symbol(n, "|") || is_symbol(n, "*") || is_symbol(n, "+") ||
        is_symbol(n, "?")) {
      unsupported("property path", n);
    }
    return p;
  }

  Term parse_term(bool /*predicate*/) {
    const Token& t = cur();
    switch (t.kind) {
      case TokenKind::Variable: {
        Term v = Term::variable(t.text);
        advance();
        return v;
      }
      case TokenKind::Iri: {
        Term v = Term::iri(t.text);
        advance();
        return v;
      }
      case TokenKind::PrefixedName: {
        Term v = Term::iri(expand(t));
        advance();
        return v;
      }
      case TokenKind::String: {
        std::string lex = t.text;
        advance();
        if (cur().kind == TokenKind::LangTag) {
          std::string lang = cur().text;
          advance();
          return Term::literal(std::move(lex), {}, std::move(lang));
        }
        if (is_symbol(cur(), "^^")) {
          advance();
          const Token& dt = cur();
          std::string iri;
          if (dt.kind == TokenKind::Iri) {
            iri = dt.text;
          } else if (dt.kind == TokenKind::PrefixedName) {
            iri = expand(dt);
          } else {
            error("expected datatype IRI", dt);
          }
          advance();
          return Term::literal(std::move(lex), std::move(iri));
        }
        return Term::literal(std::move(lex));
      }
      case TokenKind::Number: {
        Term v = Term::literal(t.text, std::string(kXsd) + t.number_type);
        advance();
        return v;
      }
      case TokenKind::Symbol:
        if ((t.text == "+" || t.text == "-") && look(1).kind == TokenKind::Number &&
            look(1).begin == t.end) {
          std::string sign = t.text;
          advance();
          Term v = Term::literal(sign + cur().text, std::string(kXsd) + cur().number_type);
          advance();
          return v;
        }
        if (t.text == "[") unsupported("blank node", t);
        if (t.text == "(") unsupported("RDF collection", t);
        break;
      case TokenKind::Word:
        if (t.text == "true" || t.text == "false") {
          Term v = Term::literal(t.text, std::string(kXsd) + "boolean");
          advance();
          return v;
        }
        break;
      case TokenKind::BlankNode:
        unsupported("blank node", t);
      default:
        break;
    }
    error("expected RDF term or variable", t);
  }

  std::string expand(const Token& t) const {
    auto colon = t.text.find(':');
    std::string prefix = t.text.substr(0, colon);
    std::string local;
    const std::string raw = t.text.substr(colon + 1);
    for (std::size_t k = 0; k < raw.size(); ++k) {
      if (raw[k] == '\\' && k + 1 < raw.size()) ++k;
      local += raw[k];
    }
    return lookup_prefix(prefix, t) + local;
  }

  const std::string& lookup_prefix(const std::string& prefix, const Token& t) const {
    for (const auto& [name, base] : declared_) {
      if (name == prefix) return base;
    }
    for (const auto& [name, base] : options_.implicit_prefixes) {
      if (name == prefix) return base;
    }
    error("undeclared prefix '" + prefix + ":'", t);
  }

  void check_prefixed(const Token& t) const {
    if (t.kind == TokenKind::PrefixedName) (void)expand(t);
  }

  // ---- solution modifiers --------------------------------------------------

  void parse_modifiers(SolutionModifiers& sm) {
    bool seen_group = false, seen_having = false, seen_order = false;
    for (;;) {
      const Token& t = cur();
      if (is_word(t, "GROUP")) {
        if (seen_group) error("duplicate GROUP BY", t);
        seen_group = true;
        advance();
        expect_word("BY");
        parse_group_conditions(sm);
      } else if (is_word(t, "HAVING")) {
        if (seen_having) error("duplicate HAVING", t);
        seen_having = true;
        advance();
        std::string text = parse_constraint(nullptr);
        while (is_symbol(cur(), "(") ||
               ((cur().kind == TokenKind::Word || cur().kind == TokenKind::PrefixedName) &&
                is_symbol(look(1), "("))) {
          text += " " + parse_constraint(nullptr);
        }
        sm.having = text;
      } else if (is_word(t, "ORDER")) {
        if (seen_order) error("duplicate ORDER BY", t);
        seen_order = true;
        advance();
        expect_word("BY");
        parse_order_conditions(sm);
      } else if (is_word(t, "LIMIT")) {
        if (sm.limit) error("duplicate LIMIT", t);
        advance();
        sm.limit = parse_count();
      } else if (is_word(t, "OFFSET")) {
        if (sm.offset) error("duplicate OFFSET", t);
        advance();
        sm.offset = parse_count();
      } else if (is_word(t, "VALUES")) {
        unsupported("VALUES", t);
      } else {
        return;
      }
    }
  }

  std::uint64_t parse_count() {
    const Token& t = cur();
    if (t.kind != TokenKind::Number || t.number_type != "integer") error("expected integer", t);
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
    if (ec != std::errc() || ptr != t.text.data() + t.text.size()) error("integer out of range", t);
    advance();
    return value;
  }

  void parse_group_conditions(SolutionModifiers& sm) {
    for (;;) {
      const Token& t = cur();
      if (t.kind == TokenKind::Variable) {
        sm.group_by.push_back("?" + t.text);
        to_check_.emplace_back(t.text, t);
        advance();
      } else if (is_symbol(t, "(")) {
        // (expr) or (expr AS ?v)
        std::size_t begin = t.begin;
        int depth = 0;
        std::size_t end = begin;
        for (;;) {
          const Token& u = cur();
          if (u.kind == TokenKind::End) error("unbalanced parentheses", u);
          if (is_symbol(u, "{") || is_symbol(u, "}")) error("unexpected brace in expression", u);
          if (is_word(u, "EXISTS")) unsupported("EXISTS inside expression", u);
          if (depth == 1 && is_word(u, "AS") && look(1).kind == TokenKind::Variable) {
            aliases_.insert(look(1).text);
          }
          check_prefixed(u);
          if (is_symbol(u, "(")) ++depth;
          if (is_symbol(u, ")")) --depth;
          end = u.end;
          advance();
          if (depth == 0) break;
        }
        sm.group_by.push_back(lexer_.slice(begin, end));
      } else if ((t.kind == TokenKind::Word && !is_clause_keyword(t)) ||
                 t.kind == TokenKind::PrefixedName || t.kind == TokenKind::Iri) {
        if (!is_symbol(look(1), "(")) error("expected group condition", t);
        sm.group_by.push_back(parse_constraint(nullptr));
      } else {
        break;
      }
    }
    if (sm.group_by.empty()) error("expected group condition", cur());
  }

  void parse_order_conditions(SolutionModifiers& sm) {
    for (;;) {
      const Token& t = cur();
      if (is_word(t, "ASC") || is_word(t, "DESC")) {
        bool asc = is_word(t, "ASC");
        advance();
        if (!is_symbol(cur(), "(")) error("expected '('", cur());
        std::size_t open_end = cur().end;
        std::size_t close = skip_balanced(nullptr);
        std::string inner = lexer_.slice(open_end, close - 1);
        if (inner.empty()) error("empty ORDER BY expression", t);
        sm.order_by.push_back({inner, asc});
      } else if (t.kind == TokenKind::Variable) {
        expr_vars_.emplace_back(t.text, t);
        sm.order_by.push_back({"?" + t.text, true});
        advance();
      } else if (is_symbol(t, "(") ||
                 ((t.kind == TokenKind::Word && !is_clause_keyword(t)) ||
                  t.kind == TokenKind::PrefixedName || t.kind == TokenKind::Iri)) {
        sm.order_by.push_back({parse_constraint(nullptr), true});
      } else {
        break;
      }
    }
    if (sm.order_by.empty()) error("expected order condition", cur());
  }

  static bool is_clause_keyword(const Token& t) {
    static const std::set<std::string> kws = {"LIMIT", "OFFSET", "ORDER", "GROUP", "HAVING", "VALUES"};
    return t.kind == TokenKind::Word && kws.count(upper(t.text)) > 0;
  }

  // ---- validation ----------------------------------------------------------

  static void collect_group_vars(const GroupPattern& g, std::set<std::string>& vars) {
    for (const auto& e : g.elements) collect_vars(e, vars);
  }

  static void collect_vars(const GraphPattern& gp, std::set<std::string>& vars) {
    std::visit(
        [&](const auto& n) {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, BasicPattern>) {
            for (const auto& tp : n.triples) {
              for (const Term* term : {&tp.subject, &tp.predicate, &tp.object}) {
                if (term->is_variable()) vars.insert(term->lexical);
              }
            }
          } else if constexpr (std::is_same_v<T, GroupPattern>) {
            collect_group_vars(n, vars);
          } else if constexpr (std::is_same_v<T, FilterPattern>) {
            vars.insert(n.variables.begin(), n.variables.end());
            if (n.inner) collect_group_vars(**n.inner, vars);
          } else if constexpr (std::is_same_v<T, UnionPattern>) {
            collect_vars(*n.left, vars);
            collect_vars(*n.right, vars);
          } else {
            collect_group_vars(*n.inner, vars);
          }
        },
        gp.node);
  }

  void check_bound_variables(const QueryAst& ast) const {
    std::set<std::string> bound;
    collect_group_vars(ast.where, bound);
    bound.insert(aliases_.begin(), aliases_.end());
    for (const auto& [name, tok] : to_check_) {
      if (!bound.count(name)) error("variable ?" + name + " is not used in the graph pattern", tok);
    }
    // Variables inside ORDER BY / GROUP BY / HAVING / SELECT expressions.
    for (const auto& [name, tok] : expr_vars_) {
      if (!bound.count(name)) error("variable ?" + name + " is not used in the graph pattern", tok);
    }
  }

  std::string_view text_;
  const ParseOptions& options_;
  Lexer lexer_;
  std::vector<Token> toks_;
  std::size_t i_ = 0;
  std::vector<std::pair<std::string, std::string>> declared_;
  std::set<std::string> aliases_;
  std::vector<std::pair<std::string, Token>> to_check_;
  std::vector<std::pair<std::string, Token>> expr_vars_;
};

}  // namespace

QueryAst parse_query(std::string_view text, const ParseOptions& options) {
  Parser parser(text, options);
  return parser.parse();
}

}  // namespace kgqa::sparql

#include <cctype>
#include <regex>
#include <sstream>

#include "kgqa/sparql/parser.hpp"

namespace kgqa::sparql {

namespace {

bool simple_local(const std::string& s) {
  if (s.empty()) return true;
  if (s.front() == '-' || s.front() == '.' || s.back() == '.') return false;
  for (char c : s) {
    auto u = static_cast<unsigned char>(c);
    if (!(std::isalnum(u) || c == '_' || c == '-')) return false;
  }
  return true;
}

std::string escape_string(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '\\': out += "\\\\"; break;
      case '"': out += "\\\""; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      case '\b': out += "\\b"; break;
      case '\f': out += "\\f"; break;
      default: out += c;
    }
  }
  return out;
}

class Printer {
 public:
  explicit Printer(const QueryAst& ast) : ast_(ast) {}

  std::string run() {
    for (const auto& [prefix, base] : ast_.prefixes) {
      out_ << "PREFIX " << prefix << ": <" << base << ">\n";
    }
    const auto& sm = ast_.modifiers;
    if (ast_.type == QueryType::Ask) {
      out_ << "ASK\n";
    } else {
      out_ << "SELECT";
      if (sm.distinct) out_ << " DISTINCT";
      if (sm.reduced) out_ << " REDUCED";
      if (sm.select_all) {
        out_ << " *";
      } else {
        for (const auto& p : sm.projection) {
          if (p.expression.empty()) {
            out_ << " ?" << p.variable;
          } else if (p.variable.empty()) {
            out_ << " " << p.expression;
          } else {
            out_ << " (" << p.expression << " AS ?" << p.variable << ")";
          }
        }
      }
      out_ << "\n";
    }
    out_ << "WHERE {\n";
    elements(ast_.where, 1);
    out_ << "}\n";
    if (!sm.group_by.empty()) {
      out_ << "GROUP BY";
      for (const auto& g : sm.group_by) out_ << " " << g;
      out_ << "\n";
    }
    if (sm.having) out_ << "HAVING " << *sm.having << "\n";
    if (!sm.order_by.empty()) {
      out_ << "ORDER BY";
      for (const auto& o : sm.order_by) {
        bool bare_var = o.expression.size() > 1 && o.expression[0] == '?' &&
                        o.expression.find_first_of(" \t\n()") == std::string::npos;
        if (o.ascending && bare_var) {
          out_ << " " << o.expression;
        } else {
          out_ << (o.ascending ? " ASC(" : " DESC(") << o.expression << ")";
        }
      }
      out_ << "\n";
    }
    if (sm.limit) out_ << "LIMIT " << *sm.limit << "\n";
    if (sm.offset) out_ << "OFFSET " << *sm.offset << "\n";
    return out_.str();
  }

 private:
  void indent(std::size_t depth) { out_ << std::string(depth * 2, ' '); }

  void elements(const GroupPattern& g, std::size_t depth) {
    for (const auto& e : g.elements) element(e, depth);
  }

  void braced(const GroupPattern& g, std::size_t depth, const char* head) {
    indent(depth);
    out_ << head << "{\n";
    elements(g, depth + 1);
    indent(depth);
    out_ << "}\n";
  }

  void element(const GraphPattern& gp, std::size_t depth) {
    std::visit(
        [&](const auto& n) {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, BasicPattern>) {
            for (const auto& tp : n.triples) {
              indent(depth);
              out_ << term(tp.subject, false) << " " << term(tp.predicate, true) << " "
                   << term(tp.object, false) << " .\n";
            }
          } else if constexpr (std::is_same_v<T, GroupPattern>) {
            braced(n, depth, "");
          } else if constexpr (std::is_same_v<T, FilterPattern>) {
            if (n.not_exists && n.inner) {
              braced(**n.inner, depth, "FILTER NOT EXISTS ");
            } else {
              indent(depth);
              out_ << "FILTER " << n.expression << "\n";
            }
          } else if constexpr (std::is_same_v<T, UnionPattern>) {
            union_branch(*n.left, depth);
            indent(depth);
            out_ << "UNION\n";
            union_branch(*n.right, depth);
          } else if constexpr (std::is_same_v<T, OptionalPattern>) {
            braced(*n.inner, depth, "OPTIONAL ");
          } else {
            braced(*n.inner, depth, "MINUS ");
          }
        },
        gp.node);
  }

  void union_branch(const GraphPattern& gp, std::size_t depth) {
    if (std::holds_alternative<GroupPattern>(gp.node) ||
        std::holds_alternative<UnionPattern>(gp.node)) {
      element(gp, depth);
    } else {
      GroupPattern wrapper;
      wrapper.elements.push_back(gp);
      braced(wrapper, depth, "");
    }
  }

  std::string iri(const std::string& value) const {
    const std::pair<std::string, std::string>* best = nullptr;
    for (const auto& p : ast_.prefixes) {
      if (value.size() >= p.second.size() && value.compare(0, p.second.size(), p.second) == 0 &&
          simple_local(value.substr(p.second.size()))) {
        if (!best || p.second.size() > best->second.size()) best = &p;
      }
    }
    if (best) return best->first + ":" + value.substr(best->second.size());
    return "<" + value + ">";
  }

  std::string term(const Term& t, bool predicate) const {
    switch (t.kind) {
      case TermKind::Variable:
        return "?" + t.lexical;
      case TermKind::Iri:
        if (predicate && t.lexical == kRdfType) return "a";
        return iri(t.lexical);
      case TermKind::Literal:
        break;
    }
    static const std::regex integer(R"([+-]?[0-9]+)");
    static const std::regex decimal(R"([+-]?[0-9]+\.[0-9]+)");
    static const std::regex dbl(R"([+-]?[0-9]+(\.[0-9]+)?[eE][+-]?[0-9]+)");
    const std::string xsd = kXsd;
    if (t.datatype == xsd + "integer" && std::regex_match(t.lexical, integer)) return t.lexical;
    if (t.datatype == xsd + "decimal" && std::regex_match(t.lexical, decimal)) return t.lexical;
    if (t.datatype == xsd + "double" && std::regex_match(t.lexical, dbl)) return t.lexical;
    if (t.datatype == xsd + "boolean" && (t.lexical == "true" || t.lexical == "false")) {
      return t.lexical;
    }
    std::string s = "\"" + escape_string(t.lexical) + "\"";
    if (!t.language.empty()) return s + "@" + t.language;
    if (!t.datatype.empty()) return s + "^^" + iri(t.datatype);
    return s;
  }

  const QueryAst& ast_;
  std::ostringstream out_;
};

}  // namespace

std::string print_query(const QueryAst& ast) { return Printer(ast).run(); }

}  // namespace kgqa::sparql

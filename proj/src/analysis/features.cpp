#include "kgqa/analysis/features.hpp"

#include <cctype>
#include <regex>

#include "kgqa/sparql/parser.hpp"

namespace kgqa::analysis {

std::string_view keyword_name(Keyword k) {
  switch (k) {
    case Keyword::Select: return "Select";
    case Keyword::Ask: return "Ask";
    case Keyword::Distinct: return "Distinct";
    case Keyword::Limit: return "Limit";
    case Keyword::Offset: return "Offset";
    case Keyword::OrderBy: return "Order By";
    case Keyword::GroupBy: return "Group By";
    case Keyword::Having: return "Having";
    case Keyword::Aggregator: return "Aggregators";
    case Keyword::Filter: return "Filter";
    case Keyword::And: return "And";
    case Keyword::Union: return "Union";
    case Keyword::Optional: return "Optional";
    case Keyword::NotExists: return "Not Exists";
    case Keyword::Minus: return "Minus";
  }
  return "";
}

std::string_view keyword_slug(Keyword k) {
  switch (k) {
    case Keyword::Select: return "select";
    case Keyword::Ask: return "ask";
    case Keyword::Distinct: return "distinct";
    case Keyword::Limit: return "limit";
    case Keyword::Offset: return "offset";
    case Keyword::OrderBy: return "orderby";
    case Keyword::GroupBy: return "groupby";
    case Keyword::Having: return "having";
    case Keyword::Aggregator: return "aggregator";
    case Keyword::Filter: return "filter";
    case Keyword::And: return "and";
    case Keyword::Union: return "union";
    case Keyword::Optional: return "optional";
    case Keyword::NotExists: return "notexists";
    case Keyword::Minus: return "minus";
  }
  return "";
}

std::optional<Keyword> keyword_from_slug(std::string_view slug) {
  for (auto k : kAllKeywords) {
    if (keyword_slug(k) == slug) return k;
  }
  return std::nullopt;
}

std::vector<Keyword> KeywordSet::keywords() const {
  std::vector<Keyword> out;
  for (auto k : kAllKeywords) {
    if (has(k)) out.push_back(k);
  }
  return out;
}

std::string KeywordSet::signature() const {
  std::string out;
  for (auto k : keywords()) {
    if (!out.empty()) out += '-';
    out += keyword_slug(k);
  }
  return out;
}

std::string OperatorCombo::label() const {
  std::string out;
  auto add = [&](bool on, const char* letter) {
    if (!on) return;
    if (!out.empty()) out += ", ";
    out += letter;
  };
  add(a, "A");
  add(f, "F");
  add(o, "O");
  add(u, "U");
  return out.empty() ? "none" : out;
}

namespace {

bool mentions_aggregate(const std::string& text) {
  static const std::regex pattern(R"((^|[^A-Za-z0-9_])(COUNT|SUM|AVG|MIN|MAX)\s*\()",
                                  std::regex::icase);
  return std::regex_search(text, pattern);
}

class KeywordWalker {
 public:
  explicit KeywordWalker(KeywordSet& out) : out_(out) {}

  void group(const sparql::GroupPattern& g) {
    std::size_t direct_triples = 0;
    for (const auto& e : g.elements) {
      if (const auto* basic = std::get_if<sparql::BasicPattern>(&e.node)) {
        direct_triples += basic->triples.size();
      }
      element(e);
    }
    if (direct_triples >= 2) out_.set(Keyword::And);
  }

 private:
  void element(const sparql::GraphPattern& gp) {
    std::visit(
        [&](const auto& n) {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, sparql::GroupPattern>) {
            group(n);
          } else if constexpr (std::is_same_v<T, sparql::FilterPattern>) {
            out_.set(Keyword::Filter);
            if (n.not_exists) out_.set(Keyword::NotExists);
            if (n.inner) group(**n.inner);
          } else if constexpr (std::is_same_v<T, sparql::UnionPattern>) {
            out_.set(Keyword::Union);
            branch(*n.left);
            branch(*n.right);
          } else if constexpr (std::is_same_v<T, sparql::OptionalPattern>) {
            out_.set(Keyword::Optional);
            group(*n.inner);
          } else if constexpr (std::is_same_v<T, sparql::MinusPattern>) {
            out_.set(Keyword::Minus);
            group(*n.inner);
          }
        },
        gp.node);
  }

  // A union branch that is not a group is a group of its own.
  void branch(const sparql::GraphPattern& gp) {
    if (std::holds_alternative<sparql::GroupPattern>(gp.node) ||
        std::holds_alternative<sparql::UnionPattern>(gp.node)) {
      element(gp);
    } else {
      sparql::GroupPattern wrapper;
      wrapper.elements.push_back(gp);
      group(wrapper);
    }
  }

  KeywordSet& out_;
};

}  // namespace

KeywordSet extract_keywords(const sparql::QueryAst& ast) {
  KeywordSet out;
  const auto& sm = ast.modifiers;
  out.set(ast.type == sparql::QueryType::Ask ? Keyword::Ask : Keyword::Select);
  out.set(Keyword::Distinct, sm.distinct);
  out.set(Keyword::Limit, sm.limit.has_value());
  out.set(Keyword::Offset, sm.offset.has_value());
  out.set(Keyword::OrderBy, !sm.order_by.empty());
  out.set(Keyword::GroupBy, !sm.group_by.empty());
  out.set(Keyword::Having, sm.having.has_value());

  bool aggregate = sm.having && mentions_aggregate(*sm.having);
  for (const auto& p : sm.projection) aggregate = aggregate || mentions_aggregate(p.expression);
  for (const auto& g : sm.group_by) aggregate = aggregate || mentions_aggregate(g);
  for (const auto& o : sm.order_by) aggregate = aggregate || mentions_aggregate(o.expression);
  out.set(Keyword::Aggregator, aggregate);

  KeywordWalker(out).group(ast.where);
  return out;
}

Classification classify_operators(const sparql::QueryAst& ast) {
  auto kw = extract_keywords(ast);
  Classification c;
  c.combo = {kw.has(Keyword::And), kw.has(Keyword::Filter), kw.has(Keyword::Optional),
             kw.has(Keyword::Union)};
  if (c.combo.u || kw.has(Keyword::Minus) || kw.has(Keyword::NotExists)) {
    c.query_class = QueryClass::Other;
  } else if (c.combo.o) {
    c.query_class = QueryClass::CQ_OF;
  } else if (c.combo.f) {
    c.query_class = QueryClass::CQ_F;
  } else {
    c.query_class = QueryClass::CQ;
  }
  c.cpf = !c.combo.o && !c.combo.u;
  return c;
}

QueryFeatures extract_features(const sparql::QueryAst& ast) {
  QueryFeatures f;
  f.keywords = extract_keywords(ast);
  auto patterns = sparql::collect_triple_patterns(ast);
  f.triple_count = patterns.size();
  auto c = classify_operators(ast);
  f.combo = c.combo;
  f.query_class = c.query_class;
  f.cpf = c.cpf;
  f.shapes = shape::classify_shapes(shape::build_query_graph(patterns), c.query_class);
  return f;
}

}  // namespace kgqa::analysis

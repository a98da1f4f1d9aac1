#pragma once

#include <array>
#include <bitset>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kgqa/analysis/query_class.hpp"
#include "kgqa/shape/shapes.hpp"
#include "kgqa/sparql/ast.hpp"

namespace kgqa::analysis {

enum class Keyword {
  Select,
  Ask,
  Distinct,
  Limit,
  Offset,
  OrderBy,
  GroupBy,
  Having,
  Aggregator,
  Filter,
  And,
  Union,
  Optional,
  NotExists,
  Minus
};

inline constexpr std::array<Keyword, 15> kAllKeywords = {
    Keyword::Select,  Keyword::Ask,        Keyword::Distinct, Keyword::Limit,
    Keyword::Offset,  Keyword::OrderBy,    Keyword::GroupBy,  Keyword::Having,
    Keyword::Aggregator, Keyword::Filter,  Keyword::And,      Keyword::Union,
    Keyword::Optional, Keyword::NotExists, Keyword::Minus};

/// Display name used in tables and reports ("Order By", "Not Exists", ...).
std::string_view keyword_name(Keyword k);
/// Lower-case identifier used in signatures and JSON keys ("orderby", ...).
std::string_view keyword_slug(Keyword k);
std::optional<Keyword> keyword_from_slug(std::string_view slug);

class KeywordSet {
 public:
  bool has(Keyword k) const { return bits_.test(static_cast<std::size_t>(k)); }
  void set(Keyword k, bool on = true) { bits_.set(static_cast<std::size_t>(k), on); }

  std::vector<Keyword> keywords() const;
  /// Slugs of the set keywords in canonical order joined by '-', e.g.
  /// "select-distinct-filter-and". Used to group questions.
  std::string signature() const;

  bool operator==(const KeywordSet&) const = default;

 private:
  std::bitset<15> bits_;
};

/// Which of And, Filter, Optional, Union a query uses.
struct OperatorCombo {
  bool a = false;
  bool f = false;
  bool o = false;
  bool u = false;

  /// "none" for the empty combination, otherwise letters joined by ", "
  /// in the order A, F, O, U.
  std::string label() const;
  /// Dense index a + 2f + 4o + 8u.
  int index() const { return (a ? 1 : 0) | (f ? 2 : 0) | (o ? 4 : 0) | (u ? 8 : 0); }
  static OperatorCombo from_index(int i) { return {(i & 1) != 0, (i & 2) != 0, (i & 4) != 0, (i & 8) != 0}; }

  bool operator==(const OperatorCombo&) const = default;
};

struct Classification {
  OperatorCombo combo;
  QueryClass query_class = QueryClass::CQ;
  bool cpf = true;
};

struct QueryFeatures {
  KeywordSet keywords;
  std::size_t triple_count = 0;
  OperatorCombo combo;
  QueryClass query_class = QueryClass::CQ;
  bool cpf = true;
  shape::ShapeSet shapes;
};

/// Each flag is set iff the construct occurs anywhere in the query. And is
/// set iff some group directly holds two or more triple patterns.
/// Aggregator is set iff COUNT/SUM/AVG/MIN/MAX appears in the projection,
/// GROUP BY, HAVING or ORDER BY.
KeywordSet extract_keywords(const sparql::QueryAst& ast);

Classification classify_operators(const sparql::QueryAst& ast);

/// Keywords, T, operators, class and shapes in one pass.
QueryFeatures extract_features(const sparql::QueryAst& ast);

}  // namespace kgqa::analysis

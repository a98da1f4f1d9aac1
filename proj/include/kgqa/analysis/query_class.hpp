#pragma once

#include <string_view>

namespace kgqa::analysis {

/// Tightest conjunctive class of a query. CQ uses only And, CQ_F adds
/// Filter, CQ_OF adds Optional; anything with Union, Minus or Not Exists is
/// Other.
enum class QueryClass { CQ, CQ_F, CQ_OF, Other };

constexpr std::string_view class_name(QueryClass c) {
  switch (c) {
    case QueryClass::CQ: return "CQ";
    case QueryClass::CQ_F: return "CQ_F";
    case QueryClass::CQ_OF: return "CQ_OF";
    case QueryClass::Other: return "Other";
  }
  return "Other";
}

/// True when `member` falls inside the (cumulative) class `of`:
/// CQ is within CQ_F, which is within CQ_OF.
constexpr bool within_class(QueryClass member, QueryClass of) {
  if (member == QueryClass::Other || of == QueryClass::Other) return member == of;
  return static_cast<int>(member) <= static_cast<int>(of);
}

}  // namespace kgqa::analysis

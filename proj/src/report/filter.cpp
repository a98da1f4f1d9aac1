#include "kgqa/report/filter.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

#include "kgqa/error.hpp"

namespace kgqa::report {

using nlohmann::ordered_json;

namespace {

std::string fold(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c == '-' || c == '_' || c == ' ') continue;
    out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return out;
}

Error bad_value(std::string_view field, std::string_view value, const std::string& why) {
  return Error("InvalidArgument", "filter " + std::string(field) + "='" + std::string(value) + "': " + why);
}

std::optional<Field> field_from_name(std::string_view name) {
  static const std::pair<const char*, Field> table[] = {
      {"id", Field::Id},           {"type", Field::Type},         {"wh", Field::Wh},
      {"shape", Field::Shape},     {"class", Field::Class},       {"signature", Field::Signature},
      {"keyword", Field::Keyword}, {"triples", Field::Triples},   {"f1", Field::F1},
      {"correct", Field::Correct}, {"processed", Field::Processed}, {"hasquery", Field::HasQuery},
      {"querystatus", Field::QueryStatus},
  };
  auto key = fold(name);
  for (const auto& [n, f] : table) {
    if (key == n) return f;
  }
  return std::nullopt;
}

double number(std::string_view field, std::string_view value, std::string_view text) {
  double d = 0;
  auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), d);
  if (ec != std::errc() || p != text.data() + text.size() || !std::isfinite(d)) {
    throw bad_value(field, value, "not a number");
  }
  return d;
}

// "3", "1..3", "2..", "..0.5"
Range parse_range(std::string_view field, std::string_view value) {
  Range r;
  auto dots = value.find("..");
  if (dots == std::string_view::npos) {
    r.min = r.max = number(field, value, value);
    return r;
  }
  auto lo = value.substr(0, dots), hi = value.substr(dots + 2);
  if (lo.empty() && hi.empty()) throw bad_value(field, value, "empty range");
  if (!lo.empty()) r.min = number(field, value, lo);
  if (!hi.empty()) r.max = number(field, value, hi);
  return r;
}

bool parse_flag(std::string_view field, std::string_view value) {
  auto v = fold(value);
  if (v == "true" || v == "yes" || v == "1") return true;
  if (v == "false" || v == "no" || v == "0") return false;
  throw bad_value(field, value, "expected true or false");
}

template <typename Enum, typename Names, typename NameOf>
std::string canonical(std::string_view field, std::string_view value, const Names& all, NameOf name_of) {
  auto key = fold(value);
  for (Enum e : all) {
    std::string name(name_of(e));
    // "Who/Whose/Whom" also answers to "who".
    if (fold(name) == key || fold(name.substr(0, name.find('/'))) == key) return name;
  }
  throw bad_value(field, value, "unknown value");
}

const ordered_json* path(const ordered_json& j, std::initializer_list<const char*> keys) {
  const ordered_json* cur = &j;
  for (const char* k : keys) {
    if (!cur->is_object()) return nullptr;
    auto it = cur->find(k);
    if (it == cur->end()) return nullptr;
    cur = &*it;
  }
  return cur;
}

bool string_at(const ordered_json& j, std::initializer_list<const char*> keys, const std::string& want) {
  auto p = path(j, keys);
  return p && p->is_string() && p->get<std::string>() == want;
}

bool contains_string(const ordered_json& j, std::initializer_list<const char*> keys, const std::string& want) {
  auto p = path(j, keys);
  if (!p || !p->is_array()) return false;
  return std::any_of(p->begin(), p->end(), [&](const ordered_json& v) { return v.is_string() && v.get<std::string>() == want; });
}

std::optional<double> number_at(const ordered_json& j, std::initializer_list<const char*> keys) {
  auto p = path(j, keys);
  if (!p || !p->is_number()) return std::nullopt;
  return p->get<double>();
}

std::optional<bool> bool_at(const ordered_json& j, std::initializer_list<const char*> keys) {
  auto p = path(j, keys);
  if (!p || !p->is_boolean()) return std::nullopt;
  return p->get<bool>();
}

}  // namespace

void Filter::add(std::string_view field_name, std::string_view value) {
  auto field = field_from_name(field_name);
  if (!field) throw Error("UnknownField", "unknown filter field '" + std::string(field_name) + "'");
  Clause c{*field, {}, {}, false};
  switch (*field) {
    case Field::Id:
    case Field::Signature:
      c.text = std::string(value);
      break;
    case Field::Type:
      c.text = canonical<nlq::QuestionCategory>(field_name, value, nlq::kAllCategories, nlq::category_name);
      break;
    case Field::Wh:
      c.text = canonical<nlq::WhSubtype>(field_name, value, nlq::kAllWhSubtypes, nlq::wh_subtype_name);
      break;
    case Field::Shape:
      c.text = canonical<shape::Shape>(field_name, value, shape::kAllShapes, shape::shape_name);
      break;
    case Field::Class: {
      static const analysis::QueryClass classes[] = {analysis::QueryClass::CQ, analysis::QueryClass::CQ_F,
                                                     analysis::QueryClass::CQ_OF, analysis::QueryClass::Other};
      c.text = canonical<analysis::QueryClass>(field_name, value, classes, analysis::class_name);
      break;
    }
    case Field::Keyword:
      for (auto k : analysis::kAllKeywords) {
        if (fold(analysis::keyword_slug(k)) == fold(value) || fold(analysis::keyword_name(k)) == fold(value)) {
          c.text = std::string(analysis::keyword_slug(k));
        }
      }
      if (c.text.empty()) throw bad_value(field_name, value, "unknown keyword");
      break;
    case Field::QueryStatus: {
      static const bench::QueryStatus statuses[] = {bench::QueryStatus::Parsed, bench::QueryStatus::ParseFailed,
                                                    bench::QueryStatus::Absent};
      c.text = canonical<bench::QueryStatus>(field_name, value, statuses, bench::query_status_name);
      break;
    }
    case Field::Triples:
    case Field::F1:
      c.range = parse_range(field_name, value);
      break;
    case Field::Correct:
    case Field::Processed:
    case Field::HasQuery:
      c.flag = parse_flag(field_name, value);
      break;
  }
  clauses_.push_back(std::move(c));
}

Filter Filter::parse(std::span<const std::string> clauses) {
  Filter f;
  for (const auto& s : clauses) {
    auto eq = s.find('=');
    if (eq == std::string::npos) throw Error("InvalidArgument", "filter clause '" + s + "' is not field=value");
    f.add(s.substr(0, eq), s.substr(eq + 1));
  }
  return f;
}

Filter Filter::from_json(const ordered_json& predicate) {
  Filter f;
  auto scalar = [](const ordered_json& v) -> std::string {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean() || v.is_number()) return v.dump();
    throw Error("InvalidArgument", "filter values must be strings, numbers or booleans");
  };
  if (predicate.is_null()) return f;
  if (predicate.is_array()) {
    std::vector<std::string> clauses;
    for (const auto& c : predicate) clauses.push_back(scalar(c));
    return parse(clauses);
  }
  if (!predicate.is_object()) throw Error("InvalidArgument", "filter must be an object or an array");
  for (const auto& [key, value] : predicate.items()) {
    if (value.is_array()) {
      for (const auto& v : value) f.add(key, scalar(v));
    } else {
      f.add(key, scalar(value));
    }
  }
  return f;
}

bool Filter::matches(const ordered_json& r) const {
  for (const auto& c : clauses_) {
    bool ok = false;
    switch (c.field) {
      case Field::Id: ok = string_at(r, {"id"}, c.text); break;
      case Field::Type: ok = string_at(r, {"type", "category"}, c.text); break;
      case Field::Wh: ok = string_at(r, {"type", "wh"}, c.text); break;
      case Field::Shape: ok = contains_string(r, {"query", "shapes"}, c.text); break;
      case Field::Class: ok = string_at(r, {"query", "class"}, c.text); break;
      case Field::Signature: ok = string_at(r, {"query", "signature"}, c.text); break;
      case Field::Keyword: ok = contains_string(r, {"query", "keywords"}, c.text); break;
      case Field::QueryStatus: ok = string_at(r, {"query", "status"}, c.text); break;
      case Field::HasQuery: ok = string_at(r, {"query", "status"}, "parsed") == c.flag; break;
      case Field::Triples: {
        auto t = number_at(r, {"query", "triples"});
        ok = t && c.range.contains(*t);
        break;
      }
      case Field::F1: {
        auto f = number_at(r, {"evaluation", "f1"});
        ok = f && c.range.contains(*f);
        break;
      }
      case Field::Correct:
      case Field::Processed: {
        auto b = bool_at(r, {"evaluation", c.field == Field::Correct ? "correct" : "processed"});
        ok = b && *b == c.flag;
        break;
      }
    }
    if (!ok) return false;
  }
  return true;
}

std::vector<ordered_json> filter_questions(const ordered_json& report, const Filter& filter) {
  std::vector<ordered_json> out;
  auto it = report.find("questions");
  if (it == report.end() || !it->is_array()) throw Error("MalformedFile", "$.questions: report has no question records");
  for (const auto& q : *it) {
    if (filter.matches(q)) out.push_back(q);
  }
  return out;
}

std::vector<ordered_json> filter_questions(const Report& report, const Filter& filter) {
  return filter_questions(to_json(report), filter);
}

}  // namespace kgqa::report

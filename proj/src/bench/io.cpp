#include "kgqa/bench/io.hpp"

#include <cstdint>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "kgqa/error.hpp"

namespace kgqa::bench {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

[[noreturn]] void malformed(const std::string& path, const std::string& what) {
  throw Error("MalformedFile", path + ": " + what);
}

json parse_json(std::string_view bytes) {
  try {
    return json::parse(bytes.begin(), bytes.end());
  } catch (const json::parse_error& e) {
    malformed("$", std::string("invalid JSON (") + e.what() + ")");
  }
}

std::string id_text(const json& id, const std::string& path) {
  if (id.is_string()) return id.get<std::string>();
  if (id.is_number_integer()) return std::to_string(id.get<long long>());
  if (id.is_number_unsigned()) return std::to_string(id.get<unsigned long long>());
  malformed(path, "id must be a string or integer");
}

// Flattens SPARQL JSON results (one object or a list of them).
AnswerSet qald_answers(const json& answers, const std::string& path) {
  if (answers.is_null()) return AnswerSet::bindings({});
  if (!answers.is_array()) malformed(path, "answers must be an array");
  std::vector<std::string> values;
  std::optional<bool> boolean;
  for (std::size_t i = 0; i < answers.size(); ++i) {
    const auto& a = answers[i];
    std::string p = path + "[" + std::to_string(i) + "]";
    if (!a.is_object()) malformed(p, "answer must be an object");
    if (a.contains("boolean")) {
      if (!a["boolean"].is_boolean()) malformed(p + ".boolean", "must be true or false");
      boolean = a["boolean"].get<bool>();
      continue;
    }
    if (!a.contains("results")) continue;
    const auto& results = a["results"];
    if (!results.is_object() || !results.contains("bindings") || !results["bindings"].is_array()) {
      malformed(p + ".results", "expected an object with a bindings array");
    }
    const auto& bindings = results["bindings"];
    for (std::size_t b = 0; b < bindings.size(); ++b) {
      std::string bp = p + ".results.bindings[" + std::to_string(b) + "]";
      if (!bindings[b].is_object()) malformed(bp, "binding must be an object");
      for (const auto& [var, cell] : bindings[b].items()) {
        if (!cell.is_object() || !cell.contains("value") || !cell["value"].is_string()) {
          malformed(bp + "." + var, "binding cell needs a string value");
        }
        values.push_back(cell["value"].get<std::string>());
      }
    }
  }
  if (boolean) return AnswerSet::boolean(*boolean);
  return AnswerSet::bindings(std::move(values));
}

void check_unique(const Benchmark& b) {
  std::set<std::string> seen;
  for (const auto& e : b.entries) {
    if (!seen.insert(e.question_id).second) {
      throw Error("DuplicateQuestionId", "question id '" + e.question_id + "' appears twice");
    }
  }
}

std::string unescape_cell(const std::string& s, bool keep_pipe_escape) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] != '\\' || i + 1 == s.size()) {
      out += s[i];
      continue;
    }
    char n = s[++i];
    switch (n) {
      case 't': out += '\t'; break;
      case 'n': out += '\n'; break;
      case 'r': out += '\r'; break;
      case '\\': out += keep_pipe_escape ? "\\\\" : "\\"; break;
      case '|': out += keep_pipe_escape ? "\\|" : "|"; break;
      default: out += '\\'; out += n;
    }
  }
  return out;
}

std::vector<std::string> split_answers(const std::string& cell) {
  // Escapes other than \| and \\ are already resolved; split on bare '|'.
  std::vector<std::string> out;
  std::string cur;
  for (std::size_t i = 0; i < cell.size(); ++i) {
    if (cell[i] == '\\' && i + 1 < cell.size() && (cell[i + 1] == '|' || cell[i + 1] == '\\')) {
      cur += cell[++i];
    } else if (cell[i] == '|') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += cell[i];
    }
  }
  out.push_back(cur);
  return out;
}

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> cols;
  std::string cur;
  for (char c : line) {
    if (c == '\t') {
      cols.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  cols.push_back(cur);
  return cols;
}

bool valid_utf8(std::string_view s) {
  for (std::size_t i = 0; i < s.size();) {
    auto c = static_cast<unsigned char>(s[i]);
    std::size_t len = c < 0x80 ? 1 : (c >> 5) == 0x6 ? 2 : (c >> 4) == 0xE ? 3 : (c >> 3) == 0x1E ? 4 : 0;
    if (len == 0 || i + len > s.size()) return false;
    std::uint32_t cp = len == 1 ? c : c & (0x7F >> len);
    for (std::size_t k = 1; k < len; ++k) {
      auto d = static_cast<unsigned char>(s[i + k]);
      if ((d & 0xC0) != 0x80) return false;
      cp = (cp << 6) | (d & 0x3F);
    }
    static const std::uint32_t min_for_len[] = {0, 0, 0x80, 0x800, 0x10000};
    if (cp < min_for_len[len] || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) return false;
    i += len;
  }
  return true;
}

Benchmark import_tsv(std::string_view bytes, std::string name) {
  if (!valid_utf8(bytes)) throw Error("MalformedFile", "$: TSV input is not valid UTF-8");
  Benchmark b;
  b.name = std::move(name);
  std::istringstream in{std::string(bytes)};
  std::string line;
  std::size_t line_no = 0;
  int col_id = -1, col_q = -1, col_a = -1, col_query = -1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line_no == 1) {
      auto header = split_tabs(line);
      for (std::size_t i = 0; i < header.size(); ++i) {
        if (header[i] == "id") col_id = static_cast<int>(i);
        if (header[i] == "question") col_q = static_cast<int>(i);
        if (header[i] == "answers") col_a = static_cast<int>(i);
        if (header[i] == "query") col_query = static_cast<int>(i);
      }
      if (col_id < 0 || col_q < 0 || col_a < 0) {
        malformed("line 1", "header must name the columns id, question and answers");
      }
      continue;
    }
    if (line.empty()) continue;
    auto cols = split_tabs(line);
    std::string where = "line " + std::to_string(line_no);
    int needed = std::max({col_id, col_q, col_a});
    if (static_cast<int>(cols.size()) <= needed) malformed(where, "too few columns");
    std::string id = unescape_cell(cols[col_id], false);
    if (id.empty()) malformed(where, "empty id");
    std::string answers = unescape_cell(cols[col_a], true);
    AnswerSet gold;
    if (answers == "true" || answers == "false") {
      gold = AnswerSet::boolean(answers == "true");
    } else if (answers.empty()) {
      gold = AnswerSet::bindings({});
    } else {
      gold = AnswerSet::bindings(split_answers(answers));
    }
    QueryInfo query;
    if (col_query >= 0 && col_query < static_cast<int>(cols.size()) && !cols[col_query].empty()) {
      query = QueryInfo::from_text(unescape_cell(cols[col_query], false));
    }
    try {
      b.entries.push_back(make_entry(id, unescape_cell(cols[col_q], false), std::move(query),
                                     std::move(gold)));
    } catch (const Error& e) {
      malformed(where, e.what());
    }
  }
  if (line_no == 0) malformed("line 1", "missing header");
  check_unique(b);
  return b;
}

Benchmark import_native(std::string_view bytes, std::string name) {
  json doc = parse_json(bytes);
  if (!doc.is_object()) malformed("$", "expected an object");
  Benchmark b;
  if (doc.contains("meta")) {
    const auto& meta = doc["meta"];
    if (!meta.is_object()) malformed("$.meta", "expected an object");
    if (meta.contains("name")) {
      if (!meta["name"].is_string()) malformed("$.meta.name", "expected a string");
      b.name = meta["name"].get<std::string>();
    }
    if (meta.contains("version")) {
      if (!meta["version"].is_number_integer()) malformed("$.meta.version", "expected an integer");
      b.version = meta["version"].get<int>();
    }
    if (meta.contains("targetKg")) {
      if (!meta["targetKg"].is_string()) malformed("$.meta.targetKg", "expected a string");
      b.target_kg = meta["targetKg"].get<std::string>();
    }
  }
  if (!name.empty()) b.name = std::move(name);
  if (!doc.contains("questions") || !doc["questions"].is_array()) {
    malformed("$.questions", "expected an array");
  }
  const auto& qs = doc["questions"];
  for (std::size_t i = 0; i < qs.size(); ++i) {
    std::string p = "$.questions[" + std::to_string(i) + "]";
    const auto& q = qs[i];
    if (!q.is_object()) malformed(p, "expected an object");
    if (!q.contains("id")) malformed(p + ".id", "missing");
    std::string id = id_text(q["id"], p + ".id");
    if (!q.contains("question") || !q["question"].is_string()) {
      malformed(p + ".question", "expected a string");
    }
    QueryInfo query;
    if (q.contains("query") && !q["query"].is_null()) {
      if (!q["query"].is_string()) malformed(p + ".query", "expected a string");
      query = QueryInfo::from_text(q["query"].get<std::string>());
    }
    AnswerSet gold;
    if (q.contains("answers")) {
      const auto& a = q["answers"];
      if (!a.is_object()) malformed(p + ".answers", "expected an object");
      if (a.contains("boolean")) {
        if (!a["boolean"].is_boolean()) malformed(p + ".answers.boolean", "expected a boolean");
        gold = AnswerSet::boolean(a["boolean"].get<bool>());
      } else if (a.contains("values")) {
        if (!a["values"].is_array()) malformed(p + ".answers.values", "expected an array");
        std::vector<std::string> values;
        for (std::size_t k = 0; k < a["values"].size(); ++k) {
          const auto& v = a["values"][k];
          if (v.is_string()) {
            values.push_back(v.get<std::string>());
          } else if (v.is_number()) {
            values.push_back(v.dump());
          } else {
            malformed(p + ".answers.values[" + std::to_string(k) + "]", "expected a string or number");
          }
        }
        gold = AnswerSet::bindings(std::move(values));
      }
    }
    std::string lang = "en";
    if (q.contains("language")) {
      if (!q["language"].is_string()) malformed(p + ".language", "expected a string");
      lang = q["language"].get<std::string>();
    }
    try {
      b.entries.push_back(
          make_entry(id, q["question"].get<std::string>(), std::move(query), std::move(gold), lang));
    } catch (const Error& e) {
      malformed(p + ".question", e.what());
    }
  }
  check_unique(b);
  return b;
}

}  // namespace

Benchmark import_qald(std::string_view bytes, std::string name) {
  json doc = parse_json(bytes);
  if (!doc.is_object()) malformed("$", "expected an object");
  Benchmark b;
  b.name = std::move(name);
  if (b.name.empty() && doc.contains("dataset") && doc["dataset"].is_object() &&
      doc["dataset"].contains("id") && doc["dataset"]["id"].is_string()) {
    b.name = doc["dataset"]["id"].get<std::string>();
  }
  if (!doc.contains("questions")) malformed("$.questions", "missing");
  const auto& qs = doc["questions"];
  if (!qs.is_array()) malformed("$.questions", "expected an array");
  if (qs.empty()) throw Error("NoQuestions", "the file contains no questions");

  for (std::size_t i = 0; i < qs.size(); ++i) {
    std::string p = "$.questions[" + std::to_string(i) + "]";
    const auto& q = qs[i];
    if (!q.is_object()) malformed(p, "expected an object");
    if (!q.contains("id")) malformed(p + ".id", "missing");
    std::string id = id_text(q["id"], p + ".id");

    if (!q.contains("question") || !q["question"].is_array() || q["question"].empty()) {
      malformed(p + ".question", "expected a non-empty array of {language, string}");
    }
    std::string text, lang;
    for (std::size_t k = 0; k < q["question"].size(); ++k) {
      const auto& s = q["question"][k];
      std::string sp = p + ".question[" + std::to_string(k) + "]";
      if (!s.is_object() || !s.contains("string") || !s["string"].is_string()) {
        malformed(sp, "expected {language, string}");
      }
      std::string l = s.contains("language") && s["language"].is_string()
                          ? s["language"].get<std::string>()
                          : "en";
      if (text.empty() || (l == "en" && lang != "en")) {
        text = s["string"].get<std::string>();
        lang = l;
      }
    }

    QueryInfo query;
    if (q.contains("query")) {
      const auto& qq = q["query"];
      if (qq.is_string()) {
        query = QueryInfo::from_text(qq.get<std::string>());
      } else if (qq.is_object() && qq.contains("sparql")) {
        if (!qq["sparql"].is_string()) malformed(p + ".query.sparql", "expected a string");
        query = QueryInfo::from_text(qq["sparql"].get<std::string>());
      } else if (!qq.is_object() && !qq.is_null()) {
        malformed(p + ".query", "expected an object with a sparql string");
      }
    }
    AnswerSet gold = qald_answers(q.contains("answers") ? q["answers"] : json(), p + ".answers");
    try {
      b.entries.push_back(make_entry(id, text, std::move(query), std::move(gold), lang));
    } catch (const Error& e) {
      malformed(p + ".question", e.what());
    }
  }
  check_unique(b);
  return b;
}

Benchmark import_generic(std::string_view bytes, GenericFormat format, std::string name) {
  return format == GenericFormat::Tsv ? import_tsv(bytes, std::move(name))
                                      : import_native(bytes, std::move(name));
}

std::string export_native(const Benchmark& b) {
  ordered_json doc;
  doc["meta"] = {{"name", b.name}, {"version", b.version}, {"targetKg", b.target_kg}};
  ordered_json qs = ordered_json::array();
  for (const auto& e : b.entries) {
    ordered_json q;
    q["id"] = e.question_id;
    q["question"] = e.nlq.raw_text;
    if (e.language != "en") q["language"] = e.language;
    if (e.query.status != QueryStatus::Absent) q["query"] = e.query.text;
    if (e.gold.kind == AnswerKind::Boolean) {
      q["answers"] = {{"boolean", e.gold.boolean_value}};
    } else {
      q["answers"] = {{"values", e.gold.values}};
    }
    qs.push_back(std::move(q));
  }
  doc["questions"] = std::move(qs);
  return doc.dump(2) + "\n";
}

Benchmark import_bytes(std::string_view bytes, std::string name, std::string_view format) {
  if (format == "tsv") return import_generic(bytes, GenericFormat::Tsv, std::move(name));
  if (format == "json" || format == "native") return import_generic(bytes, GenericFormat::Json, std::move(name));
  if (format == "qald") return import_qald(bytes, std::move(name));
  if (!format.empty()) throw Error("InvalidArgument", "unknown benchmark format '" + std::string(format) + "'");
  auto first = bytes.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos || (bytes[first] != '{' && bytes[first] != '[')) {
    return import_generic(bytes, GenericFormat::Tsv, std::move(name));
  }
  json doc = parse_json(bytes);
  if (doc.is_object() && doc.contains("meta")) {
    return import_generic(bytes, GenericFormat::Json, std::move(name));
  }
  return import_qald(bytes, std::move(name));
}

Benchmark load_benchmark_file(const std::string& path, std::string name) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("IoError", "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  bool tsv = path.size() >= 4 && path.compare(path.size() - 4, 4, ".tsv") == 0;
  return import_bytes(ss.str(), std::move(name), tsv ? "tsv" : "");
}

}  // namespace kgqa::bench

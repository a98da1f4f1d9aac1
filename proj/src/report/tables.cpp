#include "kgqa/report/tables.hpp"

#include <charconv>
#include <cstdio>
#include <regex>

#include "kgqa/error.hpp"

namespace kgqa::report {

namespace {

std::string pct(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string num(double v) {
  char buf[32];
  auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, p);
}

std::string count(std::size_t n) { return std::to_string(n); }

std::size_t width(const std::string& s) {
  std::size_t n = 0;
  for (unsigned char c : s) {
    if ((c & 0xC0) != 0x80) ++n;
  }
  return n;
}

bool numeric(const std::string& s) {
  static const std::regex re(R"(^-?[0-9]+(\.[0-9]+)?([eE][+-]?[0-9]+)?$)");
  return std::regex_match(s, re);
}

}  // namespace

std::vector<Table> report_tables(const Report& r) {
  std::vector<Table> out;
  if (r.query_stats) {
    const auto& s = *r.query_stats;
    Table kw{"keywords", "Keywords (" + count(s.total) + " queries)", {"Keyword", "Count", "Percent"}, {}};
    for (const auto& k : s.keywords) {
      kw.rows.push_back({std::string(analysis::keyword_name(k.keyword)), count(k.value.count), pct(k.value.percent)});
    }
    out.push_back(std::move(kw));

    Table tri{"triples", "Triple patterns per query", {"Triples", "Count", "Percent"}, {}};
    for (const auto& h : s.triples) tri.rows.push_back({h.bucket, count(h.value.count), pct(h.value.percent)});
    out.push_back(std::move(tri));

    Table ops{"operators", "Operator combinations", {"Block", "Operators", "Count", "Percent"}, {}};
    for (const auto& b : s.operators) {
      for (const auto& row : b.rows) ops.rows.push_back({b.name, row.combo.label(), count(row.value.count), pct(row.value.percent)});
      ops.rows.push_back({b.name, "subtotal", count(b.subtotal.count), pct(b.subtotal.percent)});
    }
    out.push_back(std::move(ops));

    Table shapes{"shapes", "Query shapes", {"Shape"}, {}};
    for (const auto& d : s.shapes) {
      shapes.header.push_back(d.population + " (" + count(d.queries) + ")");
      shapes.header.push_back(d.population + " %");
    }
    for (auto sh : shape::kAllShapes) {
      std::vector<std::string> row{std::string(shape::shape_name(sh))};
      for (const auto& d : s.shapes) {
        analysis::CountShare v;
        for (const auto& x : d.rows) {
          if (x.shape == sh) v = x.value;
        }
        row.push_back(count(v.count));
        row.push_back(pct(v.percent));
      }
      shapes.rows.push_back(std::move(row));
    }
    out.push_back(std::move(shapes));
  }

  Table types{"question_types", "Question types (" + count(r.question_types.total) + " questions)",
              {"Type", "Count", "Percent"}, {}};
  for (const auto& c : r.question_types.categories) {
    types.rows.push_back({std::string(nlq::category_name(c.category)), count(c.value.count), pct(c.value.percent)});
  }
  out.push_back(std::move(types));
  Table wh{"wh_types", "Wh-questions by word", {"Wh-word", "Count", "Percent"}, {}};
  for (const auto& w : r.question_types.wh) {
    wh.rows.push_back({std::string(nlq::wh_subtype_name(w.subtype)), count(w.value.count), pct(w.value.percent)});
  }
  out.push_back(std::move(wh));

  if (r.overlap) {
    Table ov{"overlap", "Repeated questions across versions",
             {"Benchmark", "Version", "Total", "Repeated (same query)", "Repeated (changed query)", "New"}, {}};
    for (const auto& o : r.overlap->rows) {
      ov.rows.push_back({o.name, std::to_string(o.version), count(o.total), count(o.repeated_same_query),
                         count(o.repeated_changed_query), count(o.new_questions)});
    }
    out.push_back(std::move(ov));
  }

  if (r.evaluation) {
    const auto& e = *r.evaluation;
    const auto& s = e.scores;
    Table sc{"scores", "Scores (|Q|=" + count(s.questions) + ", |S|=" + count(s.processed) + ", |C|=" + count(s.correct) + ")",
             {"Metric", "Precision", "Recall", "F1"}, {}};
    sc.rows.push_back({"Micro", num(s.micro_precision), num(s.micro_recall), num(s.micro_f1)});
    sc.rows.push_back({"Macro", num(s.macro_precision), num(s.macro_recall), num(s.macro_f1)});
    sc.rows.push_back({"Global", num(s.global_precision), num(s.global_recall), num(s.global_f1)});
    out.push_back(std::move(sc));

    Table sw{"sweep", "Global scores by threshold", {"Theta", "Precision", "Recall", "F1", "Correct"}, {}};
    for (const auto& row : e.sweep) sw.rows.push_back({num(row.theta), num(row.precision), num(row.recall), num(row.f1), count(row.correct)});
    out.push_back(std::move(sw));

    if (!e.groups.shapes.empty()) {
      Table g{"groups", "Processed questions by shape and properties",
              {"Shape", "Class", "Keywords", "Triples", "Correct", "Incorrect"}, {}};
      for (const auto& sg : e.groups.shapes) {
        for (const auto& [key, cell] : sg.cells) {
          g.rows.push_back({sg.shape, std::string(analysis::class_name(key.query_class)), key.signature,
                            count(key.triples), count(cell.correct), count(cell.incorrect)});
        }
      }
      out.push_back(std::move(g));
    }
  }
  return out;
}

std::string render_text(const Table& t) {
  std::vector<std::size_t> w(t.header.size(), 0);
  for (std::size_t i = 0; i < t.header.size(); ++i) w[i] = width(t.header[i]);
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size() && i < w.size(); ++i) w[i] = std::max(w[i], width(row[i]));
  }
  auto line = [&](const std::vector<std::string>& cells, bool header) {
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
      const std::string cell = i < cells.size() ? cells[i] : "";
      std::string pad(w[i] - width(cell), ' ');
      if (i) s += "  ";
      s += (!header && numeric(cell)) ? pad + cell : cell + (i + 1 < w.size() ? pad : "");
    }
    while (!s.empty() && s.back() == ' ') s.pop_back();
    return s + "\n";
  };
  std::string out = t.title + "\n";
  out += line(t.header, true);
  std::size_t total = 0;
  for (std::size_t i = 0; i < w.size(); ++i) total += w[i] + (i ? 2 : 0);
  out += std::string(total, '-') + "\n";
  for (const auto& row : t.rows) out += line(row, false);
  return out;
}

std::string render_text(const std::vector<Table>& tables) {
  std::string out;
  for (std::size_t i = 0; i < tables.size(); ++i) {
    if (i) out += "\n";
    out += render_text(tables[i]);
  }
  return out;
}

std::string render_csv(const Table& t) {
  auto field = [](const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
      if (c == '"') q += '"';
      q += c;
    }
    return q + "\"";
  };
  auto line = [&](const std::vector<std::string>& cells) {
    std::string s;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) s += ',';
      s += field(cells[i]);
    }
    return s + "\r\n";
  };
  std::string out = line(t.header);
  for (const auto& row : t.rows) out += line(row);
  return out;
}

std::vector<std::vector<std::string>> parse_csv(std::string_view text) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string cell;
  bool quoted = false, after_quote = false, any = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    any = true;
    if (quoted) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          cell += '"';
          ++i;
        } else {
          quoted = false;
          after_quote = true;
        }
      } else {
        cell += c;
      }
      continue;
    }
    if (c == '"') {
      if (!cell.empty() || after_quote) throw Error("MalformedFile", "stray quote in CSV");
      quoted = true;
    } else if (c == ',') {
      row.push_back(std::move(cell));
      cell.clear();
      after_quote = false;
    } else if (c == '\r' || c == '\n') {
      if (c == '\r' && i + 1 < text.size() && text[i + 1] == '\n') ++i;
      row.push_back(std::move(cell));
      rows.push_back(std::move(row));
      cell.clear();
      row.clear();
      after_quote = false;
      any = false;
    } else {
      if (after_quote) throw Error("MalformedFile", "text after closing quote in CSV");
      cell += c;
    }
  }
  if (quoted) throw Error("MalformedFile", "unterminated quoted CSV field");
  if (any) {
    row.push_back(std::move(cell));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace kgqa::report

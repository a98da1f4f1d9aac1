#pragma once

#include <string>
#include <vector>

#include "kgqa/report/report.hpp"

namespace kgqa::report {

struct Table {
  std::string name;   // file stem for CSV output, e.g. "keywords"
  std::string title;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

/// One table per section present in the report: keywords, triples,
/// operators, shapes, question_types, wh_types, overlap, scores, sweep,
/// groups. Absent sections produce no table.
std::vector<Table> report_tables(const Report& report);

/// Aligned columns; numeric cells are right-aligned.
std::string render_text(const Table& table);
std::string render_text(const std::vector<Table>& tables);

/// RFC 4180, CRLF line ends.
std::string render_csv(const Table& table);

/// Inverse of render_csv. Throws Error("MalformedFile").
std::vector<std::vector<std::string>> parse_csv(std::string_view text);

}  // namespace kgqa::report

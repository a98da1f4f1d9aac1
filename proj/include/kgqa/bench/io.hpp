#pragma once

#include <string>
#include <string_view>

#include "kgqa/bench/model.hpp"

namespace kgqa::bench {

/// QALD-style JSON: "questions"[] with "id", "question"[{language, string}],
/// "query"{"sparql"} and "answers"[] holding SPARQL JSON results. The
/// English string is preferred. Unparseable queries are recorded, not
/// fatal. Throws MalformedFile (message names the JSON path) and
/// NoQuestions.
Benchmark import_qald(std::string_view bytes, std::string name = {});

enum class GenericFormat { Json, Tsv };

/// Native JSON ({"meta", "questions"}) or TSV (header id, question,
/// answers, optional query; answers separated by '|'; a lone "true" or
/// "false" answer cell is a boolean; backslash escapes \t \n \\ \|).
/// Throws MalformedFile and DuplicateQuestionId.
Benchmark import_generic(std::string_view bytes, GenericFormat format, std::string name = {});

/// Native JSON; import_generic(export_native(b), Json) == b.
std::string export_native(const Benchmark& benchmark);

/// `format` is "qald", "json" (alias "native"), "tsv" or empty to detect:
/// input not starting with '{' or '[' is TSV; JSON with a "meta" block is
/// native, otherwise QALD. Throws Error("InvalidArgument") for an unknown
/// format.
Benchmark import_bytes(std::string_view bytes, std::string name = {}, std::string_view format = {});

/// Reads a file and picks the importer: .tsv is TSV; JSON with a "meta"
/// block is native, otherwise QALD. Throws Error("IoError").
Benchmark load_benchmark_file(const std::string& path, std::string name = {});

}  // namespace kgqa::bench

#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kgqa/analysis/stats.hpp"

namespace kgqa::nlq {

/// A tokenized natural-language question.
struct Nlq {
  std::string question_id;
  std::vector<std::string> tokens;
  std::string raw_text;
};

/// Splits on Unicode whitespace and strips leading/trailing punctuation from
/// each piece; internal hyphens and apostrophes survive ("Obama's",
/// "Jean-Paul"). Throws kgqa::Error("EmptyQuestion") if nothing remains.
Nlq tokenize(std::string_view raw_text, std::string question_id = {});

enum class QuestionCategory { Wh, How, YesNo, Request, Topicalized, Other };
enum class WhSubtype { None, What, When, Where, Which, Who };

inline constexpr QuestionCategory kAllCategories[] = {
    QuestionCategory::Wh,          QuestionCategory::How,   QuestionCategory::YesNo,
    QuestionCategory::Request,     QuestionCategory::Topicalized, QuestionCategory::Other};
inline constexpr WhSubtype kAllWhSubtypes[] = {WhSubtype::What, WhSubtype::When,
                                               WhSubtype::Where, WhSubtype::Which,
                                               WhSubtype::Who};

std::string_view category_name(QuestionCategory c);  // "Wh", "How", "YesNo", ...
std::string_view wh_subtype_name(WhSubtype w);       // "What", ..., "Who/Whose/Whom"

struct QuestionType {
  QuestionCategory category = QuestionCategory::Other;
  WhSubtype wh = WhSubtype::None;  // set only for category Wh

  bool operator==(const QuestionType&) const = default;
};

struct ClassifierOptions {
  /// Leading token sequences that mark a request, matched case-insensitively.
  std::vector<std::string> request_patterns = {"can you", "could you", "please", "list",
                                               "give me", "name", "show me", "tell me"};
  /// First tokens that make a yes/no question.
  std::vector<std::string> auxiliaries = {"is",  "are", "was",   "were",  "do",    "does",
                                          "did", "has", "have",  "had",   "can",   "could",
                                          "will", "would", "should", "must"};
};

/// First match wins: Request, How (how + many/much/adjective), Wh (initial
/// wh-word, optionally after one preposition; "why" is Other), YesNo,
/// Topicalized (wh-word or how+many/much/adjective later in the question),
/// Other.
QuestionType classify_question(const Nlq& question, const ClassifierOptions& options = {});

struct CategoryRow {
  QuestionCategory category;
  analysis::CountShare value;
};

struct WhRow {
  WhSubtype subtype;
  analysis::CountShare value;  // percent of the Wh questions
};

struct QuestionTypeStats {
  std::size_t total = 0;
  std::vector<CategoryRow> categories;
  std::vector<WhRow> wh;
};

/// Throws kgqa::Error("EmptyInput") for an empty list.
QuestionTypeStats question_type_stats(std::span<const Nlq> questions,
                                      const ClassifierOptions& options = {});

}  // namespace kgqa::nlq

#include "kgqa/nlq/question.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <set>

#include "kgqa/error.hpp"
#include "kgqa/nlq/tagger.hpp"

namespace kgqa::nlq {

namespace {

// Decodes one UTF-8 code point at `i`; invalid bytes decode as themselves.
char32_t decode(std::string_view s, std::size_t i, std::size_t& len) {
  auto c = static_cast<unsigned char>(s[i]);
  std::size_t need = c < 0x80 ? 1 : (c >> 5) == 0x6 ? 2 : (c >> 4) == 0xE ? 3 : (c >> 3) == 0x1E ? 4 : 0;
  if (need == 0 || i + need > s.size()) {
    len = 1;
    return c;
  }
  char32_t cp = need == 1 ? c : need == 2 ? (c & 0x1F) : need == 3 ? (c & 0x0F) : (c & 0x07);
  for (std::size_t k = 1; k < need; ++k) {
    auto cc = static_cast<unsigned char>(s[i + k]);
    if ((cc & 0xC0) != 0x80) {
      len = 1;
      return c;
    }
    cp = (cp << 6) | (cc & 0x3F);
  }
  len = need;
  return cp;
}

bool is_space(char32_t c) {
  return (c >= 0x09 && c <= 0x0D) || c == 0x20 || c == 0x85 || c == 0xA0 || c == 0x1680 ||
         (c >= 0x2000 && c <= 0x200A) || c == 0x2028 || c == 0x2029 || c == 0x202F ||
         c == 0x205F || c == 0x3000;
}

bool is_punct(char32_t c) {
  if (c < 0x80) return std::ispunct(static_cast<int>(c)) != 0;
  return c == 0xA1 || c == 0xAB || c == 0xB7 || c == 0xBB || c == 0xBF ||
         (c >= 0x2010 && c <= 0x2027) || (c >= 0x2030 && c <= 0x205E) ||
         (c >= 0x3001 && c <= 0x3003) || (c >= 0x3008 && c <= 0x3011) || c == 0xFF01 ||
         c == 0xFF0C || c == 0xFF0E || c == 0xFF1F;
}

struct Piece {
  std::size_t begin;
  std::size_t len;
  char32_t cp;
};

std::string strip(std::string_view s, const std::vector<Piece>& cps) {
  std::size_t lo = 0, hi = cps.size();
  while (lo < hi && is_punct(cps[lo].cp)) ++lo;
  while (hi > lo && is_punct(cps[hi - 1].cp)) --hi;
  if (lo == hi) return {};
  std::size_t from = cps[lo].begin;
  std::size_t to = cps[hi - 1].begin + cps[hi - 1].len;
  return std::string(s.substr(from, to - from));
}

std::string lower(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

const std::set<std::string>& wh_words() {
  static const std::set<std::string> w = {"what", "when", "where", "who", "whom", "which", "whose"};
  return w;
}

const std::set<std::string>& prepositions() {
  static const std::set<std::string> p = {
      "in",     "on",      "at",    "for",    "from",   "to",      "by",     "with",
      "of",     "during",  "since", "under",  "after",  "before",  "into",   "through",
      "about",  "among",   "between", "within", "without", "towards", "toward", "across",
      "near",   "over",    "behind", "upon",   "against", "until",  "via",    "per"};
  return p;
}

WhSubtype subtype_of(const std::string& w) {
  if (w == "what") return WhSubtype::What;
  if (w == "when") return WhSubtype::When;
  if (w == "where") return WhSubtype::Where;
  if (w == "which") return WhSubtype::Which;
  return WhSubtype::Who;
}

bool how_phrase(const std::vector<std::string>& lw, std::size_t i) {
  if (lw[i] != "how" || i + 1 >= lw.size()) return false;
  const auto& next = lw[i + 1];
  return next == "many" || next == "much" || BuiltinTagger::is_adjective(next);
}

}  // namespace

Nlq tokenize(std::string_view raw_text, std::string question_id) {
  Nlq q;
  q.question_id = std::move(question_id);
  q.raw_text = std::string(raw_text);
  std::vector<Piece> current;
  auto flush = [&] {
    if (current.empty()) return;
    auto tok = strip(raw_text, current);
    if (!tok.empty()) q.tokens.push_back(std::move(tok));
    current.clear();
  };
  for (std::size_t i = 0; i < raw_text.size();) {
    std::size_t len = 1;
    char32_t cp = decode(raw_text, i, len);
    if (is_space(cp)) {
      flush();
    } else {
      current.push_back({i, len, cp});
    }
    i += len;
  }
  flush();
  if (q.tokens.empty()) throw Error("EmptyQuestion", "question has no tokens");
  return q;
}

std::string_view category_name(QuestionCategory c) {
  switch (c) {
    case QuestionCategory::Wh: return "Wh";
    case QuestionCategory::How: return "How";
    case QuestionCategory::YesNo: return "YesNo";
    case QuestionCategory::Request: return "Request";
    case QuestionCategory::Topicalized: return "Topicalized";
    case QuestionCategory::Other: return "Other";
  }
  return "Other";
}

std::string_view wh_subtype_name(WhSubtype w) {
  switch (w) {
    case WhSubtype::None: return "";
    case WhSubtype::What: return "What";
    case WhSubtype::When: return "When";
    case WhSubtype::Where: return "Where";
    case WhSubtype::Which: return "Which";
    case WhSubtype::Who: return "Who/Whose/Whom";
  }
  return "";
}

QuestionType classify_question(const Nlq& question, const ClassifierOptions& options) {
  std::vector<std::string> lw;
  for (const auto& t : question.tokens) lw.push_back(lower(t));
  if (lw.empty()) return {};

  for (const auto& pattern : options.request_patterns) {
    auto words = tokenize(pattern).tokens;
    if (words.size() > lw.size()) continue;
    bool match = true;
    for (std::size_t i = 0; i < words.size() && match; ++i) match = lower(words[i]) == lw[i];
    if (match) return {QuestionCategory::Request, WhSubtype::None};
  }
  if (how_phrase(lw, 0)) return {QuestionCategory::How, WhSubtype::None};
  if (wh_words().count(lw[0])) return {QuestionCategory::Wh, subtype_of(lw[0])};
  if (lw.size() > 1 && prepositions().count(lw[0]) && wh_words().count(lw[1])) {
    return {QuestionCategory::Wh, subtype_of(lw[1])};
  }
  if (lw[0] == "why") return {};
  if (std::find(options.auxiliaries.begin(), options.auxiliaries.end(), lw[0]) !=
      options.auxiliaries.end()) {
    return {QuestionCategory::YesNo, WhSubtype::None};
  }
  for (std::size_t i = 1; i < lw.size(); ++i) {
    if (wh_words().count(lw[i]) || how_phrase(lw, i)) {
      return {QuestionCategory::Topicalized, WhSubtype::None};
    }
  }
  return {};
}

QuestionTypeStats question_type_stats(std::span<const Nlq> questions,
                                      const ClassifierOptions& options) {
  if (questions.empty()) throw Error("EmptyInput", "no questions");
  QuestionTypeStats s;
  s.total = questions.size();
  std::size_t cat[6] = {};
  std::size_t wh[6] = {};
  for (const auto& q : questions) {
    auto t = classify_question(q, options);
    ++cat[static_cast<int>(t.category)];
    ++wh[static_cast<int>(t.wh)];
  }
  for (auto c : kAllCategories) {
    s.categories.push_back({c, analysis::share(cat[static_cast<int>(c)], s.total)});
  }
  std::size_t wh_total = cat[static_cast<int>(QuestionCategory::Wh)];
  for (auto w : kAllWhSubtypes) {
    s.wh.push_back({w, analysis::share(wh[static_cast<int>(w)], wh_total)});
  }
  return s;
}

}  // namespace kgqa::nlq

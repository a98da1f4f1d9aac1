#include "kgqa/nlq/tagger.hpp"

#include <cctype>
#include <fstream>
#include <regex>
#include <sstream>
#include <unordered_map>

#include "kgqa/error.hpp"

namespace kgqa::nlq {

std::string_view tagset_name(TagSet t) { return t == TagSet::UPOS ? "upos" : "penn"; }

std::optional<TagSet> tagset_from_name(std::string_view name) {
  std::string n(name);
  for (auto& c : n) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (n == "upos") return TagSet::UPOS;
  if (n == "penn") return TagSet::Penn;
  return std::nullopt;
}

TagDictionary::TagDictionary(TagSet set, std::vector<std::string> tags)
    : set_(set), tags_(std::move(tags)) {}

const TagDictionary& TagDictionary::get(TagSet set) {
  static const TagDictionary upos(
      TagSet::UPOS, {"ADJ", "ADP", "ADV", "AUX", "CCONJ", "DET", "INTJ", "NOUN", "NUM", "PART",
                     "PRON", "PROPN", "PUNCT", "SCONJ", "SYM", "VERB", "X"});
  static const TagDictionary penn(
      TagSet::Penn, {"CC",  "CD",  "DT",  "EX",  "FW",  "IN",   "JJ",  "JJR", "JJS",
                     "LS",  "MD",  "NN",  "NNS", "NNP", "NNPS", "PDT", "POS", "PRP",
                     "PRP$", "RB", "RBR", "RBS", "RP",  "SYM",  "TO",  "UH",  "VB",
                     "VBD", "VBG", "VBN", "VBP", "VBZ", "WDT",  "WP",  "WP$", "WRB"});
  return set == TagSet::UPOS ? upos : penn;
}

std::optional<std::size_t> TagDictionary::index_of(std::string_view tag) const {
  for (std::size_t i = 0; i < tags_.size(); ++i) {
    if (tags_[i] == tag) return i;
  }
  return std::nullopt;
}

std::string penn_to_upos(std::string_view penn) {
  static const std::unordered_map<std::string, std::string> table = {
      {"CC", "CCONJ"}, {"CD", "NUM"},    {"DT", "DET"},   {"EX", "PRON"},  {"FW", "X"},
      {"IN", "ADP"},   {"JJ", "ADJ"},    {"JJR", "ADJ"},  {"JJS", "ADJ"},  {"LS", "X"},
      {"MD", "AUX"},   {"NN", "NOUN"},   {"NNS", "NOUN"}, {"NNP", "PROPN"}, {"NNPS", "PROPN"},
      {"PDT", "DET"},  {"POS", "PART"},  {"PRP", "PRON"}, {"PRP$", "PRON"}, {"RB", "ADV"},
      {"RBR", "ADV"},  {"RBS", "ADV"},   {"RP", "ADP"},   {"SYM", "SYM"},  {"TO", "PART"},
      {"UH", "INTJ"},  {"VB", "VERB"},   {"VBD", "VERB"}, {"VBG", "VERB"}, {"VBN", "VERB"},
      {"VBP", "VERB"}, {"VBZ", "VERB"},  {"WDT", "DET"},  {"WP", "PRON"},  {"WP$", "PRON"},
      {"WRB", "ADV"}};
  auto it = table.find(std::string(penn));
  if (it == table.end()) throw Error("UnknownTag", "not a Penn Treebank tag: " + std::string(penn));
  return it->second;
}

namespace {

struct Entry {
  const char* penn;
  const char* upos;
};

std::string lower(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

const std::unordered_map<std::string, Entry>& lexicon() {
  static const std::unordered_map<std::string, Entry> lex = [] {
    std::unordered_map<std::string, Entry> m;
    auto add = [&](std::initializer_list<const char*> words, Entry e) {
      for (const char* w : words) m.emplace(w, e);
    };
    add({"the", "a", "an", "this", "that", "these", "those", "each", "every", "some", "any",
         "no", "another", "either", "neither", "both"},
        {"DT", "DET"});
    add({"all", "half"}, {"PDT", "DET"});
    add({"of", "in", "on", "at", "by", "for", "with", "from", "about", "as", "into", "like",
         "through", "after", "over", "between", "against", "during", "without", "before",
         "under", "around", "among", "since", "than", "near", "across", "behind", "within",
         "via", "per", "upon", "towards", "toward", "until", "outside", "inside"},
        {"IN", "ADP"});
    add({"if", "because", "while", "although", "whether", "though", "unless"}, {"IN", "SCONJ"});
    add({"and", "or", "but", "nor"}, {"CC", "CCONJ"});
    add({"i", "you", "he", "she", "it", "we", "they", "me", "him", "us", "them", "myself",
         "yourself", "himself", "herself", "itself", "themselves"},
        {"PRP", "PRON"});
    add({"my", "your", "his", "its", "our", "their", "her"}, {"PRP$", "PRON"});
    add({"what", "who", "whom"}, {"WP", "PRON"});
    add({"whose"}, {"WP$", "PRON"});
    add({"which"}, {"WDT", "DET"});
    add({"when", "where", "why", "how"}, {"WRB", "ADV"});
    add({"there"}, {"EX", "PRON"});
    add({"can", "could", "will", "would", "shall", "should", "may", "might", "must"},
        {"MD", "AUX"});
    add({"is", "does", "'s"}, {"VBZ", "AUX"});
    add({"are", "am", "do"}, {"VBP", "AUX"});
    add({"was", "were", "did"}, {"VBD", "AUX"});
    add({"be"}, {"VB", "AUX"});
    add({"been"}, {"VBN", "AUX"});
    add({"being"}, {"VBG", "AUX"});
    add({"has"}, {"VBZ", "VERB"});
    add({"have"}, {"VBP", "VERB"});
    add({"had"}, {"VBD", "VERB"});
    add({"to"}, {"TO", "PART"});
    add({"not", "n't", "never"}, {"RB", "PART"});
    add({"please", "hello", "yes", "oh"}, {"UH", "INTJ"});
    add({"also", "very", "only", "still", "ever", "currently", "often", "too", "just", "else",
         "then", "now", "ago", "together", "already", "again", "here", "so"},
        {"RB", "ADV"});
    add({"more", "less", "fewer", "bigger", "larger", "higher", "older", "longer", "taller"},
        {"JJR", "ADJ"});
    add({"most", "least", "best", "worst"}, {"JJS", "ADJ"});
    add({"one", "two", "three", "four", "five", "six", "seven", "eight", "nine", "ten",
         "eleven", "twelve", "twenty", "hundred", "thousand", "million", "billion"},
        {"CD", "NUM"});
    add({"tall", "big", "long", "old", "high", "large", "small", "deep", "wide", "far",
         "heavy", "many", "much", "first", "last", "different", "new", "few", "several",
         "other", "same", "famous", "young", "short", "low", "fast", "rich", "populous",
         "early", "late", "official", "current", "main", "total", "free", "good", "great",
         "little", "hot", "cold", "full", "previous", "next", "second", "third", "former",
         "whole", "average", "national", "american", "german", "french", "british",
         "english", "spanish", "italian", "european", "military", "political", "professional",
         "human", "real", "original", "public", "major", "common", "close", "expensive",
         "popular", "busy", "strong", "bright", "dense", "hard", "cheap", "thick",
         "wealthy", "poor", "recent"},
        {"JJ", "ADJ"});
    add({"name", "list", "give", "show", "tell", "play", "write", "die", "live", "speak",
         "flow", "belong", "make", "win", "star", "direct", "produce", "cross", "marry", "use",
         "own", "run", "contain", "support", "govern", "know", "call", "include", "become",
         "start", "end", "lead", "build", "design", "develop", "invent", "compose", "create",
         "publish", "visit", "kill", "go", "come", "see", "get", "take", "find", "work",
         "study", "attend", "host", "border"},
        {"VB", "VERB"});
    add({"plays", "writes", "dies", "lives", "speaks", "flows", "belongs", "makes", "wins",
         "stars", "directs", "produces", "crosses", "uses", "owns", "runs", "contains",
         "supports", "governs", "knows", "includes", "becomes", "starts", "ends", "leads",
         "builds", "goes", "comes", "gets", "takes", "works", "hosts", "borders"},
        {"VBZ", "VERB"});
    add({"wrote", "won", "made", "became", "led", "built", "went", "came", "saw", "got", "took",
         "gave", "ran", "knew", "began", "sang", "spoke", "met", "found"},
        {"VBD", "VERB"});
    add({"born", "written", "known", "spoken", "given", "taken", "seen", "begun", "sung",
         "located", "called", "named", "founded", "married", "directed", "produced",
         "published", "killed", "buried", "situated", "based", "owned", "used", "designed",
         "created", "composed", "developed", "invented", "governed"},
        {"VBN", "VERB"});
    return m;
  }();
  return lex;
}

bool base_adjective(const std::string& w) {
  auto it = lexicon().find(w);
  return it != lexicon().end() && std::string(it->second.penn) == "JJ";
}

// Comparative or superlative of a lexicon adjective: taller, biggest, earliest.
std::optional<Entry> graded_adjective(const std::string& w) {
  for (auto [suffix, entry] : {std::pair{"est", Entry{"JJS", "ADJ"}}, std::pair{"er", Entry{"JJR", "ADJ"}}}) {
    std::string s = suffix;
    if (w.size() <= s.size() + 1 || w.compare(w.size() - s.size(), s.size(), s) != 0) continue;
    std::string stem = w.substr(0, w.size() - s.size());
    if (base_adjective(stem) || base_adjective(stem + "e")) return entry;
    if (stem.back() == 'i' && base_adjective(stem.substr(0, stem.size() - 1) + "y")) return entry;
    if (stem.size() >= 2 && stem[stem.size() - 1] == stem[stem.size() - 2] &&
        base_adjective(stem.substr(0, stem.size() - 1))) {
      return entry;
    }
  }
  return std::nullopt;
}

bool ends_with(const std::string& w, const char* suffix) {
  std::string s(suffix);
  return w.size() > s.size() + 1 && w.compare(w.size() - s.size(), s.size(), s) == 0;
}

Entry tag_one(const std::vector<std::string>& tokens, std::size_t i) {
  static const std::regex number(R"([+-]?[0-9][0-9,]*(\.[0-9]+)?(st|nd|rd|th|s)?)");
  const std::string& raw = tokens[i];
  std::string w = lower(raw);
  if (std::regex_match(w, number)) {
    // Ordinals like 1st are adjectives; plain numerals are cardinals.
    if (std::isalpha(static_cast<unsigned char>(w.back())) && !ends_with(w, "s")) return {"JJ", "ADJ"};
    return {"CD", "NUM"};
  }
  bool capitalized = std::isupper(static_cast<unsigned char>(raw[0])) != 0;
  auto it = lexicon().find(w);
  if (it != lexicon().end()) {
    // A capitalized open-class word mid-sentence is most likely part of a name.
    bool open = std::string(it->second.upos) == "NOUN" || std::string(it->second.upos) == "ADJ" ||
                std::string(it->second.upos) == "VERB";
    if (!(capitalized && i > 0 && open)) {
      // Base-form verbs double as nouns ("the name of"); keep VB only at the
      // start or after to/do/a modal somewhere earlier.
      if (std::string(it->second.penn) != "VB" || i == 0) return it->second;
      static const char* licensors[] = {"to", "do", "does", "did", "can", "could", "will",
                                        "would", "should", "may", "might", "must", "shall"};
      for (std::size_t k = 0; k < i; ++k) {
        std::string prev = lower(tokens[k]);
        for (const char* l : licensors) {
          if (prev == l) return it->second;
        }
      }
      return {"NN", "NOUN"};
    }
  }
  if (capitalized && i > 0) return {"NNP", "PROPN"};
  if (auto g = graded_adjective(w)) return *g;
  if (ends_with(w, "ly")) return {"RB", "ADV"};
  if (ends_with(w, "ing")) return {"VBG", "VERB"};
  if (ends_with(w, "ed")) {
    // Participle after a form of be/have, past tense otherwise.
    if (i > 0) {
      std::string prev = lower(tokens[i - 1]);
      static const char* aux[] = {"is", "are", "was", "were", "be", "been", "being", "has",
                                  "have", "had", "'s"};
      for (const char* a : aux) {
        if (prev == a) return {"VBN", "VERB"};
      }
    }
    return {"VBD", "VERB"};
  }
  if (ends_with(w, "ous") || ends_with(w, "ful") || ends_with(w, "ive") || ends_with(w, "able") ||
      ends_with(w, "ible") || ends_with(w, "ical")) {
    return {"JJ", "ADJ"};
  }
  if (w.size() > 3 && w.back() == 's' && !ends_with(w, "ss") && !ends_with(w, "us") &&
      !ends_with(w, "is")) {
    return {"NNS", "NOUN"};
  }
  return {"NN", "NOUN"};
}

}  // namespace

bool BuiltinTagger::is_adjective(std::string_view token) {
  std::string w = lower(token);
  auto it = lexicon().find(w);
  if (it != lexicon().end()) return std::string(it->second.upos) == "ADJ";
  return graded_adjective(w).has_value();
}

std::vector<TaggedToken> BuiltinTagger::tag(const Nlq& question, TagSet set) const {
  std::vector<TaggedToken> out;
  for (std::size_t i = 0; i < question.tokens.size(); ++i) {
    auto e = tag_one(question.tokens, i);
    out.push_back({question.tokens[i], set == TagSet::Penn ? e.penn : e.upos});
  }
  return out;
}

AnnotationTagger AnnotationTagger::load(std::istream& in) {
  AnnotationTagger t;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cols;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, '\t')) cols.push_back(cell);
    if (cols.size() != 4) {
      throw Error("MalformedFile", "annotation line " + std::to_string(line_no) +
                                       ": expected 4 tab-separated columns");
    }
    std::size_t index = 0;
    try {
      std::size_t used = 0;
      index = std::stoul(cols[1], &used);
      if (used != cols[1].size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      if (line_no == 1) continue;  // header row
      throw Error("MalformedFile",
                  "annotation line " + std::to_string(line_no) + ": bad token index");
    }
    t.rows_[cols[0]][index] = {cols[2], cols[3]};
  }
  return t;
}

AnnotationTagger AnnotationTagger::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("IoError", "cannot open annotation file " + path);
  return load(in);
}

std::vector<TaggedToken> AnnotationTagger::tag(const Nlq& question, TagSet set) const {
  auto it = rows_.find(question.question_id);
  if (it == rows_.end()) {
    throw Error("MissingAnnotation", "no annotations for question " + question.question_id);
  }
  const auto& dict = TagDictionary::get(set);
  std::vector<TaggedToken> out;
  for (const auto& [index, tok] : it->second) {
    TaggedToken t = tok;
    if (!dict.index_of(t.tag)) {
      if (set == TagSet::UPOS && TagDictionary::get(TagSet::Penn).index_of(t.tag)) {
        t.tag = penn_to_upos(t.tag);
      } else {
        throw Error("UnknownTag", "tag '" + t.tag + "' is not in the " +
                                      std::string(tagset_name(set)) + " dictionary");
      }
    }
    out.push_back(std::move(t));
  }
  return out;
}

std::vector<TaggedToken> tag_tokens(const Nlq& question, TagSet set, const Tagger& tagger) {
  return tagger.tag(question, set);
}

}  // namespace kgqa::nlq

#pragma once

#include <cstddef>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kgqa/nlq/question.hpp"

namespace kgqa::nlq {

enum class TagSet { UPOS, Penn };

std::string_view tagset_name(TagSet t);  // "upos", "penn"
std::optional<TagSet> tagset_from_name(std::string_view name);

/// Fixed, ordered tag inventory. Vector index i always means tags()[i].
class TagDictionary {
 public:
  static const TagDictionary& get(TagSet set);

  TagSet set() const { return set_; }
  const std::vector<std::string>& tags() const { return tags_; }
  std::size_t size() const { return tags_.size(); }
  std::optional<std::size_t> index_of(std::string_view tag) const;

 private:
  TagDictionary(TagSet set, std::vector<std::string> tags);

  TagSet set_;
  std::vector<std::string> tags_;
};

/// Fixed Penn Treebank to UPOS mapping. Throws Error("UnknownTag").
std::string penn_to_upos(std::string_view penn);

struct TaggedToken {
  std::string token;
  std::string tag;

  bool operator==(const TaggedToken&) const = default;
};

class Tagger {
 public:
  virtual ~Tagger() = default;
  virtual std::vector<TaggedToken> tag(const Nlq& question, TagSet set) const = 0;
};

/// Deterministic lexicon tagger: closed-class words, a small list of common
/// verbs and adjectives, number patterns and suffix rules, defaulting to
/// NOUN. Every entry carries both its Penn and UPOS tag.
class BuiltinTagger : public Tagger {
 public:
  std::vector<TaggedToken> tag(const Nlq& question, TagSet set) const override;

  /// Adjective test used by the question classifier (lexicon plus
  /// comparative/superlative forms of lexicon adjectives).
  static bool is_adjective(std::string_view token);
};

/// Tags read from an annotation TSV: questionId, tokenIndex (0-based),
/// token, tag. Annotations are authoritative: their tokens replace the
/// question's own. Penn annotations are mapped when UPOS is requested.
class AnnotationTagger : public Tagger {
 public:
  /// Throws Error("MalformedFile") on bad rows.
  static AnnotationTagger load(std::istream& in);
  static AnnotationTagger load_file(const std::string& path);

  /// Throws Error("MissingAnnotation") for unknown ids and
  /// Error("UnknownTag") when a tag fits neither requested set.
  std::vector<TaggedToken> tag(const Nlq& question, TagSet set) const override;

  bool has(const std::string& question_id) const { return rows_.count(question_id) > 0; }

 private:
  std::map<std::string, std::map<std::size_t, TaggedToken>> rows_;
};

std::vector<TaggedToken> tag_tokens(const Nlq& question, TagSet set, const Tagger& tagger);

}  // namespace kgqa::nlq

#include <gtest/gtest.h>

#include <chrono>
#include <random>
#include <set>
#include <sstream>

#include "kgqa/error.hpp"
#include "kgqa/nlq/vectors.hpp"
#include "kgqa/simd/distance.hpp"
#include "support/fixtures.hpp"
#include "support/vectors.hpp"

using namespace kgqa::nlq;
namespace fx = kgqa::fixtures;

namespace {

template <typename F>
std::string error_code(F&& f) {
  try {
    f();
  } catch (const kgqa::Error& e) {
    return e.code();
  }
  return "";
}

QuestionType type_of(const std::string& text) { return classify_question(tokenize(text)); }

std::vector<std::string> tags_of(const std::vector<TaggedToken>& tagged) {
  std::vector<std::string> out;
  for (const auto& t : tagged) out.push_back(t.tag);
  return out;
}

}  // namespace

TEST(Tokenize, UnionExampleHasTwelveTokens) {
  auto q = tokenize(fx::kUnionQuestion);
  ASSERT_EQ(q.tokens.size(), 12u);
  EXPECT_EQ(q.tokens[0], "Which");
  EXPECT_EQ(q.tokens[3], "more");
  EXPECT_EQ(q.tokens[11], "Beijing");
}

TEST(Tokenize, PunctuationAndWhitespace) {
  EXPECT_EQ(tokenize("What?").tokens, (std::vector<std::string>{"What"}));
  EXPECT_EQ(tokenize("Is Jean-Paul Sartre's book \"Nausea\" French?").tokens,
            (std::vector<std::string>{"Is", "Jean-Paul", "Sartre's", "book", "Nausea", "French"}));
  EXPECT_EQ(tokenize("Wer\xC2\xA0ist \xC2\xAB" "Berlin\xC2\xBB ?").tokens,
            (std::vector<std::string>{"Wer", "ist", "Berlin"}));
  EXPECT_EQ(tokenize("a , b").tokens, (std::vector<std::string>{"a", "b"}));
  EXPECT_EQ(error_code([] { tokenize("   "); }), "EmptyQuestion");
  EXPECT_EQ(error_code([] { tokenize("?! ..."); }), "EmptyQuestion");
}

TEST(Tokenize, Deterministic) {
  auto a = tokenize(fx::kUnionQuestion, "q1");
  auto b = tokenize(fx::kUnionQuestion, "q1");
  EXPECT_EQ(a.tokens, b.tokens);
  EXPECT_EQ(a.question_id, "q1");
  EXPECT_EQ(a.raw_text, fx::kUnionQuestion);
}

TEST(Classify, FiveExampleQuestions) {
  EXPECT_EQ(type_of(fx::kTypeExamples[0]), (QuestionType{QuestionCategory::Wh, WhSubtype::Where}));
  EXPECT_EQ(type_of(fx::kTypeExamples[1]).category, QuestionCategory::How);
  EXPECT_EQ(type_of(fx::kTypeExamples[2]).category, QuestionCategory::YesNo);
  EXPECT_EQ(type_of(fx::kTypeExamples[3]).category, QuestionCategory::Request);
  EXPECT_EQ(type_of(fx::kTypeExamples[4]).category, QuestionCategory::Topicalized);
}

TEST(Classify, CascadeDetails) {
  EXPECT_EQ(type_of("In which country is Berlin?"), (QuestionType{QuestionCategory::Wh, WhSubtype::Which}));
  EXPECT_EQ(type_of("Whose wife is Michelle Obama?").wh, WhSubtype::Who);
  EXPECT_EQ(type_of("Whom did Obama marry?").wh, WhSubtype::Who);
  EXPECT_EQ(type_of("What is the capital of Canada?").wh, WhSubtype::What);
  EXPECT_EQ(type_of("When was Einstein born?").wh, WhSubtype::When);
  EXPECT_EQ(type_of("Why is the sky blue?").category, QuestionCategory::Other);
  EXPECT_EQ(type_of("How tall is Michael Jordan?").category, QuestionCategory::How);
  EXPECT_EQ(type_of("How much money did Avatar make?").category, QuestionCategory::How);
  EXPECT_EQ(type_of("How did Elvis die?").category, QuestionCategory::Other);
  EXPECT_EQ(type_of("Give me all cars produced in Germany.").category, QuestionCategory::Request);
  EXPECT_EQ(type_of("Could you list the rivers?").category, QuestionCategory::Request);
  EXPECT_EQ(type_of("Could Obama run again?").category, QuestionCategory::YesNo);
  EXPECT_EQ(type_of("Berlin is the capital of which country?").category,
            QuestionCategory::Topicalized);
  EXPECT_EQ(type_of("Barack Obama is married to Michelle").category, QuestionCategory::Other);

  ClassifierOptions custom;
  custom.request_patterns = {"find"};
  EXPECT_EQ(classify_question(tokenize("Find all rivers"), custom).category,
            QuestionCategory::Request);
  EXPECT_EQ(classify_question(tokenize("Give me all rivers"), custom).category,
            QuestionCategory::Other);
}

TEST(QuestionTypeStats, FiveExamplesOnePerCategory) {
  std::vector<Nlq> qs;
  for (const auto& t : fx::kTypeExamples) qs.push_back(tokenize(t));
  auto s = question_type_stats(qs);
  EXPECT_EQ(s.total, 5u);
  double sum = 0;
  for (const auto& row : s.categories) {
    double expected = row.category == QuestionCategory::Other ? 0.0 : 20.0;
    EXPECT_DOUBLE_EQ(row.value.percent, expected) << category_name(row.category);
    sum += row.value.percent;
  }
  EXPECT_NEAR(sum, 100.0, 0.01);
  for (const auto& w : s.wh) {
    EXPECT_EQ(w.value.count, w.subtype == WhSubtype::Where ? 1u : 0u);
  }

  auto doubled = qs;
  doubled.insert(doubled.end(), qs.begin(), qs.end());
  auto d = question_type_stats(doubled);
  for (std::size_t i = 0; i < s.categories.size(); ++i) {
    EXPECT_DOUBLE_EQ(s.categories[i].value.percent, d.categories[i].value.percent);
  }
}

TEST(QuestionTypeStats, AllWhAndEmpty) {
  std::vector<Nlq> qs = {tokenize("What is X?"), tokenize("Who is Y?")};
  auto s = question_type_stats(qs);
  EXPECT_DOUBLE_EQ(s.categories[0].value.percent, 100.0);
  EXPECT_EQ(error_code([] { question_type_stats({}); }), "EmptyInput");
}

TEST(TagDictionary, SizesAndOrder) {
  const auto& upos = TagDictionary::get(TagSet::UPOS);
  const auto& penn = TagDictionary::get(TagSet::Penn);
  EXPECT_EQ(upos.size(), 17u);
  EXPECT_EQ(penn.size(), 36u);
  EXPECT_EQ(std::set<std::string>(upos.tags().begin(), upos.tags().end()).size(), 17u);
  EXPECT_EQ(std::set<std::string>(penn.tags().begin(), penn.tags().end()).size(), 36u);
  EXPECT_EQ(upos.index_of("NOUN"), 7u);
  EXPECT_FALSE(upos.index_of("NN").has_value());
  for (const auto& p : penn.tags()) EXPECT_TRUE(upos.index_of(penn_to_upos(p))) << p;
  EXPECT_EQ(error_code([] { penn_to_upos("XYZ"); }), "UnknownTag");
}

TEST(BuiltinTagger, ClosedClassAndDefault) {
  BuiltinTagger t;
  Nlq q{"q", {"the", "cat"}, "the cat"};
  EXPECT_EQ(t.tag(q, TagSet::UPOS), (std::vector<TaggedToken>{{"the", "DET"}, {"cat", "NOUN"}}));
  auto penn = tags_of(t.tag(tokenize("Who wrote the 3 tallest novels quickly in Berlin?"), TagSet::Penn));
  EXPECT_EQ(penn, (std::vector<std::string>{"WP", "VBD", "DT", "CD", "JJS", "NNS", "RB", "IN", "NNP"}));
  auto upos = tags_of(t.tag(tokenize("Where was the company founded?"), TagSet::UPOS));
  EXPECT_EQ(upos, (std::vector<std::string>{"ADV", "AUX", "DET", "NOUN", "VERB"}));
  // Every builtin tag belongs to the requested dictionary.
  for (const auto& text : fx::kTypeExamples) {
    for (auto set : {TagSet::UPOS, TagSet::Penn}) {
      for (const auto& tt : t.tag(tokenize(text), set)) {
        EXPECT_TRUE(TagDictionary::get(set).index_of(tt.tag)) << tt.token << "/" << tt.tag;
      }
    }
  }
  EXPECT_TRUE(BuiltinTagger::is_adjective("taller"));
  EXPECT_TRUE(BuiltinTagger::is_adjective("biggest"));
  EXPECT_TRUE(BuiltinTagger::is_adjective("earliest"));
  EXPECT_FALSE(BuiltinTagger::is_adjective("did"));
}

TEST(AnnotationTagger, PassthroughMappingAndErrors) {
  std::istringstream tsv(
      "questionId\ttokenIndex\ttoken\ttag\n"
      "q1\t1\tis\tVBZ\n"
      "q1\t0\tWhat\tWP\n"
      "q2\t0\tHello\tINTJ\n"
      "q3\t0\tFoo\tBOGUS\n");
  auto t = AnnotationTagger::load(tsv);
  auto q1 = Nlq{"q1", {"ignored"}, ""};
  EXPECT_EQ(t.tag(q1, TagSet::Penn), (std::vector<TaggedToken>{{"What", "WP"}, {"is", "VBZ"}}));
  EXPECT_EQ(tags_of(t.tag(q1, TagSet::UPOS)), (std::vector<std::string>{"PRON", "VERB"}));
  EXPECT_EQ(tags_of(t.tag(Nlq{"q2", {}, ""}, TagSet::UPOS)), (std::vector<std::string>{"INTJ"}));
  EXPECT_EQ(error_code([&] { t.tag(Nlq{"q2", {}, ""}, TagSet::Penn); }), "UnknownTag");
  EXPECT_EQ(error_code([&] { t.tag(Nlq{"q3", {}, ""}, TagSet::UPOS); }), "UnknownTag");
  EXPECT_EQ(error_code([&] { t.tag(Nlq{"q7", {}, ""}, TagSet::UPOS); }), "MissingAnnotation");

  std::istringstream bad("q1\t0\tWhat\n");
  EXPECT_EQ(error_code([&] { AnnotationTagger::load(bad); }), "MalformedFile");
}

TEST(Vectorize, CountsAndLengths) {
  auto empty = vectorize({}, TagSet::UPOS);
  EXPECT_EQ(empty.pos_freq, std::vector<std::int32_t>(17, 0));
  EXPECT_EQ(vectorize({}, TagSet::Penn).pos_freq.size(), 36u);

  std::vector<TaggedToken> tagged = {{"a", "DET"}, {"b", "NOUN"}, {"c", "VERB"}, {"d", "NOUN"}};
  auto v = vectorize(tagged, TagSet::UPOS);
  const auto& d = TagDictionary::get(TagSet::UPOS);
  EXPECT_EQ(v.pos_freq[*d.index_of("DET")], 1);
  EXPECT_EQ(v.pos_freq[*d.index_of("NOUN")], 2);
  EXPECT_EQ(v.pos_freq[*d.index_of("VERB")], 1);
  int total = 0;
  for (auto x : v.pos_freq) total += x;
  EXPECT_EQ(total, 4);

  std::vector<TaggedToken> bad = {{"x", "NN"}};
  EXPECT_EQ(error_code([&] { vectorize(bad, TagSet::UPOS); }), "UnknownTag");
}

TEST(Vectorize, AdditiveOverConcatenation) {
  BuiltinTagger t;
  auto a = t.tag(tokenize(fx::kTypeExamples[0]), TagSet::Penn);
  auto b = t.tag(tokenize(fx::kTypeExamples[1]), TagSet::Penn);
  auto both = a;
  both.insert(both.end(), b.begin(), b.end());
  auto va = vectorize(a, TagSet::Penn), vb = vectorize(b, TagSet::Penn);
  auto vab = vectorize(both, TagSet::Penn);
  for (std::size_t i = 0; i < vab.pos_freq.size(); ++i) {
    EXPECT_EQ(vab.pos_freq[i], va.pos_freq[i] + vb.pos_freq[i]);
  }
}

TEST(Distance, HandValues) {
  QuestionVector p{"p", TagSet::UPOS, std::vector<std::int32_t>(17, 0)};
  QuestionVector q = p;
  EXPECT_EQ(distance(p, p), 0.0);
  p.pos_freq[0] = 1;
  q.pos_freq[1] = 1;
  EXPECT_DOUBLE_EQ(distance(p, q), std::sqrt(2.0));
  p.pos_freq = std::vector<std::int32_t>(17, 0);
  q.pos_freq = std::vector<std::int32_t>(17, 0);
  p.pos_freq[0] = 3;
  q.pos_freq[1] = 4;
  EXPECT_EQ(distance(p, q), 5.0);

  QuestionVector r{"r", TagSet::Penn, std::vector<std::int32_t>(36, 0)};
  EXPECT_EQ(error_code([&] { distance(p, r); }), "DimensionMismatch");
}

TEST(Distance, MetricPropertiesOnRandomVectors) {
  std::mt19937 rng(42);
  for (auto set : {TagSet::UPOS, TagSet::Penn}) {
    auto vs = fx::random_vectors(rng, 1000, set, 6);
    for (std::size_t i = 0; i + 2 < vs.size(); ++i) {
      const auto &a = vs[i], &b = vs[i + 1], &c = vs[i + 2];
      double ab = distance(a, b), bc = distance(b, c), ac = distance(a, c);
      EXPECT_GE(ab, 0.0);
      EXPECT_EQ(distance(a, a), 0.0);
      EXPECT_EQ(ab, distance(b, a));
      EXPECT_LE(ac, ab + bc + 1e-12);
      EXPECT_EQ(ab == 0.0, a.pos_freq == b.pos_freq);
      EXPECT_NEAR(ab, fx::naive_distance(a, b), 1e-12);
    }
  }
}

TEST(SimdKernels, MatchScalarExactly) {
  using namespace kgqa::simd;
  std::mt19937 rng(99);
  std::uniform_int_distribution<std::int32_t> small(-50, 50);
  std::uniform_int_distribution<std::int32_t> big(-(1 << 29), 1 << 29);
  for (auto isa : {Isa::Avx2, Isa::Neon}) {
    if (!isa_available(isa)) continue;
    for (std::size_t n = 0; n <= 70; ++n) {
      for (int rep = 0; rep < 20; ++rep) {
        std::vector<std::int32_t> a(n), b(n);
        for (std::size_t i = 0; i < n; ++i) {
          a[i] = rep % 2 ? big(rng) : small(rng);
          b[i] = rep % 2 ? big(rng) : small(rng);
        }
        EXPECT_EQ(squared_distance(isa, a.data(), b.data(), n),
                  squared_distance(Isa::Scalar, a.data(), b.data(), n))
            << isa_name(isa) << " n=" << n;
      }
    }
  }
  EXPECT_TRUE(isa_available(active_isa()));
}

TEST(DistanceMatrix, SmallCases) {
  std::mt19937 rng(3);
  auto one = fx::random_vectors(rng, 1, TagSet::UPOS);
  auto m1 = build_distance_matrix(one);
  EXPECT_EQ(m1.size(), 1u);
  EXPECT_EQ(m1.row_major(), std::vector<double>{0.0});

  auto three = fx::random_vectors(rng, 3, TagSet::UPOS);
  auto m3 = build_distance_matrix(three);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(m3.at(i, j), distance(three[i], three[j]));
  }
  auto rm = m3.row_major();
  EXPECT_EQ(rm[1 * 3 + 2], m3.at(1, 2));
  EXPECT_EQ(rm[2 * 3 + 1], m3.at(1, 2));

  auto dup = three;
  dup[1].question_id = dup[0].question_id;
  EXPECT_EQ(error_code([&] { build_distance_matrix(dup); }), "DuplicateQuestionId");
  auto mixed = three;
  mixed[2] = fx::random_vectors(rng, 1, TagSet::Penn)[0];
  mixed[2].question_id = "x";
  EXPECT_EQ(error_code([&] { build_distance_matrix(mixed); }), "DimensionMismatch");
}

TEST(DistanceMatrix, PermutationEquivariantAndThreadIndependent) {
  std::mt19937 rng(11);
  auto vs = fx::random_vectors(rng, 60, TagSet::Penn);
  auto m = build_distance_matrix(vs, 1);
  auto m4 = build_distance_matrix(vs, 4);
  EXPECT_EQ(m.row_major(), m4.row_major());

  std::vector<std::size_t> perm(vs.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<QuestionVector> shuffled;
  for (auto p : perm) shuffled.push_back(vs[p]);
  auto ms = build_distance_matrix(shuffled, 3);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    for (std::size_t j = 0; j < perm.size(); ++j) EXPECT_EQ(ms.at(i, j), m.at(perm[i], perm[j]));
  }
}

TEST(KNearest, SmallCorpusAndDuplicates) {
  std::mt19937 rng(5);
  auto two = fx::random_vectors(rng, 2, TagSet::UPOS);
  auto m = build_distance_matrix(two);
  EXPECT_EQ(k_nearest(m, "q0").size(), 1u);

  auto vs = fx::random_vectors(rng, 10, TagSet::UPOS, 9);
  vs.push_back(vs[4]);
  vs.back().question_id = "zz";
  auto md = build_distance_matrix(vs);
  auto nn = k_nearest(md, "q4", 3);
  ASSERT_FALSE(nn.empty());
  EXPECT_EQ(nn[0].question_id, "zz");
  EXPECT_EQ(nn[0].distance, 0.0);

  EXPECT_EQ(error_code([&] { k_nearest(md, "nope"); }), "UnknownQuestion");
  EXPECT_EQ(error_code([&] { k_nearest(md, "q1", 0); }), "InvalidArgument");
}

TEST(KNearest, MatchesSortOracle) {
  std::mt19937 rng(17);
  for (int corpus = 0; corpus < 10; ++corpus) {
    auto vs = fx::random_vectors(rng, 20, TagSet::UPOS, 2);
    auto m = build_distance_matrix(vs);
    for (std::size_t i = 0; i < vs.size(); ++i) {
      for (std::size_t k : {1u, 5u, 20u}) {
        auto got = k_nearest(m, vs[i].question_id, k);
        auto want = fx::sort_oracle(vs, i, k);
        ASSERT_EQ(got.size(), want.size());
        std::set<std::string> seen;
        for (std::size_t r = 0; r < got.size(); ++r) {
          EXPECT_EQ(got[r].question_id, want[r].question_id);
          EXPECT_DOUBLE_EQ(got[r].distance, want[r].distance);
          EXPECT_NE(got[r].question_id, vs[i].question_id);
          EXPECT_TRUE(seen.insert(got[r].question_id).second);
          if (r > 0) EXPECT_LE(got[r - 1].distance, got[r].distance);
        }
      }
    }
  }
}

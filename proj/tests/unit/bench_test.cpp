#include <gtest/gtest.h>

#include <random>

#include "kgqa/bench/io.hpp"
#include "kgqa/bench/overlap.hpp"
#include "kgqa/error.hpp"
#include "support/benchmarks.hpp"
#include "support/fixtures.hpp"

using namespace kgqa::bench;
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

template <typename F>
std::string error_message(F&& f) {
  try {
    f();
  } catch (const kgqa::Error& e) {
    return e.what();
  }
  return "";
}

const char* kQald = R"({
  "dataset": {"id": "qald-test"},
  "questions": [
    {"id": "1",
     "question": [{"language": "de", "string": "Ist Michelle Obama die Frau von Barack Obama?"},
                  {"language": "en", "string": "Is Michelle Obama the wife of Barack Obama?"}],
     "query": {"sparql": "ASK WHERE { dbr:Barack_Obama dbo:spouse dbr:Michelle_Obama }"},
     "answers": [{"head": {}, "boolean": true}]},
    {"id": 2,
     "question": [{"language": "en", "string": "Which companies were founded in Beijing?"}],
     "query": {"sparql": "SELECT ?x WHERE { ?x dbo:foundationPlace dbr:Beijing . ?x rdf:type ?t }"},
     "answers": [{"head": {"vars": ["x"]}, "results": {"bindings": [
        {"x": {"type": "uri", "value": "http://dbpedia.org/resource/Lenovo"}},
        {"x": {"type": "uri", "value": "http://dbpedia.org/resource/Baidu"}},
        {"x": {"type": "uri", "value": "http://dbpedia.org/resource/Lenovo"}}]}}]},
    {"id": 3,
     "question": [{"language": "en", "string": "Who is the mayor of Berlin?"}],
     "query": {"sparql": "SELECT ?m WHERE { res:Berlin dbo:leader ?m } ORDER BY"},
     "answers": []},
    {"id": 4,
     "question": [{"language": "en", "string": "How many moons does Mars have?"}],
     "query": {},
     "answers": [{"results": {"bindings": [{"c": {"type": "literal", "value": "2", "datatype": "http://www.w3.org/2001/XMLSchema#integer"}}]}}]}
  ]
})";

}  // namespace

TEST(ImportQald, EntriesAnswersAndStatuses) {
  auto b = import_qald(kQald);
  EXPECT_EQ(b.name, "qald-test");
  ASSERT_EQ(b.entries.size(), 4u);

  const auto& ask = b.entries[0];
  EXPECT_EQ(ask.question_id, "1");
  EXPECT_EQ(ask.nlq.raw_text, "Is Michelle Obama the wife of Barack Obama?");
  EXPECT_EQ(ask.language, "en");
  EXPECT_EQ(ask.gold, AnswerSet::boolean(true));
  EXPECT_EQ(ask.query.status, QueryStatus::Parsed);

  const auto& sel = b.entries[1];
  EXPECT_EQ(sel.question_id, "2");
  EXPECT_EQ(sel.gold.values, (std::vector<std::string>{"http://dbpedia.org/resource/Baidu",
                                                       "http://dbpedia.org/resource/Lenovo"}));

  const auto& broken = b.entries[2];
  EXPECT_EQ(broken.query.status, QueryStatus::ParseFailed);
  EXPECT_FALSE(broken.query.error.empty());
  EXPECT_TRUE(broken.gold.values.empty());
  EXPECT_EQ(b.parse_failures(), 1u);

  EXPECT_EQ(b.entries[3].query.status, QueryStatus::Absent);
  EXPECT_EQ(b.entries[3].gold.values, std::vector<std::string>{"2"});
  EXPECT_NE(b.find("4"), nullptr);
  EXPECT_EQ(b.find("5"), nullptr);
}

TEST(ImportQald, Errors) {
  EXPECT_EQ(error_code([] { import_qald(R"({"questions": []})"); }), "NoQuestions");
  EXPECT_EQ(error_code([] { import_qald("{not json"); }), "MalformedFile");
  auto msg = error_message([] {
    import_qald(R"({"questions": [{"id": 1, "question": [{"language": "en", "string": "Hi there"}],
                    "answers": [{"results": {"bindings": [{"x": {"type": "uri"}}]}}]}]})");
  });
  EXPECT_NE(msg.find("$.questions[0].answers[0].results.bindings[0].x"), std::string::npos) << msg;
  EXPECT_EQ(error_code([] {
              import_qald(R"({"questions": [{"id": 1, "question": [{"string": "A"}]},
                                             {"id": "1", "question": [{"string": "B"}]}]})");
            }),
            "DuplicateQuestionId");
}

TEST(ImportTsv, ColumnsAnswersAndBooleans) {
  auto b = import_generic(
      "id\tquestion\tanswers\n"
      "q1\tWho wrote Dune?\thttp://ex/Herbert\n"
      "q2\tIs water wet?\ttrue\n"
      "q3\tList primes below 6\t2|3|5|3\n"
      "q4\tWhat has a pipe?\ta\\|b|c\n"
      "q5\tNothing here?\t\n",
      GenericFormat::Tsv, "tsv-bench");
  ASSERT_EQ(b.entries.size(), 5u);
  EXPECT_EQ(b.name, "tsv-bench");
  for (const auto& e : b.entries) EXPECT_EQ(e.query.status, QueryStatus::Absent);
  EXPECT_EQ(b.entries[1].gold, AnswerSet::boolean(true));
  EXPECT_EQ(b.entries[2].gold.values, (std::vector<std::string>{"2", "3", "5"}));
  EXPECT_EQ(b.entries[3].gold.values, (std::vector<std::string>{"a|b", "c"}));
  EXPECT_TRUE(b.entries[4].gold.values.empty());

  auto withq = import_generic(
      "id\tquestion\tanswers\tquery\n"
      "x\tWhat?\tv\tSELECT ?x WHERE { ?x a dbo:Film }\n",
      GenericFormat::Tsv);
  EXPECT_EQ(withq.entries[0].query.status, QueryStatus::Parsed);
}

TEST(ImportTsv, Errors) {
  EXPECT_EQ(error_code([] {
              import_generic("id\tquestion\tanswers\na\tQ one\tx\na\tQ two\ty\n", GenericFormat::Tsv);
            }),
            "DuplicateQuestionId");
  auto msg = error_message([] {
    import_generic("id\tquestion\tanswers\na\tQ one\tx\na\tQ two\ty\n", GenericFormat::Tsv);
  });
  EXPECT_NE(msg.find("'a'"), std::string::npos);
  EXPECT_EQ(error_code([] { import_generic("id\tquestion\n", GenericFormat::Tsv); }), "MalformedFile");
  EXPECT_EQ(error_code([] { import_generic("id\tquestion\tanswers\nonly-id\n", GenericFormat::Tsv); }),
            "MalformedFile");
}

TEST(NativeFormat, RoundTrip) {
  Benchmark b = import_qald(kQald);
  b.version = 9;
  b.target_kg = "DBpedia";
  b.entries[1].language = "de";
  auto text = export_native(b);
  auto again = import_generic(text, GenericFormat::Json);
  EXPECT_EQ(again, b);
  EXPECT_EQ(export_native(again), text);
}

TEST(NativeFormat, Errors) {
  EXPECT_EQ(error_code([] { import_generic(R"({"meta": {}})", GenericFormat::Json); }), "MalformedFile");
  auto msg = error_message([] {
    import_generic(R"({"questions": [{"id": "a", "question": "Q", "answers": {"values": [true]}}]})",
                   GenericFormat::Json);
  });
  EXPECT_NE(msg.find("$.questions[0].answers.values[0]"), std::string::npos) << msg;
}

TEST(Deduplicate, NewestWins) {
  Benchmark v1, v2;
  v1.name = "v1";
  v2.name = "v2";
  v1.entries.push_back(fx::entry("1", "Who founded Intel?", fx::query_for(1, 0), {"old"}));
  v2.entries.push_back(fx::entry("7", "who founded   intel", fx::query_for(1, 1), {"new"}));
  std::vector<Benchmark> list = {v1, v2};
  auto d = deduplicate(list);
  ASSERT_EQ(d.entries.size(), 1u);
  EXPECT_EQ(d.entries[0].question_id, "7");
  EXPECT_EQ(d.entries[0].gold.values, std::vector<std::string>{"new"});
  EXPECT_EQ(d.entries[0].query.text, fx::query_for(1, 1));
}

TEST(Deduplicate, DisjointUnionAndFixtureCount) {
  auto versions = fx::three_versions();
  auto d = deduplicate(versions);
  EXPECT_EQ(d.entries.size(), 26u);
  std::set<std::string> ids;
  for (const auto& e : d.entries) EXPECT_TRUE(ids.insert(e.question_id).second) << e.question_id;

  std::vector<Benchmark> disjoint = {versions[0]};
  Benchmark other;
  other.name = "other";
  for (int i = 0; i < 4; ++i) other.entries.push_back(fx::entry("q" + std::to_string(i), fx::question_for(500 + i), ""));
  disjoint.push_back(other);
  EXPECT_EQ(deduplicate(disjoint).entries.size(), 14u);
}

TEST(Deduplicate, Idempotent) {
  auto versions = fx::three_versions();
  auto d = deduplicate(versions);
  std::vector<Benchmark> once = {d};
  EXPECT_EQ(deduplicate(once), d);
}

TEST(Overlap, RepeatsAgainstAllOlderVersions) {
  auto report = overlap_analysis(fx::overlap_fixture());
  ASSERT_EQ(report.rows.size(), 3u);
  const auto& latest = report.rows[2];
  EXPECT_EQ(latest.name, "latest");
  EXPECT_EQ(latest.total, 10u);
  EXPECT_EQ(latest.repeated_changed_query, 6u);
  EXPECT_EQ(latest.repeated_same_query, 3u);
  EXPECT_EQ(latest.new_questions, 1u);

  EXPECT_EQ(report.rows[0].new_questions, 6u);
  EXPECT_EQ(report.rows[1].repeated_same_query, 3u);
  EXPECT_EQ(report.rows[1].repeated_changed_query, 2u);
  EXPECT_EQ(report.rows[1].new_questions, 3u);
  for (const auto& r : report.rows) {
    EXPECT_EQ(r.total, r.repeated_same_query + r.repeated_changed_query + r.new_questions);
  }
}

TEST(Overlap, VerbatimRepeatAndReuse) {
  Benchmark v1, v2, v3;
  v1.name = "v1";
  v2.name = "v2";
  v3.name = "v3";
  v1.entries.push_back(fx::entry("1", "Who is it?", fx::query_for(1)));
  v2.entries.push_back(fx::entry("1", "Who is it?", fx::query_for(1)));
  v2.entries.push_back(fx::entry("2", "Something else?", ""));
  v3.entries.push_back(fx::entry("9", "Something else?", ""));
  // Formatting differences do not count as a changed query.
  v3.entries.push_back(fx::entry("10", "Who is it", "SELECT ?x\nWHERE {?x <http://ex/p1> <http://ex/o0>}"));
  std::vector<Benchmark> list = {v1, v2, v3};
  auto r = overlap_analysis(list);
  EXPECT_EQ(r.rows[1].repeated_same_query, 1u);
  EXPECT_EQ(r.rows[2].repeated_same_query, 2u);

  std::vector<Benchmark> one = {v1};
  EXPECT_EQ(error_code([&] { overlap_analysis(one); }), "NeedTwoBenchmarks");
}

TEST(ImportFuzz, RandomBytesNeverCrash) {
  std::mt19937 rng(1234);
  std::uniform_int_distribution<int> byte(0, 255);
  std::uniform_int_distribution<int> len(0, 200);
  const std::string seeds[] = {kQald, "id\tquestion\tanswers\nq\tWho?\tx\n"};
  for (int i = 0; i < 2000; ++i) {
    std::string s = seeds[i % 2];
    // Mutate a valid file or use pure noise.
    if (i % 3 == 0) {
      s.assign(static_cast<std::size_t>(len(rng)), '\0');
      for (auto& c : s) c = static_cast<char>(byte(rng));
    } else {
      std::uniform_int_distribution<std::size_t> pos(0, s.size() - 1);
      for (int k = 0; k < 4; ++k) s[pos(rng)] = static_cast<char>(byte(rng));
    }
    for (auto fmt : {0, 1, 2}) {
      try {
        if (fmt == 0) import_qald(s);
        if (fmt == 1) import_generic(s, GenericFormat::Json);
        if (fmt == 2) import_generic(s, GenericFormat::Tsv);
      } catch (const kgqa::Error&) {
      }
    }
  }
  SUCCEED();
}

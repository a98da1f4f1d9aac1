#include <gtest/gtest.h>

#include <random>

#include "kgqa/sparql/parser.hpp"
#include "support/fixtures.hpp"

using namespace kgqa::sparql;
using kgqa::fixtures::kChainSetQuery;
using kgqa::fixtures::kMinimalAsk;
using kgqa::fixtures::kQueryCorpus;
using kgqa::fixtures::kUnionQuery;

namespace {

std::size_t count_elements_of(const GroupPattern& g, auto pred) {
  std::size_t n = 0;
  for (const auto& e : g.elements) n += pred(e) ? 1 : 0;
  return n;
}

}  // namespace

TEST(ParseQuery, ChainSetQuery) {
  auto ast = parse_query(kChainSetQuery);
  EXPECT_EQ(ast.type, QueryType::Select);
  EXPECT_TRUE(ast.modifiers.distinct);
  ASSERT_EQ(ast.modifiers.projection.size(), 1u);
  EXPECT_EQ(ast.modifiers.projection[0].variable, "uri");
  EXPECT_EQ(collect_triple_patterns(ast).size(), 3u);
  EXPECT_EQ(count_elements_of(ast.where,
                              [](const GraphPattern& e) {
                                return std::holds_alternative<FilterPattern>(e.node);
                              }),
            1u);
  ASSERT_EQ(ast.modifiers.order_by.size(), 1u);
  EXPECT_EQ(ast.modifiers.order_by[0].expression, "?proj");
  EXPECT_FALSE(ast.modifiers.order_by[0].ascending);
  EXPECT_EQ(ast.modifiers.limit, 1u);

  const auto triples = collect_triple_patterns(ast);
  EXPECT_EQ(triples[0].subject, Term::iri("http://dbpedia.org/resource/Burj_Khalifa"));
  EXPECT_EQ(triples[0].predicate, Term::iri("http://dbpedia.org/ontology/floorCount"));
  EXPECT_EQ(triples[1].predicate, Term::iri(kRdfType));
  const auto& filter = std::get<FilterPattern>(ast.where.elements.back().node);
  EXPECT_EQ(filter.expression, "( ?proj < ?burj )");
  EXPECT_EQ(filter.variables, (std::vector<std::string>{"burj", "proj"}));
}

TEST(ParseQuery, MinimalAsk) {
  auto ast = parse_query(kMinimalAsk);
  EXPECT_EQ(ast.type, QueryType::Ask);
  EXPECT_TRUE(ast.modifiers.projection.empty());
  auto triples = collect_triple_patterns(ast);
  ASSERT_EQ(triples.size(), 1u);
  EXPECT_EQ(triples[0].predicate.lexical, kRdfType);
  EXPECT_EQ(triples[0].object, Term::iri("http://ex/T"));
}

TEST(ParseQuery, TruncatedInputReportsEof) {
  const std::string text = "SELECT ?x WHERE { ?x <http://ex/p> ";
  try {
    parse_query(text);
    FAIL() << "expected SyntaxError";
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.token(), "<EOF>");
    EXPECT_EQ(e.line(), 1u);
    EXPECT_EQ(e.column(), text.size() + 1);
    EXPECT_EQ(e.code(), "SyntaxError");
  }
}

TEST(ParseQuery, SyntaxErrorPositionIsOneBased) {
  try {
    parse_query("SELECT ?x\nWHERE { ?x ?p }");
    FAIL();
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 15u);
    EXPECT_EQ(e.token(), "}");
  }
}

TEST(ParseQuery, UnionIsBinaryAndLeftNested) {
  auto ast = parse_query(kUnionQuery);
  ASSERT_EQ(ast.where.elements.size(), 2u);
  EXPECT_TRUE(std::holds_alternative<BasicPattern>(ast.where.elements[0].node));
  const auto& u = std::get<UnionPattern>(ast.where.elements[1].node);
  EXPECT_TRUE(std::holds_alternative<GroupPattern>(u.left->node));
  EXPECT_TRUE(std::holds_alternative<GroupPattern>(u.right->node));
  EXPECT_EQ(collect_triple_patterns(ast).size(), 3u);

  auto three = parse_query("SELECT ?x WHERE { { ?x a dbo:A } UNION { ?x a dbo:B } UNION { ?x a dbo:C } }");
  const auto& outer = std::get<UnionPattern>(three.where.elements[0].node);
  EXPECT_TRUE(std::holds_alternative<UnionPattern>(outer.left->node));
  EXPECT_TRUE(std::holds_alternative<GroupPattern>(outer.right->node));
}

TEST(ParseQuery, AbbreviationsExpandInSourceOrder) {
  auto ast = parse_query(
      "PREFIX f: <http://f/>\nSELECT ?n WHERE { ?p f:name ?n ; f:mbox ?a , ?b . }");
  auto t = collect_triple_patterns(ast);
  ASSERT_EQ(t.size(), 3u);
  EXPECT_EQ(t[0].predicate.lexical, "http://f/name");
  EXPECT_EQ(t[1].object.lexical, "a");
  EXPECT_EQ(t[2].object.lexical, "b");
  for (const auto& tp : t) EXPECT_EQ(tp.subject, Term::variable("p"));
}

TEST(ParseQuery, Literals) {
  auto ast = parse_query(
      "SELECT ?x WHERE { ?x <http://p> \"chat\"@fr , 'it\\'s' , 42 , -1.5 , 2e3 , true , "
      "\"5\"^^xsd:int }");
  auto t = collect_triple_patterns(ast);
  ASSERT_EQ(t.size(), 7u);
  EXPECT_EQ(t[0].object, Term::literal("chat", "", "fr"));
  EXPECT_EQ(t[2].object, Term::literal("42", std::string(kXsd) + "integer"));
  EXPECT_EQ(t[3].object, Term::literal("-1.5", std::string(kXsd) + "decimal"));
  EXPECT_EQ(t[4].object, Term::literal("2e3", std::string(kXsd) + "double"));
  EXPECT_EQ(t[5].object, Term::literal("true", std::string(kXsd) + "boolean"));
  EXPECT_EQ(t[6].object, Term::literal("5", std::string(kXsd) + "int"));
}

TEST(ParseQuery, CommentsStrippedOutsideStringsAndIris) {
  auto ast = parse_query(
      "SELECT ?x # the answer\nWHERE { ?x <http://ex/p#frag> \"a # b\" } # done");
  auto t = collect_triple_patterns(ast);
  ASSERT_EQ(t.size(), 1u);
  EXPECT_EQ(t[0].predicate.lexical, "http://ex/p#frag");
  EXPECT_EQ(t[0].object.lexical, "a # b");
}

TEST(ParseQuery, AggregatesGroupHavingOffset) {
  auto ast = parse_query(
      "SELECT ?c (COUNT(DISTINCT ?x) AS ?n) WHERE { ?x <http://p> ?c } GROUP BY ?c "
      "HAVING (COUNT(?x) > 2) ORDER BY DESC(?n) OFFSET 3");
  ASSERT_EQ(ast.modifiers.projection.size(), 2u);
  EXPECT_EQ(ast.modifiers.projection[1].variable, "n");
  EXPECT_EQ(ast.modifiers.projection[1].expression, "COUNT(DISTINCT ?x)");
  EXPECT_EQ(leading_aggregate(ast.modifiers.projection[1].expression), "COUNT");
  EXPECT_EQ(ast.modifiers.group_by, std::vector<std::string>{"?c"});
  EXPECT_EQ(ast.modifiers.having, "(COUNT(?x) > 2)");
  EXPECT_EQ(ast.modifiers.offset, 3u);
  EXPECT_FALSE(ast.modifiers.limit.has_value());
}

TEST(ParseQuery, NotExistsAndMinus) {
  auto ast = parse_query(
      "SELECT ?x WHERE { ?x a dbo:P . FILTER NOT EXISTS { ?x dbo:q ?y } MINUS { ?x dbo:r ?z } }");
  const auto& f = std::get<FilterPattern>(ast.where.elements[1].node);
  EXPECT_TRUE(f.not_exists);
  ASSERT_TRUE(f.inner.has_value());
  EXPECT_TRUE(std::holds_alternative<MinusPattern>(ast.where.elements[2].node));
  EXPECT_EQ(collect_triple_patterns(ast).size(), 3u);
}

TEST(ParseQuery, UnsupportedFeaturesAreNamed) {
  auto feature_of = [](const std::string& q) -> std::string {
    try {
      parse_query(q);
    } catch (const UnsupportedFeature& e) {
      return e.feature();
    }
    return "";
  };
  EXPECT_EQ(feature_of("CONSTRUCT { ?s ?p ?o } WHERE { ?s ?p ?o }"), "CONSTRUCT");
  EXPECT_EQ(feature_of("DESCRIBE ?x WHERE { ?x ?p ?o }"), "DESCRIBE");
  EXPECT_EQ(feature_of("SELECT ?x WHERE { ?x dbo:p/dbo:q ?y }"), "property path");
  EXPECT_EQ(feature_of("SELECT ?x WHERE { ?x dbo:p* ?y }"), "property path");
  EXPECT_EQ(feature_of("SELECT ?x WHERE { ?x ^dbo:p ?y }"), "property path");
  EXPECT_EQ(feature_of("SELECT ?x WHERE { { SELECT ?x WHERE { ?x ?p ?o } } }"), "subquery");
  EXPECT_EQ(feature_of("SELECT ?x WHERE { SERVICE <http://e> { ?x ?p ?o } }"), "SERVICE");
  EXPECT_EQ(feature_of("SELECT ?x WHERE { ?x ?p _:b }"), "blank node");
  EXPECT_EQ(feature_of("SELECT ?x WHERE { ?x ?p ?o BIND(1 AS ?y) }"), "BIND");
  EXPECT_EQ(feature_of("SELECT ?x FROM <http://g> WHERE { ?x ?p ?o }"), "FROM");
}

TEST(ParseQuery, UndeclaredPrefixIsSyntaxError) {
  EXPECT_THROW(parse_query("SELECT ?x WHERE { ?x nope:p ?y }"), SyntaxError);
  ParseOptions strict;
  strict.implicit_prefixes.clear();
  EXPECT_THROW(parse_query(kChainSetQuery, strict), SyntaxError);
}

TEST(ParseQuery, ProjectedVariableMustOccurInPattern) {
  EXPECT_THROW(parse_query("SELECT ?z WHERE { ?x ?p ?o }"), SyntaxError);
  EXPECT_NO_THROW(parse_query("SELECT (COUNT(?x) AS ?n) WHERE { ?x ?p ?o } ORDER BY ?n"));
  EXPECT_THROW(parse_query("SELECT ?x WHERE { ?x ?p ?o } ORDER BY ?q"), SyntaxError);
}

TEST(ParseQuery, DeepNestingIsRejected) {
  std::string q = "SELECT ?x WHERE ";
  for (int i = 0; i < 200; ++i) q += "{";
  q += "?x ?p ?o";
  for (int i = 0; i < 200; ++i) q += "}";
  EXPECT_THROW(parse_query(q), SyntaxError);
}

TEST(ParseQuery, InvalidUtf8IsSyntaxError) {
  EXPECT_THROW(parse_query(std::string("SELECT ?x WHERE { ?x ?p \"\xff\" }")), SyntaxError);
}

TEST(PrintQuery, RoundTripPreservesStructure) {
  for (const auto& text : kQueryCorpus) {
    SCOPED_TRACE(text);
    auto ast = parse_query(text);
    auto printed = print_query(ast);
    QueryAst again;
    ASSERT_NO_THROW(again = parse_query(printed)) << printed;
    EXPECT_TRUE(structurally_equal(ast, again)) << printed;
    EXPECT_EQ(print_query(again), printed);
    EXPECT_EQ(collect_triple_patterns(again).size(), collect_triple_patterns(ast).size());
  }
}

TEST(PrintQuery, CanonicalLayout) {
  auto printed = print_query(parse_query(kChainSetQuery));
  EXPECT_EQ(printed,
            "SELECT DISTINCT ?uri\n"
            "WHERE {\n"
            "  <http://dbpedia.org/resource/Burj_Khalifa> <http://dbpedia.org/ontology/floorCount> ?burj .\n"
            "  ?uri a <http://dbpedia.org/ontology/Building> .\n"
            "  ?uri <http://dbpedia.org/ontology/floorCount> ?proj .\n"
            "  FILTER ( ?proj < ?burj )\n"
            "}\n"
            "ORDER BY DESC(?proj)\n"
            "LIMIT 1\n");
  auto union_printed = print_query(parse_query(kUnionQuery));
  EXPECT_NE(union_printed.find("  }\n  UNION\n  {\n"), std::string::npos) << union_printed;
}

TEST(PrintQuery, DeclaredPrefixesCompactIris) {
  auto printed = print_query(parse_query("PREFIX ex: <http://ex.org/>\nASK { ex:a ex:b <http://other/c> }"));
  EXPECT_EQ(printed, "PREFIX ex: <http://ex.org/>\nASK\nWHERE {\n  ex:a ex:b <http://other/c> .\n}\n");
}

TEST(ParseQuery, PrefixExpansionLeavesNoDeclaredPrefix) {
  for (const auto& text : kQueryCorpus) {
    auto ast = parse_query(text);
    for (const auto& tp : collect_triple_patterns(ast)) {
      for (const Term* t : {&tp.subject, &tp.predicate, &tp.object}) {
        if (t->kind != TermKind::Iri) continue;
        for (const auto& [prefix, base] : ast.prefixes) {
          EXPECT_NE(t->lexical.rfind(prefix + ":", 0), 0u) << t->lexical;
        }
        for (const auto& [prefix, base] : well_known_prefixes()) {
          EXPECT_NE(t->lexical.rfind(prefix + ":", 0), 0u) << t->lexical;
        }
      }
    }
  }
}

TEST(ParseQuery, RandomMutationsNeverCrash) {
  std::mt19937 rng(7);
  std::size_t parsed = 0;
  for (int i = 0; i < 5000; ++i) {
    std::string q = kQueryCorpus[rng() % kQueryCorpus.size()];
    int edits = 1 + static_cast<int>(rng() % 4);
    for (int k = 0; k < edits && !q.empty(); ++k) {
      std::size_t at = rng() % q.size();
      switch (rng() % 3) {
        case 0: q[at] = static_cast<char>(rng() % 256); break;
        case 1: q.erase(at, 1 + rng() % 5); break;
        default: q.insert(at, 1, "{}().;,?<>\"'#"[rng() % 13]);
      }
    }
    try {
      parse_query(q);
      ++parsed;
    } catch (const kgqa::Error&) {
    }
  }
  EXPECT_GT(parsed, 0u);
}

#pragma once

#include <string>
#include <vector>

namespace kgqa::fixtures {

/// Chain-Set query from QALD-9 ("Which building after the Burj Khalifa has
/// the most floors?"), verbatim including the undeclared prefixes.
inline const std::string kChainSetQuery = R"(SELECT DISTINCT ?uri WHERE {
    res:Burj_Khalifa dbo:floorCount ?burj .
    ?uri rdf:type dbo:Building .
    ?uri dbo:floorCount ?proj
    FILTER ( ?proj < ?burj )
} ORDER BY DESC(?proj) LIMIT 1
)";

/// "Which companies have more than 1 million employees or founded in Beijing"
inline const std::string kUnionQuery = R"(SELECT DISTINCT ?uri WHERE {
    ?uri a dbo:Company {
        ?uri dbo:numberOfEmployees ?n .
        FILTER ( ?n > 1000000 )
    } UNION {
        ?uri dbo:foundationPlace dbr:Beijing.
    }
}
)";

inline const std::string kUnionQuestion =
    "Which companies have more than 1 million employees or founded in Beijing";

inline const std::string kMinimalAsk = "ASK { ?x a <http://ex/T> }";

/// The five question-type examples, in the order Wh, How, YesNo, Request,
/// Topicalized.
inline const std::vector<std::string> kTypeExamples = {
    "Where was the first ford motor company located?",
    "How many different currencies are used in the places governed by the president of France?",
    "Is Michelle Obama the wife of Barack Obama?",
    "Can you name all the states of the US?",
    "Adobe pdf supports how many computing platforms?",
};

/// Round-trip corpus; together these use every supported keyword.
inline const std::vector<std::string> kQueryCorpus = {
    kChainSetQuery,
    kUnionQuery,
    kMinimalAsk,
    "SELECT ?x WHERE { ?x <http://ex/p> ?y }",
    "SELECT * WHERE { ?s ?p ?o } LIMIT 10",
    "SELECT ?s WHERE { ?s ?p ?o } LIMIT 10 OFFSET 20",
    "SELECT ?s WHERE { ?s ?p ?o } OFFSET 5",
    "PREFIX ex: <http://example.org/>\nSELECT ?a ?b WHERE { ?a ex:knows ?b . ?b ex:age ?age . FILTER(?age >= 18) }",
    "PREFIX foaf: <http://xmlns.com/foaf/0.1/>\nSELECT ?name WHERE { ?p foaf:name ?name ; foaf:mbox ?m , ?m2 . }",
    "SELECT (COUNT(DISTINCT ?x) AS ?c) WHERE { ?x a dbo:Film }",
    "SELECT COUNT(?x) WHERE { ?x a dbo:Film }",
    "SELECT ?c (SUM(?v) AS ?total) WHERE { ?c dbo:value ?v } GROUP BY ?c HAVING (SUM(?v) > 10)",
    "SELECT ?c (AVG(?v) AS ?mean) (MIN(?v) AS ?lo) (MAX(?v) AS ?hi) WHERE { ?c dbo:value ?v } GROUP BY ?c ORDER BY DESC(?mean)",
    "SELECT ?x WHERE { ?x dbo:birthPlace dbr:Berlin . OPTIONAL { ?x dbo:deathPlace ?d } }",
    "SELECT ?x WHERE { ?x dbo:birthPlace dbr:Berlin . FILTER NOT EXISTS { ?x dbo:deathPlace ?d } }",
    "SELECT ?x WHERE { ?x a dbo:Person . MINUS { ?x dbo:nationality dbr:Germany } }",
    "SELECT ?x WHERE { { ?x a dbo:A } UNION { ?x a dbo:B } UNION { ?x a dbo:C } }",
    "SELECT DISTINCT ?x WHERE { ?x rdfs:label \"Berlin\"@en }",
    "SELECT ?x WHERE { ?x dbo:population ?p . FILTER(?p > 1.5e6 && ?p < 20000000) }",
    "SELECT ?x WHERE { ?x dbo:height \"1.98\"^^xsd:double }",
    "SELECT ?x WHERE { ?x dbo:elevation -12 ; dbo:flag true . }",
    "ASK WHERE { dbr:Michelle_Obama dbo:spouse dbr:Barack_Obama }",
    "SELECT ?x WHERE { ?x dbo:name ?n . FILTER regex(?n, \"^A\", \"i\") }",
    "SELECT ?x WHERE { ?x dbo:name ?n . FILTER(lang(?n) = 'en') } ORDER BY ?n LIMIT 5",
    "SELECT ?x ?y WHERE { ?x dbo:p ?y . ?y dbo:q ?z . ?z dbo:r ?x }",
    "SELECT ?x WHERE { ?x dbo:p ?a . ?x dbo:q ?b . ?x dbo:r ?c }",
    "SELECT REDUCED ?x WHERE { ?x dbo:p ?y }",
    "# leading comment\nSELECT ?x WHERE { ?x <http://ex/p#frag> \"a # not a comment\" # trailing\n}",
    "SELECT ?x WHERE { ?x dbo:p ?y . OPTIONAL { ?y dbo:q ?z . FILTER(?z != ?x) } } ORDER BY ASC(?x) DESC(?y)",
    "SELECT ?x WHERE { ?x dbo:p ?y { ?y dbo:q ?z } }",
    "SELECT ?x WHERE { ?x dbo:p \"multi\\nline \\\"quoted\\\"\" }",
    "SELECT DISTINCT ?uri WHERE { ?uri dbo:a ?v } ORDER BY DESC(?v) OFFSET 1 LIMIT 3",
    "PREFIX : <http://default.example/>\nSELECT ?x WHERE { ?x :p :o }",
    "SELECT ?x WHERE { ?x dbo:p ?y . FILTER(?y > 3) ?y dbo:q ?z . }",
};

}  // namespace kgqa::fixtures

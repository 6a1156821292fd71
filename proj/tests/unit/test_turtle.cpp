#include "argus/store/turtle.hpp"
#include "support/helpers.hpp"

#include <gtest/gtest.h>

namespace argus::store {
namespace {

using testing::ex;

TEST(ParseTurtle, SingleDecimalTriple) {
    Graph g = parse_turtle("@prefix : <urn:argus:> .\n:String1 :attackSuccessRate 0.5 .\n");
    ASSERT_EQ(g.size(), 1u);
    const Triple& t = *g.begin();
    EXPECT_EQ(t.subject, ex("String1"));
    EXPECT_EQ(t.object, Term(Literal::decimal(*Decimal::parse("0.5"))));
}

TEST(ParseTurtle, PrefixOnlyDocumentIsEmpty) {
    Graph g = parse_turtle("@prefix : <urn:argus:> .\n@prefix xsd: <http://www.w3.org/2001/XMLSchema#> .\n");
    EXPECT_TRUE(g.empty());
    EXPECT_EQ(g.prefixes().size(), 2u);
}

TEST(ParseTurtle, AShorthandIsRdfType) {
    Graph g = parse_turtle("@prefix : <urn:argus:> .\n:String1 a :ExtractionAttack .");
    ASSERT_EQ(g.size(), 1u);
    EXPECT_EQ(*g.begin(), (Triple{ex("String1"), rdf_type(), ex("ExtractionAttack")}));
}

TEST(ParseTurtle, ContinuationsAndComments) {
    Graph g = parse_turtle(R"(@prefix : <urn:argus:> .
# comment line
:s :p :a , :b ;   # trailing comment
   :q "x\"y" ;
   :r true ;
   :n -3 .
<urn:other> <urn:p> 4.)");
    EXPECT_EQ(g.size(), 6u);
    EXPECT_TRUE(g.contains(Triple{ex("s"), ex("q"), Literal::string("x\"y")}));
    EXPECT_TRUE(g.contains(Triple{ex("s"), ex("n"), Literal::integer(-3)}));
    EXPECT_TRUE(g.contains(Triple{Iri("urn:other"), Iri("urn:p"), Literal::integer(4)}));
}

TEST(ParseTurtle, LocalNamesWithDotsAndDashes) {
    Graph g = parse_turtle("@prefix : <urn:argus:> .\n:G1.5 :targetsModel :LLaMa-2-7B-chat.");
    ASSERT_EQ(g.size(), 1u);
    EXPECT_EQ(g.begin()->subject, ex("G1.5"));
    EXPECT_EQ(g.begin()->object, Term(ex("LLaMa-2-7B-chat")));
}

TEST(ParseTurtle, TypedLiterals) {
    Graph g = parse_turtle(R"(@prefix : <urn:argus:> .
@prefix xsd: <http://www.w3.org/2001/XMLSchema#> .
:s :p "0.50"^^xsd:decimal ; :q "7"^^<http://www.w3.org/2001/XMLSchema#integer> .)");
    EXPECT_TRUE(g.contains(Triple{ex("s"), ex("p"), Literal::decimal(*Decimal::parse("0.5"))}));
    EXPECT_TRUE(g.contains(Triple{ex("s"), ex("q"), Literal::integer(7)}));
}

void expect_error(std::string_view text, std::string_view fragment, std::size_t line = 0) {
    try {
        parse_turtle(text);
        ADD_FAILURE() << "no error for: " << text;
    } catch (const ParseError& e) {
        EXPECT_NE(e.reason().find(fragment), std::string::npos) << e.what();
        if (line != 0) {
            EXPECT_EQ(e.line(), line) << e.what();
        }
    }
}

TEST(ParseTurtle, Errors) {
    expect_error(":s :p :o .", "undeclared prefix", 1);
    expect_error("@prefix : <urn:x:> .\n:s :p _:b1 .", "blank node", 2);
    expect_error("@prefix : <urn:x:> .\n:s :p [ :q :r ] .", "blank node", 2);
    expect_error("@prefix : <urn:x:> .\n:s :p ( :a ) .", "collection", 2);
    expect_error("@prefix : <urn:x:> .\n:s :p \"hi\"@en .", "language tag", 2);
    expect_error("@base <urn:x:> .", "@base", 1);
    expect_error("@prefix : <urn:x:> .\n:s :p \"\"\"long\"\"\" .", "multiline", 2);
    expect_error("@prefix : <urn:x:> .\n:s :p \"1\"^^:weird .", "unknown datatype", 2);
    expect_error("@prefix : <urn:x:> .\n\"lit\" :p :o .", "literal subject", 2);
    expect_error("@prefix : <urn:x:> .\n:s :p :o", "expected '.'", 2);
    expect_error("@prefix : <urn:x:> .\n:s :p 1e3 .", "exponent", 2);
}

TEST(ParseTurtle, ErrorColumn) {
    try {
        parse_turtle("@prefix : <urn:x:> .\n:s   :p  ex:o .");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 2u);
        EXPECT_EQ(e.column(), 10u);
    }
}

TEST(SerializeTurtle, EmptyGraphIsPrefixBlockOnly) {
    Graph g;
    g.set_prefix("xsd", "http://www.w3.org/2001/XMLSchema#");
    g.set_prefix("", "urn:argus:");
    EXPECT_EQ(serialize_turtle(g), "@prefix : <urn:argus:> .\n@prefix xsd: <http://www.w3.org/2001/XMLSchema#> .\n");
    EXPECT_EQ(serialize_turtle(Graph{}), "");
}

TEST(SerializeTurtle, DuplicateInsertGivesOneLine) {
    Graph g;
    g.set_prefix("", "urn:argus:");
    g.insert(Triple{ex("s"), rdf_type(), ex("C")});
    g.insert(Triple{ex("s"), rdf_type(), ex("C")});
    EXPECT_EQ(serialize_turtle(g), "@prefix : <urn:argus:> .\n\n:s a :C .\n");
}

TEST(SerializeTurtle, FallsBackToAbsoluteIri) {
    Graph g;
    g.set_prefix("", "urn:argus:");
    g.insert(Triple{Iri("urn:other:x"), ex("p"), Term(ex("bad.")) });
    EXPECT_EQ(serialize_turtle(g), "@prefix : <urn:argus:> .\n\n<urn:other:x> :p <urn:argus:bad.> .\n");
}

TEST(SerializeTurtle, FixtureAGolden) {
    Graph g = parse_turtle(read_file(testing::fixture("fixture_a/store.ttl")));
    EXPECT_EQ(serialize_turtle(g), read_file(testing::golden("fixture_a.ttl")));
}

TEST(TurtleProperty, RoundTripRandomGraphs) {
    testing::GraphGenerator gen(3);
    for (int i = 0; i < 300; ++i) {
        Graph g = gen.graph(50);
        if (i % 2 == 0) {
            g.set_prefix("", "urn:argus:");
        }
        if (i % 3 == 0) {
            g.set_prefix("ar", "urn:ar");
        }
        g.insert(Triple{ex("s"), ex("text"), Literal::string("tab\tquote\" back\\ nl\n 世界")});
        std::string text = serialize_turtle(g);
        Graph back = parse_turtle(text);
        EXPECT_EQ(back, g) << text;
        EXPECT_EQ(serialize_turtle(back), text);
    }
}

}  // namespace
}  // namespace argus::store

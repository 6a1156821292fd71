#include "argus/store/graph.hpp"
#include "argus/store/turtle.hpp"
#include "support/helpers.hpp"

#include <gtest/gtest.h>

namespace argus::store {
namespace {

using testing::ex;

Literal dec(std::string_view text) { return Literal::decimal(*Decimal::parse(text)); }

TEST(Decimal, CanonicalForms) {
    EXPECT_EQ(Decimal::parse("0.5")->to_decimal_string(), "0.5");
    EXPECT_EQ(Decimal::parse("0.50")->to_decimal_string(), "0.5");
    EXPECT_EQ(Decimal::parse("1")->to_decimal_string(), "1.0");
    EXPECT_EQ(Decimal::parse("+007.250")->to_decimal_string(), "7.25");
    EXPECT_EQ(Decimal::parse("-0.0")->to_decimal_string(), "0.0");
    EXPECT_EQ(Decimal::parse(".05")->to_decimal_string(), "0.05");
    EXPECT_EQ(Decimal::parse("-0.001")->to_decimal_string(), "-0.001");
    EXPECT_FALSE(Decimal::parse("1e5"));
    EXPECT_FALSE(Decimal::parse("1."));
    EXPECT_FALSE(Decimal::parse(""));
    EXPECT_FALSE(Decimal::parse("-"));
}

TEST(Decimal, DivideTerminatingAndRounded) {
    auto three = *Decimal::parse("0.6");
    EXPECT_EQ(Decimal::divide(three, 2, 6).to_decimal_string(), "0.3");
    EXPECT_EQ(Decimal::divide(*Decimal::parse("1"), 3, 6).to_decimal_string(), "0.333333");
    EXPECT_EQ(Decimal::divide(*Decimal::parse("2"), 3, 6).to_decimal_string(), "0.666667");
    // Exact terminating expansions keep every digit.
    EXPECT_EQ(Decimal::divide(*Decimal::parse("0.0000003"), 2, 6).to_decimal_string(), "0.00000015");
    EXPECT_EQ(Decimal::divide(*Decimal::parse("-1"), 3, 6).to_decimal_string(), "-0.333333");
}

TEST(Literal, CanonicalizesNumbers) {
    EXPECT_EQ(Literal::parse("0.500", Datatype::Decimal).lexical(), "0.5");
    EXPECT_EQ(Literal::parse("+04", Datatype::Integer).lexical(), "4");
    EXPECT_EQ(Literal::parse("1", Datatype::Boolean).lexical(), "true");
    EXPECT_THROW(Literal::parse("high", Datatype::Decimal), Error);
    EXPECT_THROW(Literal::parse("1.5", Datatype::Integer), Error);
}

TEST(Iri, RejectsMalformed) {
    EXPECT_THROW(Iri(""), Error);
    EXPECT_THROW(Iri("urn:a b"), Error);
    EXPECT_NO_THROW(Iri("urn:argus:LLaMa-2-7B-chat"));
}

TEST(Graph, InsertStringAsr) {
    Graph g = insert_triple(Graph{}, Triple{ex("String1"), ex("attackSuccessRate"), dec("0.5")});
    EXPECT_EQ(g.size(), 1u);
}

TEST(Graph, InsertIsIdempotent) {
    Triple t{ex("String1"), ex("attackSuccessRate"), dec("0.5")};
    Graph g = insert_triple(insert_triple(Graph{}, t), t);
    EXPECT_EQ(g.size(), 1u);
}

TEST(Graph, InsertRetainsPriorTriples) {
    Graph g;
    g.insert(Triple{ex("a"), ex("p"), ex("b")});
    Graph h = insert_triple(g, Triple{ex("a"), ex("p"), ex("c")});
    EXPECT_EQ(g.size(), 1u);
    EXPECT_EQ(h.size(), 2u);
    EXPECT_TRUE(h.contains(Triple{ex("a"), ex("p"), ex("b")}));
}

TEST(Graph, LiteralSubjectRejected) {
    EXPECT_THROW(make_triple(Literal::string("x"), ex("p"), ex("o")), Error);
    EXPECT_THROW(make_triple(ex("s"), Literal::integer(1), ex("o")), Error);
}

TEST(Graph, EqualityIgnoresPrefixes) {
    Graph a;
    Graph b;
    a.insert(Triple{ex("s"), ex("p"), ex("o")});
    b.insert(Triple{ex("s"), ex("p"), ex("o")});
    b.set_prefix("", "urn:argus:");
    EXPECT_EQ(a, b);
}

class FixtureA : public ::testing::Test {
protected:
    Graph graph = parse_turtle(read_file(testing::fixture("fixture_a/store.ttl")));
};

TEST_F(FixtureA, MatchTypedExtractionAttack) {
    auto rows = match_pattern(graph, {Variable{"a"}, Term(rdf_type()), Term(ex("ExtractionAttack"))});
    ASSERT_EQ(rows.size(), 1u);
    EXPECT_EQ(rows[0].at("a"), Term(ex("String1")));
}

TEST_F(FixtureA, MatchAsrValue) {
    auto rows = match_pattern(graph, {Term(ex("String1")), Term(ex("attackSuccessRate")), Variable{"v"}});
    ASSERT_EQ(rows.size(), 1u);
    EXPECT_EQ(rows[0].at("v"), Term(dec("0.5")));
}

TEST(Match, EmptyGraph) {
    EXPECT_TRUE(match_pattern(Graph{}, {Variable{"s"}, Variable{"p"}, Variable{"o"}}).empty());
}

TEST(Match, RepeatedVariableMustAgree) {
    Graph g;
    g.insert(Triple{ex("a"), ex("p"), ex("a")});
    g.insert(Triple{ex("a"), ex("p"), ex("b")});
    auto rows = match_pattern(g, {Variable{"x"}, Term(ex("p")), Variable{"x"}});
    ASSERT_EQ(rows.size(), 1u);
    EXPECT_EQ(rows[0].at("x"), Term(ex("a")));
}

TEST(MatchProperty, GroundPatternAfterInsertYieldsOneEmptyBinding) {
    testing::GraphGenerator gen(7);
    for (int i = 0; i < 200; ++i) {
        Graph g = gen.graph(30);
        Triple t = gen.triple();
        g = insert_triple(std::move(g), t);
        auto rows = match_pattern(g, {Term(t.subject), Term(t.predicate), t.object});
        ASSERT_EQ(rows.size(), 1u);
        EXPECT_TRUE(rows[0].empty());
    }
}

// Brute force: enumerate triples, keep those agreeing with every bound slot
// and with repeated variables, then project.
std::vector<Bindings> brute_force_match(const Graph& g, const TriplePattern& p) {
    std::vector<Bindings> out;
    for (const auto& t : g.triples()) {
        std::vector<std::pair<const PatternTerm*, Term>> slots{
            {&p.subject, Term(t.subject)}, {&p.predicate, Term(t.predicate)}, {&p.object, t.object}};
        Bindings b;
        bool ok = true;
        for (auto& [slot, value] : slots) {
            if (const auto* var = std::get_if<Variable>(slot)) {
                auto [it, inserted] = b.emplace(var->name, value);
                if (!inserted && !(it->second == value)) {
                    ok = false;
                }
            } else if (!(std::get<Term>(*slot) == value)) {
                ok = false;
            }
        }
        if (ok) {
            out.push_back(b);
        }
    }
    return out;
}

TEST(MatchProperty, EqualsBruteForceOnRandomGraphs) {
    testing::GraphGenerator gen(11);
    for (int i = 0; i < 500; ++i) {
        Graph g = gen.graph(50);
        auto slot = [&](int which) -> PatternTerm {
            static const char* names[] = {"x", "y", "z"};
            if (gen.pick(2) == 0) {
                return Variable{names[gen.pick(3)]};
            }
            if (which == 0) {
                return Term(gen.resource());
            }
            if (which == 1) {
                return Term(gen.predicate());
            }
            return gen.object();
        };
        TriplePattern p{slot(0), slot(1), slot(2)};
        EXPECT_EQ(match_pattern(g, p), brute_force_match(g, p));
    }
}

}  // namespace
}  // namespace argus::store

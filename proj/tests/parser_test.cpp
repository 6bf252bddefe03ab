#include <gtest/gtest.h>

#include "dfalc/parser.hpp"
#include "oracles.hpp"

using namespace dfalc;

namespace {

const char* kFixtures[] = {
    "concept Cat\naxiom Cat SubClassOf Cat\n",
    "axiom (some isPartOf . Chair) EquivalentTo (Seat or Leg)\n",
    "axiom (Chair and Table) SubClassOf Nothing\n",
    "concept Cat\nconcept Bird\nrole isPartOf\nindividual s1\nindividual s2\n"
    "axiom Cat and Bird SubClassOf Nothing  # disjoint\n"
    "assert Cat(s1) = 0.9\nassert isPartOf(s1, s2) = 0.25\nassert Bird(s2)\n",
    "axiom not not A SubClassOf only r . (B or not C) and Thing\n",
    "axiom A or B and C SubClassOf some r . some s . D\n",
};

}  // namespace

TEST(Parser, IdentityInclusion) {
  const Ontology o = parse_ontology("concept Cat\naxiom Cat SubClassOf Cat");
  EXPECT_EQ(o.signature.concepts.size(), 1u);
  ASSERT_EQ(o.tbox.size(), 1u);
  EXPECT_EQ(o.tbox[0], TBoxAxiom(Inclusion{ConceptExpr::name("Cat"), ConceptExpr::name("Cat")}));
}

TEST(Parser, EquivalenceWithQuantifier) {
  const Ontology o = parse_ontology("axiom (some isPartOf . Chair) EquivalentTo (Seat or Leg)");
  ASSERT_EQ(o.tbox.size(), 1u);
  const auto expected = Equivalence{
      ConceptExpr::exists("isPartOf", ConceptExpr::name("Chair")),
      ConceptExpr::disjunction(ConceptExpr::name("Seat"), ConceptExpr::name("Leg"))};
  EXPECT_EQ(o.tbox[0], TBoxAxiom(expected));
  EXPECT_TRUE(o.signature.roles.contains("isPartOf"));
}

TEST(Parser, DisjointnessAxiom) {
  const Ontology o = parse_ontology("axiom (Chair and Table) SubClassOf Nothing");
  const auto expected = Inclusion{
      ConceptExpr::conjunction(ConceptExpr::name("Chair"), ConceptExpr::name("Table")),
      ConceptExpr::bottom()};
  EXPECT_EQ(o.tbox.at(0), TBoxAxiom(expected));
  EXPECT_EQ(render_ontology(o).find("axiom (Chair and Table) SubClassOf Nothing") != std::string::npos,
            true);
}

TEST(Parser, Precedence) {
  EXPECT_EQ(parse_concept("A or B and C"),
            ConceptExpr::disjunction(ConceptExpr::name("A"),
                                     ConceptExpr::conjunction(ConceptExpr::name("B"),
                                                              ConceptExpr::name("C"))));
  EXPECT_EQ(parse_concept("not A and B"),
            ConceptExpr::conjunction(ConceptExpr::negation(ConceptExpr::name("A")),
                                     ConceptExpr::name("B")));
  // A quantifier filler runs to the closing delimiter.
  EXPECT_EQ(parse_concept("some r . A or B"),
            ConceptExpr::exists("r", ConceptExpr::disjunction(ConceptExpr::name("A"),
                                                              ConceptExpr::name("B"))));
  EXPECT_EQ(parse_concept("(some r . A) or B"),
            ConceptExpr::disjunction(ConceptExpr::exists("r", ConceptExpr::name("A")),
                                     ConceptExpr::name("B")));
}

TEST(Parser, AssertionRendering) {
  ABoxAssertion a{ConceptAssertion{"s1", ConceptExpr::name("Cat")}, 0.9};
  EXPECT_EQ(render_assertion(a), "assert Cat(s1) = 0.9");
  ABoxAssertion b{RoleAssertion{"a", "b", "r"}, 1.0};
  EXPECT_EQ(render_assertion(b), "assert r(a, b) = 1");
}

TEST(Parser, CrispAssertionDefaultsToOne) {
  const Ontology o = parse_ontology("assert Cat(s1)");
  ASSERT_EQ(o.abox.size(), 1u);
  EXPECT_EQ(o.abox[0].degree, 1.0);
}

TEST(Parser, RoundTripFixtures) {
  for (const char* text : kFixtures) {
    const Ontology once = parse_ontology(text);
    const Ontology twice = parse_ontology(render_ontology(once));
    EXPECT_EQ(once, twice) << text;
  }
}

TEST(Parser, RoundTripRandomConcepts) {
  Rng rng(11);
  const Signature sig = oracle::make_signature(3, 2, 0);
  for (int i = 0; i < 500; ++i) {
    const ConceptExpr c = oracle::random_concept(rng, sig, 4);
    EXPECT_EQ(parse_concept(to_string(c)), c) << to_string(c);
  }
}

TEST(Parser, RejectsInequalityDegrees) {
  for (const char* op : {">=", "<=", "<", ">"}) {
    const std::string text = std::string("assert Cat(s1) ") + op + " 0.5";
    try {
      parse_ontology(text);
      FAIL() << text;
    } catch (const SyntaxError& e) {
      EXPECT_EQ(e.line(), 1u);
      EXPECT_EQ(e.column(), 16u);
    }
  }
}

TEST(Parser, DegreeOutOfRange) {
  EXPECT_THROW(parse_ontology("assert Cat(s1) = 1.5"), DegreeOutOfRange);
  EXPECT_THROW(parse_ontology("assert r(s1, s2) = -0.1"), DegreeOutOfRange);
}

TEST(Parser, DuplicateDeclarationKind) {
  EXPECT_THROW(parse_ontology("concept X\nrole X"), DuplicateDeclarationKind);
  EXPECT_THROW(parse_ontology("axiom some X . A SubClassOf X"), DuplicateDeclarationKind);
  EXPECT_THROW(parse_ontology("assert A(x)\nassert x(a, b)"), DuplicateDeclarationKind);
}

TEST(Parser, SyntaxErrorPosition) {
  try {
    parse_ontology("concept A\naxiom A SubClassOf (B and");
    FAIL();
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 26u);
  }
  EXPECT_THROW(parse_ontology("axiom A SubClassOf"), SyntaxError);
  EXPECT_THROW(parse_ontology("bogus A"), SyntaxError);
  EXPECT_THROW(parse_ontology("axiom A SubClassOf some r B"), SyntaxError);
}

TEST(Signature, EmptyOntology) {
  const Signature s = signature_of(Ontology{});
  EXPECT_TRUE(s.concepts.empty());
  EXPECT_TRUE(s.roles.empty());
  EXPECT_TRUE(s.individuals.empty());
}

TEST(Signature, Counting) {
  const Ontology o = parse_ontology(kFixtures[3]);
  const Signature s = signature_of(o);
  EXPECT_EQ(s.concepts.size(), 2u);
  EXPECT_EQ(s.roles.size(), 1u);
  EXPECT_EQ(s.individuals.size(), 2u);
  EXPECT_EQ(signature_of(o), s);
}

TEST(Signature, CollectsUndeclaredNames) {
  Ontology o;
  o.tbox.emplace_back(Inclusion{ConceptExpr::exists("r", ConceptExpr::name("A")),
                                ConceptExpr::negation(ConceptExpr::name("B"))});
  o.abox.push_back({RoleAssertion{"x", "y", "s"}, 1.0});
  const Signature s = signature_of(o);
  // Scan-collect oracle: walk the AST by hand.
  Signature expected;
  expected.concepts = {"A", "B"};
  expected.roles = {"r", "s"};
  expected.individuals = {"x", "y"};
  EXPECT_EQ(s, expected);
}

TEST(Signature, DeclaredOrderComesFirst) {
  const Ontology o = parse_ontology("concept Z\naxiom A SubClassOf Z\nconcept B");
  EXPECT_EQ(o.signature.concepts.names(), (std::vector<std::string>{"Z", "A", "B"}));
}

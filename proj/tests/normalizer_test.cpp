#include <gtest/gtest.h>

#include "dfalc/parser.hpp"
#include "oracles.hpp"

using namespace dfalc;

namespace {

ConceptExpr C(const char* text) { return parse_concept(text); }

std::vector<Inclusion> axioms_of(const NormalizedTBox& nt) {
  std::vector<Inclusion> out;
  for (const auto& ax : nt.axioms) out.push_back(ax.axiom);
  return out;
}

bool is_nnf(const ConceptExpr& c) {
  switch (c.kind()) {
    case ConceptKind::Not:
      return c.operand().kind() == ConceptKind::Name || c.operand().kind() == ConceptKind::Top ||
             c.operand().kind() == ConceptKind::Bottom;
    case ConceptKind::And:
    case ConceptKind::Or:
      return is_nnf(c.left()) && is_nnf(c.right());
    case ConceptKind::Exists:
    case ConceptKind::Forall:
      return is_nnf(c.operand());
    default:
      return true;
  }
}

}  // namespace

TEST(Nnf, DeMorgan) {
  EXPECT_EQ(to_nnf(C("not (C and D)")), C("not C or not D"));
  EXPECT_EQ(to_nnf(C("not (C or D)")), C("not C and not D"));
}

TEST(Nnf, Quantifiers) {
  EXPECT_EQ(to_nnf(C("not some r . C")), C("only r . not C"));
  EXPECT_EQ(to_nnf(C("not only r . C")), C("some r . not C"));
}

TEST(Nnf, DoubleNegation) {
  EXPECT_EQ(to_nnf(C("not not C")), C("C"));
  EXPECT_EQ(to_nnf(C("not Thing")), C("not Thing"));
}

TEST(Nnf, IdempotentAndEquivalent) {
  Rng rng(5);
  const Signature sig = oracle::make_signature(3, 2, 3);
  for (int i = 0; i < 300; ++i) {
    const ConceptExpr c = oracle::random_concept(rng, sig, 4);
    const ConceptExpr n = to_nnf(c);
    EXPECT_TRUE(is_nnf(n)) << to_string(n);
    EXPECT_EQ(to_nnf(n), n);
    const Grounding g = oracle::random_grounding(rng, sig);
    EXPECT_TRUE(oracle::ref_eval(g, c).isApprox(oracle::ref_eval(g, n), 1e-15)) << to_string(c);
  }
}

TEST(ClassifyForm, AllSevenForms) {
  EXPECT_EQ(classify_form({C("A"), C("not B")}), NormalForm::F1);
  EXPECT_EQ(classify_form({C("Thing"), C("Nothing")}), NormalForm::F1);
  EXPECT_EQ(classify_form({C("A and not B"), C("D")}), NormalForm::F2);
  EXPECT_EQ(classify_form({C("D"), C("A or B")}), NormalForm::F3);
  EXPECT_EQ(classify_form({C("A"), C("some r . B")}), NormalForm::F4);
  EXPECT_EQ(classify_form({C("A"), C("only r . not B")}), NormalForm::F5);
  EXPECT_EQ(classify_form({C("some r . B"), C("A")}), NormalForm::F6);
  EXPECT_EQ(classify_form({C("only r . B"), C("A")}), NormalForm::F7);
}

TEST(ClassifyForm, NotNormal) {
  EXPECT_FALSE(classify_form({C("A and B"), C("C or D")}));
  EXPECT_FALSE(classify_form({C("A"), C("some r . (B and C)")}));
  EXPECT_FALSE(classify_form({C("not not A"), C("B")}));
  EXPECT_FALSE(classify_form({C("A or B"), C("D")}));
  EXPECT_FALSE(classify_form({C("A"), C("B and C")}));
}

TEST(Literal, RoundTrip) {
  for (const char* t : {"A", "not A", "Thing", "Nothing", "not Thing", "not Nothing"}) {
    const auto lit = Literal::from(C(t));
    ASSERT_TRUE(lit) << t;
    EXPECT_EQ(lit->to_concept(), C(t));
  }
  EXPECT_FALSE(Literal::from(C("not not A")));
  EXPECT_EQ(Literal::from(C("not B"))->name, "B");
  EXPECT_TRUE(Literal::from(C("not B"))->negated);
}

TEST(Normalize, AlreadyNormalIsFixpoint) {
  const Ontology o = parse_ontology(
      "axiom A SubClassOf B\naxiom A and B SubClassOf C\naxiom A SubClassOf some r . not B\n"
      "axiom only r . A SubClassOf B");
  const NormalizedTBox nt = normalize(o);
  EXPECT_TRUE(nt.fresh_defs.empty());
  ASSERT_EQ(nt.axioms.size(), 4u);
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_EQ(TBoxAxiom(nt.axioms[i].axiom), o.tbox[i]);
  }
  EXPECT_EQ(nt.extended_signature, signature_of(o));
}

TEST(Normalize, DisjunctionOnTheLeft) {
  // C ⊔ D̂ ⊑ B splits, then D̂ ⊑ B is normalized further.
  const NormalizedTBox nt = normalize(parse_ontology("axiom C or some r . (E and F) SubClassOf B"));
  const auto axioms = axioms_of(nt);
  ASSERT_EQ(nt.fresh_defs.size(), 1u);
  const auto& [x, def] = *nt.fresh_defs.begin();
  EXPECT_EQ(def, C("E and F"));
  const ConceptExpr X = ConceptExpr::name(x);
  const std::vector<Inclusion> expected = {
      {C("C"), C("B")},
      {C("E and F"), X},
      {ConceptExpr::exists("r", X), C("B")},
  };
  EXPECT_EQ(axioms, expected);
}

TEST(Normalize, ExistentialOnTheRight) {
  const NormalizedTBox nt = normalize(parse_ontology("axiom B SubClassOf some r . (E and F)"));
  ASSERT_EQ(nt.fresh_defs.size(), 1u);
  const std::string x = nt.fresh_defs.begin()->first;
  EXPECT_EQ(x, "__N1");
  const ConceptExpr X = ConceptExpr::name(x);
  const std::vector<Inclusion> expected = {
      {X, C("E")},
      {X, C("F")},
      {C("B"), ConceptExpr::exists("r", X)},
  };
  EXPECT_EQ(axioms_of(nt), expected);
  EXPECT_EQ(nt.extended_signature.concepts.names().back(), x);
}

TEST(Normalize, EquivalenceSharesFreshNames) {
  const NormalizedTBox nt =
      normalize(parse_ontology("axiom some isPartOf . Chair EquivalentTo Seat or Leg"));
  for (const auto& ax : nt.axioms) EXPECT_TRUE(classify_form(ax.axiom));
  // Both directions only need the same compound once.
  std::size_t defs_for_disjunction = 0;
  for (const auto& [name, def] : nt.fresh_defs) defs_for_disjunction += def == C("Seat or Leg");
  EXPECT_LE(defs_for_disjunction, 1u);
}

TEST(Normalize, IdenticalSubexpressionsShareOneName) {
  const NormalizedTBox nt = normalize(parse_ontology(
      "axiom A SubClassOf some r . (E and F)\naxiom B SubClassOf only s . (E and F)"));
  EXPECT_EQ(nt.fresh_defs.size(), 1u);
}

TEST(Normalize, FreshNamesAvoidInputNames) {
  const NormalizedTBox nt = normalize(parse_ontology("axiom __N1 SubClassOf some r . (A and B)"));
  ASSERT_EQ(nt.fresh_defs.size(), 1u);
  EXPECT_EQ(nt.fresh_defs.begin()->first, "__N2");
}

TEST(Normalize, RandomOutputsAreNormalAndPolynomial) {
  Rng rng(17);
  const Signature sig = oracle::make_signature(3, 2, 0);
  for (int i = 0; i < 300; ++i) {
    const Ontology o = oracle::random_ontology(rng, sig, 3, 4);
    const NormalizedTBox nt = normalize(o);
    std::size_t nodes = 0;
    for (const auto& ax : o.tbox) {
      std::visit([&](const auto& a) { nodes += a.left.size() + a.right.size(); }, ax);
    }
    EXPECT_LE(nt.axioms.size(), 4 * nodes);
    for (const auto& ax : nt.axioms) {
      ASSERT_TRUE(classify_form(ax.axiom));
      EXPECT_EQ(*classify_form(ax.axiom), ax.form);
    }
    for (const auto& [name, def] : nt.fresh_defs) {
      EXPECT_FALSE(signature_of(o).concepts.contains(name));
      EXPECT_TRUE(nt.extended_signature.concepts.contains(name));
    }
    // Normalizing the output again changes nothing.
    std::vector<TBoxAxiom> again;
    for (const auto& ax : nt.axioms) again.emplace_back(ax.axiom);
    const NormalizedTBox nt2 = normalize(again, nt.extended_signature);
    EXPECT_TRUE(nt2.fresh_defs.empty());
    EXPECT_EQ(nt2.axioms.size(), nt.axioms.size());
  }
}

TEST(Normalize, ModelCorrespondenceOnSmallDomains) {
  Rng rng(23);
  for (int i = 0; i < 40; ++i) {
    const Signature sig = oracle::make_signature(2, 1, 0);
    const Ontology o = oracle::random_ontology(rng, sig, 2, 3);
    const auto check = oracle::check_normalization(o, 2, 16);
    if (check.domain == 0) continue;
    EXPECT_TRUE(check.ok()) << check.detail;
  }
}

TEST(SeedFresh, ValuesFollowDefinitions) {
  const Ontology o = parse_ontology("axiom B SubClassOf some r . (A or B)");
  const NormalizedTBox nt = normalize(o);
  Rng rng(3);
  Signature sig = signature_of(o);
  sig.individuals = {"s1", "s2", "s3"};
  const Grounding g = oracle::random_grounding(rng, sig);
  const Grounding seeded = seed_fresh_assertions(nt, g);
  EXPECT_EQ(seeded.signature().concepts.size(), nt.extended_signature.concepts.size());
  for (const auto& [name, def] : nt.fresh_defs) {
    EXPECT_TRUE(seeded.concept_values(name).isApprox(oracle::ref_eval(g, def)));
  }
  EXPECT_EQ(seeded.concept_values("A"), g.concept_values("A"));
}

TEST(SeedFresh, MissingDefinitionThrows) {
  NormalizedTBox nt = normalize(parse_ontology("axiom A SubClassOf some r . (A and B)"));
  nt.extended_signature.concepts.add("__N9");
  Signature sig = signature_of(parse_ontology("axiom A SubClassOf some r . (A and B)"));
  sig.individuals = {"s1"};
  EXPECT_THROW(seed_fresh_assertions(nt, Grounding(sig, 0.5)), UndefinedFreshName);
}

TEST(Render, DefinitionsAsTrailingComments) {
  const Ontology o = parse_ontology("axiom B SubClassOf some r . (E and F)");
  const std::string text = render_normalized(normalize(o), o);
  EXPECT_NE(text.find("# define __N1 := (E and F)"), std::string::npos) << text;
  // The output is itself a parseable, already-normal ontology.
  const Ontology back = parse_ontology(text);
  for (const auto& ax : back.tbox) EXPECT_TRUE(classify_form(std::get<Inclusion>(ax)));
}

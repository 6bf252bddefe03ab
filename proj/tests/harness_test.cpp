#include <gtest/gtest.h>

#include <numeric>

#include "dfalc/experiment.hpp"
#include "dfalc/report.hpp"
#include "dfalc/synthetic.hpp"
#include "oracles.hpp"

using namespace dfalc;

namespace {

SyntheticSpec small_spec(std::uint64_t seed) {
  SyntheticSpec spec;
  spec.axioms_per_form = spread_axioms(12);
  spec.seed = seed;
  return spec;
}

std::size_t changed_entries(const Grounding& a, const Grounding& b) {
  const auto x = oracle::flatten(a.tables());
  const auto y = oracle::flatten(b.tables());
  std::size_t n = 0;
  for (std::size_t i = 0; i < x.size(); ++i) n += x[i] != y[i];
  return n;
}

}  // namespace

TEST(Synthetic, SpreadAxioms) {
  const AxiomCounts c = spread_axioms(10);
  EXPECT_EQ(std::accumulate(c.begin(), c.end(), 0), 10);
  EXPECT_EQ(c[0], 2);
  EXPECT_EQ(c[7], 1);
  EXPECT_EQ(spread_axioms(0), AxiomCounts{});
}

TEST(Synthetic, ZeroAxiomsGivesEmptyTBox) {
  SyntheticSpec spec;
  const SyntheticData d = gen_synthetic(spec);
  EXPECT_TRUE(d.ontology.tbox.empty());
  EXPECT_EQ(d.ideal.domain_size(), 8);
  EXPECT_EQ(d.ontology.abox.size(), d.ideal.tables().entry_count());
}

TEST(Synthetic, IdealIsACrispModel) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const SyntheticData d = gen_synthetic(small_spec(seed));
    EXPECT_EQ(d.ontology.tbox.size(), 12u);
    for (double x : oracle::flatten(d.ideal.tables())) EXPECT_TRUE(x == 0.0 || x == 1.0);
    for (const auto& ax : d.ontology.tbox) EXPECT_TRUE(fuzzy_satisfies(d.ideal, ax));
    EXPECT_EQ(grounding_from_abox(d.ontology, 0.5).tables().entry_count(),
              d.ideal.tables().entry_count());
  }
}

TEST(Synthetic, Deterministic) {
  const SyntheticData a = gen_synthetic(small_spec(3));
  const SyntheticData b = gen_synthetic(small_spec(3));
  EXPECT_EQ(a.ontology, b.ontology);
  EXPECT_EQ(oracle::flatten(a.ideal.tables()), oracle::flatten(b.ideal.tables()));
  EXPECT_FALSE(a.ontology == gen_synthetic(small_spec(4)).ontology);
}

TEST(Synthetic, InvalidSpec) {
  SyntheticSpec spec;
  spec.n_individuals = 0;
  EXPECT_THROW(gen_synthetic(spec), std::invalid_argument);
}

TEST(Mask, CountsAndRegion) {
  const Grounding ideal(oracle::make_signature(10, 0, 10), 1.0);
  MaskSpec m;
  m.rate = 0.4;
  m.seed = 1;
  EXPECT_EQ(masked_entry_count(ideal, m), 40u);
  const Grounding masked = mask_grounding(ideal, m);
  EXPECT_EQ(changed_entries(ideal, masked), 40u);
  for (double x : oracle::flatten(masked.tables())) {
    EXPECT_TRUE(x == 1.0 || (x >= 0.2 && x <= 0.8));
  }
}

TEST(Mask, RateZeroIsIdentity) {
  const SyntheticData d = gen_synthetic(small_spec(1));
  MaskSpec m;
  m.rate = 0.0;
  EXPECT_EQ(changed_entries(d.ideal, mask_grounding(d.ideal, m)), 0u);
  const MaskRevisionResult r = run_mask_revision(d.ontology, d.ideal, m, {});
  EXPECT_EQ(r.masked_success, 100.0);
  EXPECT_EQ(r.revised_success, 100.0);
}

TEST(Mask, ConceptsOnly) {
  const Grounding ideal(oracle::make_signature(2, 1, 4), 1.0);
  MaskSpec m;
  m.rate = 1.0;
  m.concepts_only = true;
  const Grounding masked = mask_grounding(ideal, m);
  EXPECT_EQ(changed_entries(ideal, masked), 8u);
  EXPECT_TRUE((masked.role_values(0).array() == 1.0).all());
}

TEST(Mask, Validation) {
  MaskSpec m;
  m.rate = 1.5;
  EXPECT_THROW(m.validate(), std::invalid_argument);
  m.rate = 0.5;
  m.unknown_lo = 0.9;
  EXPECT_THROW(m.validate(), std::invalid_argument);
}

TEST(Queries, Answers) {
  Grounding g = oracle::example1();
  Query q{QueryShape::Conj2, "A", "B", "", 0.8};
  EXPECT_TRUE(answer_query(g, q).empty());
  g.concept_values("A")[0] = 0.85;
  EXPECT_EQ(answer_query(g, q), (std::vector<std::size_t>{0}));
  // C ⊓ ∃r.D at s1: min(B(s1), min(r(s1,s2), A(s2))).
  g.concept_values("A")[1] = 1.0;
  Query e{QueryShape::Exist2, "B", "A", "r", 0.8};
  EXPECT_EQ(answer_query(g, e), (std::vector<std::size_t>{0}));
  e.threshold = 0.95;
  EXPECT_TRUE(answer_query(g, e).empty());
}

TEST(Queries, PrecisionRecall) {
  const auto pr = precision_recall({0, 1, 2}, {1, 2, 3, 4});
  EXPECT_DOUBLE_EQ(pr.precision, 2.0 / 3.0);
  EXPECT_DOUBLE_EQ(pr.recall, 0.5);
  EXPECT_EQ(precision_recall({}, {}).precision, 1.0);
  EXPECT_EQ(precision_recall({}, {1}).precision, 0.0);
  EXPECT_EQ(precision_recall({}, {1}).recall, 0.0);
  EXPECT_EQ(precision_recall({1}, {}).recall, 1.0);
}

TEST(Queries, GeneratedHaveNonEmptyOracle) {
  const SyntheticData d = gen_synthetic(small_spec(2));
  for (QueryShape s : {QueryShape::Conj2, QueryShape::Exist2}) {
    const auto qs = generate_queries(d.ideal, s, 20, 9);
    ASSERT_EQ(qs.size(), 20u);
    for (const auto& q : qs) {
      EXPECT_EQ(q.shape, s);
      EXPECT_FALSE(answer_query(d.ideal, q).empty());
    }
  }
  EXPECT_THROW(generate_queries(Grounding(oracle::make_signature(2, 1, 2), 0.0), QueryShape::Conj2, 5, 0),
               UnsatisfiableSpec);
}

TEST(Report, DeterministicModuloTimestamp) {
  const SyntheticData d = gen_synthetic(small_spec(7));
  MaskSpec m;
  m.seed = 11;
  TrainConfig t;
  t.max_epochs = 300;
  auto run = [&](const std::string& stamp, double secs) {
    nlohmann::ordered_json results = nlohmann::ordered_json::array();
    results.push_back(to_json(run_mask_revision(d.ontology, d.ideal, m, t)));
    results.push_back(to_json(run_cqa(d.ontology, d.ideal, m, t, 5)));
    nlohmann::ordered_json config = {{"mask", to_json(m)}, {"train", to_json(t)}};
    return make_report("mask-revision", config, results, stamp, secs);
  };
  auto a = run("2026-01-01T00:00:00Z", 1.0);
  auto b = run("2026-01-02T00:00:00Z", 2.0);
  EXPECT_NE(a.dump(), b.dump());
  a.erase("timestamp");
  b.erase("timestamp");
  EXPECT_EQ(a.dump(2), b.dump(2));
  EXPECT_EQ(a.begin().key(), "schema_version");
}

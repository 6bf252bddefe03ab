#include <gtest/gtest.h>

#include <algorithm>

#include "dfalc/experiment.hpp"
#include "dfalc/parser.hpp"
#include "dfalc/synthetic.hpp"
#include "dfalc/train.hpp"
#include "oracles.hpp"

using namespace dfalc;

namespace {

NormalizedTBox tbox(const char* text, const Grounding& g) {
  return normalize(parse_ontology(text).tbox, g.signature());
}

}  // namespace

TEST(Train, ModelStopsImmediately) {
  const Grounding g = oracle::example1();
  const TrainResult r = train(g, tbox("axiom some r . A SubClassOf B", g), {});
  ASSERT_EQ(r.history.size(), 1u);
  EXPECT_EQ(r.history[0].loss, 0.0);
  EXPECT_EQ(r.stop, StopReason::Converged);
  EXPECT_EQ(oracle::flatten(r.revised.tables()), oracle::flatten(g.tables()));
}

TEST(Train, ExampleTwoReachesAModel) {
  const Grounding g = oracle::example2();
  const NormalizedTBox nt = tbox("axiom some r . A SubClassOf B", g);
  TrainConfig cfg;
  cfg.learning_rate = 1e-2;
  const TrainResult r = train(g, nt, cfg);
  EXPECT_EQ(r.stop, StopReason::Converged);
  EXPECT_LE(r.final_loss(), cfg.tolerance);
  EXPECT_TRUE(fuzzy_satisfies(r.revised, nt.axioms[0].axiom));
}

TEST(Train, HistoryIsMonotoneInBestLoss) {
  const Grounding g = oracle::example2();
  TrainConfig cfg;
  cfg.max_epochs = 50;
  const TrainResult r = train(g, tbox("axiom some r . A SubClassOf B", g), cfg);
  for (std::size_t i = 1; i < r.history.size(); ++i) {
    EXPECT_LE(r.history[i].best_loss, r.history[i - 1].best_loss);
    EXPECT_EQ(r.history[i].epoch, static_cast<int>(i));
  }
  EXPECT_EQ(r.stop, StopReason::MaxEpochs);
}

TEST(Train, PatienceStopsAStalledRun) {
  // ⊤ ⊑ ⊥ cannot be repaired, and no gradient reaches any entry.
  const Grounding g = oracle::example1();
  TrainConfig cfg;
  cfg.patience = 3;
  const TrainResult r = train(g, tbox("axiom Thing SubClassOf Nothing", g), cfg);
  EXPECT_EQ(r.stop, StopReason::Patience);
  EXPECT_EQ(r.history.size(), 4u);
  EXPECT_EQ(r.history.back().stalled_epochs, 3);
}

TEST(Train, Deterministic) {
  const Grounding g = oracle::example2();
  const NormalizedTBox nt = tbox("axiom some r . A SubClassOf B\naxiom A SubClassOf only r . B", g);
  TrainConfig cfg;
  cfg.loss_kind = LossKind::Rule;
  cfg.max_epochs = 200;
  const TrainResult a = train(g, nt, cfg);
  const TrainResult b = train(g, nt, cfg);
  EXPECT_EQ(history_csv(a.history), history_csv(b.history));
  EXPECT_EQ(oracle::flatten(a.revised.tables()), oracle::flatten(b.revised.tables()));
}

TEST(Train, CsvHeader) {
  const std::string csv = history_csv({{0, 1.0, 1.0, 0}, {1, 0.5, 0.5, 0}});
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "epoch,loss,best_loss,stalled_epochs");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 3);
}

TEST(Train, InvalidConfig) {
  const Grounding g = oracle::example1();
  TrainConfig cfg;
  cfg.alpha_prime = 0.3;
  EXPECT_THROW(train(g, tbox("axiom A SubClassOf B", g), cfg), std::invalid_argument);
}

TEST(Train, SmallSyntheticRevisionRestoresAModel) {
  SyntheticSpec spec;
  spec.axioms_per_form = spread_axioms(10);
  spec.seed = 5;
  const SyntheticData data = gen_synthetic(spec);
  MaskSpec m;
  m.rate = 0.4;
  m.seed = 6;
  const MaskRevisionResult r = run_mask_revision(data.ontology, data.ideal, m, {});
  EXPECT_EQ(r.revised_success, 100.0);
}

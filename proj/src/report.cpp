#include "dfalc/report.hpp"

#include <chrono>
#include <ctime>

namespace dfalc {

using nlohmann::ordered_json;

ordered_json to_json(const TrainConfig& t) {
  return {{"loss", to_string(t.loss_kind)},
          {"learning_rate", t.learning_rate},
          {"patience", t.patience},
          {"max_epochs", t.max_epochs},
          {"alpha_prime", t.alpha_prime},
          {"tnorm", to_string(t.tnorm)},
          {"seed", t.seed},
          {"tolerance", t.tolerance},
          {"clamp_evidence", t.clamp_evidence}};
}

ordered_json to_json(const MaskSpec& m) {
  return {{"mask_rate", m.rate},
          {"unknown_region", {m.unknown_lo, m.unknown_hi}},
          {"seed", m.seed},
          {"concepts_only", m.concepts_only}};
}

ordered_json to_json(const SyntheticSpec& s) {
  return {{"individuals", s.n_individuals},
          {"concepts", s.n_concepts},
          {"roles", s.n_roles},
          {"axioms_per_form", s.axioms_per_form},
          {"density", s.density},
          {"role_density", s.role_density},
          {"seed", s.seed}};
}

ordered_json to_json(const MaskRevisionResult& r) {
  return {{"mask_rate", r.mask_rate},
          {"masked_entries", r.masked_entries},
          {"success_rate", {{"masked", r.masked_success}, {"revised", r.revised_success}}},
          {"fuzzy_success_rate",
           {{"masked", r.masked_fuzzy_success}, {"revised", r.revised_fuzzy_success}}},
          {"final_loss", r.final_loss},
          {"epochs", r.epochs},
          {"stop", to_string(r.stop)}};
}

namespace {

ordered_json to_json(const PrecisionRecall& pr) {
  return {{"precision", pr.precision}, {"recall", pr.recall}};
}

}  // namespace

ordered_json to_json(const CqaResult& r) {
  ordered_json shapes = ordered_json::array();
  for (const auto& s : r.shapes) {
    ordered_json queries = ordered_json::array();
    for (const auto& q : s.queries) {
      queries.push_back({{"query", to_string(q.query.to_concept())},
                         {"masked", to_json(q.masked)},
                         {"revised", to_json(q.revised)}});
    }
    shapes.push_back({{"shape", to_string(s.shape)},
                      {"masked", to_json(s.masked)},
                      {"revised", to_json(s.revised)},
                      {"queries", queries}});
  }
  return {{"mask_rate", r.mask_rate},
          {"masked_entries", r.masked_entries},
          {"final_loss", r.final_loss},
          {"epochs", r.epochs},
          {"shapes", shapes}};
}

ordered_json make_report(const std::string& kind, ordered_json config, ordered_json results,
                         const std::string& started_utc, double runtime_seconds) {
  return {{"schema_version", kReportSchemaVersion},
          {"kind", kind},
          {"config", std::move(config)},
          {"results", std::move(results)},
          {"timestamp", {{"started_utc", started_utc}, {"runtime_seconds", runtime_seconds}}}};
}

std::string utc_now() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace dfalc

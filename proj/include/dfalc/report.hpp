#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "dfalc/experiment.hpp"
#include "dfalc/synthetic.hpp"

namespace dfalc {

inline constexpr int kReportSchemaVersion = 1;

nlohmann::ordered_json to_json(const TrainConfig& t);
nlohmann::ordered_json to_json(const MaskSpec& m);
nlohmann::ordered_json to_json(const SyntheticSpec& s);
nlohmann::ordered_json to_json(const MaskRevisionResult& r);
nlohmann::ordered_json to_json(const CqaResult& r);

/// `{"schema_version", "kind", "config", "results", "timestamp"}`. Everything
/// that depends on the wall clock lives under "timestamp", so two runs of the
/// same configuration agree once that key is dropped.
nlohmann::ordered_json make_report(const std::string& kind, nlohmann::ordered_json config,
                                   nlohmann::ordered_json results, const std::string& started_utc,
                                   double runtime_seconds);

/// Current UTC time as ISO 8601.
std::string utc_now();

}  // namespace dfalc

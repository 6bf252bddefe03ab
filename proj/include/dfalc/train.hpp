#pragma once

#include <string>
#include <vector>

#include "dfalc/config.hpp"
#include "dfalc/grounding.hpp"
#include "dfalc/normalizer.hpp"

namespace dfalc {

struct EpochRecord {
  int epoch = 0;
  double loss = 0.0;
  double best_loss = 0.0;
  int stalled_epochs = 0;
};

enum class StopReason { Converged, Patience, MaxEpochs };

struct TrainResult {
  Grounding revised;  // lowest-loss grounding seen
  std::vector<EpochRecord> history;
  StopReason stop = StopReason::MaxEpochs;

  double final_loss() const { return history.empty() ? 0.0 : history.back().best_loss; }
};

/// Full-batch projected Adam on the chosen loss. Epoch k records the loss of
/// the grounding before its k-th step. Stops when the loss is within
/// cfg.tolerance of 0, after cfg.max_epochs steps, or once the best loss has
/// not strictly improved for cfg.patience epochs.
TrainResult train(const Grounding& init, const NormalizedTBox& nt, const TrainConfig& cfg);

/// `epoch,loss,best_loss,stalled_epochs` with a header line.
std::string history_csv(const std::vector<EpochRecord>& history);

const char* to_string(StopReason r) noexcept;

}  // namespace dfalc

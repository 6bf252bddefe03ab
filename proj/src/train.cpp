#include "dfalc/train.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "dfalc/losses.hpp"
#include "dfalc/optimizer.hpp"
#include "dfalc/parser.hpp"

namespace dfalc {

TrainResult train(const Grounding& init, const NormalizedTBox& nt, const TrainConfig& cfg) {
  cfg.validate();
  const AdamConfig adam{cfg.learning_rate};
  Grounding g = init;
  AdamState state = AdamState::for_grounding(g);

  TrainResult out;
  out.revised = init;
  double best = std::numeric_limits<double>::infinity();
  int stalled = 0;
  for (int epoch = 0;; ++epoch) {
    LossResult lr = compute_loss(g, nt, cfg);
    if (!std::isfinite(lr.loss)) throw NumericError("loss became non-finite");
    if (lr.loss < best) {
      best = lr.loss;
      out.revised = g;
      stalled = 0;
    } else {
      ++stalled;
    }
    out.history.push_back({epoch, lr.loss, best, stalled});
    if (lr.loss <= cfg.tolerance) {
      out.stop = StopReason::Converged;
      break;
    }
    if (stalled >= cfg.patience) {
      out.stop = StopReason::Patience;
      break;
    }
    if (epoch >= cfg.max_epochs) {
      out.stop = StopReason::MaxEpochs;
      break;
    }
    adam_step(g, lr.grads, state, adam);
  }
  return out;
}

std::string history_csv(const std::vector<EpochRecord>& history) {
  std::ostringstream os;
  os << "epoch,loss,best_loss,stalled_epochs\n";
  for (const auto& r : history) {
    os << r.epoch << ',' << format_degree(r.loss) << ',' << format_degree(r.best_loss) << ','
       << r.stalled_epochs << '\n';
  }
  return os.str();
}

const char* to_string(StopReason r) noexcept {
  switch (r) {
    case StopReason::Converged:
      return "converged";
    case StopReason::Patience:
      return "patience";
    case StopReason::MaxEpochs:
      return "max_epochs";
  }
  return "?";
}

}  // namespace dfalc

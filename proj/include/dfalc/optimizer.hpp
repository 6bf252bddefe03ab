#pragma once

#include "dfalc/grounding.hpp"

namespace dfalc {

struct AdamConfig {
  double learning_rate = 2e-4;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
};

/// First and second moment estimates, shaped like the grounding.
struct AdamState {
  GradientSet m;
  GradientSet v;
  long step = 0;

  static AdamState for_grounding(const Grounding& g);
};

/// One Adam update of every entry, then projection onto [0,1].
/// Throws NonFiniteGradient (leaving g and state untouched) if any gradient
/// entry is NaN or infinite, ShapeMismatch on mismatched shapes.
void adam_step(Grounding& g, const GradientSet& grads, AdamState& state, const AdamConfig& cfg);

}  // namespace dfalc

#pragma once

#include "dfalc/config.hpp"
#include "dfalc/grounding.hpp"
#include "dfalc/normalizer.hpp"

namespace dfalc {

/// max(0, v - w). Callers treat the result as a constant: it never receives
/// or passes on gradient.
inline double detached_hinge(double v, double w) noexcept { return v > w ? v - w : 0.0; }

/// Array form of detached_hinge.
template <typename A, typename B>
auto detached_hinge(const Eigen::ArrayBase<A>& v, const Eigen::ArrayBase<B>& w) {
  return (v - w).max(0.0);
}

struct LossResult {
  double loss = 0.0;
  GradientSet grads;
};

/// Adds d(upstream · c)/d(entries) into `grads`, where c is evaluated under
/// Gödel semantics. Ties route to the lowest-index operand or individual.
void backprop_concept(const Grounding& g, const ConceptExpr& c, const Eigen::VectorXd& upstream,
                      GradientSet& grads);

/// (1/|T'|) Σ_axioms Σ_a max(0, C(a) - D(a)). Zero for an empty TBox.
LossResult hierarchical_loss(const Grounding& g, const NormalizedTBox& nt);

/// Per-form revision losses; masks and evidence are read from `g`.
LossResult rule_loss(const Grounding& g, const NormalizedTBox& nt, const TrainConfig& cfg);

/// As above, with the detached factors computed from `mask_point` instead of
/// `g`. Only the differentiable factors depend on `g`.
LossResult rule_loss(const Grounding& g, const Grounding& mask_point, const NormalizedTBox& nt,
                     const TrainConfig& cfg);

/// Dispatches on cfg.loss_kind.
LossResult compute_loss(const Grounding& g, const NormalizedTBox& nt, const TrainConfig& cfg);

}  // namespace dfalc

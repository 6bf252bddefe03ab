#include "dfalc/optimizer.hpp"

#include <cmath>

namespace dfalc {

AdamState AdamState::for_grounding(const Grounding& g) {
  return {GradientSet::zeros_like(g.tables()), GradientSet::zeros_like(g.tables()), 0};
}

namespace {

template <typename Param, typename Grad, typename Moment>
void update(Param& p, const Grad& grad, Moment& m, Moment& v, const AdamConfig& cfg, double c1,
            double c2) {
  m = cfg.beta1 * m + (1.0 - cfg.beta1) * grad;
  v = cfg.beta2 * v + (1.0 - cfg.beta2) * grad.cwiseProduct(grad);
  const auto m_hat = (m.array() / c1).eval();
  const auto v_hat = (v.array() / c2).eval();
  p = (p.array() - cfg.learning_rate * m_hat / (v_hat.sqrt() + cfg.epsilon)).max(0.0).min(1.0).matrix();
}

}  // namespace

void adam_step(Grounding& g, const GradientSet& grads, AdamState& state, const AdamConfig& cfg) {
  auto& t = g.tables();
  if (grads.concepts.size() != t.concepts.size() || grads.roles.size() != t.roles.size() ||
      state.m.concepts.size() != t.concepts.size() || state.m.roles.size() != t.roles.size()) {
    throw ShapeMismatch("gradient set does not match the grounding");
  }
  for (std::size_t i = 0; i < t.concepts.size(); ++i) {
    if (grads.concepts[i].size() != t.concepts[i].size()) throw ShapeMismatch("gradient shape");
    if (!grads.concepts[i].allFinite()) {
      throw NonFiniteGradient("non-finite gradient for concept '" + g.signature().concepts[i] + "'");
    }
  }
  for (std::size_t i = 0; i < t.roles.size(); ++i) {
    if (grads.roles[i].rows() != t.roles[i].rows() || grads.roles[i].cols() != t.roles[i].cols()) {
      throw ShapeMismatch("gradient shape");
    }
    if (!grads.roles[i].allFinite()) {
      throw NonFiniteGradient("non-finite gradient for role '" + g.signature().roles[i] + "'");
    }
  }

  ++state.step;
  const double c1 = 1.0 - std::pow(cfg.beta1, static_cast<double>(state.step));
  const double c2 = 1.0 - std::pow(cfg.beta2, static_cast<double>(state.step));
  for (std::size_t i = 0; i < t.concepts.size(); ++i) {
    update(t.concepts[i], grads.concepts[i], state.m.concepts[i], state.v.concepts[i], cfg, c1, c2);
  }
  for (std::size_t i = 0; i < t.roles.size(); ++i) {
    update(t.roles[i], grads.roles[i], state.m.roles[i], state.v.roles[i], cfg, c1, c2);
  }
}

}  // namespace dfalc

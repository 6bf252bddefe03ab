#include "dfalc/config.hpp"

#include <cmath>
#include <stdexcept>

namespace dfalc {

void TrainConfig::validate() const {
  if (!(learning_rate > 0.0) || !std::isfinite(learning_rate)) {
    throw std::invalid_argument("learning rate must be positive");
  }
  if (!(alpha_prime >= 0.5 && alpha_prime <= 1.0)) {
    throw std::invalid_argument("alpha' must lie in [0.5, 1]");
  }
  if (patience < 1) throw std::invalid_argument("patience must be at least 1");
  if (max_epochs < 0) throw std::invalid_argument("max epochs must be non-negative");
  if (!(tolerance >= 0.0)) throw std::invalid_argument("tolerance must be non-negative");
}

LossKind parse_loss_kind(const std::string& s) {
  if (s == "hierarchical") return LossKind::Hierarchical;
  if (s == "rule") return LossKind::Rule;
  throw std::invalid_argument("unknown loss '" + s + "'");
}

TNorm parse_tnorm(const std::string& s) {
  if (s == "product") return TNorm::Product;
  if (s == "godel") return TNorm::Godel;
  throw std::invalid_argument("unknown t-norm '" + s + "'");
}

const char* to_string(LossKind k) noexcept {
  return k == LossKind::Hierarchical ? "hierarchical" : "rule";
}

const char* to_string(TNorm t) noexcept { return t == TNorm::Product ? "product" : "godel"; }

}  // namespace dfalc

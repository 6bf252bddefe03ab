#pragma once

#include <cstdint>
#include <string>

namespace dfalc {

enum class LossKind { Hierarchical, Rule };
enum class TNorm { Product, Godel };

struct TrainConfig {
  LossKind loss_kind = LossKind::Hierarchical;
  double learning_rate = 2e-4;
  int patience = 10;
  int max_epochs = 20000;
  double alpha_prime = 0.8;  // rule-loss threshold
  TNorm tnorm = TNorm::Product;
  std::uint64_t seed = 0;
  double tolerance = 1e-9;
  bool clamp_evidence = true;

  /// Throws std::invalid_argument on out-of-range fields.
  void validate() const;
};

LossKind parse_loss_kind(const std::string& s);
TNorm parse_tnorm(const std::string& s);
const char* to_string(LossKind k) noexcept;
const char* to_string(TNorm t) noexcept;

}  // namespace dfalc

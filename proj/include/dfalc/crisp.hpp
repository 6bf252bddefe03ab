#pragma once

#include <vector>

#include "dfalc/grounding.hpp"

namespace dfalc {

/// Threshold of the crisp transformation; alpha in [0.5, 1].
struct CrispConfig {
  double alpha = 0.5;
};

/// True if n > alpha, False if n < 1 - alpha, Unknown on the closed band.
ThreeValued crispify_degree(double n, double alpha);

/// Entrywise crisp transformation of every concept and role entry.
CrispInterpretation crispify(const Grounding& g, const CrispConfig& cfg);

ThreeValued truth_at(const Vector<std::int8_t>& v, Eigen::Index i);

/// Strong-Kleene membership of every individual in `c`.
Vector<std::int8_t> kleene_eval(const CrispInterpretation& ci, const ConceptExpr& c);

/// False if some individual definitely violates the axiom, True if every
/// individual definitely satisfies it, otherwise Unknown.
ThreeValued crisp_eval_axiom(const CrispInterpretation& ci, const TBoxAxiom& ax);

enum class UnknownPolicy { Satisfies, Fails };

/// Percentage of axioms not definitely violated (Satisfies) or definitely
/// satisfied (Fails). Throws EmptyTBox on an empty axiom list.
double success_rate(const CrispInterpretation& ci, const std::vector<TBoxAxiom>& tbox,
                    UnknownPolicy policy = UnknownPolicy::Satisfies);

/// Percentage of axioms fuzzily satisfied by `g` (the strict, non-crisp metric).
double fuzzy_success_rate(const Grounding& g, const std::vector<TBoxAxiom>& tbox);

const char* to_string(ThreeValued v) noexcept;

}  // namespace dfalc

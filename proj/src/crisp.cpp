#include "dfalc/crisp.hpp"

#include <algorithm>

namespace dfalc {

namespace {

constexpr std::int8_t code(ThreeValued v) { return static_cast<std::int8_t>(v); }

}  // namespace

ThreeValued crispify_degree(double n, double alpha) {
  if (n > alpha) return ThreeValued::True;
  if (n < 1.0 - alpha) return ThreeValued::False;
  return ThreeValued::Unknown;
}

CrispInterpretation crispify(const Grounding& g, const CrispConfig& cfg) {
  if (!(cfg.alpha >= 0.5 && cfg.alpha <= 1.0)) {
    throw std::invalid_argument("crisp alpha must lie in [0.5, 1]");
  }
  auto quantize = [&](double n) { return code(crispify_degree(n, cfg.alpha)); };
  DegreeTables<std::int8_t> t;
  for (const auto& v : g.tables().concepts) t.concepts.push_back(v.unaryExpr(quantize));
  for (const auto& m : g.tables().roles) t.roles.push_back(m.unaryExpr(quantize));
  return CrispInterpretation(g.signature(), std::move(t));
}

ThreeValued truth_at(const Vector<std::int8_t>& v, Eigen::Index i) {
  return static_cast<ThreeValued>(v[i]);
}

Vector<std::int8_t> kleene_eval(const CrispInterpretation& ci, const ConceptExpr& c) {
  return evaluate(ci, c);
}

namespace {

// Kleene value of C ⊑ D: conjunction over individuals of (¬C ∨ D).
std::int8_t inclusion_value(const CrispInterpretation& ci, const ConceptExpr& lhs,
                            const ConceptExpr& rhs) {
  const auto c = kleene_eval(ci, lhs);
  const auto d = kleene_eval(ci, rhs);
  if (c.size() == 0) return code(ThreeValued::True);
  return (Vector<std::int8_t>::Constant(c.size(), 2) - c).cwiseMax(d).minCoeff();
}

}  // namespace

ThreeValued crisp_eval_axiom(const CrispInterpretation& ci, const TBoxAxiom& ax) {
  if (const auto* inc = std::get_if<Inclusion>(&ax)) {
    return static_cast<ThreeValued>(inclusion_value(ci, inc->left, inc->right));
  }
  const auto& eq = std::get<Equivalence>(ax);
  return static_cast<ThreeValued>(
      std::min(inclusion_value(ci, eq.left, eq.right), inclusion_value(ci, eq.right, eq.left)));
}

double success_rate(const CrispInterpretation& ci, const std::vector<TBoxAxiom>& tbox,
                    UnknownPolicy policy) {
  if (tbox.empty()) throw EmptyTBox("success rate of an empty TBox is undefined");
  std::size_t ok = 0;
  for (const auto& ax : tbox) {
    const ThreeValued v = crisp_eval_axiom(ci, ax);
    if (v == ThreeValued::True || (v == ThreeValued::Unknown && policy == UnknownPolicy::Satisfies)) {
      ++ok;
    }
  }
  return 100.0 * static_cast<double>(ok) / static_cast<double>(tbox.size());
}

double fuzzy_success_rate(const Grounding& g, const std::vector<TBoxAxiom>& tbox) {
  if (tbox.empty()) throw EmptyTBox("success rate of an empty TBox is undefined");
  const auto ok = std::count_if(tbox.begin(), tbox.end(),
                                [&](const TBoxAxiom& ax) { return fuzzy_satisfies(g, ax); });
  return 100.0 * static_cast<double>(ok) / static_cast<double>(tbox.size());
}

const char* to_string(ThreeValued v) noexcept {
  switch (v) {
    case ThreeValued::False:
      return "false";
    case ThreeValued::Unknown:
      return "unknown";
    case ThreeValued::True:
      return "true";
  }
  return "?";
}

}  // namespace dfalc

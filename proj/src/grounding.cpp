#include "dfalc/grounding.hpp"

#include <cmath>
#include <string>

namespace dfalc {

Eigen::VectorXd eval_concept(const Grounding& g, const ConceptExpr& c) { return evaluate(g, c); }

InclusionCheck fuzzy_inclusion_check(const Grounding& g, const Inclusion& ax) {
  const Eigen::VectorXd lhs = eval_concept(g, ax.left);
  const Eigen::VectorXd rhs = eval_concept(g, ax.right);
  InclusionCheck out;
  out.violation = (lhs - rhs).cwiseMax(0.0);
  out.satisfied = (lhs.array() <= rhs.array()).all();
  return out;
}

bool fuzzy_satisfies(const Grounding& g, const TBoxAxiom& ax) {
  if (const auto* inc = std::get_if<Inclusion>(&ax)) return fuzzy_inclusion_check(g, *inc).satisfied;
  const auto& eq = std::get<Equivalence>(ax);
  return fuzzy_inclusion_check(g, {eq.left, eq.right}).satisfied &&
         fuzzy_inclusion_check(g, {eq.right, eq.left}).satisfied;
}

Grounding restrict_to(const Grounding& g, const Signature& sig) {
  if (!(sig.individuals == g.signature().individuals)) {
    throw ShapeMismatch("restriction must keep the individual domain");
  }
  DegreeTables<double> t;
  for (const auto& c : sig.concepts) t.concepts.push_back(g.concept_values(c));
  for (const auto& r : sig.roles) t.roles.push_back(g.role_values(r));
  return Grounding(sig, std::move(t));
}

Grounding grounding_from_abox(const Ontology& o, double fill) {
  Grounding g(signature_of(o), fill);
  for (const auto& a : o.abox) {
    if (const auto* ca = std::get_if<ConceptAssertion>(&a.fact)) {
      if (!ca->concept_expr.is_name()) {
        throw UnsupportedForm("only concept-name assertions can seed a grounding");
      }
      const auto i = g.signature().individuals.at(ca->individual);
      g.concept_values(ca->concept_expr.symbol())[static_cast<Eigen::Index>(i)] = a.degree;
    } else {
      const auto& ra = std::get<RoleAssertion>(a.fact);
      const auto s = static_cast<Eigen::Index>(g.signature().individuals.at(ra.subject));
      const auto t = static_cast<Eigen::Index>(g.signature().individuals.at(ra.object));
      g.role_values(ra.role)(s, t) = a.degree;
    }
  }
  return g;
}

void check_unit_range(const Grounding& g) {
  auto in_range = [](const auto& m) {
    return m.size() == 0 || (m.array().isFinite().all() && m.minCoeff() >= 0.0 && m.maxCoeff() <= 1.0);
  };
  for (std::size_t i = 0; i < g.tables().concepts.size(); ++i) {
    if (!in_range(g.tables().concepts[i])) {
      throw InvalidGrounding("concept '" + g.signature().concepts[i] + "' has entries outside [0,1]");
    }
  }
  for (std::size_t i = 0; i < g.tables().roles.size(); ++i) {
    if (!in_range(g.tables().roles[i])) {
      throw InvalidGrounding("role '" + g.signature().roles[i] + "' has entries outside [0,1]");
    }
  }
}

}  // namespace dfalc

#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "dfalc/concept.hpp"
#include "dfalc/errors.hpp"
#include "dfalc/ontology.hpp"

namespace dfalc {

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// Per-concept vectors and per-role square matrices over a fixed domain.
///
/// Used for groundings, gradients and optimizer moments alike. Entry i of a
/// concept vector (row i of a role matrix) belongs to individual i.
template <typename Scalar>
struct DegreeTables {
  std::vector<Vector<Scalar>> concepts;
  std::vector<Matrix<Scalar>> roles;

  DegreeTables() = default;
  DegreeTables(std::size_t n_concepts, std::size_t n_roles, Eigen::Index domain,
               Scalar fill = Scalar(0))
      : concepts(n_concepts, Vector<Scalar>::Constant(domain, fill)),
        roles(n_roles, Matrix<Scalar>::Constant(domain, domain, fill)) {}

  template <typename Other>
  static DegreeTables zeros_like(const DegreeTables<Other>& shape) {
    DegreeTables t;
    t.concepts.reserve(shape.concepts.size());
    t.roles.reserve(shape.roles.size());
    for (const auto& v : shape.concepts) t.concepts.push_back(Vector<Scalar>::Zero(v.size()));
    for (const auto& m : shape.roles) t.roles.push_back(Matrix<Scalar>::Zero(m.rows(), m.cols()));
    return t;
  }

  std::size_t entry_count() const {
    std::size_t n = 0;
    for (const auto& v : concepts) n += static_cast<std::size_t>(v.size());
    for (const auto& m : roles) n += static_cast<std::size_t>(m.size());
    return n;
  }

  template <typename Fn>
  void for_each(Fn&& fn) {
    for (auto& v : concepts) fn(v);
    for (auto& m : roles) fn(m);
  }

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (const auto& v : concepts) fn(v);
    for (const auto& m : roles) fn(m);
  }

  friend bool operator==(const DegreeTables& a, const DegreeTables& b) {
    if (a.concepts.size() != b.concepts.size() || a.roles.size() != b.roles.size()) return false;
    for (std::size_t i = 0; i < a.concepts.size(); ++i) {
      if (a.concepts[i].size() != b.concepts[i].size() || a.concepts[i] != b.concepts[i]) {
        return false;
      }
    }
    for (std::size_t i = 0; i < a.roles.size(); ++i) {
      if (a.roles[i].rows() != b.roles[i].rows() || a.roles[i] != b.roles[i]) return false;
    }
    return true;
  }
};

/// An interpretation over the finite domain N_I, with entries drawn from a
/// bounded chain (degrees in [0,1] or three-valued truth codes).
template <typename Scalar>
class BasicGrounding {
 public:
  BasicGrounding() = default;

  /// All entries set to `fill`.
  explicit BasicGrounding(Signature signature, Scalar fill = Scalar(0))
      : signature_(std::move(signature)),
        tables_(signature_.concepts.size(), signature_.roles.size(),
                static_cast<Eigen::Index>(signature_.individuals.size()), fill) {}

  BasicGrounding(Signature signature, DegreeTables<Scalar> tables)
      : signature_(std::move(signature)), tables_(std::move(tables)) {
    check_shapes();
  }

  const Signature& signature() const noexcept { return signature_; }
  Eigen::Index domain_size() const noexcept {
    return static_cast<Eigen::Index>(signature_.individuals.size());
  }

  Vector<Scalar>& concept_values(std::size_t i) { return tables_.concepts[i]; }
  const Vector<Scalar>& concept_values(std::size_t i) const { return tables_.concepts[i]; }
  Vector<Scalar>& concept_values(std::string_view name) {
    return tables_.concepts[signature_.concepts.at(name)];
  }
  const Vector<Scalar>& concept_values(std::string_view name) const {
    return tables_.concepts[signature_.concepts.at(name)];
  }

  Matrix<Scalar>& role_values(std::size_t i) { return tables_.roles[i]; }
  const Matrix<Scalar>& role_values(std::size_t i) const { return tables_.roles[i]; }
  Matrix<Scalar>& role_values(std::string_view name) {
    return tables_.roles[signature_.roles.at(name)];
  }
  const Matrix<Scalar>& role_values(std::string_view name) const {
    return tables_.roles[signature_.roles.at(name)];
  }

  DegreeTables<Scalar>& tables() noexcept { return tables_; }
  const DegreeTables<Scalar>& tables() const noexcept { return tables_; }

  /// Adds a concept name (all entries `fill`) unless it already exists.
  std::size_t add_concept(const std::string& name, Scalar fill = Scalar(0)) {
    const std::size_t before = signature_.concepts.size();
    const std::size_t i = signature_.concepts.add(name);
    if (i == before) tables_.concepts.push_back(Vector<Scalar>::Constant(domain_size(), fill));
    return i;
  }

  void check_shapes() const {
    const Eigen::Index d = domain_size();
    if (tables_.concepts.size() != signature_.concepts.size() ||
        tables_.roles.size() != signature_.roles.size()) {
      throw ShapeMismatch("table count does not match the signature");
    }
    for (const auto& v : tables_.concepts) {
      if (v.size() != d) throw ShapeMismatch("concept vector length differs from |N_I|");
    }
    for (const auto& m : tables_.roles) {
      if (m.rows() != d || m.cols() != d) throw ShapeMismatch("role matrix is not |N_I|x|N_I|");
    }
  }

  friend bool operator==(const BasicGrounding&, const BasicGrounding&) = default;

 private:
  Signature signature_;
  DegreeTables<Scalar> tables_;
};

using Grounding = BasicGrounding<double>;
using GradientSet = DegreeTables<double>;

/// Three-valued truth, ordered False < Unknown < True.
enum class ThreeValued : std::int8_t { False = 0, Unknown = 1, True = 2 };

/// Crispified interpretation; entries are ThreeValued codes.
using CrispInterpretation = BasicGrounding<std::int8_t>;

/// Truth-degree algebra of a bounded chain: meet = min, join = max,
/// complement = top - x. Gödel semantics on [0,1] and strong Kleene logic on
/// {F,U,T} are both instances.
template <typename Scalar>
struct ChainAlgebra;

template <>
struct ChainAlgebra<double> {
  static constexpr double top = 1.0;
};

template <>
struct ChainAlgebra<std::int8_t> {
  static constexpr std::int8_t top = 2;
};

/// Value of `c` at every individual, by structural induction.
///
/// Exists is max_b min(r(a,b), C(b)); Forall is min_b max(top - r(a,b), C(b)).
/// Throws UnknownName if `c` mentions a name outside the signature.
template <typename Scalar>
Vector<Scalar> evaluate(const BasicGrounding<Scalar>& g, const ConceptExpr& c) {
  constexpr Scalar top = ChainAlgebra<Scalar>::top;
  const Eigen::Index d = g.domain_size();
  switch (c.kind()) {
    case ConceptKind::Top:
      return Vector<Scalar>::Constant(d, top);
    case ConceptKind::Bottom:
      return Vector<Scalar>::Zero(d);
    case ConceptKind::Name:
      return g.concept_values(c.symbol());
    case ConceptKind::Not:
      return (Vector<Scalar>::Constant(d, top) - evaluate(g, c.operand())).eval();
    case ConceptKind::And:
      return evaluate(g, c.left()).cwiseMin(evaluate(g, c.right()));
    case ConceptKind::Or:
      return evaluate(g, c.left()).cwiseMax(evaluate(g, c.right()));
    case ConceptKind::Exists:
    case ConceptKind::Forall: {
      const Matrix<Scalar>& r = g.role_values(c.symbol());
      const Vector<Scalar> filler = evaluate(g, c.operand());
      if (d == 0) return Vector<Scalar>();
      const auto filler_rows = filler.transpose().replicate(d, 1).array();
      if (c.kind() == ConceptKind::Exists) {
        return r.array().min(filler_rows).rowwise().maxCoeff().matrix();
      }
      return (Scalar(top) - r.array()).max(filler_rows).rowwise().minCoeff().matrix();
    }
  }
  return {};
}

/// Gödel fuzzy value of `c` at every individual.
Eigen::VectorXd eval_concept(const Grounding& g, const ConceptExpr& c);

struct InclusionCheck {
  bool satisfied = false;
  Eigen::VectorXd violation;  // max(0, C(a) - D(a))
};

/// Fuzzy inclusion C ⊑ D: holds iff C(a) <= D(a) for every individual.
InclusionCheck fuzzy_inclusion_check(const Grounding& g, const Inclusion& ax);

/// Fuzzy satisfaction of a TBox axiom (an equivalence needs both directions).
bool fuzzy_satisfies(const Grounding& g, const TBoxAxiom& ax);

/// Restricts (or reorders) `g` to `sig`. Every name in `sig` must exist in `g`
/// and the individuals must coincide.
Grounding restrict_to(const Grounding& g, const Signature& sig);

/// Grounding built from ABox assertions; unasserted entries get `fill`.
Grounding grounding_from_abox(const Ontology& o, double fill);

/// Throws InvalidGrounding unless every entry is finite and in [0,1].
void check_unit_range(const Grounding& g);

}  // namespace dfalc

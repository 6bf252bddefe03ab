#include "dfalc/ontology.hpp"

#include "dfalc/errors.hpp"

namespace dfalc {

NameIndex::NameIndex(std::initializer_list<std::string> names) {
  for (const auto& n : names) add(n);
}

std::size_t NameIndex::add(const std::string& name) {
  if (auto it = index_.find(name); it != index_.end()) return it->second;
  const std::size_t i = names_.size();
  names_.push_back(name);
  index_.emplace(name, i);
  return i;
}

std::optional<std::size_t> NameIndex::find(std::string_view name) const {
  if (auto it = index_.find(std::string(name)); it != index_.end()) return it->second;
  return std::nullopt;
}

std::size_t NameIndex::at(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw UnknownName("unknown name '" + std::string(name) + "'");
}

void collect_names(const ConceptExpr& c, Signature& sig) {
  visit_names(
      c, [&](const std::string& n) { sig.concepts.add(n); },
      [&](const std::string& r) { sig.roles.add(r); });
}

Signature signature_of(const Ontology& o) {
  Signature sig = o.signature;
  for (const auto& axiom : o.tbox) {
    std::visit(
        [&](const auto& ax) {
          collect_names(ax.left, sig);
          collect_names(ax.right, sig);
        },
        axiom);
  }
  for (const auto& assertion : o.abox) {
    if (const auto* ca = std::get_if<ConceptAssertion>(&assertion.fact)) {
      collect_names(ca->concept_expr, sig);
      sig.individuals.add(ca->individual);
    } else {
      const auto& ra = std::get<RoleAssertion>(assertion.fact);
      sig.roles.add(ra.role);
      sig.individuals.add(ra.subject);
      sig.individuals.add(ra.object);
    }
  }
  return sig;
}

namespace {

std::string side(const ConceptExpr& c) {
  switch (c.kind()) {
    case ConceptKind::Name:
    case ConceptKind::Top:
    case ConceptKind::Bottom:
      return to_string(c);
    default:
      return "(" + to_string(c) + ")";
  }
}

}  // namespace

std::string to_string(const TBoxAxiom& axiom) {
  if (const auto* inc = std::get_if<Inclusion>(&axiom)) {
    return side(inc->left) + " SubClassOf " + side(inc->right);
  }
  const auto& eq = std::get<Equivalence>(axiom);
  return side(eq.left) + " EquivalentTo " + side(eq.right);
}

}  // namespace dfalc

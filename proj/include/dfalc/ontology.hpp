#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

#include "dfalc/concept.hpp"

namespace dfalc {

/// Insertion-ordered set of names with O(1) index lookup.
///
/// The order is the indexing contract for grounding vectors and matrices.
class NameIndex {
 public:
  NameIndex() = default;
  NameIndex(std::initializer_list<std::string> names);

  /// Appends `name` if absent; returns its index either way.
  std::size_t add(const std::string& name);
  std::optional<std::size_t> find(std::string_view name) const;
  std::size_t at(std::string_view name) const;  // throws UnknownName
  bool contains(std::string_view name) const { return find(name).has_value(); }

  std::size_t size() const noexcept { return names_.size(); }
  bool empty() const noexcept { return names_.empty(); }
  const std::string& operator[](std::size_t i) const { return names_[i]; }
  const std::vector<std::string>& names() const noexcept { return names_; }
  auto begin() const noexcept { return names_.begin(); }
  auto end() const noexcept { return names_.end(); }

  friend bool operator==(const NameIndex& a, const NameIndex& b) { return a.names_ == b.names_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// N_C, N_R and N_I of an ontology.
struct Signature {
  NameIndex concepts;
  NameIndex roles;
  NameIndex individuals;

  friend bool operator==(const Signature&, const Signature&) = default;
};

struct Inclusion {
  ConceptExpr left;
  ConceptExpr right;
  friend bool operator==(const Inclusion&, const Inclusion&) = default;
};

struct Equivalence {
  ConceptExpr left;
  ConceptExpr right;
  friend bool operator==(const Equivalence&, const Equivalence&) = default;
};

using TBoxAxiom = std::variant<Inclusion, Equivalence>;

struct ConceptAssertion {
  std::string individual;
  ConceptExpr concept_expr;
  friend bool operator==(const ConceptAssertion&, const ConceptAssertion&) = default;
};

struct RoleAssertion {
  std::string subject;
  std::string object;
  std::string role;
  friend bool operator==(const RoleAssertion&, const RoleAssertion&) = default;
};

/// Fuzzy assertion `phi = degree`; crisp input defaults to degree 1.
struct ABoxAssertion {
  std::variant<ConceptAssertion, RoleAssertion> fact;
  double degree = 1.0;
  friend bool operator==(const ABoxAssertion&, const ABoxAssertion&) = default;
};

struct Ontology {
  std::vector<TBoxAxiom> tbox;
  std::vector<ABoxAssertion> abox;
  Signature signature;

  friend bool operator==(const Ontology&, const Ontology&) = default;
};

/// Returns the ontology's signature extended by every name referenced in its
/// axioms and assertions, in first-occurrence order after the declared names.
Signature signature_of(const Ontology& o);

/// Adds every name in `c` to `sig` (concepts to N_C, roles to N_R).
void collect_names(const ConceptExpr& c, Signature& sig);

std::string to_string(const TBoxAxiom& axiom);

}  // namespace dfalc

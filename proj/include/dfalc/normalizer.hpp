#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dfalc/concept.hpp"
#include "dfalc/grounding.hpp"
#include "dfalc/ontology.hpp"

namespace dfalc {

/// A concept name, ⊤ or ⊥, possibly negated.
struct Literal {
  enum class Base { Name, Top, Bottom };
  Base base = Base::Name;
  std::string name;
  bool negated = false;

  static std::optional<Literal> from(const ConceptExpr& c);
  ConceptExpr to_concept() const;

  friend bool operator==(const Literal&, const Literal&) = default;
};

/// The seven normal forms over literals.
///   F1 C ⊑ B          F2 C1 ⊓ C2 ⊑ B     F3 B ⊑ C1 ⊔ C2
///   F4 C ⊑ ∃r.B       F5 C ⊑ ∀r.B
///   F6 ∃r.B ⊑ C       F7 ∀r.B ⊑ C
enum class NormalForm { F1 = 1, F2, F3, F4, F5, F6, F7 };

/// Form tag of an inclusion, or nullopt when it is not normal.
std::optional<NormalForm> classify_form(const Inclusion& ax);

struct NormalAxiom {
  NormalForm form;
  Inclusion axiom;

  friend bool operator==(const NormalAxiom&, const NormalAxiom&) = default;
};

struct NormalizedTBox {
  std::vector<NormalAxiom> axioms;
  /// Fresh name -> the subexpression it stands for.
  std::map<std::string, ConceptExpr> fresh_defs;
  /// Input signature followed by the fresh names in creation order.
  Signature extended_signature;
};

/// Pushes negation down to names, ⊤ and ⊥.
ConceptExpr to_nnf(const ConceptExpr& c);

/// Rewrites the TBox into normal forms. Equivalences become two inclusions;
/// identical compound subexpressions share one fresh name `__N<k>` across the
/// whole TBox.
NormalizedTBox normalize(const Ontology& o);
NormalizedTBox normalize(const std::vector<TBoxAxiom>& tbox, const Signature& signature);

/// Extends `g` to the fresh names of `nt`, each set to the Gödel value of its
/// definition. Definitions that mention other fresh names are resolved first.
/// The domain is taken from `g`.
Grounding seed_fresh_assertions(const NormalizedTBox& nt, const Grounding& g);

std::string to_string(NormalForm f);

/// Ontology text for the normalized TBox, with trailing `# define` comments.
std::string render_normalized(const NormalizedTBox& nt, const Ontology& source);

}  // namespace dfalc

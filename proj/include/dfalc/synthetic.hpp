#pragma once

#include <array>
#include <cstdint>

#include "dfalc/grounding.hpp"
#include "dfalc/ontology.hpp"

namespace dfalc {

/// Axiom counts per shape: slots 0..6 are forms F1..F7, slot 7 holds
/// compound inclusions with sides nested up to depth 2.
using AxiomCounts = std::array<int, 8>;

/// `total` axioms spread round-robin over the eight shapes.
AxiomCounts spread_axioms(int total);

struct SyntheticSpec {
  int n_individuals = 8;
  int n_concepts = 5;
  int n_roles = 1;
  AxiomCounts axioms_per_form{};
  double density = 0.5;       // P(a ∈ A) in the hidden interpretation
  double role_density = -1.0;  // P((a,b) ∈ r); negative means min(density, 2/|N_I|)
  std::uint64_t seed = 0;
  int attempts_per_axiom = 2000;  // compound sampling budget

  void validate() const;
};

struct SyntheticData {
  Ontology ontology;
  Grounding ideal;  // {0,1}-valued, over the ontology signature
};

/// Samples a hidden crisp interpretation, then keeps only candidate axioms it
/// satisfies, preferring ones that are not vacuous on it. The ABox lists every
/// entry of the interpretation at degree 0 or 1.
/// Resamples the hidden interpretation when some shape has too few satisfied
/// candidates; throws UnsatisfiableSpec if that keeps happening.
SyntheticData gen_synthetic(const SyntheticSpec& spec);

}  // namespace dfalc

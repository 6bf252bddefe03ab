#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "dfalc/grounding.hpp"
#include "dfalc/ontology.hpp"

namespace dfalc {

/// Classical interpretation over a domain of at most 64 elements, as bitsets.
/// Bit a of `concepts[i]` is a ∈ A_i; bit b of `roles[r][a]` is (a,b) ∈ r.
struct BitInterpretation {
  int domain = 0;
  std::vector<std::uint64_t> concepts;
  std::vector<std::vector<std::uint64_t>> roles;

  friend bool operator==(const BitInterpretation&, const BitInterpretation&) = default;
};

/// Concept with names resolved against a signature, evaluated on bitsets.
class CompiledConcept {
 public:
  CompiledConcept(const ConceptExpr& c, const Signature& sig);
  std::uint64_t eval(const BitInterpretation& bi) const;

 private:
  struct Op {
    ConceptKind kind;
    std::size_t index = 0;  // concept or role index
    std::int32_t a = -1, b = -1;  // operand positions in ops_
  };
  std::int32_t compile(const ConceptExpr& c, const Signature& sig);
  std::uint64_t run(std::int32_t at, const BitInterpretation& bi) const;

  std::vector<Op> ops_;
  std::int32_t root_ = -1;
};

class CompiledTBox {
 public:
  CompiledTBox(const std::vector<TBoxAxiom>& tbox, const Signature& sig);
  bool satisfied_by(const BitInterpretation& bi) const;

 private:
  // Equivalences contribute both directions.
  std::vector<std::pair<CompiledConcept, CompiledConcept>> inclusions_;
};

/// |N_C|·d + |N_R|·d².
std::size_t interpretation_bits(const Signature& sig, int domain);

/// Interpretation with number `code` in the enumeration order used below.
BitInterpretation decode_interpretation(const Signature& sig, int domain, std::uint64_t code);

/// Calls `fn(const BitInterpretation&)` for every interpretation of `sig` over
/// a domain of size `domain`. Stops early if `fn` returns false.
template <typename Fn>
void for_each_interpretation(const Signature& sig, int domain, Fn&& fn) {
  const std::size_t bits = interpretation_bits(sig, domain);
  if (bits >= 63) throw TooLarge("interpretation space exceeds 2^62");
  const std::uint64_t n = std::uint64_t{1} << bits;
  for (std::uint64_t code = 0; code < n; ++code) {
    if (!fn(decode_interpretation(sig, domain, code))) return;
  }
}

/// All classical models of the TBox over a fixed domain.
/// Throws TooLarge unless the interpretation space has at most 2^max_bits
/// elements and the domain fits in 64 bits.
std::vector<BitInterpretation> brute_force_models(const Signature& sig,
                                                  const std::vector<TBoxAxiom>& tbox,
                                                  int domain, std::size_t max_bits = 20);
std::vector<BitInterpretation> brute_force_models(const Signature& sig, const Ontology& o,
                                                  int domain);

/// {0,1}-valued grounding; individuals are named d0, d1, ...
Grounding to_grounding(const BitInterpretation& bi, const Signature& sig);

/// Inverse of to_grounding for {0,1}-valued groundings.
BitInterpretation from_grounding(const Grounding& g);

}  // namespace dfalc

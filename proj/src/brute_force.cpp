#include "dfalc/brute_force.hpp"

#include <string>

namespace dfalc {

namespace {

std::uint64_t full_mask(int d) {
  return d >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << d) - 1;
}

void check_domain(int domain) {
  if (domain < 0 || domain > 64) throw TooLarge("bitset domain must have at most 64 elements");
}

}  // namespace

CompiledConcept::CompiledConcept(const ConceptExpr& c, const Signature& sig) {
  root_ = compile(c, sig);
}

std::int32_t CompiledConcept::compile(const ConceptExpr& c, const Signature& sig) {
  Op op{c.kind()};
  switch (c.kind()) {
    case ConceptKind::Top:
    case ConceptKind::Bottom:
      break;
    case ConceptKind::Name:
      op.index = sig.concepts.at(c.symbol());
      break;
    case ConceptKind::Not:
      op.a = compile(c.operand(), sig);
      break;
    case ConceptKind::And:
    case ConceptKind::Or:
      op.a = compile(c.left(), sig);
      op.b = compile(c.right(), sig);
      break;
    case ConceptKind::Exists:
    case ConceptKind::Forall:
      op.index = sig.roles.at(c.symbol());
      op.a = compile(c.operand(), sig);
      break;
  }
  ops_.push_back(op);
  return static_cast<std::int32_t>(ops_.size() - 1);
}

std::uint64_t CompiledConcept::eval(const BitInterpretation& bi) const { return run(root_, bi); }

std::uint64_t CompiledConcept::run(std::int32_t at, const BitInterpretation& bi) const {
  const Op& op = ops_[static_cast<std::size_t>(at)];
  const std::uint64_t all = full_mask(bi.domain);
  switch (op.kind) {
    case ConceptKind::Top:
      return all;
    case ConceptKind::Bottom:
      return 0;
    case ConceptKind::Name:
      return bi.concepts[op.index];
    case ConceptKind::Not:
      return all & ~run(op.a, bi);
    case ConceptKind::And:
      return run(op.a, bi) & run(op.b, bi);
    case ConceptKind::Or:
      return run(op.a, bi) | run(op.b, bi);
    case ConceptKind::Exists:
    case ConceptKind::Forall: {
      const std::uint64_t filler = run(op.a, bi);
      const auto& rows = bi.roles[op.index];
      std::uint64_t out = 0;
      for (int a = 0; a < bi.domain; ++a) {
        const std::uint64_t succ = rows[static_cast<std::size_t>(a)];
        const bool in = op.kind == ConceptKind::Exists ? (succ & filler) != 0
                                                       : (succ & ~filler) == 0;
        if (in) out |= std::uint64_t{1} << a;
      }
      return out;
    }
  }
  return 0;
}

CompiledTBox::CompiledTBox(const std::vector<TBoxAxiom>& tbox, const Signature& sig) {
  for (const auto& ax : tbox) {
    if (const auto* inc = std::get_if<Inclusion>(&ax)) {
      inclusions_.emplace_back(CompiledConcept(inc->left, sig), CompiledConcept(inc->right, sig));
    } else {
      const auto& eq = std::get<Equivalence>(ax);
      inclusions_.emplace_back(CompiledConcept(eq.left, sig), CompiledConcept(eq.right, sig));
      inclusions_.emplace_back(CompiledConcept(eq.right, sig), CompiledConcept(eq.left, sig));
    }
  }
}

bool CompiledTBox::satisfied_by(const BitInterpretation& bi) const {
  for (const auto& [lhs, rhs] : inclusions_) {
    if ((lhs.eval(bi) & ~rhs.eval(bi)) != 0) return false;
  }
  return true;
}

std::size_t interpretation_bits(const Signature& sig, int domain) {
  const auto d = static_cast<std::size_t>(domain);
  return sig.concepts.size() * d + sig.roles.size() * d * d;
}

BitInterpretation decode_interpretation(const Signature& sig, int domain, std::uint64_t code) {
  check_domain(domain);
  BitInterpretation bi;
  bi.domain = domain;
  const std::uint64_t row = full_mask(domain);
  bi.concepts.resize(sig.concepts.size());
  for (auto& c : bi.concepts) {
    c = code & row;
    code >>= domain;
  }
  bi.roles.assign(sig.roles.size(), std::vector<std::uint64_t>(static_cast<std::size_t>(domain)));
  for (auto& r : bi.roles) {
    for (auto& succ : r) {
      succ = code & row;
      code >>= domain;
    }
  }
  return bi;
}

std::vector<BitInterpretation> brute_force_models(const Signature& sig,
                                                  const std::vector<TBoxAxiom>& tbox,
                                                  int domain, std::size_t max_bits) {
  check_domain(domain);
  const std::size_t bits = interpretation_bits(sig, domain);
  if (bits > max_bits) {
    throw TooLarge("2^" + std::to_string(bits) + " interpretations exceed the limit of 2^" +
                   std::to_string(max_bits));
  }
  const CompiledTBox compiled(tbox, sig);
  std::vector<BitInterpretation> models;
  for_each_interpretation(sig, domain, [&](const BitInterpretation& bi) {
    if (compiled.satisfied_by(bi)) models.push_back(bi);
    return true;
  });
  return models;
}

std::vector<BitInterpretation> brute_force_models(const Signature& sig, const Ontology& o,
                                                  int domain) {
  return brute_force_models(sig, o.tbox, domain);
}

Grounding to_grounding(const BitInterpretation& bi, const Signature& sig) {
  Signature s = sig;
  s.individuals = NameIndex();
  for (int a = 0; a < bi.domain; ++a) s.individuals.add("d" + std::to_string(a));
  Grounding g(std::move(s), 0.0);
  for (std::size_t i = 0; i < bi.concepts.size(); ++i) {
    for (int a = 0; a < bi.domain; ++a) {
      g.concept_values(i)[a] = (bi.concepts[i] >> a) & 1 ? 1.0 : 0.0;
    }
  }
  for (std::size_t r = 0; r < bi.roles.size(); ++r) {
    for (int a = 0; a < bi.domain; ++a) {
      for (int b = 0; b < bi.domain; ++b) {
        g.role_values(r)(a, b) = (bi.roles[r][static_cast<std::size_t>(a)] >> b) & 1 ? 1.0 : 0.0;
      }
    }
  }
  return g;
}

BitInterpretation from_grounding(const Grounding& g) {
  const auto d = static_cast<int>(g.domain_size());
  check_domain(d);
  auto bit = [](double x) -> std::uint64_t {
    if (x != 0.0 && x != 1.0) throw InvalidGrounding("grounding is not {0,1}-valued");
    return x == 1.0 ? 1 : 0;
  };
  BitInterpretation bi;
  bi.domain = d;
  for (const auto& v : g.tables().concepts) {
    std::uint64_t m = 0;
    for (int a = 0; a < d; ++a) m |= bit(v[a]) << a;
    bi.concepts.push_back(m);
  }
  for (const auto& r : g.tables().roles) {
    std::vector<std::uint64_t> rows(static_cast<std::size_t>(d), 0);
    for (int a = 0; a < d; ++a) {
      for (int b = 0; b < d; ++b) rows[static_cast<std::size_t>(a)] |= bit(r(a, b)) << b;
    }
    bi.roles.push_back(std::move(rows));
  }
  return bi;
}

}  // namespace dfalc

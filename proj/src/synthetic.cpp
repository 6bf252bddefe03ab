#include "dfalc/synthetic.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "dfalc/random.hpp"

namespace dfalc {

AxiomCounts spread_axioms(int total) {
  if (total < 0) throw std::invalid_argument("axiom count must be non-negative");
  AxiomCounts c{};
  for (int i = 0; i < total; ++i) ++c[static_cast<std::size_t>(i) % c.size()];
  return c;
}

void SyntheticSpec::validate() const {
  if (n_individuals < 1 || n_concepts < 1 || n_roles < 0) {
    throw std::invalid_argument("need at least one individual and one concept");
  }
  for (int n : axioms_per_form) {
    if (n < 0) throw std::invalid_argument("axiom counts must be non-negative");
  }
  if (!(density > 0.0 && density < 1.0)) throw std::invalid_argument("density must lie in (0,1)");
  if (role_density > 1.0) throw std::invalid_argument("role density must be at most 1");
  if (attempts_per_axiom < 1) throw std::invalid_argument("attempt budget must be positive");
}

namespace {

class Generator {
 public:
  Generator(const SyntheticSpec& spec, Rng& rng, const Grounding& ideal,
            const std::vector<ConceptExpr>& literals, const std::vector<std::string>& roles)
      : spec_(spec), rng_(rng), ideal_(ideal), lits_(literals), roles_(roles) {}

  std::vector<Inclusion> pick_form(int form, int count) {
    if (count == 0) return {};
    std::vector<Inclusion> cands = candidates(form);
    shuffle(cands, rng_);
    std::vector<Inclusion> informative, vacuous;
    for (const auto& ax : cands) {
      if (!satisfied(ax)) continue;
      (is_informative(ax) ? informative : vacuous).push_back(ax);
    }
    informative.insert(informative.end(), vacuous.begin(), vacuous.end());
    std::vector<Inclusion> out;
    for (const auto& ax : informative) {
      if (static_cast<int>(out.size()) == count) break;
      if (seen_.insert(to_string(TBoxAxiom{ax})).second) out.push_back(ax);
    }
    if (static_cast<int>(out.size()) < count) {
      throw UnsatisfiableSpec("only " + std::to_string(out.size()) + " satisfied axioms of form F" +
                              std::to_string(form) + " available, " + std::to_string(count) +
                              " requested");
    }
    return out;
  }

  std::vector<Inclusion> pick_compound(int count) {
    std::vector<Inclusion> out;
    for (int k = 0; k < count; ++k) {
      std::optional<Inclusion> fallback;
      bool found = false;
      for (int attempt = 0; attempt < spec_.attempts_per_axiom && !found; ++attempt) {
        Inclusion ax{random_concept(2), random_concept(2)};
        if (is_literal(ax.left) && is_literal(ax.right)) continue;
        if (!satisfied(ax)) continue;
        const std::string key = to_string(TBoxAxiom{ax});
        if (seen_.count(key)) continue;
        if (is_informative(ax)) {
          seen_.insert(key);
          out.push_back(ax);
          found = true;
        } else if (!fallback) {
          fallback = ax;
        }
      }
      if (!found) {
        if (!fallback) {
          throw UnsatisfiableSpec("no satisfied compound inclusion within the attempt budget");
        }
        seen_.insert(to_string(TBoxAxiom{*fallback}));
        out.push_back(*fallback);
      }
    }
    return out;
  }

 private:
  bool satisfied(const Inclusion& ax) const { return fuzzy_inclusion_check(ideal_, ax).satisfied; }

  // Not vacuous: the left side is inhabited and the right side is not everything.
  bool is_informative(const Inclusion& ax) const {
    return eval_concept(ideal_, ax.left).maxCoeff() > 0.5 &&
           eval_concept(ideal_, ax.right).minCoeff() < 0.5;
  }

  std::vector<Inclusion> candidates(int form) const {
    std::vector<Inclusion> out;
    const std::size_t n = lits_.size();
    auto distinct_base = [&](std::size_t i, std::size_t j) { return i / 2 != j / 2; };
    switch (form) {
      case 1:
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j)
            if (distinct_base(i, j)) out.push_back({lits_[i], lits_[j]});
        break;
      case 2:
      case 3:
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
              if (!distinct_base(i, j) || !distinct_base(i, k) || !distinct_base(j, k)) continue;
              if (form == 2) {
                out.push_back({ConceptExpr::conjunction(lits_[i], lits_[j]), lits_[k]});
              } else {
                out.push_back({lits_[k], ConceptExpr::disjunction(lits_[i], lits_[j])});
              }
            }
        break;
      default:
        for (const auto& r : roles_)
          for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
              const ConceptExpr some = ConceptExpr::exists(r, lits_[j]);
              const ConceptExpr only = ConceptExpr::forall(r, lits_[j]);
              if (form == 4) out.push_back({lits_[i], some});
              if (form == 5) out.push_back({lits_[i], only});
              if (form == 6) out.push_back({some, lits_[i]});
              if (form == 7) out.push_back({only, lits_[i]});
            }
    }
    return out;
  }

  ConceptExpr random_concept(int depth) {
    if (depth == 0 || bernoulli(rng_, 0.4)) {
      return lits_[uniform_below(rng_, lits_.size())];
    }
    const std::size_t ops = roles_.empty() ? 2 : 4;
    switch (uniform_below(rng_, ops)) {
      case 0:
        return ConceptExpr::conjunction(random_concept(depth - 1), random_concept(depth - 1));
      case 1:
        return ConceptExpr::disjunction(random_concept(depth - 1), random_concept(depth - 1));
      case 2:
        return ConceptExpr::exists(roles_[uniform_below(rng_, roles_.size())],
                                   random_concept(depth - 1));
      default:
        return ConceptExpr::forall(roles_[uniform_below(rng_, roles_.size())],
                                   random_concept(depth - 1));
    }
  }

  const SyntheticSpec& spec_;
  Rng& rng_;
  const Grounding& ideal_;
  const std::vector<ConceptExpr>& lits_;
  const std::vector<std::string>& roles_;
  std::unordered_set<std::string> seen_;
};

}  // namespace

namespace {

// Hidden interpretations tried before giving up on a spec.
constexpr int kMaxResamples = 64;

SyntheticData generate_once(const SyntheticSpec& spec, const Signature& sig, Rng& rng) {
  const double role_density =
      spec.role_density >= 0.0 ? spec.role_density
                               : std::min(spec.density, 2.0 / static_cast<double>(spec.n_individuals));
  Grounding ideal(sig, 0.0);
  for (auto& v : ideal.tables().concepts) {
    for (Eigen::Index a = 0; a < v.size(); ++a) v[a] = bernoulli(rng, spec.density) ? 1.0 : 0.0;
  }
  for (auto& m : ideal.tables().roles) {
    for (Eigen::Index a = 0; a < m.rows(); ++a) {
      for (Eigen::Index b = 0; b < m.cols(); ++b) m(a, b) = bernoulli(rng, role_density) ? 1.0 : 0.0;
    }
  }

  std::vector<ConceptExpr> literals;
  for (const auto& c : sig.concepts) {
    literals.push_back(ConceptExpr::name(c));
    literals.push_back(ConceptExpr::negation(ConceptExpr::name(c)));
  }
  Generator gen(spec, rng, ideal, literals, sig.roles.names());

  SyntheticData out{Ontology{}, ideal};
  out.ontology.signature = sig;
  for (int form = 1; form <= 7; ++form) {
    const int count = spec.axioms_per_form[static_cast<std::size_t>(form - 1)];
    for (auto& ax : gen.pick_form(form, count)) out.ontology.tbox.emplace_back(std::move(ax));
  }
  for (auto& ax : gen.pick_compound(spec.axioms_per_form[7])) {
    out.ontology.tbox.emplace_back(std::move(ax));
  }

  for (std::size_t c = 0; c < sig.concepts.size(); ++c) {
    for (std::size_t a = 0; a < sig.individuals.size(); ++a) {
      out.ontology.abox.push_back({ConceptAssertion{sig.individuals[a], ConceptExpr::name(sig.concepts[c])},
                                   ideal.concept_values(c)[static_cast<Eigen::Index>(a)]});
    }
  }
  for (std::size_t r = 0; r < sig.roles.size(); ++r) {
    for (std::size_t a = 0; a < sig.individuals.size(); ++a) {
      for (std::size_t b = 0; b < sig.individuals.size(); ++b) {
        out.ontology.abox.push_back(
            {RoleAssertion{sig.individuals[a], sig.individuals[b], sig.roles[r]},
             ideal.role_values(r)(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b))});
      }
    }
  }
  return out;
}

}  // namespace

SyntheticData gen_synthetic(const SyntheticSpec& spec) {
  spec.validate();
  Signature sig;
  for (int i = 1; i <= spec.n_concepts; ++i) sig.concepts.add("C" + std::to_string(i));
  for (int i = 1; i <= spec.n_roles; ++i) sig.roles.add("r" + std::to_string(i));
  for (int i = 1; i <= spec.n_individuals; ++i) sig.individuals.add("i" + std::to_string(i));
  for (int form = 4; form <= 7; ++form) {
    if (spec.axioms_per_form[static_cast<std::size_t>(form - 1)] > 0 && sig.roles.empty()) {
      throw UnsatisfiableSpec("quantified forms need at least one role");
    }
  }
  Rng rng(spec.seed);
  for (int attempt = 1;; ++attempt) {
    try {
      return generate_once(spec, sig, rng);
    } catch (const UnsatisfiableSpec&) {
      if (attempt == kMaxResamples) throw;
    }
  }
}

}  // namespace dfalc

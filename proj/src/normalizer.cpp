#include "dfalc/normalizer.hpp"

#include <array>
#include <functional>
#include <stdexcept>
#include <unordered_map>

#include "dfalc/errors.hpp"
#include "dfalc/parser.hpp"

namespace dfalc {

std::optional<Literal> Literal::from(const ConceptExpr& c) {
  if (!is_literal(c)) return std::nullopt;
  Literal lit;
  const ConceptExpr* base = &c;
  if (c.kind() == ConceptKind::Not) {
    lit.negated = true;
    base = &c.operand();
  }
  switch (base->kind()) {
    case ConceptKind::Top:
      lit.base = Base::Top;
      break;
    case ConceptKind::Bottom:
      lit.base = Base::Bottom;
      break;
    default:
      lit.base = Base::Name;
      lit.name = base->symbol();
  }
  return lit;
}

ConceptExpr Literal::to_concept() const {
  ConceptExpr c = base == Base::Top      ? ConceptExpr::top()
                  : base == Base::Bottom ? ConceptExpr::bottom()
                                         : ConceptExpr::name(name);
  return negated ? ConceptExpr::negation(std::move(c)) : c;
}

std::optional<NormalForm> classify_form(const Inclusion& ax) {
  const ConceptExpr& l = ax.left;
  const ConceptExpr& r = ax.right;
  const bool l_lit = is_literal(l);
  const bool r_lit = is_literal(r);
  if (l_lit && r_lit) return NormalForm::F1;
  if (r_lit && l.kind() == ConceptKind::And && is_literal(l.left()) && is_literal(l.right())) {
    return NormalForm::F2;
  }
  if (l_lit && r.kind() == ConceptKind::Or && is_literal(r.left()) && is_literal(r.right())) {
    return NormalForm::F3;
  }
  if (l_lit && r.is_quantifier() && is_literal(r.operand())) {
    return r.kind() == ConceptKind::Exists ? NormalForm::F4 : NormalForm::F5;
  }
  if (r_lit && l.is_quantifier() && is_literal(l.operand())) {
    return l.kind() == ConceptKind::Exists ? NormalForm::F6 : NormalForm::F7;
  }
  return std::nullopt;
}

ConceptExpr to_nnf(const ConceptExpr& c) {
  switch (c.kind()) {
    case ConceptKind::Top:
    case ConceptKind::Bottom:
    case ConceptKind::Name:
      return c;
    case ConceptKind::And:
      return ConceptExpr::conjunction(to_nnf(c.left()), to_nnf(c.right()));
    case ConceptKind::Or:
      return ConceptExpr::disjunction(to_nnf(c.left()), to_nnf(c.right()));
    case ConceptKind::Exists:
      return ConceptExpr::exists(c.symbol(), to_nnf(c.operand()));
    case ConceptKind::Forall:
      return ConceptExpr::forall(c.symbol(), to_nnf(c.operand()));
    case ConceptKind::Not:
      break;
  }
  const ConceptExpr& x = c.operand();
  switch (x.kind()) {
    case ConceptKind::Top:
    case ConceptKind::Bottom:
    case ConceptKind::Name:
      return c;
    case ConceptKind::Not:
      return to_nnf(x.operand());
    case ConceptKind::And:
      return ConceptExpr::disjunction(to_nnf(ConceptExpr::negation(x.left())),
                                      to_nnf(ConceptExpr::negation(x.right())));
    case ConceptKind::Or:
      return ConceptExpr::conjunction(to_nnf(ConceptExpr::negation(x.left())),
                                      to_nnf(ConceptExpr::negation(x.right())));
    case ConceptKind::Exists:
      return ConceptExpr::forall(x.symbol(), to_nnf(ConceptExpr::negation(x.operand())));
    case ConceptKind::Forall:
      return ConceptExpr::exists(x.symbol(), to_nnf(ConceptExpr::negation(x.operand())));
  }
  return c;
}

namespace {

class Normalizer {
 public:
  explicit Normalizer(Signature input) { out_.extended_signature = std::move(input); }

  void add(const ConceptExpr& lhs, const ConceptExpr& rhs) { process(to_nnf(lhs), to_nnf(rhs)); }

  NormalizedTBox finish() && { return std::move(out_); }

 private:
  // Which side of the fresh name the replaced expression sits on in the
  // emitted axioms. Names are only reused within one placement, so a name
  // is never constrained in both directions.
  enum class Placement { Above, Below, Between };

  // Fresh names stand for the subexpression they replace; every rule stays
  // model-preserving under that reading.
  ConceptExpr fresh(const ConceptExpr& replaced, Placement where) {
    auto& memo = memo_[static_cast<std::size_t>(where)];
    if (auto it = memo.find(replaced); it != memo.end()) return ConceptExpr::name(it->second);
    std::string name;
    do {
      name = "__N" + std::to_string(++counter_);
    } while (out_.extended_signature.concepts.contains(name) ||
             out_.extended_signature.roles.contains(name) ||
             out_.extended_signature.individuals.contains(name));
    out_.extended_signature.concepts.add(name);
    out_.fresh_defs.emplace(name, replaced);
    memo.emplace(replaced, name);
    return ConceptExpr::name(name);
  }

  void emit(NormalForm form, const ConceptExpr& lhs, const ConceptExpr& rhs) {
    out_.axioms.push_back({form, Inclusion{lhs, rhs}});
  }

  // Inputs are in NNF. Rules are applied left to right.
  void process(const ConceptExpr& lhs, const ConceptExpr& rhs) {
    if (auto form = classify_form({lhs, rhs})) {
      emit(*form, lhs, rhs);
      return;
    }
    const bool l_lit = is_literal(lhs);
    const bool r_lit = is_literal(rhs);

    if (!l_lit && !r_lit) {  // NF1
      const ConceptExpr a = fresh(lhs, Placement::Between);
      process(lhs, a);
      process(a, rhs);
      return;
    }

    if (!l_lit) {
      switch (lhs.kind()) {
        case ConceptKind::Or:  // NF3
          process(lhs.left(), rhs);
          process(lhs.right(), rhs);
          return;
        case ConceptKind::And: {  // NF2
          if (!is_literal(lhs.left())) {
            const ConceptExpr a = fresh(lhs.left(), Placement::Below);
            process(lhs.left(), a);
            process(ConceptExpr::conjunction(a, lhs.right()), rhs);
          } else {
            const ConceptExpr a = fresh(lhs.right(), Placement::Below);
            process(lhs.right(), a);
            process(ConceptExpr::conjunction(lhs.left(), a), rhs);
          }
          return;
        }
        case ConceptKind::Exists:  // NF4
        case ConceptKind::Forall: {  // NF5
          const ConceptExpr a = fresh(lhs.operand(), Placement::Below);
          process(lhs.operand(), a);
          process(lhs.kind() == ConceptKind::Exists ? ConceptExpr::exists(lhs.symbol(), a)
                                                    : ConceptExpr::forall(lhs.symbol(), a),
                  rhs);
          return;
        }
        default:
          break;
      }
    } else {
      switch (rhs.kind()) {
        case ConceptKind::And:  // NF6
          process(lhs, rhs.left());
          process(lhs, rhs.right());
          return;
        case ConceptKind::Or: {  // NF7
          if (!is_literal(rhs.left())) {
            const ConceptExpr a = fresh(rhs.left(), Placement::Above);
            process(lhs, ConceptExpr::disjunction(a, rhs.right()));
            process(a, rhs.left());
          } else {
            const ConceptExpr a = fresh(rhs.right(), Placement::Above);
            process(lhs, ConceptExpr::disjunction(rhs.left(), a));
            process(a, rhs.right());
          }
          return;
        }
        case ConceptKind::Exists:  // NF8
        case ConceptKind::Forall: {  // NF9
          const ConceptExpr a = fresh(rhs.operand(), Placement::Above);
          process(a, rhs.operand());
          process(lhs, rhs.kind() == ConceptKind::Exists ? ConceptExpr::exists(rhs.symbol(), a)
                                                         : ConceptExpr::forall(rhs.symbol(), a));
          return;
        }
        default:
          break;
      }
    }
    throw std::logic_error("normalizer reached an unexpected shape: " +
                           to_string(TBoxAxiom{Inclusion{lhs, rhs}}));
  }

  NormalizedTBox out_;
  std::array<std::unordered_map<ConceptExpr, std::string, ConceptHash>, 3> memo_;
  std::size_t counter_ = 0;
};

}  // namespace

NormalizedTBox normalize(const std::vector<TBoxAxiom>& tbox, const Signature& signature) {
  Normalizer n(signature);
  for (const auto& ax : tbox) {
    if (const auto* inc = std::get_if<Inclusion>(&ax)) {
      n.add(inc->left, inc->right);
    } else {
      const auto& eq = std::get<Equivalence>(ax);
      n.add(eq.left, eq.right);
      n.add(eq.right, eq.left);
    }
  }
  return std::move(n).finish();
}

NormalizedTBox normalize(const Ontology& o) { return normalize(o.tbox, signature_of(o)); }

Grounding seed_fresh_assertions(const NormalizedTBox& nt, const Grounding& g) {
  Grounding work = g;
  enum class State { Pending, Visiting, Done };
  std::unordered_map<std::string, State> state;
  for (const auto& [name, def] : nt.fresh_defs) state.emplace(name, State::Pending);

  std::function<void(const std::string&)> resolve = [&](const std::string& name) {
    auto it = state.find(name);
    if (it == state.end() || it->second == State::Done) return;
    if (it->second == State::Visiting) {
      throw UndefinedFreshName("fresh name '" + name + "' has a cyclic definition");
    }
    it->second = State::Visiting;
    const ConceptExpr& def = nt.fresh_defs.at(name);
    visit_names(def, resolve, [](const std::string&) {});
    const Eigen::VectorXd value = eval_concept(work, def);
    work.concept_values(work.add_concept(name)) = value;
    it->second = State::Done;
  };

  for (const auto& c : nt.extended_signature.concepts) {
    if (g.signature().concepts.contains(c)) continue;
    if (!nt.fresh_defs.count(c)) {
      throw UndefinedFreshName("'" + c + "' is not in the grounding and has no definition");
    }
    resolve(c);
  }

  Signature out_sig = nt.extended_signature;
  out_sig.individuals = g.signature().individuals;
  return restrict_to(work, out_sig);
}

std::string to_string(NormalForm f) { return "F" + std::to_string(static_cast<int>(f)); }

std::string render_normalized(const NormalizedTBox& nt, const Ontology& source) {
  Ontology out;
  out.signature = nt.extended_signature;
  for (const auto& ax : nt.axioms) out.tbox.emplace_back(ax.axiom);
  out.abox = source.abox;
  std::string text = render_ontology(out);
  for (const auto& c : nt.extended_signature.concepts) {
    if (auto it = nt.fresh_defs.find(c); it != nt.fresh_defs.end()) {
      text += "# define " + c + " := (" + to_string(it->second) + ")\n";
    }
  }
  return text;
}

}  // namespace dfalc

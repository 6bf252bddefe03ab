#include "dfalc/losses.hpp"

#include <string>

namespace dfalc {

namespace {

using Eigen::Index;
using Eigen::MatrixXd;
using Eigen::VectorXd;

void require_coverage(const Grounding& g, const NormalizedTBox& nt) {
  for (const auto& c : nt.extended_signature.concepts) {
    if (!g.signature().concepts.contains(c)) {
      throw ShapeMismatch("grounding lacks concept '" + c + "' of the normalized TBox");
    }
  }
  for (const auto& r : nt.extended_signature.roles) {
    if (!g.signature().roles.contains(r)) {
      throw ShapeMismatch("grounding lacks role '" + r + "' of the normalized TBox");
    }
  }
}

// Index of the first maximum (or minimum) of a row.
template <bool Max, typename Row>
Index first_extreme(const Row& row) {
  Index best = 0;
  for (Index i = 1; i < row.size(); ++i) {
    if (Max ? row[i] > row[best] : row[i] < row[best]) best = i;
  }
  return best;
}

// Σ_a x(a) ⊗ r(a,s) (incoming) or Σ_a x(a) ⊗ r(s,a) (outgoing), per s.
VectorXd aggregate(const MatrixXd& r, const VectorXd& x, bool incoming, TNorm tnorm) {
  const Index d = x.size();
  if (tnorm == TNorm::Product) return incoming ? VectorXd(r.transpose() * x) : VectorXd(r * x);
  if (incoming) {
    return r.array().min(x.replicate(1, d).array()).colwise().sum().transpose().matrix();
  }
  return r.array().min(x.transpose().replicate(d, 1).array()).rowwise().sum().matrix();
}

MatrixXd outer(const VectorXd& left, const VectorXd& right, TNorm tnorm) {
  const Index d = left.size();
  if (tnorm == TNorm::Product) return left * right.transpose();
  return left.replicate(1, d).array().min(right.transpose().replicate(d, 1).array()).matrix();
}

}  // namespace

void backprop_concept(const Grounding& g, const ConceptExpr& c, const VectorXd& upstream,
                      GradientSet& grads) {
  if ((upstream.array() == 0.0).all()) return;
  switch (c.kind()) {
    case ConceptKind::Top:
    case ConceptKind::Bottom:
      return;
    case ConceptKind::Name:
      grads.concepts[g.signature().concepts.at(c.symbol())] += upstream;
      return;
    case ConceptKind::Not:
      backprop_concept(g, c.operand(), -upstream, grads);
      return;
    case ConceptKind::And:
    case ConceptKind::Or: {
      const VectorXd l = eval_concept(g, c.left());
      const VectorXd r = eval_concept(g, c.right());
      const auto to_left = c.kind() == ConceptKind::And ? (l.array() <= r.array()).eval()
                                                         : (l.array() >= r.array()).eval();
      backprop_concept(g, c.left(), to_left.select(upstream, 0.0).matrix(), grads);
      backprop_concept(g, c.right(), to_left.select(0.0, upstream).matrix(), grads);
      return;
    }
    case ConceptKind::Exists:
    case ConceptKind::Forall: {
      const std::size_t ri = g.signature().roles.at(c.symbol());
      const MatrixXd& r = g.role_values(ri);
      const VectorXd f = eval_concept(g, c.operand());
      const Index d = f.size();
      VectorXd to_filler = VectorXd::Zero(d);
      for (Index a = 0; a < d; ++a) {
        if (upstream[a] == 0.0) continue;
        if (c.kind() == ConceptKind::Exists) {
          // max_b min(r(a,b), f(b)); inside the min, r is the first operand.
          const auto row = r.row(a).array().min(f.transpose().array()).eval();
          const Index b = first_extreme<true>(row);
          if (r(a, b) <= f[b]) {
            grads.roles[ri](a, b) += upstream[a];
          } else {
            to_filler[b] += upstream[a];
          }
        } else {
          // min_b max(1 - r(a,b), f(b)).
          const auto row = (1.0 - r.row(a).array()).max(f.transpose().array()).eval();
          const Index b = first_extreme<false>(row);
          if (1.0 - r(a, b) >= f[b]) {
            grads.roles[ri](a, b) -= upstream[a];
          } else {
            to_filler[b] += upstream[a];
          }
        }
      }
      backprop_concept(g, c.operand(), to_filler, grads);
      return;
    }
  }
}

LossResult hierarchical_loss(const Grounding& g, const NormalizedTBox& nt) {
  require_coverage(g, nt);
  LossResult out{0.0, GradientSet::zeros_like(g.tables())};
  if (nt.axioms.empty()) return out;
  const double scale = 1.0 / static_cast<double>(nt.axioms.size());
  for (const auto& ax : nt.axioms) {
    const VectorXd lhs = eval_concept(g, ax.axiom.left);
    const VectorXd rhs = eval_concept(g, ax.axiom.right);
    const VectorXd gap = lhs - rhs;
    out.loss += gap.cwiseMax(0.0).sum() * scale;
    const VectorXd active = (gap.array() > 0.0).select(VectorXd::Constant(gap.size(), scale), 0.0);
    backprop_concept(g, ax.axiom.left, active, out.grads);
    backprop_concept(g, ax.axiom.right, -active, out.grads);
  }
  return out;
}

LossResult rule_loss(const Grounding& g, const NormalizedTBox& nt, const TrainConfig& cfg) {
  return rule_loss(g, g, nt, cfg);
}

LossResult rule_loss(const Grounding& g, const Grounding& mask_point, const NormalizedTBox& nt,
                     const TrainConfig& cfg) {
  require_coverage(g, nt);
  if (!(mask_point.signature() == g.signature())) {
    throw ShapeMismatch("mask point and grounding have different signatures");
  }
  LossResult out{0.0, GradientSet::zeros_like(g.tables())};
  const double ap = cfg.alpha_prime;
  const Index d = g.domain_size();
  const VectorXd alpha = VectorXd::Constant(d, ap);

  auto evidence = [&](const MatrixXd& r, const VectorXd& x, bool incoming) {
    VectorXd e = aggregate(r, x, incoming, cfg.tnorm);
    if (cfg.clamp_evidence) e = e.cwiseMax(0.0).cwiseMin(1.0);
    return e;
  };
  // Adds Σ_s (1 - X(s)) · mask(s) and its gradient through X.
  auto raise = [&](const ConceptExpr& x, const VectorXd& mask) {
    out.loss += (mask.array() * (1.0 - eval_concept(g, x).array())).sum();
    backprop_concept(g, x, -mask, out.grads);
  };
  // G(α', X(s)) · G(evidence(s), α'), read at the mask point.
  auto threshold_mask = [&](const ConceptExpr& x, const VectorXd& ev) {
    const VectorXd xv = eval_concept(mask_point, x);
    return VectorXd(detached_hinge(alpha.array(), xv.array()) *
                    detached_hinge(ev.array(), alpha.array()));
  };

  for (const auto& nax : nt.axioms) {
    const Inclusion& ax = nax.axiom;
    const auto form = classify_form(ax);
    if (!form || *form != nax.form) {
      throw UnsupportedForm("axiom is not in normal form: " + to_string(TBoxAxiom{ax}));
    }
    switch (*form) {
      case NormalForm::F1:
      case NormalForm::F2:
      case NormalForm::F3: {
        const VectorXd mask = detached_hinge(eval_concept(mask_point, ax.left).array(),
                                             eval_concept(mask_point, ax.right).array())
                                  .matrix();
        raise(ax.right, mask);
        break;
      }
      case NormalForm::F4:
      case NormalForm::F5: {
        // B ⊑ Qr.A
        const ConceptExpr& b = ax.left;
        const ConceptExpr& a = ax.right.operand();
        const MatrixXd& r = mask_point.role_values(ax.right.symbol());
        const VectorXd bv = eval_concept(mask_point, b);
        raise(a, threshold_mask(a, evidence(r, bv, true)));
        if (*form == NormalForm::F4) {
          const std::size_t ri = g.signature().roles.at(ax.right.symbol());
          const MatrixXd mask =
              detached_hinge(outer(bv, eval_concept(mask_point, a), cfg.tnorm).array(), r.array())
                  .matrix();
          out.loss += (mask.array() * (1.0 - g.role_values(ri).array())).sum();
          out.grads.roles[ri] -= mask;
        }
        break;
      }
      case NormalForm::F6:
      case NormalForm::F7: {
        // Qr.A ⊑ B
        const ConceptExpr& a = ax.left.operand();
        const ConceptExpr& b = ax.right;
        const MatrixXd& r = mask_point.role_values(ax.left.symbol());
        raise(b, threshold_mask(b, evidence(r, eval_concept(mask_point, a), false)));
        if (*form == NormalForm::F7) {
          raise(a, threshold_mask(a, evidence(r, eval_concept(mask_point, b), true)));
        }
        break;
      }
    }
  }
  return out;
}

LossResult compute_loss(const Grounding& g, const NormalizedTBox& nt, const TrainConfig& cfg) {
  return cfg.loss_kind == LossKind::Hierarchical ? hierarchical_loss(g, nt)
                                                 : rule_loss(g, nt, cfg);
}

}  // namespace dfalc

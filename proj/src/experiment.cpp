#include "dfalc/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "dfalc/crisp.hpp"
#include "dfalc/normalizer.hpp"
#include "dfalc/random.hpp"

namespace dfalc {

void MaskSpec::validate() const {
  if (!(rate >= 0.0 && rate <= 1.0)) throw std::invalid_argument("mask rate must lie in [0,1]");
  if (!(unknown_lo >= 0.0 && unknown_lo <= unknown_hi && unknown_hi <= 1.0)) {
    throw std::invalid_argument("unknown region must be a sub-interval of [0,1]");
  }
}

std::size_t masked_entry_count(const Grounding& g, const MaskSpec& m) {
  std::size_t n = 0;
  for (const auto& v : g.tables().concepts) n += static_cast<std::size_t>(v.size());
  if (!m.concepts_only) {
    for (const auto& r : g.tables().roles) n += static_cast<std::size_t>(r.size());
  }
  // The epsilon keeps products like 0.4 * 100 from rounding up to 41.
  return std::min(n, static_cast<std::size_t>(std::ceil(m.rate * static_cast<double>(n) - 1e-9)));
}

Grounding mask_grounding(const Grounding& g, const MaskSpec& m) {
  m.validate();
  Grounding out = g;
  // Flat addresses: concept entries first, then role entries (column-major).
  std::vector<double*> entries;
  for (auto& v : out.tables().concepts) {
    for (Eigen::Index i = 0; i < v.size(); ++i) entries.push_back(&v[i]);
  }
  if (!m.concepts_only) {
    for (auto& r : out.tables().roles) {
      for (Eigen::Index i = 0; i < r.size(); ++i) entries.push_back(r.data() + i);
    }
  }
  const std::size_t k = masked_entry_count(g, m);
  Rng rng(m.seed);
  for (std::size_t i = 0; i < k; ++i) {
    std::swap(entries[i], entries[i + uniform_below(rng, entries.size() - i)]);
    *entries[i] = uniform_in(rng, m.unknown_lo, m.unknown_hi);
  }
  return out;
}

ConceptExpr Query::to_concept() const {
  const ConceptExpr rhs = shape == QueryShape::Conj2
                              ? ConceptExpr::name(d)
                              : ConceptExpr::exists(role, ConceptExpr::name(d));
  return ConceptExpr::conjunction(ConceptExpr::name(c), rhs);
}

std::vector<std::size_t> answer_query(const Grounding& g, const Query& q) {
  const Eigen::VectorXd v = eval_concept(g, q.to_concept());
  std::vector<std::size_t> out;
  for (Eigen::Index a = 0; a < v.size(); ++a) {
    if (v[a] >= q.threshold) out.push_back(static_cast<std::size_t>(a));
  }
  return out;
}

PrecisionRecall precision_recall(const std::vector<std::size_t>& predicted,
                                 const std::vector<std::size_t>& oracle) {
  std::vector<std::size_t> p = predicted, o = oracle;
  std::sort(p.begin(), p.end());
  std::sort(o.begin(), o.end());
  std::vector<std::size_t> hit;
  std::set_intersection(p.begin(), p.end(), o.begin(), o.end(), std::back_inserter(hit));
  PrecisionRecall pr;
  pr.precision = p.empty() ? (o.empty() ? 1.0 : 0.0)
                           : static_cast<double>(hit.size()) / static_cast<double>(p.size());
  pr.recall = o.empty() ? 1.0 : static_cast<double>(hit.size()) / static_cast<double>(o.size());
  return pr;
}

std::vector<Query> generate_queries(const Grounding& ideal, QueryShape shape, int count,
                                    std::uint64_t seed) {
  const auto& concepts = ideal.signature().concepts;
  std::vector<Query> pool;
  for (std::size_t i = 0; i < concepts.size(); ++i) {
    if (shape == QueryShape::Conj2) {
      for (std::size_t j = i + 1; j < concepts.size(); ++j) {
        pool.push_back({shape, concepts[i], concepts[j], ""});
      }
    } else {
      for (const auto& r : ideal.signature().roles) {
        for (std::size_t j = 0; j < concepts.size(); ++j) pool.push_back({shape, concepts[i], concepts[j], r});
      }
    }
  }
  std::erase_if(pool, [&](const Query& q) { return answer_query(ideal, q).empty(); });
  if (count > 0 && pool.empty()) {
    throw UnsatisfiableSpec(std::string("no ") + to_string(shape) + " query has a non-empty answer");
  }
  Rng rng(seed);
  shuffle(pool, rng);
  std::vector<Query> out;
  for (int i = 0; i < count; ++i) out.push_back(pool[static_cast<std::size_t>(i) % pool.size()]);
  return out;
}

namespace {

struct Revision {
  Grounding masked;
  Grounding revised;
  std::size_t masked_entries = 0;
  TrainResult trained;
};

Revision revise(const Ontology& o, const Grounding& ideal, const MaskSpec& m, const TrainConfig& t) {
  Revision r;
  r.masked = mask_grounding(ideal, m);
  r.masked_entries = masked_entry_count(ideal, m);
  const NormalizedTBox nt = normalize(o.tbox, ideal.signature());
  r.trained = train(seed_fresh_assertions(nt, r.masked), nt, t);
  r.revised = restrict_to(r.trained.revised, ideal.signature());
  return r;
}

}  // namespace

MaskRevisionResult run_mask_revision(const Ontology& o, const Grounding& ideal, const MaskSpec& m,
                                     const TrainConfig& t) {
  const Revision r = revise(o, ideal, m, t);
  const CrispConfig half{0.5};
  MaskRevisionResult out;
  out.mask_rate = m.rate;
  out.masked_entries = r.masked_entries;
  out.masked_success = success_rate(crispify(r.masked, half), o.tbox);
  out.revised_success = success_rate(crispify(r.revised, half), o.tbox);
  out.masked_fuzzy_success = fuzzy_success_rate(r.masked, o.tbox);
  out.revised_fuzzy_success = fuzzy_success_rate(r.revised, o.tbox);
  out.final_loss = r.trained.final_loss();
  out.epochs = static_cast<int>(r.trained.history.size()) - 1;
  out.stop = r.trained.stop;
  return out;
}

CqaResult run_cqa(const Ontology& o, const Grounding& ideal, const MaskSpec& m,
                  const TrainConfig& t, int n_queries) {
  const Revision r = revise(o, ideal, m, t);
  CqaResult out;
  out.mask_rate = m.rate;
  out.masked_entries = r.masked_entries;
  out.final_loss = r.trained.final_loss();
  out.epochs = static_cast<int>(r.trained.history.size()) - 1;
  for (QueryShape shape : {QueryShape::Conj2, QueryShape::Exist2}) {
    ShapeScores s;
    s.shape = shape;
    if (shape == QueryShape::Exist2 && ideal.signature().roles.empty()) {
      out.shapes.push_back(s);
      continue;
    }
    const auto queries =
        generate_queries(ideal, shape, n_queries, derive_seed(m.seed, 1 + static_cast<int>(shape)));
    for (const auto& q : queries) {
      const auto oracle = answer_query(ideal, q);
      QueryScore qs{q, precision_recall(answer_query(r.masked, q), oracle),
                    precision_recall(answer_query(r.revised, q), oracle)};
      s.masked.precision += qs.masked.precision;
      s.masked.recall += qs.masked.recall;
      s.revised.precision += qs.revised.precision;
      s.revised.recall += qs.revised.recall;
      s.queries.push_back(std::move(qs));
    }
    if (!queries.empty()) {
      const double n = static_cast<double>(queries.size());
      s.masked.precision /= n;
      s.masked.recall /= n;
      s.revised.precision /= n;
      s.revised.recall /= n;
    }
    out.shapes.push_back(std::move(s));
  }
  return out;
}

const char* to_string(QueryShape s) noexcept { return s == QueryShape::Conj2 ? "conj2" : "exist2"; }

}  // namespace dfalc

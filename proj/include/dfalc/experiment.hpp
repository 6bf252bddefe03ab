#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "dfalc/config.hpp"
#include "dfalc/grounding.hpp"
#include "dfalc/ontology.hpp"
#include "dfalc/train.hpp"

namespace dfalc {

struct MaskSpec {
  double rate = 0.2;
  double unknown_lo = 0.2;
  double unknown_hi = 0.8;
  std::uint64_t seed = 0;
  bool concepts_only = false;

  /// rate ∈ [0,1] (0 and 1 allowed for checks), lo ≤ hi within [0,1].
  void validate() const;
};

/// ceil(rate · N) with N the number of eligible entries.
std::size_t masked_entry_count(const Grounding& g, const MaskSpec& m);

/// Replaces masked_entry_count(g, m) entries, chosen uniformly without
/// replacement across concept and role tables, by uniform draws from the
/// unknown region.
Grounding mask_grounding(const Grounding& g, const MaskSpec& m);

enum class QueryShape { Conj2, Exist2 };  // C ⊓ D and C ⊓ ∃r.D

struct Query {
  QueryShape shape = QueryShape::Conj2;
  std::string c, d, role;
  double threshold = 0.8;

  ConceptExpr to_concept() const;
};

/// Individuals (by index, ascending) whose query degree is at least the threshold.
std::vector<std::size_t> answer_query(const Grounding& g, const Query& q);

struct PrecisionRecall {
  double precision = 0.0;
  double recall = 0.0;
};

/// Standard set metrics. An empty prediction has precision 1 if the oracle is
/// also empty, else 0; an empty oracle has recall 1.
PrecisionRecall precision_recall(const std::vector<std::size_t>& predicted,
                                 const std::vector<std::size_t>& oracle);

/// `count` queries with non-empty answers on `ideal`, distinct while the
/// candidate pool lasts. Throws UnsatisfiableSpec if no candidate qualifies.
std::vector<Query> generate_queries(const Grounding& ideal, QueryShape shape, int count,
                                    std::uint64_t seed);

struct MaskRevisionResult {
  double mask_rate = 0.0;
  std::size_t masked_entries = 0;
  double masked_success = 0.0;   // crisp, alpha 0.5, unknown satisfies
  double revised_success = 0.0;
  double masked_fuzzy_success = 0.0;
  double revised_fuzzy_success = 0.0;
  double final_loss = 0.0;
  int epochs = 0;
  StopReason stop = StopReason::MaxEpochs;
};

/// Masks `ideal`, trains on the normalized TBox and scores both groundings on
/// the original TBox.
MaskRevisionResult run_mask_revision(const Ontology& o, const Grounding& ideal, const MaskSpec& m,
                                     const TrainConfig& t);

struct QueryScore {
  Query query;
  PrecisionRecall masked;
  PrecisionRecall revised;
};

struct ShapeScores {
  QueryShape shape = QueryShape::Conj2;
  PrecisionRecall masked;   // macro averages
  PrecisionRecall revised;
  std::vector<QueryScore> queries;
};

struct CqaResult {
  double mask_rate = 0.0;
  std::size_t masked_entries = 0;
  double final_loss = 0.0;
  int epochs = 0;
  std::vector<ShapeScores> shapes;
};

/// Query answering on the masked and revised groundings against the oracle
/// answers of `ideal`. Queries are drawn with a seed derived from m.seed.
CqaResult run_cqa(const Ontology& o, const Grounding& ideal, const MaskSpec& m,
                  const TrainConfig& t, int n_queries = 20);

const char* to_string(QueryShape s) noexcept;

}  // namespace dfalc

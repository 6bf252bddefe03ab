#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <string>
#include <string_view>

namespace dfalc {

enum class ConceptKind { Top, Bottom, Name, Not, And, Or, Exists, Forall };

/// Immutable ALC concept term.
///
/// Nodes are shared, so copies are cheap and a ConceptExpr can be handed to
/// other threads freely. Equality and hashing are structural.
class ConceptExpr {
 public:
  /// Default-constructs ⊤.
  ConceptExpr();

  static ConceptExpr top();
  static ConceptExpr bottom();
  static ConceptExpr name(std::string concept_name);
  static ConceptExpr negation(ConceptExpr operand);
  static ConceptExpr conjunction(ConceptExpr left, ConceptExpr right);
  static ConceptExpr disjunction(ConceptExpr left, ConceptExpr right);
  static ConceptExpr exists(std::string role, ConceptExpr filler);
  static ConceptExpr forall(std::string role, ConceptExpr filler);

  ConceptKind kind() const noexcept;

  /// Concept name for Name nodes, role name for Exists/Forall nodes.
  const std::string& symbol() const noexcept;

  /// Operand of Not, filler of Exists/Forall.
  const ConceptExpr& operand() const;
  const ConceptExpr& left() const;
  const ConceptExpr& right() const;

  bool is_name() const noexcept { return kind() == ConceptKind::Name; }
  bool is_quantifier() const noexcept {
    return kind() == ConceptKind::Exists || kind() == ConceptKind::Forall;
  }

  /// Number of nodes in the term tree.
  std::size_t size() const noexcept;
  std::size_t depth() const noexcept;
  std::size_t hash() const noexcept;

  friend bool operator==(const ConceptExpr& a, const ConceptExpr& b) noexcept;

 private:
  struct Node;
  explicit ConceptExpr(std::shared_ptr<const Node> node);
  std::shared_ptr<const Node> node_;
};

/// True for A, ¬A, ⊤, ⊥, ¬⊤, ¬⊥.
bool is_literal(const ConceptExpr& c) noexcept;

/// Renders in the ontology text syntax, e.g. `A and (some r . (B or not C))`.
std::string to_string(const ConceptExpr& c);

/// Identifier rule shared by the parser and the validators.
bool is_identifier(std::string_view s) noexcept;

/// Calls `fn(name)` for every concept name and `role_fn(role)` for every role
/// occurring in `c`, in left-to-right order.
void visit_names(const ConceptExpr& c,
                 const std::function<void(const std::string&)>& concept_fn,
                 const std::function<void(const std::string&)>& role_fn);

struct ConceptHash {
  std::size_t operator()(const ConceptExpr& c) const noexcept { return c.hash(); }
};

}  // namespace dfalc

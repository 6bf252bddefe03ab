#include "dfalc/concept.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <vector>

namespace dfalc {

struct ConceptExpr::Node {
  ConceptKind kind;
  std::string symbol;
  std::vector<ConceptExpr> children;
  std::size_t size = 1;
  std::size_t depth = 1;
  std::size_t hash = 0;
};

namespace {

std::size_t mix(std::size_t seed, std::size_t value) {
  return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

ConceptExpr::ConceptExpr() : ConceptExpr(top()) {}

ConceptExpr::ConceptExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

namespace {

template <typename NodeT>
std::shared_ptr<const NodeT> make_node(ConceptKind kind, std::string symbol,
                                       std::vector<ConceptExpr> children) {
  auto node = std::make_shared<NodeT>();
  node->kind = kind;
  node->symbol = std::move(symbol);
  node->children = std::move(children);
  std::size_t h = mix(static_cast<std::size_t>(kind), std::hash<std::string>{}(node->symbol));
  for (const auto& child : node->children) {
    node->size += child.size();
    node->depth = std::max(node->depth, child.depth() + 1);
    h = mix(h, child.hash());
  }
  node->hash = h;
  return node;
}

}  // namespace

ConceptExpr ConceptExpr::top() {
  static const auto node = make_node<Node>(ConceptKind::Top, {}, {});
  return ConceptExpr(node);
}

ConceptExpr ConceptExpr::bottom() {
  static const auto node = make_node<Node>(ConceptKind::Bottom, {}, {});
  return ConceptExpr(node);
}

ConceptExpr ConceptExpr::name(std::string concept_name) {
  return ConceptExpr(make_node<Node>(ConceptKind::Name, std::move(concept_name), {}));
}

ConceptExpr ConceptExpr::negation(ConceptExpr operand) {
  return ConceptExpr(make_node<Node>(ConceptKind::Not, {}, {std::move(operand)}));
}

ConceptExpr ConceptExpr::conjunction(ConceptExpr left, ConceptExpr right) {
  return ConceptExpr(make_node<Node>(ConceptKind::And, {}, {std::move(left), std::move(right)}));
}

ConceptExpr ConceptExpr::disjunction(ConceptExpr left, ConceptExpr right) {
  return ConceptExpr(make_node<Node>(ConceptKind::Or, {}, {std::move(left), std::move(right)}));
}

ConceptExpr ConceptExpr::exists(std::string role, ConceptExpr filler) {
  return ConceptExpr(make_node<Node>(ConceptKind::Exists, std::move(role), {std::move(filler)}));
}

ConceptExpr ConceptExpr::forall(std::string role, ConceptExpr filler) {
  return ConceptExpr(make_node<Node>(ConceptKind::Forall, std::move(role), {std::move(filler)}));
}

ConceptKind ConceptExpr::kind() const noexcept { return node_->kind; }
const std::string& ConceptExpr::symbol() const noexcept { return node_->symbol; }

const ConceptExpr& ConceptExpr::operand() const {
  if (node_->children.size() != 1) throw std::logic_error("concept has no single operand");
  return node_->children[0];
}

const ConceptExpr& ConceptExpr::left() const {
  if (node_->children.size() != 2) throw std::logic_error("concept is not binary");
  return node_->children[0];
}

const ConceptExpr& ConceptExpr::right() const {
  if (node_->children.size() != 2) throw std::logic_error("concept is not binary");
  return node_->children[1];
}

std::size_t ConceptExpr::size() const noexcept { return node_->size; }
std::size_t ConceptExpr::depth() const noexcept { return node_->depth; }
std::size_t ConceptExpr::hash() const noexcept { return node_->hash; }

bool operator==(const ConceptExpr& a, const ConceptExpr& b) noexcept {
  if (a.node_ == b.node_) return true;
  if (a.node_->hash != b.node_->hash || a.node_->kind != b.node_->kind ||
      a.node_->symbol != b.node_->symbol || a.node_->size != b.node_->size) {
    return false;
  }
  return a.node_->children == b.node_->children;
}

bool is_literal(const ConceptExpr& c) noexcept {
  switch (c.kind()) {
    case ConceptKind::Top:
    case ConceptKind::Bottom:
    case ConceptKind::Name:
      return true;
    case ConceptKind::Not: {
      const auto k = c.operand().kind();
      return k == ConceptKind::Name || k == ConceptKind::Top || k == ConceptKind::Bottom;
    }
    default:
      return false;
  }
}

namespace {

// not binds tighter than and, and tighter than or; quantifier fillers run to
// the next closing delimiter.
int precedence(ConceptKind k) {
  switch (k) {
    case ConceptKind::Or:
      return 1;
    case ConceptKind::And:
      return 2;
    case ConceptKind::Exists:
    case ConceptKind::Forall:
      return 0;
    default:
      return 4;
  }
}

void render(const ConceptExpr& c, std::string& out);

void render_operand(const ConceptExpr& c, int min_prec, std::string& out) {
  if (precedence(c.kind()) < min_prec) {
    out += '(';
    render(c, out);
    out += ')';
  } else {
    render(c, out);
  }
}

void render(const ConceptExpr& c, std::string& out) {
  switch (c.kind()) {
    case ConceptKind::Top:
      out += "Thing";
      break;
    case ConceptKind::Bottom:
      out += "Nothing";
      break;
    case ConceptKind::Name:
      out += c.symbol();
      break;
    case ConceptKind::Not:
      out += "not ";
      render_operand(c.operand(), 3, out);
      break;
    case ConceptKind::And:
    case ConceptKind::Or: {
      const int p = precedence(c.kind());
      render_operand(c.left(), p, out);
      out += c.kind() == ConceptKind::And ? " and " : " or ";
      render_operand(c.right(), p + 1, out);
      break;
    }
    case ConceptKind::Exists:
    case ConceptKind::Forall:
      out += c.kind() == ConceptKind::Exists ? "some " : "only ";
      out += c.symbol();
      out += " . ";
      // Fillers may extend to the delimiter, but binary fillers read better
      // with explicit parentheses.
      render_operand(c.operand(), 3, out);
      break;
  }
}

}  // namespace

std::string to_string(const ConceptExpr& c) {
  std::string out;
  render(c, out);
  return out;
}

bool is_identifier(std::string_view s) noexcept {
  if (s.empty()) return false;
  const auto head = static_cast<unsigned char>(s.front());
  if (!(std::isalpha(head) || head == '_')) return false;
  return std::all_of(s.begin() + 1, s.end(), [](char ch) {
    const auto u = static_cast<unsigned char>(ch);
    return std::isalnum(u) || u == '_';
  });
}

void visit_names(const ConceptExpr& c,
                 const std::function<void(const std::string&)>& concept_fn,
                 const std::function<void(const std::string&)>& role_fn) {
  switch (c.kind()) {
    case ConceptKind::Top:
    case ConceptKind::Bottom:
      return;
    case ConceptKind::Name:
      concept_fn(c.symbol());
      return;
    case ConceptKind::Not:
      visit_names(c.operand(), concept_fn, role_fn);
      return;
    case ConceptKind::And:
    case ConceptKind::Or:
      visit_names(c.left(), concept_fn, role_fn);
      visit_names(c.right(), concept_fn, role_fn);
      return;
    case ConceptKind::Exists:
    case ConceptKind::Forall:
      role_fn(c.symbol());
      visit_names(c.operand(), concept_fn, role_fn);
      return;
  }
}

}  // namespace dfalc

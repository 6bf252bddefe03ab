#include "dfalc/parser.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <optional>
#include <unordered_map>
#include <vector>

#include "dfalc/errors.hpp"

namespace dfalc {

SyntaxError::SyntaxError(std::size_t line, std::size_t column, std::string expected,
                         const std::string& detail)
    : InputError("line " + std::to_string(line) + ", column " + std::to_string(column) +
                 ": expected " + expected + (detail.empty() ? "" : " (" + detail + ")")),
      line_(line),
      column_(column),
      expected_(std::move(expected)) {}

namespace {

enum class Tok { Ident, Number, LParen, RParen, Dot, Comma, Equals, Compare, End };

struct Token {
  Tok kind;
  std::string_view text;
  std::size_t column;  // 1-based
};

constexpr std::array<std::string_view, 9> kReserved = {
    "Thing", "Nothing", "not", "and", "or", "some", "only", "SubClassOf", "EquivalentTo"};

bool is_reserved(std::string_view s) {
  for (auto k : kReserved) {
    if (k == s) return true;
  }
  return false;
}

bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

std::vector<Token> tokenize(std::string_view line, std::size_t line_no) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    const char c = line[i];
    if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
      continue;
    }
    const std::size_t col = i + 1;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i + 1;
      while (j < line.size() && ident_char(line[j])) ++j;
      out.push_back({Tok::Ident, line.substr(i, j - i), col});
      i = j;
    } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+') {
      std::size_t j = i + 1;
      while (j < line.size() && (std::isdigit(static_cast<unsigned char>(line[j])) ||
                                 line[j] == '.' || line[j] == 'e' || line[j] == 'E' ||
                                 ((line[j] == '-' || line[j] == '+') &&
                                  (line[j - 1] == 'e' || line[j - 1] == 'E')))) {
        ++j;
      }
      out.push_back({Tok::Number, line.substr(i, j - i), col});
      i = j;
    } else if (c == '(') {
      out.push_back({Tok::LParen, line.substr(i, 1), col});
      ++i;
    } else if (c == ')') {
      out.push_back({Tok::RParen, line.substr(i, 1), col});
      ++i;
    } else if (c == '.') {
      out.push_back({Tok::Dot, line.substr(i, 1), col});
      ++i;
    } else if (c == ',') {
      out.push_back({Tok::Comma, line.substr(i, 1), col});
      ++i;
    } else if (c == '=') {
      out.push_back({Tok::Equals, line.substr(i, 1), col});
      ++i;
    } else if (c == '<' || c == '>') {
      const std::size_t len = (i + 1 < line.size() && line[i + 1] == '=') ? 2 : 1;
      out.push_back({Tok::Compare, line.substr(i, len), col});
      i += len;
    } else {
      throw SyntaxError(line_no, col, "token", "unexpected character '" + std::string(1, c) + "'");
    }
  }
  out.push_back({Tok::End, {}, line.size() + 1});
  return out;
}

enum class Sort { Concept, Role, Individual };

const char* sort_name(Sort s) {
  switch (s) {
    case Sort::Concept:
      return "concept";
    case Sort::Role:
      return "role";
    case Sort::Individual:
      return "individual";
  }
  return "?";
}

class LineParser {
 public:
  LineParser(std::vector<Token> tokens, std::size_t line_no, Ontology& onto,
             std::unordered_map<std::string, Sort>& sorts)
      : toks_(std::move(tokens)), line_(line_no), onto_(onto), sorts_(sorts) {}

  void statement() {
    const Token& head = peek();
    if (head.kind == Tok::End) return;
    if (head.kind != Tok::Ident) fail("statement keyword");
    if (head.text == "concept" || head.text == "role" || head.text == "individual") {
      next();
      const Sort sort = head.text == "concept" ? Sort::Concept
                        : head.text == "role"  ? Sort::Role
                                               : Sort::Individual;
      register_name(expect_name(sort_name(sort)), sort);
      expect_end();
    } else if (head.text == "axiom") {
      next();
      axiom();
    } else if (head.text == "assert") {
      next();
      assertion();
    } else {
      fail("one of 'concept', 'role', 'individual', 'axiom', 'assert'");
    }
  }

  ConceptExpr standalone_concept() {
    ConceptExpr c = or_expr();
    expect_end();
    return c;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }

  bool peek_keyword(std::string_view kw) const {
    return peek().kind == Tok::Ident && peek().text == kw;
  }

  [[noreturn]] void fail(const std::string& expected, const std::string& detail = {}) const {
    throw SyntaxError(line_, peek().column, expected, detail);
  }

  void expect(Tok kind, const char* what) {
    if (peek().kind != kind) fail(what);
    next();
  }

  void expect_end() {
    if (peek().kind != Tok::End) fail("end of line");
  }

  std::string expect_name(const char* what) {
    if (peek().kind != Tok::Ident || is_reserved(peek().text)) fail(std::string(what) + " name");
    return std::string(next().text);
  }

  void register_name(const std::string& name, Sort sort) {
    auto [it, inserted] = sorts_.emplace(name, sort);
    if (!inserted && it->second != sort) {
      throw DuplicateDeclarationKind("line " + std::to_string(line_) + ": '" + name +
                                     "' used as " + sort_name(sort) + " but already a " +
                                     sort_name(it->second));
    }
    switch (sort) {
      case Sort::Concept:
        onto_.signature.concepts.add(name);
        break;
      case Sort::Role:
        onto_.signature.roles.add(name);
        break;
      case Sort::Individual:
        onto_.signature.individuals.add(name);
        break;
    }
  }

  void axiom() {
    ConceptExpr lhs = or_expr();
    if (peek_keyword("SubClassOf")) {
      next();
      ConceptExpr rhs = or_expr();
      expect_end();
      onto_.tbox.emplace_back(Inclusion{std::move(lhs), std::move(rhs)});
    } else if (peek_keyword("EquivalentTo")) {
      next();
      ConceptExpr rhs = or_expr();
      expect_end();
      onto_.tbox.emplace_back(Equivalence{std::move(lhs), std::move(rhs)});
    } else {
      fail("'SubClassOf' or 'EquivalentTo'");
    }
  }

  void assertion() {
    const std::string pred = expect_name("concept or role");
    expect(Tok::LParen, "'('");
    const std::string first = expect_name("individual");
    std::optional<std::string> second;
    if (peek().kind == Tok::Comma) {
      next();
      second = expect_name("individual");
    }
    expect(Tok::RParen, "')'");
    double degree = 1.0;
    if (peek().kind == Tok::Compare) {
      fail("'='", "only '=' degrees are supported; '" + std::string(peek().text) + "' is not");
    }
    if (peek().kind == Tok::Equals) {
      next();
      degree = number();
    }
    expect_end();

    ABoxAssertion a;
    a.degree = degree;
    if (second) {
      register_name(pred, Sort::Role);
      register_name(first, Sort::Individual);
      register_name(*second, Sort::Individual);
      a.fact = RoleAssertion{first, *second, pred};
    } else {
      register_name(pred, Sort::Concept);
      register_name(first, Sort::Individual);
      a.fact = ConceptAssertion{first, ConceptExpr::name(pred)};
    }
    onto_.abox.push_back(std::move(a));
  }

  double number() {
    if (peek().kind != Tok::Number) fail("degree");
    const Token& t = next();
    double v = 0.0;
    const char* first = t.text.data();
    const char* last = first + t.text.size();
    if (*first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last) {
      throw SyntaxError(line_, t.column, "degree", "malformed number '" + std::string(t.text) + "'");
    }
    if (!(v >= 0.0 && v <= 1.0)) {
      throw DegreeOutOfRange("line " + std::to_string(line_) + ", column " +
                             std::to_string(t.column) + ": degree " + std::string(t.text) +
                             " outside [0,1]");
    }
    return v;
  }

  // or_expr  := and_expr ('or' and_expr)*
  // and_expr := unary ('and' unary)*
  // unary    := 'not' unary | ('some'|'only') role '.' or_expr | primary
  ConceptExpr or_expr() {
    ConceptExpr c = and_expr();
    while (peek_keyword("or")) {
      next();
      c = ConceptExpr::disjunction(std::move(c), and_expr());
    }
    return c;
  }

  ConceptExpr and_expr() {
    ConceptExpr c = unary();
    while (peek_keyword("and")) {
      next();
      c = ConceptExpr::conjunction(std::move(c), unary());
    }
    return c;
  }

  ConceptExpr unary() {
    if (peek_keyword("not")) {
      next();
      return ConceptExpr::negation(unary());
    }
    if (peek_keyword("some") || peek_keyword("only")) {
      const bool some = next().text == "some";
      const std::string role = expect_name("role");
      register_name(role, Sort::Role);
      expect(Tok::Dot, "'.'");
      ConceptExpr filler = or_expr();
      return some ? ConceptExpr::exists(role, std::move(filler))
                  : ConceptExpr::forall(role, std::move(filler));
    }
    return primary();
  }

  ConceptExpr primary() {
    if (peek().kind == Tok::LParen) {
      next();
      ConceptExpr c = or_expr();
      expect(Tok::RParen, "')'");
      return c;
    }
    if (peek_keyword("Thing")) {
      next();
      return ConceptExpr::top();
    }
    if (peek_keyword("Nothing")) {
      next();
      return ConceptExpr::bottom();
    }
    const std::string name = expect_name("concept");
    register_name(name, Sort::Concept);
    return ConceptExpr::name(name);
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::size_t line_;
  Ontology& onto_;
  std::unordered_map<std::string, Sort>& sorts_;
};

std::string_view strip_comment(std::string_view line) {
  if (auto hash = line.find('#'); hash != std::string_view::npos) return line.substr(0, hash);
  return line;
}

}  // namespace

Ontology parse_ontology(std::string_view text) {
  Ontology onto;
  std::unordered_map<std::string, Sort> sorts;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    const std::string_view line = strip_comment(text.substr(start, end - start));
    LineParser(tokenize(line, line_no), line_no, onto, sorts).statement();
    start = end + 1;
  }
  return onto;
}

ConceptExpr parse_concept(std::string_view text) {
  Ontology scratch;
  std::unordered_map<std::string, Sort> sorts;
  return LineParser(tokenize(text, 1), 1, scratch, sorts).standalone_concept();
}

std::string format_degree(double v) {
  std::array<char, 32> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), ptr);
}

std::string render_assertion(const ABoxAssertion& a) {
  std::string out = "assert ";
  if (const auto* ca = std::get_if<ConceptAssertion>(&a.fact)) {
    out += to_string(ca->concept_expr) + "(" + ca->individual + ")";
  } else {
    const auto& ra = std::get<RoleAssertion>(a.fact);
    out += ra.role + "(" + ra.subject + ", " + ra.object + ")";
  }
  out += " = " + format_degree(a.degree);
  return out;
}

std::string render_ontology(const Ontology& o) {
  std::string out;
  for (const auto& c : o.signature.concepts) out += "concept " + c + "\n";
  for (const auto& r : o.signature.roles) out += "role " + r + "\n";
  for (const auto& i : o.signature.individuals) out += "individual " + i + "\n";
  for (const auto& ax : o.tbox) out += "axiom " + to_string(ax) + "\n";
  for (const auto& a : o.abox) out += render_assertion(a) + "\n";
  return out;
}

}  // namespace dfalc

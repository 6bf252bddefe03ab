#pragma once

#include <string>
#include <string_view>

#include "dfalc/ontology.hpp"

namespace dfalc {

/// Parses the line-oriented ontology format:
///
///   concept <Name> | role <Name> | individual <Name>
///   axiom <CExpr> SubClassOf <CExpr> | axiom <CExpr> EquivalentTo <CExpr>
///   assert <Name>(<ind>) [= <degree>] | assert <role>(<ind>, <ind>) [= <degree>]
///
/// `#` starts a comment. Undeclared names are registered under the sort of
/// their first use. Throws SyntaxError, DegreeOutOfRange or
/// DuplicateDeclarationKind.
Ontology parse_ontology(std::string_view text);

/// Parses a single concept expression (no surrounding statement).
ConceptExpr parse_concept(std::string_view text);

/// Canonical text form; `parse_ontology(render_ontology(o)) == o`.
std::string render_ontology(const Ontology& o);

std::string render_assertion(const ABoxAssertion& a);

/// Shortest decimal that round-trips to the same double.
std::string format_degree(double v);

}  // namespace dfalc

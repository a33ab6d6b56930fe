#pragma once

#include <string_view>

#include "perfcode/element_set.hpp"
#include "perfcode/finite_group.hpp"
#include "perfcode/group_spec.hpp"

namespace perfcode {

/// Parses the group-spec DSL:
///
///   spec    := term ('x' term)*                 (left-associative)
///   term    := 'Z(' n ')' | 'D(' n ')' | 'Q(' n ')' | 'A(' n (',' n)* ')'
///            | 'perm{' gen (';' gen)* '}@' degree | 'table@' path | '(' spec ')'
///   gen     := cycle+    cycle := '(' point* ')'
///
/// Whitespace between tokens is ignored; a table path ends at whitespace
/// or ')'.
/// Throws SyntaxError (with byte offset and expected tokens) or
/// Error(SemanticError) for well-formed but invalid parameters.
GroupSpec parse_spec(std::string_view text);

/// Evaluates one element expression such as "x^3*y", "r^-1", "(0,2)", "5"
/// against the group's generators and labels.
ElementId parse_element(const FiniteGroup& g, std::string_view text);

/// Comma-separated element expressions (commas inside parentheses belong to
/// the label). An empty string yields the empty set.
ElementSet parse_element_list(const FiniteGroup& g, std::string_view text);

}  // namespace perfcode

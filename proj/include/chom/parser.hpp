#pragma once

#include <string>
#include <vector>

#include "chom/poly.hpp"

namespace chom {

/// Parses a polynomial expression over the named variables.
/// Grammar (standard precedence, ^ > unary - > * > binary +/-, ^ right-assoc,
/// exponents are non-negative integer literals):
///   expr   := term (('+' | '-') term)*
///   term   := factor (('*' | '/') factor)*   -- '/' only by nonzero constants
///   factor := '-' factor | power
///   power  := atom ('^' power)?        -- exponent side must be an integer
///   atom   := integer | variable | '(' expr ')'
/// Throws SyntaxError (with byte offset) and UnknownVariable.
Poly parse_poly(const std::string& src, const std::vector<std::string>& vars);

}  // namespace chom

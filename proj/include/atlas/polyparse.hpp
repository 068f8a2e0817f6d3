#pragma once

#include <string_view>

#include "atlas/multipoly.hpp"

namespace atlas {

// Expression grammar shared by CLI arguments and JSON files:
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := atom ['^' integer]
//   atom   := integer | 'zeta' '(' integer ')' | variable | '(' expr ')'
// Variables are x1..xn, with x, y, z accepted as aliases for n <= 3.
// '/' requires a constant divisor. Parsing never loses exactness.
MultiPoly<Cyclotomic> parse_poly(std::string_view src, int nvars);

// Same grammar with no variables; the result must be a constant.
Cyclotomic parse_scalar(std::string_view src);

bool poly_is_rational(const MultiPoly<Cyclotomic>& p);
MultiPoly<Rational> poly_rational_part(const MultiPoly<Cyclotomic>& p);

} // namespace atlas

#pragma once

#include <string>
#include <string_view>

#include "daha1/laurent.hpp"

namespace daha1 {

// Reads sums of products of rationals, q^(p/4), t^(p/2), X^n and
// parenthesized subexpressions, e.g. "3/2 - q^(1/4)*X^3 + (1 - t)/(1 - q*t)*X".
// Throws SyntaxError or ExponentOverflow.
LaurentPoly parse_poly(std::string_view src);

// Coefficient in q, t notation; parse_poly reads it back.
std::string format_coeff(const RatQT& c);

}  // namespace daha1

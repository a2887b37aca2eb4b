#pragma once

#include <string_view>
#include <vector>

#include "locsym/factored.hpp"

namespace locsym {

/// "X*Z - Y^2", "(1/2)*X + Y", "2Z", "s + 2t". Division only by constants.
Poly parse_poly(std::string_view text, Space space);

/// Factored rational function: a product or quotient of rational constants,
/// variables and parenthesized polynomials, each with an optional signed
/// integer exponent. "(Y + 2Z)^1 * (Z)^-1", "s/t", "-3 * X^2/Z^2".
/// Parenthesized groups are kept as single factors, never expanded across.
FactoredFunction parse_function(std::string_view text, Space space, bool trust_irreducible = false);

/// "[0:-2:1]" or "[1/2 : 3]".
std::vector<BigRational> parse_coordinates(std::string_view text);

}  // namespace locsym

#pragma once

#include "algcalc/scalar_expr.hpp"

#include <span>
#include <string_view>

namespace algcalc {

/// Parses an arithmetic expression over the given coordinates:
///
///   expr   := term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*
///   factor := base ('^' unsigned-integer)?
///   base   := rational-literal | identifier | '(' expr ')' | '-' factor
///
/// Rational literals are decimal integers with an optional fractional part
/// ("3", "0.25"); they are read exactly. Throws ParseError carrying the byte
/// offset of the offending token.
ScalarExpr parse_expr(std::string_view text, std::span<const Coordinate> coords);

} // namespace algcalc

#pragma once

#include <string_view>

#include "polyfunc/polyfun.hpp"

namespace polyfunc {

/// Parse a polynomial in the artifact grammar: variables `x` (arity 1) or
/// `x1..xr`, base-ring generator `t` (F_q[t] only), field generator `u`
/// (F_{p^s}, s > 1 only), integer literals, operators + - * ^ with ^ binding
/// tightest, parentheses, insignificant whitespace. Coefficients are exact
/// elements of D; in F_q[t] integer literals must be prime-field digits
/// (< p). Throws ParseError with the byte offset on malformed input.
MVPoly parse_poly(std::string_view text, const Ring& ring, uint32_t arity);

/// Same grammar restricted to constants (no x variables).
BaseElement parse_element(std::string_view text, const Ring& ring);

/// Ideal generator from the constant grammar (an integer or a polynomial
/// in t), normalized.
IdealGen parse_ideal(std::string_view text, const Ring& ring);

/// Canonical rendering: terms in descending lex order of the exponents.
/// parse_poly(render_poly(F)) == F for every F.
std::string render_poly(const MVPoly& F);

}  // namespace polyfunc

#pragma once

#include <string>

#include "germlab/poly.hpp"

namespace germlab {

/// Grammar: terms separated by '+'/'-'; a term is [coef][*]factors; the
/// coefficient is an integer or p/q rational; a factor is a variable name or
/// name^k, factors joined by '*'. Whitespace is ignored.
/// Errors carry 1-based line/column positions.
Poly parse_poly(const std::string& text, const RingPtr& ring);

/// Canonical printer: terms in graded-reverse-lex descending order, rational
/// coefficients as p/q, '*' between all factors. parse_poly(poly_to_string(p))
/// reproduces p exactly.
std::string poly_to_string(const Poly& p);

}  // namespace germlab

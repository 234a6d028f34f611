#pragma once

#include <string>
#include <string_view>

#include <gmpxx.h>

namespace veronese {

/// Exact rational coefficient. Always canonical (lowest terms, positive denominator).
using Rational = mpq_class;
using Integer = mpz_class;

/// Renders as "p/q"; integers keep the "/1" so the format never depends on the value.
std::string to_string(const Rational& x);

/// Parses "p", "-p", "p/q" (q > 0). Throws parse_error when the text is not in
/// lowest terms, has a non-positive denominator, or is not a rational literal.
Rational parse_rational(std::string_view text);

}  // namespace veronese

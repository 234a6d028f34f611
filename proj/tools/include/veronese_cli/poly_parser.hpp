#pragma once

#include <string_view>

#include "veronese/mjet.hpp"

namespace veronese::cli {

/// Parses a polynomial literal in s1..sn such as "s1^5 - 3/2*s1*s2^2 + (s1+s2)^2".
///
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := atom ['^' integer]
///   atom   := integer ['/' integer] | 's' integer | '(' expr ')'
///
/// Terms above trunc are dropped. parse_error names the offending column.
MJet parse_polynomial(std::string_view text, int n, int trunc);

}  // namespace veronese::cli

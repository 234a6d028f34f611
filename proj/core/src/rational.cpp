#include "veronese/rational.hpp"

#include <cctype>

#include "veronese/errors.hpp"

namespace veronese {

std::string to_string(const Rational& x) {
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

namespace {

bool is_integer_literal(std::string_view s, bool allow_sign) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (allow_sign && s[0] == '-') i = 1;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const auto num_text = text.substr(0, slash);
  if (!is_integer_literal(num_text, true)) {
    throw parse_error("malformed rational literal '" + std::string(text) + "'");
  }
  Integer num(std::string(num_text), 10);
  Integer den = 1;
  if (slash != std::string_view::npos) {
    const auto den_text = text.substr(slash + 1);
    if (!is_integer_literal(den_text, false)) {
      throw parse_error("malformed denominator in '" + std::string(text) + "'");
    }
    den = Integer(std::string(den_text), 10);
    if (den == 0) throw parse_error("zero denominator in '" + std::string(text) + "'");
  }
  Rational value(num, den);
  value.canonicalize();
  if (value.get_num() != num || value.get_den() != den) {
    throw parse_error("rational '" + std::string(text) + "' is not in lowest terms");
  }
  return value;
}

}  // namespace veronese

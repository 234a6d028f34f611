#include "veronese_cli/poly_parser.hpp"

#include <cctype>
#include <string>

#include "veronese/errors.hpp"

namespace veronese::cli {

namespace {

class Parser {
 public:
  Parser(std::string_view text, int n, int trunc) : text_(text), n_(n), trunc_(trunc) {}

  MJet parse() {
    MJet out = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return out;
  }

 private:
  MJet expr() {
    skip_space();
    bool negate = false;
    if (accept('+')) {
    } else if (accept('-')) {
      negate = true;
    }
    MJet out = term();
    if (negate) out = -out;
    for (;;) {
      if (accept('+')) {
        out += term();
      } else if (accept('-')) {
        out -= term();
      } else {
        return out;
      }
    }
  }

  MJet term() {
    MJet out = factor();
    while (accept('*')) out = out * factor();
    return out;
  }

  MJet factor() {
    MJet base = atom();
    if (!accept('^')) return base;
    const auto e = integer();
    if (e > 64) fail("exponent too large");
    MJet out = MJet::constant(n_, trunc_, 1);
    for (long i = 0; i < e; ++i) out = out * base;
    return out;
  }

  MJet atom() {
    skip_space();
    if (accept('(')) {
      MJet inner = expr();
      if (!accept(')')) fail("missing ')'");
      return inner;
    }
    if (pos_ < text_.size() && text_[pos_] == 's') {
      ++pos_;
      const auto i = integer();
      if (i < 1 || i > n_) fail("variable s" + std::to_string(i) + " outside s1..s" + std::to_string(n_));
      return MJet::variable(n_, trunc_, static_cast<int>(i - 1));
    }
    if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      const std::size_t start = pos_;
      integer();
      std::size_t end = pos_;
      if (accept('/')) {
        integer();
        end = pos_;
      } else {
        pos_ = end;
      }
      Rational c;
      try {
        c = parse_rational(text_.substr(start, end - start));
      } catch (const parse_error& e) {
        fail(e.what());
      }
      return MJet::constant(n_, trunc_, c);
    }
    fail(pos_ < text_.size() ? "unexpected '" + std::string(1, text_[pos_]) + "'" : "unexpected end of input");
  }

  long integer() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    if (pos_ - start > 9) fail("integer literal too long");
    return std::stol(std::string(text_.substr(start, pos_ - start)));
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw parse_error("polynomial '" + std::string(text_) + "', column " + std::to_string(pos_ + 1) + ": " + message);
  }

  std::string_view text_;
  int n_;
  int trunc_;
  std::size_t pos_ = 0;
};

}  // namespace

MJet parse_polynomial(std::string_view text, int n, int trunc) {
  if (n < 1 || trunc < 0) throw domain_error("polynomial parser needs n >= 1 and trunc >= 0");
  return Parser(text, n, trunc).parse();
}

}  // namespace veronese::cli

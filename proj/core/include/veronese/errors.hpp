#pragma once

#include <stdexcept>
#include <string>

namespace veronese {

/// Precondition or shape violation (bad weight, mismatched truncation, ...).
class domain_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Inversion of a power series whose constant term is zero.
class not_a_unit_error : public domain_error {
 public:
  using domain_error::domain_error;
};

/// The germ is not q-regular, so no order-1 reduction exists.
class non_regular_error : public domain_error {
 public:
  using domain_error::domain_error;
};

/// A reduced-form profile that was promised by the caller does not hold.
class inconsistency_error : public domain_error {
 public:
  using domain_error::domain_error;
};

/// Hypothesis of the rational-normal-curve rigidity induction is not met.
class hypothesis_error : public domain_error {
 public:
  using domain_error::domain_error;
};

/// Rational curve does not meet the origin chart (X_0(0) = 0).
class not_in_chart_error : public domain_error {
 public:
  using domain_error::domain_error;
};

/// Rational curve is singular at the base point (X_1'(0) = 0).
class bad_tangent_error : public domain_error {
 public:
  using domain_error::domain_error;
};

/// Jet too short to decide the requested property.
class insufficient_order_error : public domain_error {
 public:
  using domain_error::domain_error;
};

/// Malformed text input (rational literal, polynomial literal, file).
class parse_error : public std::runtime_error {
 public:
  explicit parse_error(const std::string& what, int line = 0)
      : std::runtime_error(what), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace veronese

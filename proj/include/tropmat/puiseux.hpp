#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tropmat/rational.hpp"
#include "tropmat/trop_value.hpp"

namespace tropmat {

/// Truncated Puiseux series: sorted terms (strictly increasing rational
/// exponents, nonzero rational coefficients) plus a truncation order.
/// An unbounded truncation order means the series is exact. Terms at or
/// above a bounded truncation order are unknown, not zero.
class Puiseux {
 public:
  struct Term {
    Rational exponent;
    Rational coefficient;
  };

  Puiseux() = default;  // exact zero
  static Puiseux zero() { return Puiseux(); }
  static Puiseux constant(Rational c);
  static Puiseux monomial(Rational coefficient, Rational exponent);
  /// The series variable t.
  static Puiseux t() { return monomial(Rational(1), Rational(1)); }
  static Puiseux make(std::vector<Term> terms,
                      std::optional<Rational> truncation = std::nullopt);

  const std::vector<Term>& terms() const { return terms_; }
  const std::optional<Rational>& truncation_order() const { return trunc_; }
  bool is_exact() const { return !trunc_.has_value(); }

  /// Exact zero: no terms and unbounded truncation.
  bool is_zero() const { return terms_.empty() && is_exact(); }
  /// No known terms but bounded truncation: could be zero or not.
  bool is_indeterminate() const { return terms_.empty() && trunc_.has_value(); }
  /// Has a certified leading term.
  bool is_nonzero() const { return !terms_.empty(); }

  /// Valuation: least exponent, or infinity for the exact zero series.
  /// Throws PrecisionExhausted when indeterminate.
  TropValue deg() const;

  /// Leading coefficient; requires is_nonzero().
  const Rational& leading_coefficient() const { return terms_.front().coefficient; }

  /// Drops terms at or above the given order and tightens the truncation.
  Puiseux truncated(const Rational& order) const;

  friend Puiseux operator+(const Puiseux& f, const Puiseux& g);
  friend Puiseux operator-(const Puiseux& f, const Puiseux& g);
  friend Puiseux operator-(const Puiseux& f);
  friend Puiseux operator*(const Puiseux& f, const Puiseux& g);

  /// Multiplicative inverse, truncated to rel_order exponent units above
  /// its leading exponent (or tighter if *this is itself truncated).
  /// Throws DivisionByZeroSeries on the exact zero, PrecisionExhausted on
  /// an indeterminate series.
  Puiseux inverse(const Rational& rel_order = default_rel_order()) const;

  /// Long division. Exact (unbounded) when the remainder terminates,
  /// truncated otherwise.
  friend Puiseux operator/(const Puiseux& f, const Puiseux& g);

  /// Exact equality of represented terms and truncation.
  friend bool operator==(const Puiseux& f, const Puiseux& g);

  static Rational default_rel_order();

  /// "1 - t + 2*t^2 + t^(1/2)" style; "0" for the zero series.
  std::string str() const;
  /// Parses the entry grammar: sums of terms c, c*t, c*t^e, t^(p/q), -t...
  static Puiseux parse(const std::string& text);

 private:
  std::vector<Term> terms_;
  std::optional<Rational> trunc_;
  void normalize();
};

}  // namespace tropmat

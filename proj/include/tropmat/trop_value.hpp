#pragma once

#include <string>

#include "tropmat/rational.hpp"

namespace tropmat {

/// Element of the tropical semiring (R u {inf}, min, +) with exact
/// rational finite part. Default-constructed value is infinity.
class TropValue {
 public:
  TropValue() = default;
  explicit TropValue(Rational v) : finite_(true), v_(std::move(v)) {}
  static TropValue infinity() { return TropValue(); }
  static TropValue zero() { return TropValue(Rational(0)); }  // the ⊙-identity

  bool is_finite() const { return finite_; }
  bool is_infinite() const { return !finite_; }
  /// Finite part; only meaningful when is_finite().
  const Rational& value() const { return v_; }

  friend bool operator==(const TropValue& a, const TropValue& b) {
    if (a.finite_ != b.finite_) return false;
    return !a.finite_ || a.v_ == b.v_;
  }
  /// Total order with infinity as the top element.
  friend bool operator<(const TropValue& a, const TropValue& b) {
    if (!b.finite_) return a.finite_;
    if (!a.finite_) return false;
    return a.v_ < b.v_;
  }
  friend bool operator<=(const TropValue& a, const TropValue& b) {
    return !(b < a);
  }

  std::string str() const { return finite_ ? rational_str(v_) : "inf"; }

 private:
  bool finite_ = false;
  Rational v_;
};

/// ⊕: minimum.
inline TropValue tmin(const TropValue& a, const TropValue& b) {
  return a < b ? a : b;
}

/// ⊙: addition, with infinity absorbing.
inline TropValue tplus(const TropValue& a, const TropValue& b) {
  if (a.is_infinite() || b.is_infinite()) return TropValue::infinity();
  return TropValue(a.value() + b.value());
}

/// Parses "p/q" or "inf". Throws ParseError.
TropValue parse_trop(const std::string& text);

}  // namespace tropmat

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace tropmat {

/// Exact rational scalar; canonical (gcd-reduced, positive denominator).
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// Parses "p", "-p/q" or a decimal-free integer string. Throws ParseError.
Rational parse_rational(const std::string& text);

/// "p" or "p/q" with positive q.
std::string rational_str(const Rational& q);

}  // namespace tropmat

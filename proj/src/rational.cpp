#include "tropmat/rational.hpp"

#include "tropmat/error.hpp"

namespace tropmat {

Rational parse_rational(const std::string& text) {
  if (text.empty()) fail(ErrorCode::ParseError, "empty rational");
  for (char c : text)
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' ||
          c == '+' || c == '/'))
      fail(ErrorCode::ParseError, "bad rational: '" + text + "'");
  try {
    Rational q(text);
    if (q.get_den() == 0) fail(ErrorCode::ParseError, "zero denominator");
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    fail(ErrorCode::ParseError, "bad rational: '" + text + "'");
  }
}

std::string rational_str(const Rational& q) { return q.get_str(); }

}  // namespace tropmat

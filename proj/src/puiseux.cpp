#include "tropmat/puiseux.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "tropmat/error.hpp"

namespace tropmat {

namespace {

/// min with nullopt as +infinity.
std::optional<Rational> opt_min(const std::optional<Rational>& a,
                                const std::optional<Rational>& b) {
  if (!a) return b;
  if (!b) return a;
  return std::min(*a, *b);
}

std::optional<Rational> opt_plus(const std::optional<Rational>& a,
                                 const std::optional<Rational>& b) {
  if (!a || !b) return std::nullopt;
  return *a + *b;
}

}  // namespace

void Puiseux::normalize() {
  std::map<Rational, Rational> acc;
  for (const Term& t : terms_) acc[t.exponent] += t.coefficient;
  terms_.clear();
  for (auto& [e, c] : acc) {
    if (c == 0) continue;
    if (trunc_ && e >= *trunc_) continue;
    terms_.push_back(Term{e, c});
  }
}

Puiseux Puiseux::constant(Rational c) {
  return monomial(std::move(c), Rational(0));
}

Puiseux Puiseux::monomial(Rational coefficient, Rational exponent) {
  Puiseux f;
  if (coefficient != 0)
    f.terms_.push_back(Term{std::move(exponent), std::move(coefficient)});
  return f;
}

Puiseux Puiseux::make(std::vector<Term> terms,
                      std::optional<Rational> truncation) {
  Puiseux f;
  f.terms_ = std::move(terms);
  f.trunc_ = std::move(truncation);
  f.normalize();
  return f;
}

TropValue Puiseux::deg() const {
  if (!terms_.empty()) return TropValue(terms_.front().exponent);
  if (is_exact()) return TropValue::infinity();
  fail(ErrorCode::PrecisionExhausted,
       "degree unknown: all terms cancelled below truncation order " +
           rational_str(*trunc_));
}

Puiseux Puiseux::truncated(const Rational& order) const {
  Puiseux f = *this;
  f.trunc_ = opt_min(trunc_, order);
  f.normalize();
  return f;
}

Puiseux operator+(const Puiseux& f, const Puiseux& g) {
  std::vector<Puiseux::Term> terms = f.terms_;
  terms.insert(terms.end(), g.terms_.begin(), g.terms_.end());
  return Puiseux::make(std::move(terms), opt_min(f.trunc_, g.trunc_));
}

Puiseux operator-(const Puiseux& f) {
  Puiseux g = f;
  for (auto& t : g.terms_) t.coefficient = -t.coefficient;
  return g;
}

Puiseux operator-(const Puiseux& f, const Puiseux& g) { return f + (-g); }

Puiseux operator*(const Puiseux& f, const Puiseux& g) {
  if (f.is_zero() || g.is_zero()) return Puiseux::zero();
  // (f0 + O(t^a))(g0 + O(t^b)) is known below
  // min(deg f0 + b, deg g0 + a, a + b).
  std::optional<Rational> df =
      f.terms_.empty() ? std::nullopt
                       : std::optional<Rational>(f.terms_.front().exponent);
  std::optional<Rational> dg =
      g.terms_.empty() ? std::nullopt
                       : std::optional<Rational>(g.terms_.front().exponent);
  std::optional<Rational> bound =
      opt_min(opt_plus(df, g.trunc_),
              opt_min(opt_plus(dg, f.trunc_), opt_plus(f.trunc_, g.trunc_)));
  std::vector<Puiseux::Term> terms;
  for (const auto& a : f.terms_)
    for (const auto& b : g.terms_)
      terms.push_back(Puiseux::Term{a.exponent + b.exponent,
                                    a.coefficient * b.coefficient});
  return Puiseux::make(std::move(terms), bound);
}

Rational Puiseux::default_rel_order() { return Rational(10); }

Puiseux operator/(const Puiseux& f, const Puiseux& g) {
  if (g.is_zero())
    fail(ErrorCode::DivisionByZeroSeries, "division by the zero series");
  if (g.is_indeterminate())
    fail(ErrorCode::PrecisionExhausted,
         "divisor has no certified leading term");
  const Rational dg = g.terms_.front().exponent;
  if (f.is_zero()) return Puiseux::zero();
  if (f.is_indeterminate()) {
    Puiseux q;
    q.trunc_ = *f.trunc_ - dg;
    return q;
  }
  const Rational df = f.terms_.front().exponent;

  // Absolute exponent bounds on the quotient's known part:
  //   f = f0 + O(t^a):      f/g known below a - dg
  //   g = g0 + O(t^b):      f/g known below df + b - 2 dg
  std::optional<Rational> cap = std::nullopt;
  if (f.trunc_) cap = opt_min(cap, *f.trunc_ - dg);
  if (g.trunc_) cap = opt_min(cap, df + *g.trunc_ - dg - dg);
  // Non-terminating exact division stops at the default relative order.
  const Rational fallback_cap = df - dg + Puiseux::default_rel_order();

  Puiseux q;
  Puiseux r = f;
  while (true) {
    if (r.is_zero()) break;  // exact quotient (input caps still apply)
    if (r.is_indeterminate()) {
      cap = opt_min(cap, *r.trunc_ - dg);
      break;
    }
    Rational e = r.terms_.front().exponent - dg;
    if (cap && e >= *cap) break;
    if (!cap && e >= fallback_cap) {
      cap = fallback_cap;
      break;
    }
    Rational c = r.terms_.front().coefficient / g.terms_.front().coefficient;
    q.terms_.push_back(Puiseux::Term{e, c});
    r = r - Puiseux::monomial(c, e) * g;
  }
  q.trunc_ = cap;
  q.normalize();
  return q;
}

Puiseux Puiseux::inverse(const Rational& rel_order) const {
  if (is_zero())
    fail(ErrorCode::DivisionByZeroSeries, "inverse of the zero series");
  if (is_indeterminate())
    fail(ErrorCode::PrecisionExhausted, "inverse of an indeterminate series");
  Puiseux one = Puiseux::constant(Rational(1));
  if (terms_.size() == 1 && is_exact()) {
    // Monomial inverse is exact.
    return Puiseux::monomial(Rational(1) / terms_.front().coefficient,
                             -terms_.front().exponent);
  }
  Puiseux capped = *this;
  // Bound the work: the quotient loop stops at the requested relative order.
  Rational abs_cap = terms_.front().exponent + rel_order;
  if (!capped.trunc_ || *capped.trunc_ > abs_cap)
    capped.trunc_ = abs_cap;
  capped.normalize();
  return one / capped;
}

bool operator==(const Puiseux& f, const Puiseux& g) {
  if (f.trunc_.has_value() != g.trunc_.has_value()) return false;
  if (f.trunc_ && *f.trunc_ != *g.trunc_) return false;
  if (f.terms_.size() != g.terms_.size()) return false;
  for (size_t i = 0; i < f.terms_.size(); ++i)
    if (f.terms_[i].exponent != g.terms_[i].exponent ||
        f.terms_[i].coefficient != g.terms_[i].coefficient)
      return false;
  return true;
}

std::string Puiseux::str() const {
  std::ostringstream os;
  bool first = true;
  for (const Term& t : terms_) {
    Rational c = t.coefficient;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    Rational a = abs(c);
    bool unit = (a == 1);
    bool has_t = (t.exponent != 0);
    if (!has_t) {
      os << rational_str(a);
    } else {
      if (!unit) os << rational_str(a) << '*';
      os << 't';
      if (t.exponent != 1) {
        if (t.exponent.get_den() == 1 && t.exponent >= 0)
          os << '^' << rational_str(t.exponent);
        else
          os << "^(" << rational_str(t.exponent) << ')';
      }
    }
  }
  if (terms_.empty()) {
    if (is_exact()) return "0";
    first = false;
  }
  if (trunc_) {
    if (!first) os << " + ";
    os << "O(t^(" << rational_str(*trunc_) << "))";
  }
  return os.str();
}

Puiseux Puiseux::parse(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) fail(ErrorCode::ParseError, "empty series");

  std::vector<Term> terms;
  std::optional<Rational> trunc;
  size_t i = 0;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    }
    size_t start = i;
    int depth = 0;
    while (i < s.size()) {
      if (s[i] == '(') ++depth;
      if (s[i] == ')') --depth;
      if ((s[i] == '+' || s[i] == '-') && depth == 0 && i > start) break;
      ++i;
    }
    std::string term = s.substr(start, i - start);
    if (term.empty()) fail(ErrorCode::ParseError, "bad series: '" + text + "'");

    auto parse_exponent = [&](const std::string& e) -> Rational {
      if (e.size() >= 2 && e.front() == '(' && e.back() == ')')
        return parse_rational(e.substr(1, e.size() - 2));
      return parse_rational(e);
    };

    if (term.size() > 2 && term.compare(0, 2, "O(") == 0 &&
        term.back() == ')') {
      std::string inner = term.substr(2, term.size() - 3);  // t^...
      if (inner.compare(0, 2, "t^") != 0)
        fail(ErrorCode::ParseError, "bad truncation term: '" + term + "'");
      Rational order = parse_exponent(inner.substr(2));
      trunc = trunc ? std::min(*trunc, order) : order;
      continue;
    }

    size_t tpos = term.find('t');
    if (tpos == std::string::npos) {
      terms.push_back(Term{Rational(0), sign * parse_rational(term)});
      continue;
    }
    Rational coeff(1);
    if (tpos > 0) {
      std::string c = term.substr(0, tpos);
      if (c.back() == '*') c.pop_back();
      if (!c.empty()) coeff = parse_rational(c);
    }
    Rational expo(1);
    if (tpos + 1 < term.size()) {
      if (term[tpos + 1] != '^')
        fail(ErrorCode::ParseError, "bad term: '" + term + "'");
      expo = parse_exponent(term.substr(tpos + 2));
    }
    terms.push_back(Term{expo, sign * coeff});
  }
  return make(std::move(terms), trunc);
}

}  // namespace tropmat

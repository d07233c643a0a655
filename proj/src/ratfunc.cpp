#include "skein/ratfunc.hpp"

namespace skein {

namespace {

// Laurent polynomial with lowest exponent 0 built from an ordinary polynomial.
LaurentPoly as_laurent(const QPoly& p) { return LaurentPoly(0, p); }

}  // namespace

RatFunc RatFunc::normalized(LaurentPoly num, QPoly den) {
  if (den.is_zero_poly()) throw DivisionByZero();
  if (num.is_zero()) return RatFunc();
  // Move powers of A out of the denominator.
  LaurentPoly d = as_laurent(den);
  int shift = num.low() - d.low();
  QPoly n_body = num.body();
  QPoly d_body = d.body();
  if (d_body.size() > 1) {
    QPoly g = gcd(n_body, d_body);
    if (g.size() > 1) {
      n_body = exact_div(n_body, g);
      d_body = exact_div(d_body, g);
    }
  }
  const Rational lead = d_body.leading();
  if (lead != 1) {
    Rational inv = 1 / lead;
    n_body = n_body.scaled(inv);
    d_body = d_body.scaled(inv);
  }
  return RatFunc(LaurentPoly(shift, std::move(n_body)), std::move(d_body));
}

RatFunc RatFunc::fraction(const LaurentPoly& num, const LaurentPoly& den) {
  if (den.is_zero()) throw DivisionByZero();
  return normalized(LaurentPoly(num.low() - den.low(), num.body()), den.body());
}

RatFunc RatFunc::shifted(int k) const { return RatFunc(num_.shifted(k), den_); }

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw DivisionByZero();
  return normalized(LaurentPoly(-num_.low(), den_), num_.body());
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_); }

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.is_laurent() && b.is_laurent()) return RatFunc(a.num_ + b.num_);
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return RatFunc::normalized(a.num_ + b.num_, a.den_);
  QPoly g = gcd(a.den_, b.den_);
  QPoly ag = exact_div(a.den_, g);
  QPoly bg = exact_div(b.den_, g);
  LaurentPoly n = a.num_ * as_laurent(bg) + b.num_ * as_laurent(ag);
  return RatFunc::normalized(std::move(n), a.den_ * bg);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero()) return RatFunc();
  if (a.is_laurent() && b.is_laurent()) return RatFunc(a.num_ * b.num_);
  return RatFunc::normalized(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) throw DivisionByZero();
  if (a.is_zero()) return RatFunc();
  if (b.is_laurent() && b.num_.is_monomial()) {
    Rational c = 1 / b.num_.body().leading();
    return RatFunc(a.num_.scaled(c).shifted(-b.num_.low()), a.den_);
  }
  return a * b.inverse();
}

QPoly denominator_lcm(const std::vector<RatFunc>& xs) {
  QPoly l(1);
  for (const auto& x : xs) {
    if (!x.is_laurent()) l = lcm(l, x.den());
  }
  return l;
}

}  // namespace skein

#pragma once

#include <map>
#include <string>

#include "skein/rational.hpp"
#include "skein/upoly.hpp"

namespace skein {

using QPoly = UPoly<Rational>;

/// Laurent polynomial in A over Q, stored as A^low * body(A) with body(0) != 0.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(int c) : LaurentPoly(Rational(c)) {}
  LaurentPoly(const Rational& c) : body_(c) {}
  LaurentPoly(int low, QPoly body);

  static LaurentPoly monomial(const Rational& c, int exponent);

  /// Exponent -> coefficient, ascending, zeros omitted.
  std::map<int, Rational> terms() const;

  bool is_zero() const { return body_.is_zero_poly(); }
  friend bool is_zero(const LaurentPoly& p) { return p.is_zero(); }

  /// Lowest exponent; 0 for the zero polynomial.
  int low() const { return low_; }
  /// Highest exponent; 0 for the zero polynomial.
  int high() const;
  const QPoly& body() const { return body_; }

  /// +-A^k with exponent k, if this is a signed monomial.
  bool is_unit_monomial() const;
  bool is_monomial() const { return body_.size() == 1; }

  LaurentPoly shifted(int k) const;
  LaurentPoly scaled(const Rational& s) const;

  LaurentPoly operator-() const;
  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.low_ == b.low_ && a.body_ == b.body_;
  }

 private:
  void normalize();

  int low_ = 0;
  QPoly body_;
};

}  // namespace skein

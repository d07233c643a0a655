#pragma once

#include "skein/laurent.hpp"

namespace skein {

/// Element of Q(A).
///
/// Canonical form: value = num / den where den is an ordinary monic polynomial
/// with den(0) != 0, num is a Laurent polynomial carrying every power of A, and
/// gcd(num, den) = 1. Equal values have identical representations.
class RatFunc {
 public:
  RatFunc() = default;
  RatFunc(int c) : num_(c) {}
  RatFunc(const Rational& c) : num_(c) {}
  RatFunc(LaurentPoly num) : num_(std::move(num)) {}

  /// num / den for arbitrary Laurent polynomials; throws DivisionByZero if den == 0.
  static RatFunc fraction(const LaurentPoly& num, const LaurentPoly& den);
  static RatFunc a_power(int k) { return RatFunc(LaurentPoly::monomial(Rational(1), k)); }
  static RatFunc variable() { return a_power(1); }

  const LaurentPoly& num() const { return num_; }
  const QPoly& den() const { return den_; }
  bool is_laurent() const { return den_.size() == 1; }

  bool is_zero() const { return num_.is_zero(); }
  friend bool is_zero(const RatFunc& x) { return x.is_zero(); }

  /// Multiply by A^k.
  RatFunc shifted(int k) const;
  RatFunc inverse() const;

  RatFunc operator-() const;
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  RatFunc(LaurentPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) {}
  static RatFunc normalized(LaurentPoly num, QPoly den);

  LaurentPoly num_;
  QPoly den_ = QPoly(1);
};

/// Monic lcm of the denominators, as a polynomial in A.
QPoly denominator_lcm(const std::vector<RatFunc>& xs);

/// Monic gcd in Q(A)[x], computed as a primitive remainder sequence in Q[A][x]
/// after clearing denominators.
UPoly<RatFunc> gcd(const UPoly<RatFunc>& a, const UPoly<RatFunc>& b);

}  // namespace skein

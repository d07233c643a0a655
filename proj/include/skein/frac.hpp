#pragma once

#include <utility>
#include <vector>

#include "skein/upoly.hpp"

namespace skein {

/// Field of rational functions K(x) in one variable over an exact field K.
///
/// Canonical form: gcd(num, den) = 1 and den monic, so equality is structural.
template <class K>
class Frac {
 public:
  using Base = K;
  using Poly = UPoly<K>;

  Frac() = default;
  Frac(int c) : num_(K(c)) {}
  Frac(const Rational& c) : num_(K(c)) {}
  Frac(K c) : num_(std::move(c)) {}
  Frac(Poly num) : num_(std::move(num)) {}

  /// num / den; throws DivisionByZero if den == 0.
  static Frac fraction(Poly num, Poly den) { return normalized(std::move(num), std::move(den)); }
  static Frac variable() { return Frac(Poly::variable()); }
  static Frac a_power(int k)
    requires requires { K::a_power(k); }
  {
    return Frac(K::a_power(k));
  }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_polynomial() const { return den_.size() == 1; }

  bool is_zero() const { return num_.is_zero_poly(); }
  friend bool is_zero(const Frac& x) { return x.is_zero(); }

  /// Multiply by A^k (the quantum parameter lives in the base field).
  Frac shifted(int k) const
    requires requires(const K& c) { c.shifted(k); }
  {
    std::vector<K> c = num_.coefficients();
    for (auto& x : c) x = x.shifted(k);
    return Frac(Poly(std::move(c)), den_);
  }

  Frac inverse() const {
    if (is_zero()) throw DivisionByZero();
    return normalized(den_, num_);
  }

  Frac operator-() const { return Frac(-num_, den_); }

  friend Frac operator+(const Frac& a, const Frac& b) {
    if (a.is_polynomial() && b.is_polynomial()) return Frac(a.num_ + b.num_);
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return normalized(a.num_ + b.num_, a.den_);
    Poly g = gcd(a.den_, b.den_);
    Poly ag = exact_div(a.den_, g);
    Poly bg = exact_div(b.den_, g);
    return normalized(a.num_ * bg + b.num_ * ag, a.den_ * bg);
  }
  friend Frac operator-(const Frac& a, const Frac& b) { return a + (-b); }
  friend Frac operator*(const Frac& a, const Frac& b) {
    if (a.is_zero() || b.is_zero()) return Frac();
    if (a.is_polynomial() && b.is_polynomial()) return Frac(a.num_ * b.num_);
    Poly g1 = gcd(a.num_, b.den_);
    Poly g2 = gcd(b.num_, a.den_);
    return normalized(exact_div(a.num_, g1) * exact_div(b.num_, g2),
                      exact_div(a.den_, g2) * exact_div(b.den_, g1));
  }
  friend Frac operator/(const Frac& a, const Frac& b) {
    if (b.is_zero()) throw DivisionByZero();
    return a * b.inverse();
  }
  Frac& operator+=(const Frac& o) { return *this = *this + o; }
  Frac& operator-=(const Frac& o) { return *this = *this - o; }
  Frac& operator*=(const Frac& o) { return *this = *this * o; }
  Frac& operator/=(const Frac& o) { return *this = *this / o; }

  friend bool operator==(const Frac& a, const Frac& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

 private:
  Frac(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {}

  static Frac normalized(Poly num, Poly den) {
    if (den.is_zero_poly()) throw DivisionByZero();
    if (num.is_zero_poly()) return Frac();
    if (den.size() > 1) {
      Poly g = gcd(num, den);
      if (g.size() > 1) {
        num = exact_div(num, g);
        den = exact_div(den, g);
      }
    }
    if (!(den.leading() == K(1))) {
      K inv = K(1) / den.leading();
      num = num.scaled(inv);
      den = den.scaled(inv);
    }
    return Frac(std::move(num), std::move(den));
  }

  Poly num_;
  Poly den_ = Poly(K(1));
};

}  // namespace skein

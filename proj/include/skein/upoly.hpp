#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "skein/error.hpp"
#include "skein/rational.hpp"

namespace skein {

namespace detail {

/// Coefficients of the product of two nonempty dense polynomials.
template <class K>
std::vector<K> poly_product(const std::vector<K>& a, const std::vector<K>& b) {
  std::vector<K> r(a.size() + b.size() - 1, K(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (is_zero(b[j])) continue;
      r[i + j] = r[i + j] + a[i] * b[j];
    }
  }
  return r;
}

/// Over Q: clears denominators once and multiplies integer polynomials, by
/// Kronecker substitution when both factors are long.
std::vector<Rational> poly_product(const std::vector<Rational>& a, const std::vector<Rational>& b);

}  // namespace detail

/// Dense univariate polynomial over an exact field K, coefficients stored low to high.
///
/// K must provide +, -, *, /, unary -, ==, construction from int (0 and 1) and a
/// free function is_zero(const K&). The stored vector never ends in a zero, so the
/// zero polynomial is the empty vector and has no degree.
template <class K>
class UPoly {
 public:
  using Scalar = K;

  UPoly() = default;
  UPoly(int c) : UPoly(K(c)) {}
  UPoly(K c) {
    if (!is_zero(c)) coeffs_.push_back(std::move(c));
  }
  explicit UPoly(std::vector<K> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static UPoly variable() { return monomial(K(1), 1); }
  static UPoly monomial(K c, std::size_t k) {
    if (is_zero(c)) return {};
    std::vector<K> v(k + 1, K(0));
    v[k] = std::move(c);
    return UPoly(std::move(v));
  }

  /// Degree, or nullopt for the zero polynomial.
  std::optional<std::size_t> degree() const {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.size() - 1;
  }
  bool is_zero_poly() const { return coeffs_.empty(); }
  friend bool is_zero(const UPoly& p) { return p.coeffs_.empty(); }

  std::size_t size() const { return coeffs_.size(); }
  const std::vector<K>& coefficients() const { return coeffs_; }

  /// Coefficient of x^i; zero beyond the degree.
  K coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : K(0); }
  const K& leading() const { return coeffs_.back(); }

  bool is_constant() const { return coeffs_.size() <= 1; }

  UPoly operator-() const {
    UPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  UPoly& operator+=(const UPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), K(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] = coeffs_[i] + o.coeffs_[i];
    trim();
    return *this;
  }
  UPoly& operator-=(const UPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), K(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] = coeffs_[i] - o.coeffs_[i];
    trim();
    return *this;
  }
  UPoly& operator*=(const UPoly& o) { return *this = *this * o; }

  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.coeffs_.empty() || b.coeffs_.empty()) return {};
    return UPoly(detail::poly_product(a.coeffs_, b.coeffs_));
  }

  UPoly scaled(const K& s) const {
    if (is_zero(s)) return {};
    UPoly r = *this;
    for (auto& c : r.coeffs_) c = c * s;
    return r;
  }

  /// Multiply by x^k.
  UPoly shifted(std::size_t k) const {
    if (coeffs_.empty() || k == 0) return *this;
    std::vector<K> v(k, K(0));
    v.insert(v.end(), coeffs_.begin(), coeffs_.end());
    UPoly r;
    r.coeffs_ = std::move(v);
    return r;
  }

  UPoly monic() const {
    if (coeffs_.empty()) return {};
    K inv = K(1) / leading();
    return scaled(inv);
  }

  K evaluate(const K& x) const {
    K acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  friend bool operator==(const UPoly& a, const UPoly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim() {
    while (!coeffs_.empty() && is_zero(coeffs_.back())) coeffs_.pop_back();
  }

  std::vector<K> coeffs_;
};

/// Euclidean division a = q*b + r with deg r < deg b.
template <class K>
std::pair<UPoly<K>, UPoly<K>> divmod(const UPoly<K>& a, const UPoly<K>& b) {
  if (b.is_zero_poly()) throw DivisionByZero();
  const std::size_t db = *b.degree();
  if (a.size() <= db) return {UPoly<K>(), a};
  std::vector<K> rem = a.coefficients();
  std::vector<K> quo(a.size() - db, K(0));
  const K inv_lead = K(1) / b.leading();
  const auto& bc = b.coefficients();
  for (std::size_t k = rem.size(); k-- > db;) {
    if (is_zero(rem[k])) continue;
    K f = rem[k] * inv_lead;
    const std::size_t shift = k - db;
    for (std::size_t j = 0; j <= db; ++j) {
      if (!is_zero(bc[j])) rem[shift + j] = rem[shift + j] - f * bc[j];
    }
    quo[shift] = std::move(f);
  }
  rem.resize(db);
  return {UPoly<K>(std::move(quo)), UPoly<K>(std::move(rem))};
}

/// Quotient of an exact division; throws InvariantError if b does not divide a.
template <class K>
UPoly<K> exact_div(const UPoly<K>& a, const UPoly<K>& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero_poly()) throw InvariantError("inexact polynomial division");
  return q;
}

/// Monic gcd; gcd(0, 0) = 0.
template <class K>
UPoly<K> gcd(UPoly<K> a, UPoly<K> b) {
  while (!b.is_zero_poly()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

/// Monic lcm.
template <class K>
UPoly<K> lcm(const UPoly<K>& a, const UPoly<K>& b) {
  if (a.is_zero_poly() || b.is_zero_poly()) return {};
  return exact_div(a * b, gcd(a, b)).monic();
}

template <class K>
UPoly<K> pow(const UPoly<K>& p, unsigned n) {
  UPoly<K> r(K(1));
  for (unsigned i = 0; i < n; ++i) r = r * p;
  return r;
}

/// Monic gcd over Q by a primitive remainder sequence over Z; preferred over the
/// generic Euclidean gcd, whose rational coefficients grow quickly.
UPoly<Rational> gcd(const UPoly<Rational>& a, const UPoly<Rational>& b);

}  // namespace skein

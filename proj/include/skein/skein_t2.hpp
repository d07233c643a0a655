#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "skein/torus.hpp"
#include "skein/upoly.hpp"

namespace skein {

// ---------------------------------------------------------------------------
// Chebyshev polynomials T_0 = 2, T_1 = x, x T_n = T_{n+1} + T_{n-1}.

/// Integer coefficients of T_n, low to high (size n + 1).
std::vector<Integer> chebyshev(unsigned n);

/// x^n = sum_k t[k] T_k(x) + unit * 1, with k >= 1. The unit is kept apart from
/// T_0 = 2 so every coefficient stays integral.
struct ChebyshevExpansion {
  std::map<unsigned, Integer> t;
  Integer unit = 0;
  friend bool operator==(const ChebyshevExpansion&, const ChebyshevExpansion&) = default;
};

ChebyshevExpansion power_to_chebyshev(unsigned n);

// ---------------------------------------------------------------------------
// Skein algebra of the torus in the multicurve basis.

/// gamma^copies for a primitive direction gamma, or the empty multicurve.
class CurveMonomial {
 public:
  /// The empty multicurve (the algebra unit).
  CurveMonomial() = default;
  /// copies parallel copies of the primitive curve of direction dir; dir is
  /// brought to its canonical sign. copies = 0 gives the empty multicurve.
  CurveMonomial(ExponentPair dir, unsigned copies);

  static CurveMonomial empty() { return {}; }
  bool is_empty() const { return copies_ == 0; }
  const SymmetricClass& direction() const { return dir_; }
  unsigned copies() const { return copies_; }

  friend auto operator<=>(const CurveMonomial&, const CurveMonomial&) = default;

 private:
  SymmetricClass dir_;
  unsigned copies_ = 0;
};

std::string to_string(const CurveMonomial& c);

template <class K>
using SkeinElement = Combination<CurveMonomial, K>;

/// Frohman-Gelca isomorphism: (p,q)_T -> e~_{p,q}, empty curve -> unit.
template <class K>
SymmetricElement<K> phi(const SkeinElement<K>& x) {
  SymmetricElement<K> out;
  for (const auto& [mono, c] : x) {
    if (mono.is_empty()) {
      out.add(unit<K>(), c);
      continue;
    }
    const ExponentPair d = mono.direction().representative();
    const ChebyshevExpansion ex = power_to_chebyshev(mono.copies());
    for (const auto& [k, ck] : ex.t) out.add(SymmetricClass(d * static_cast<int>(k)), c * K(Rational(ck)));
    if (ex.unit != 0) out.add(unit<K>(), c * K(Rational(ex.unit)));
  }
  return out;
}

/// Inverse of phi: e~_{k d} = T_k(gamma_d) with d primitive, e~_{0,0} = 2 * empty.
template <class K>
SkeinElement<K> phi_inv(const SymmetricElement<K>& x) {
  SkeinElement<K> out;
  for (const auto& [cls, c] : x) {
    if (cls.is_origin()) {
      out.add(CurveMonomial::empty(), c * K(2));
      continue;
    }
    const ExponentPair a = cls.representative();
    const int g = lattice_gcd(a);
    const ExponentPair d{a.p / g, a.q / g};
    const std::vector<Integer> t = chebyshev(static_cast<unsigned>(g));
    for (std::size_t j = 0; j < t.size(); ++j)
      if (t[j] != 0) out.add(CurveMonomial(d, static_cast<unsigned>(j)), c * K(Rational(t[j])));
  }
  return out;
}

/// Peripheral polynomial sum_i a_i(m) l^i with a_i in K[m]; trailing zero
/// coefficients are trimmed so the leading a_i is nonzero.
template <class K>
class PeripheralPoly {
 public:
  PeripheralPoly() = default;
  explicit PeripheralPoly(std::vector<UPoly<K>> coeffs) : coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && coeffs_.back().is_zero_poly()) coeffs_.pop_back();
  }

  /// Degree in l, or nullopt for zero.
  std::optional<std::size_t> degree() const {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.size() - 1;
  }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<UPoly<K>>& coefficients() const { return coeffs_; }
  UPoly<K> coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : UPoly<K>(); }

  friend bool operator==(const PeripheralPoly&, const PeripheralPoly&) = default;

 private:
  std::vector<UPoly<K>> coeffs_;
};

namespace detail {

template <class K>
std::vector<SymmetricElement<K>> etilde_powers(const SymmetricElement<K>& x, std::size_t n) {
  std::vector<SymmetricElement<K>> out{unit<K>()};
  for (std::size_t i = 1; i <= n; ++i) out.push_back(etilde_mul(out.back(), x));
  return out;
}

}  // namespace detail

/// sum_i phi(a_i(m)) * phi(l)^i with phi(m) = e~_{0,1}, phi(l) = e~_{1,0};
/// a_i(m) is multiplied on the left of l^i.
template <class K>
SymmetricElement<K> peripheral_to_etilde(const PeripheralPoly<K>& poly) {
  SymmetricElement<K> out;
  if (poly.is_zero()) return out;
  std::size_t m_degree = 0;
  for (const auto& a : poly.coefficients())
    if (a.degree()) m_degree = std::max(m_degree, *a.degree());
  const auto l_pow = detail::etilde_powers(etilde<K>(1, 0), *poly.degree());
  const auto m_pow = detail::etilde_powers(etilde<K>(0, 1), m_degree);
  for (std::size_t i = 0; i < poly.coefficients().size(); ++i) {
    const auto& a = poly.coefficients()[i];
    if (a.is_zero_poly()) continue;
    SymmetricElement<K> left;
    for (std::size_t j = 0; j < a.size(); ++j) left.add(m_pow[j], a.coeff(j));
    out += etilde_mul(left, l_pow[i]);
  }
  return out;
}

}  // namespace skein

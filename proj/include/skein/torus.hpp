#pragma once

#include <compare>
#include <cstdlib>
#include <map>
#include <numeric>
#include <ostream>
#include <string>
#include <utility>

#include "skein/error.hpp"
#include "skein/field.hpp"

namespace skein {

/// Lattice point (p, q), standing for the curve l^p m^q of slope q/p.
struct ExponentPair {
  int p = 0;
  int q = 0;

  friend auto operator<=>(const ExponentPair&, const ExponentPair&) = default;
  ExponentPair operator+(const ExponentPair& o) const { return {p + o.p, q + o.q}; }
  ExponentPair operator-(const ExponentPair& o) const { return {p - o.p, q - o.q}; }
  ExponentPair operator-() const { return {-p, -q}; }
  ExponentPair operator*(int k) const { return {k * p, k * q}; }
  bool is_origin() const { return p == 0 && q == 0; }
};

/// Determinant alpha*nu - beta*mu: the exponent of A in e_{a} e_{b}.
inline int twist(const ExponentPair& a, const ExponentPair& b) { return a.p * b.q - a.q * b.p; }

inline int lattice_gcd(const ExponentPair& a) { return std::gcd(std::abs(a.p), std::abs(a.q)); }

inline std::string to_string(const ExponentPair& a) {
  return "(" + std::to_string(a.p) + "," + std::to_string(a.q) + ")";
}
inline std::ostream& operator<<(std::ostream& os, const ExponentPair& a) { return os << to_string(a); }

/// A lattice point modulo (p, q) ~ (-p, -q), stored by its canonical
/// representative: p > 0, or p = 0 and q >= 0.
class SymmetricClass {
 public:
  SymmetricClass() = default;
  SymmetricClass(ExponentPair a) : rep_(canonical(a)) {}
  SymmetricClass(int p, int q) : SymmetricClass(ExponentPair{p, q}) {}

  static bool is_canonical(const ExponentPair& a) { return a.p > 0 || (a.p == 0 && a.q >= 0); }
  static ExponentPair canonical(const ExponentPair& a) { return is_canonical(a) ? a : -a; }

  const ExponentPair& representative() const { return rep_; }
  int p() const { return rep_.p; }
  int q() const { return rep_.q; }
  bool is_origin() const { return rep_.is_origin(); }

  friend auto operator<=>(const SymmetricClass&, const SymmetricClass&) = default;

 private:
  ExponentPair rep_;
};

inline std::string to_string(const SymmetricClass& c) { return to_string(c.representative()); }
inline std::ostream& operator<<(std::ostream& os, const SymmetricClass& c) { return os << to_string(c); }

namespace detail {
// Outside the class so that the member is_zero() does not hide the scalar overloads.
template <class K>
bool scalar_is_zero(const K& c) {
  return is_zero(c);
}
}  // namespace detail

/// Finite linear combination of basis vectors indexed by Key, with no zero
/// coefficients stored. Keys iterate in ascending order.
template <class Key, class K>
class Combination {
 public:
  using key_type = Key;
  using Scalar = K;
  using Map = std::map<Key, K>;

  Combination() = default;
  Combination(const Key& key, K c) { add(key, std::move(c)); }

  static Combination basis(const Key& key) { return Combination(key, K(1)); }

  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  friend bool is_zero(const Combination& x) { return x.is_zero(); }
  std::size_t size() const { return terms_.size(); }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  K coeff(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? K(0) : it->second;
  }

  /// Adds c to the coefficient of key, dropping the entry if it cancels.
  void add(const Key& key, const K& c) {
    if (detail::scalar_is_zero(c)) return;
    auto [it, inserted] = terms_.emplace(key, c);
    if (!inserted) {
      it->second += c;
      if (detail::scalar_is_zero(it->second)) terms_.erase(it);
    }
  }

  void add(const Combination& o, const K& s = K(1)) {
    if (detail::scalar_is_zero(s)) return;
    for (const auto& [key, c] : o.terms_) add(key, c * s);
  }

  Combination scaled(const K& s) const {
    Combination r;
    if (detail::scalar_is_zero(s)) return r;
    for (const auto& [key, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), key, c * s);
    return r;
  }

  Combination operator-() const { return scaled(K(-1)); }
  Combination& operator+=(const Combination& o) {
    add(o);
    return *this;
  }
  Combination& operator-=(const Combination& o) {
    add(o, K(-1));
    return *this;
  }
  friend Combination operator+(Combination a, const Combination& b) { return a += b; }
  friend Combination operator-(Combination a, const Combination& b) { return a -= b; }
  friend Combination operator*(const K& s, const Combination& x) { return x.scaled(s); }

  friend bool operator==(const Combination&, const Combination&) = default;

 private:
  Map terms_;
};

/// Element of the quantum torus in the basis e_{a,b}.
template <class K>
using TorusElement = Combination<ExponentPair, K>;

/// Element of the theta-invariant subalgebra in the basis e~_{a,b} = e_{a,b} + e_{-a,-b}.
/// The class (0,0) stands for e~_{0,0} = 2 e_{0,0}.
template <class K>
using SymmetricElement = Combination<SymmetricClass, K>;

template <class K>
TorusElement<K> e(int p, int q) {
  return TorusElement<K>::basis({p, q});
}

template <class K>
SymmetricElement<K> etilde(int p, int q) {
  return SymmetricElement<K>::basis(SymmetricClass(p, q));
}

/// The algebra unit e_{0,0} = e~_{0,0} / 2.
template <class K>
SymmetricElement<K> unit() {
  return SymmetricElement<K>(SymmetricClass(0, 0), K(1) / K(2));
}

/// e_{a} e_{b} = A^{twist(a,b)} e_{a+b}, extended bilinearly.
template <class K>
TorusElement<K> e_mul(const TorusElement<K>& x, const TorusElement<K>& y) {
  TorusElement<K> out;
  for (const auto& [a, ca] : x)
    for (const auto& [b, cb] : y) out.add(a + b, (ca * cb).shifted(twist(a, b)));
  return out;
}

/// e_{a} -> e_{-a}.
template <class K>
TorusElement<K> theta(const TorusElement<K>& x) {
  TorusElement<K> out;
  for (const auto& [a, c] : x) out.add(-a, c);
  return out;
}

/// The e-basis expansion of x: e~_{a} -> e_{a} + e_{-a}.
template <class K>
TorusElement<K> expand(const SymmetricElement<K>& x) {
  TorusElement<K> out;
  for (const auto& [cls, c] : x) {
    const ExponentPair& a = cls.representative();
    out.add(a, c);
    out.add(-a, c);
  }
  return out;
}

/// Inverse of expand on theta-invariant elements.
template <class K>
SymmetricElement<K> symmetrize(const TorusElement<K>& x) {
  SymmetricElement<K> out;
  for (const auto& [a, c] : x) {
    if (x.coeff(-a) != c)
      throw PreconditionError("symmetrize: element is not theta-invariant at index " + to_string(a));
    if (!SymmetricClass::is_canonical(a)) continue;
    out.add(SymmetricClass(a), a.is_origin() ? c / K(2) : c);
  }
  return out;
}

/// e~_{a} e~_{b} = A^{twist(a,b)} e~_{a+b} + A^{-twist(a,b)} e~_{a-b}, extended bilinearly.
template <class K>
SymmetricElement<K> etilde_mul(const SymmetricElement<K>& x, const SymmetricElement<K>& y) {
  SymmetricElement<K> out;
  for (const auto& [ca, xa] : x) {
    const ExponentPair& a = ca.representative();
    for (const auto& [cb, yb] : y) {
      const ExponentPair& b = cb.representative();
      const K c = xa * yb;
      const int t = twist(a, b);
      out.add(SymmetricClass(a + b), c.shifted(t));
      out.add(SymmetricClass(a - b), c.shifted(-t));
    }
  }
  return out;
}

}  // namespace skein

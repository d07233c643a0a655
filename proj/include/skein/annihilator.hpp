#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stop_token>
#include <string>
#include <vector>

#include "skein/lattice.hpp"
#include "skein/matrix.hpp"
#include "skein/skein_t2.hpp"

namespace skein {

/// Scalars of the form +-A^k.
inline bool is_signed_a_monomial(const RatFunc& x) {
  if (!x.is_laurent() || !x.num().is_monomial()) return false;
  const Rational& c = x.num().body().leading();
  return c == 1 || c == -1;
}

inline bool is_signed_a_monomial(const LocalizedField& x) {
  return x.is_polynomial() && x.num().is_constant() && !x.is_zero() && is_signed_a_monomial(x.num().coeff(0));
}

/// A theta-symmetric relation sum_{(a,b) in Z^2} c_{a,b} e_{a,b} with
/// c_{a,b} = c_{-a,-b}, stored once per class. The class (0,0) holds c_{0,0},
/// the coefficient of e_{0,0}; all other classes hold the common coefficient of
/// e_{a,b} and e_{-a,-b}, which is also their e~ coefficient.
template <class K>
class AnnihilatingRelation {
 public:
  using Terms = std::map<SymmetricClass, K>;

  /// Throws PreconditionError if every coefficient is zero.
  static AnnihilatingRelation from_terms(const Terms& terms) {
    AnnihilatingRelation r;
    for (const auto& [cls, c] : terms)
      if (!is_zero(c)) r.terms_.emplace(cls, c);
    if (r.terms_.empty()) throw PreconditionError("relation is zero");
    r.polygon_ = NewtonPolygon::hull(r.support_points());
    return r;
  }

  static AnnihilatingRelation from_symmetric(const SymmetricElement<K>& x) {
    Terms t;
    for (const auto& [cls, c] : x) t.emplace(cls, cls.is_origin() ? c * K(2) : c);
    return from_terms(t);
  }

  const Terms& terms() const { return terms_; }
  const NewtonPolygon& polygon() const { return polygon_; }

  /// c_{a,b} for any lattice point.
  K coeff(const ExponentPair& a) const {
    auto it = terms_.find(SymmetricClass(a));
    return it == terms_.end() ? K(0) : it->second;
  }

  SymmetricElement<K> as_symmetric() const {
    SymmetricElement<K> out;
    for (const auto& [cls, c] : terms_) out.add(cls, cls.is_origin() ? c / K(2) : c);
    return out;
  }

  /// Every lattice point (a,b) with c_{a,b} != 0, in ascending order.
  std::vector<ExponentPair> support_points() const {
    std::set<ExponentPair> pts;
    for (const auto& [cls, c] : terms_) {
      pts.insert(cls.representative());
      pts.insert(-cls.representative());
    }
    return {pts.begin(), pts.end()};
  }

  friend bool operator==(const AnnihilatingRelation& a, const AnnihilatingRelation& b) { return a.terms_ == b.terms_; }

 private:
  Terms terms_;
  NewtonPolygon polygon_ = NewtonPolygon::hull({{0, 0}});
};

/// One entry of an externally supplied relation document.
template <class K>
struct RelationTerm {
  ExponentPair index;
  K coeff;
};

/// Builds a relation from raw entries: each index must be a canonical class
/// representative and appear once; zero coefficients are dropped.
template <class K>
AnnihilatingRelation<K> validate_relation(const std::vector<RelationTerm<K>>& raw) {
  typename AnnihilatingRelation<K>::Terms terms;
  for (const auto& t : raw) {
    if (!SymmetricClass::is_canonical(t.index))
      throw PreconditionError("relation index " + to_string(t.index) + " is not a canonical class representative");
    if (!terms.emplace(SymmetricClass(t.index), t.coeff).second)
      throw PreconditionError("relation index " + to_string(t.index) + " appears twice");
  }
  return AnnihilatingRelation<K>::from_terms(terms);
}

/// sum_{(a,b)} c_{a,b} A^{b mu - a nu} e~_{a+mu, b+nu}: the relation multiplied
/// on the left by e~_{mu,nu}.
template <class K>
SymmetricElement<K> translate_relation(const AnnihilatingRelation<K>& r, const ExponentPair& shift) {
  SymmetricElement<K> out;
  for (const auto& a : r.support_points()) out.add(SymmetricClass(a + shift), r.coeff(a).shifted(twist(shift, a)));
  return out;
}

struct VertexCheck {
  bool ok = true;
  std::vector<ExponentPair> failing;
};

/// Whether every vertex coefficient of the polygon is +-A^k.
template <class K>
VertexCheck monomial_vertex_check(const AnnihilatingRelation<K>& r) {
  VertexCheck out;
  for (const auto& v : r.polygon().vertices())
    if (!is_signed_a_monomial(r.coeff(v))) out.failing.push_back(v);
  out.ok = out.failing.empty();
  return out;
}

/// Free module over K[m] with generators f_1..f_d; the longitude acts by
/// l f_j = sum_i L(i, j) f_i.
template <class K>
struct KnotPresentation {
  std::vector<std::string> generators;
  Matrix<UPoly<K>> longitude;

  void validate() const {
    if (longitude.rows() != longitude.cols())
      throw PreconditionError("longitude action is not a square matrix");
    if (static_cast<std::size_t>(longitude.rows()) != generators.size())
      throw PreconditionError("longitude action has dimension " + std::to_string(longitude.rows()) + " but there are " +
                              std::to_string(generators.size()) + " generators");
  }

  Vector<UPoly<K>> generator_vector(std::size_t index) const {
    if (index >= generators.size()) throw PreconditionError("generator index out of range");
    Vector<UPoly<K>> v = Vector<UPoly<K>>::Constant(longitude.rows(), UPoly<K>());
    v(static_cast<Eigen::Index>(index)) = UPoly<K>(K(1));
    return v;
  }
};

template <class K>
struct Annihilator {
  PeripheralPoly<K> peripheral;
  AnnihilatingRelation<K> relation;
};

namespace detail {

inline void check_stop(const std::stop_token& stop) {
  if (stop.stop_requested()) throw Cancelled();
}

/// Determinant over K[m] by fraction-free (Bareiss) elimination.
template <class K>
UPoly<K> bareiss_det(Matrix<UPoly<K>> a, const std::stop_token& stop) {
  const Eigen::Index n = a.rows();
  if (n == 0) return UPoly<K>(K(1));
  UPoly<K> prev(K(1));
  bool negate = false;
  for (Eigen::Index k = 0; k < n - 1; ++k) {
    check_stop(stop);
    if (a(k, k).is_zero_poly()) {
      Eigen::Index r = k + 1;
      while (r < n && a(r, k).is_zero_poly()) ++r;
      if (r == n) return {};
      a.row(k).swap(a.row(r));
      negate = !negate;
    }
    for (Eigen::Index i = k + 1; i < n; ++i)
      for (Eigen::Index j = k + 1; j < n; ++j) a(i, j) = exact_div(a(k, k) * a(i, j) - a(i, k) * a(k, j), prev);
    prev = a(k, k);
  }
  return negate ? -a(n - 1, n - 1) : a(n - 1, n - 1);
}

/// Rows of a pivot for each column under fraction-free elimination, stopping at
/// the first column without a pivot (that column depends on the earlier ones).
template <class K>
std::vector<Eigen::Index> pivot_rows(Matrix<UPoly<K>> a, const std::stop_token& stop) {
  const Eigen::Index n = a.rows(), cols = a.cols();
  std::vector<Eigen::Index> row_of(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) row_of[static_cast<std::size_t>(i)] = i;
  std::vector<Eigen::Index> pivots;
  UPoly<K> prev(K(1));
  for (Eigen::Index c = 0; c < cols; ++c) {
    check_stop(stop);
    const Eigen::Index k = static_cast<Eigen::Index>(pivots.size());
    Eigen::Index r = k;
    while (r < n && a(r, c).is_zero_poly()) ++r;
    if (r == n) break;
    if (r != k) {
      a.row(k).swap(a.row(r));
      std::swap(row_of[static_cast<std::size_t>(k)], row_of[static_cast<std::size_t>(r)]);
    }
    pivots.push_back(row_of[static_cast<std::size_t>(k)]);
    for (Eigen::Index i = k + 1; i < n; ++i)
      for (Eigen::Index j = c + 1; j < cols; ++j) a(i, j) = exact_div(a(k, c) * a(i, j) - a(i, c) * a(k, j), prev);
    for (Eigen::Index i = k + 1; i < n; ++i) a(i, c) = UPoly<K>();
    prev = a(k, c);
  }
  return pivots;
}

}  // namespace detail

/// Minimal annihilating polynomial Q = sum_i a_i(m) l^i of v under L: the first
/// linear dependence of the Krylov sequence v, Lv, L^2 v, ... over K(m), found
/// by Cramer's rule with fraction-free determinants, then normalised so the a_i
/// are coprime in K[m] with primitive integer coefficients.
template <class K>
Annihilator<K> compute_annihilator(const Matrix<UPoly<K>>& L, const Vector<UPoly<K>>& v,
                                   std::stop_token stop = {}) {
  if (L.rows() != L.cols() || L.rows() != v.rows()) throw PreconditionError("compute_annihilator: dimension mismatch");
  if (is_zero_matrix(v)) throw ZeroGenerator("target vector is zero");
  const Eigen::Index n = L.rows();
  Matrix<UPoly<K>> krylov(n, 1);
  krylov.col(0) = v;
  std::vector<UPoly<K>> a;
  for (Eigen::Index j = 1; j <= n; ++j) {
    detail::check_stop(stop);
    krylov.conservativeResize(Eigen::NoChange, j + 1);
    krylov.col(j) = L * krylov.col(j - 1);
    const auto pivots = detail::pivot_rows<K>(krylov, stop);
    if (static_cast<Eigen::Index>(pivots.size()) == j + 1) continue;
    // w_j = sum_i x_i w_i on the pivot rows, x_i = det(B_i) / det(B).
    Matrix<UPoly<K>> b(j, j);
    for (Eigen::Index r = 0; r < j; ++r) b.row(r) = krylov.row(pivots[static_cast<std::size_t>(r)]).head(j);
    a.assign(static_cast<std::size_t>(j) + 1, UPoly<K>());
    a[static_cast<std::size_t>(j)] = detail::bareiss_det<K>(b, stop);
    for (Eigen::Index i = 0; i < j; ++i) {
      Matrix<UPoly<K>> bi = b;
      for (Eigen::Index r = 0; r < j; ++r) bi(r, i) = krylov(pivots[static_cast<std::size_t>(r)], j);
      a[static_cast<std::size_t>(i)] = -detail::bareiss_det<K>(bi, stop);
    }
    break;
  }
  if (a.empty()) throw InvariantError("Krylov sequence has no dependence within the module rank");

  // Smallest first: the content usually is the smallest a_i, and then every
  // later step is a single exact pseudo-division.
  std::vector<const UPoly<K>*> by_degree;
  for (const auto& ai : a)
    if (!ai.is_zero_poly()) by_degree.push_back(&ai);
  std::stable_sort(by_degree.begin(), by_degree.end(),
                   [](const UPoly<K>* x, const UPoly<K>* y) { return *x->degree() < *y->degree(); });
  UPoly<K> g;
  for (const auto* ai : by_degree) {
    g = gcd(g, *ai);
    if (g.is_constant()) break;
  }
  std::vector<K> flat;
  for (auto& ai : a) {
    ai = exact_div(ai, g);
    flat.insert(flat.end(), ai.coefficients().begin(), ai.coefficients().end());
  }
  const K s = primitive_scale(flat);
  for (auto& ai : a) ai = ai.scaled(s);

  Annihilator<K> out;
  out.peripheral = PeripheralPoly<K>(std::move(a));
  out.relation = AnnihilatingRelation<K>::from_symmetric(peripheral_to_etilde(out.peripheral));
  return out;
}

template <class K>
Annihilator<K> compute_annihilator(const KnotPresentation<K>& pres, std::size_t target, std::stop_token stop = {}) {
  pres.validate();
  return compute_annihilator(pres.longitude, pres.generator_vector(target), stop);
}

}  // namespace skein

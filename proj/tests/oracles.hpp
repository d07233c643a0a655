#pragma once

// Independent reference computations shared by the unit and acceptance suites:
// recurrences, box scans and plain Gaussian elimination, none of which reuse the
// code paths they check.

#include <cstdlib>
#include <set>

#include "skein/annihilator.hpp"
#include "skein/filling.hpp"
#include "support.hpp"

namespace skein::testing {

/// T_k(x) from T_0 = 2, T_1 = x, T_{k+1} = x T_k - T_{k-1}.
template <class K>
K chebyshev_at(unsigned k, const K& x) {
  K prev(2), cur = x;
  if (k == 0) return prev;
  for (unsigned i = 1; i < k; ++i) {
    K next = x * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

/// Classes with |lambda| <= M and epsilon in {0,1}, by scanning a box. The box
/// half-width (M + 1)(|eps|_1) + |lambda|_1 contains every such point because
/// (lambda; epsilon) is unimodular.
inline std::set<SymmetricClass> brute_force_band(const BandPair& bp) {
  const int bound = (bp.M + 1) * (std::abs(bp.eps.p) + std::abs(bp.eps.q)) + std::abs(bp.lam.p) + std::abs(bp.lam.q);
  std::set<SymmetricClass> out;
  for (int x = -bound; x <= bound; ++x)
    for (int y = -bound; y <= bound; ++y) {
      const int e = bp.eps.p * x + bp.eps.q * y;
      const int l = bp.lam.p * x + bp.lam.q * y;
      if ((e == 0 || e == 1) && std::abs(l) <= bp.M) out.insert(SymmetricClass(x, y));
    }
  return out;
}

/// Random relation with support in [-2, 2]^2. With monomial_vertices, every
/// vertex coefficient is +-A^k, as for relations passing the Z[A^{+-1}]
/// criterion; reductions then stay Laurent.
template <class K>
AnnihilatingRelation<K> random_relation(Rng& rng, bool monomial_vertices = true) {
  typename AnnihilatingRelation<K>::Terms t;
  const int n = uniform(rng, 1, 4);
  for (int i = 0; i < n; ++i) {
    const SymmetricClass cls(uniform(rng, -2, 2), uniform(rng, -2, 2));
    K c = random_scalar<K>(rng);
    if (is_zero(c)) c = K(1);
    t[cls] = c;
  }
  if (t.size() == 1 && t.begin()->first.is_origin()) t[SymmetricClass(1, 0)] = K(1);
  auto r = AnnihilatingRelation<K>::from_terms(t);
  if (!monomial_vertices) return r;
  for (const auto& v : r.polygon().vertices())
    t[SymmetricClass(v)] = K(uniform(rng, 0, 1) == 0 ? 1 : -1).shifted(uniform(rng, -3, 3));
  return AnnihilatingRelation<K>::from_terms(t);
}

inline FillingSlope random_admissible_slope(Rng& rng, const std::set<Slope>& excluded) {
  for (;;) {
    const FillingSlope slope = FillingSlope::of_direction(random_primitive(rng, 3));
    if (!excluded.contains(slope)) return slope;
  }
}

template <class F>
Matrix<UPoly<F>> random_longitude(Rng& rng, int d, int degree) {
  Matrix<UPoly<F>> L(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      std::vector<F> cs;
      const int deg = uniform(rng, 0, degree);
      for (int k = 0; k <= deg; ++k) cs.push_back(uniform(rng, 0, 2) == 0 ? F(0) : random_scalar<F>(rng));
      L(i, j) = UPoly<F>(std::move(cs));
    }
  return L;
}

template <class F>
KnotPresentation<F> free_presentation(Matrix<UPoly<F>> L) {
  KnotPresentation<F> pres;
  for (Eigen::Index i = 0; i < L.rows(); ++i) pres.generators.push_back("f" + std::to_string(i + 1));
  pres.longitude = std::move(L);
  return pres;
}

/// Rank over the field by plain Gaussian elimination with division.
template <class F>
long rank(Matrix<F> a) {
  long r = 0;
  for (Eigen::Index c = 0; c < a.cols() && r < a.rows(); ++c) {
    Eigen::Index p = r;
    while (p < a.rows() && is_zero(a(p, c))) ++p;
    if (p == a.rows()) continue;
    a.row(r).swap(a.row(p));
    for (Eigen::Index i = r + 1; i < a.rows(); ++i) {
      if (is_zero(a(i, c))) continue;
      F f = a(i, c) / a(r, c);
      for (Eigen::Index j = c; j < a.cols(); ++j) a(i, j) = a(i, j) - f * a(r, j);
    }
    ++r;
  }
  return r;
}

struct AnnihilatorCheck {
  /// Q(L) v = 0.
  bool annihilates = false;
  /// v, Lv, ..., L^{deg Q - 1} v are independent over K(m).
  bool minimal = false;
};

template <class F>
AnnihilatorCheck check_annihilator(const Matrix<UPoly<F>>& L, const Vector<UPoly<F>>& v, const Annihilator<F>& ann) {
  using Fm = Frac<F>;
  const auto& a = ann.peripheral.coefficients();
  std::vector<Fm> cs;
  for (const auto& ai : a) cs.push_back(Fm(ai));
  const Matrix<Fm> Lf = to_fraction_field<F>(L);
  const Matrix<Fm> vf = to_fraction_field<F>(Matrix<UPoly<F>>(v));
  AnnihilatorCheck out;
  out.annihilates = is_zero_matrix(poly_eval_matrix(UPoly<Fm>(cs), Lf) * vf);
  const long deg = static_cast<long>(a.size()) - 1;
  Matrix<Fm> krylov(L.rows(), deg);
  Matrix<Fm> w = vf;
  for (long i = 0; i < deg; ++i) {
    krylov.col(i) = w.col(0);
    w = Lf * w;
  }
  out.minimal = rank(krylov) == deg;
  return out;
}

}  // namespace skein::testing

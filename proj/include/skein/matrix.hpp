#pragma once

#include <Eigen/Core>

#include "skein/field.hpp"

// Eigen only needs arithmetic operators from an exact scalar; the cost figures
// steer it away from any vectorized or blocked kernels.
namespace skein::detail {

template <class T>
struct ExactNumTraits : Eigen::GenericNumTraits<T> {
  using Real = T;
  using NonInteger = T;
  using Nested = T;
  using Literal = T;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 50,
    MulCost = 100,
  };
};

}  // namespace skein::detail

namespace Eigen {

template <>
struct NumTraits<skein::RatFunc> : skein::detail::ExactNumTraits<skein::RatFunc> {};
template <class K>
struct NumTraits<skein::Frac<K>> : skein::detail::ExactNumTraits<skein::Frac<K>> {};
template <class K>
struct NumTraits<skein::UPoly<K>> : skein::detail::ExactNumTraits<skein::UPoly<K>> {};

}  // namespace Eigen

namespace skein {

template <class T>
using Matrix = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>;
template <class T>
using Vector = Eigen::Matrix<T, Eigen::Dynamic, 1>;

template <class Derived>
bool is_zero_matrix(const Eigen::MatrixBase<Derived>& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (!is_zero(m(i, j))) return false;
  return true;
}

/// p(X) = sum c_i X^i with the constant term times the identity; Horner evaluation.
template <class K>
Matrix<K> poly_eval_matrix(const UPoly<K>& p, const Matrix<K>& x) {
  if (x.rows() != x.cols()) throw PreconditionError("poly_eval_matrix: matrix is not square");
  const Eigen::Index n = x.rows();
  Matrix<K> acc = Matrix<K>::Constant(n, n, K(0));
  const auto& cs = p.coefficients();
  for (auto it = cs.rbegin(); it != cs.rend(); ++it) {
    Matrix<K> next = acc * x;
    for (Eigen::Index i = 0; i < n; ++i) next(i, i) += *it;
    acc = std::move(next);
  }
  return acc;
}

/// Entrywise embedding of a polynomial matrix into matrices over the fraction field.
template <class K>
Matrix<Frac<K>> to_fraction_field(const Matrix<UPoly<K>>& m) {
  Matrix<Frac<K>> out(m.rows(), m.cols());
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i) out(i, j) = Frac<K>(m(i, j));
  return out;
}

}  // namespace skein

#pragma once

#include <concepts>
#include <string_view>
#include <vector>

#include "skein/frac.hpp"
#include "skein/ratfunc.hpp"

namespace skein {

/// Coefficient field of a computation: Q(A), or Q(A)(m2) for localized skein modules.
enum class FieldTag { Base, Extended };

/// Q(A)(m2).
using LocalizedField = Frac<RatFunc>;

/// Exact field containing Q(A): the interface every algebra module is generic over.
template <class K>
concept ExactField = std::regular<K> && requires(const K& a, const K& b, int k) {
  K(k);
  { a + b } -> std::same_as<K>;
  { a - b } -> std::same_as<K>;
  { a * b } -> std::same_as<K>;
  { a / b } -> std::same_as<K>;
  { -a } -> std::same_as<K>;
  { a.inverse() } -> std::same_as<K>;
  { is_zero(a) } -> std::same_as<bool>;
  { K::a_power(k) } -> std::same_as<K>;
  { a.shifted(k) } -> std::same_as<K>;
};

template <class K>
struct FieldTraits;

template <>
struct FieldTraits<RatFunc> {
  static constexpr FieldTag tag = FieldTag::Base;
  static constexpr std::string_view name = "QA";
};

template <>
struct FieldTraits<LocalizedField> {
  static constexpr FieldTag tag = FieldTag::Extended;
  static constexpr std::string_view name = "QAm2";
};

static_assert(ExactField<RatFunc>);
static_assert(ExactField<LocalizedField>);

/// Nonzero s such that every s*x is a polynomial in A with integer coefficients,
/// the family has no common polynomial factor, unit integer content, and the
/// leading coefficient of the last nonzero entry is positive.
RatFunc primitive_scale(const std::vector<RatFunc>& xs);

/// Same normalisation one level up: clears denominators in x, removes the monic
/// gcd of the numerators, then normalises the resulting base-field coefficients.
template <class K>
Frac<K> primitive_scale(const std::vector<Frac<K>>& xs) {
  using Poly = UPoly<K>;
  Poly l(K(1));
  for (const auto& x : xs)
    if (!x.is_polynomial()) l = lcm(l, x.den());
  std::vector<Poly> ys;
  Poly g;
  for (const auto& x : xs) {
    Poly y = exact_div(x.num() * l, x.den());
    g = gcd(g, y);
    ys.push_back(std::move(y));
  }
  if (g.is_zero_poly()) return Frac<K>(1);
  std::vector<K> flat;
  for (const auto& y : ys) {
    Poly reduced = exact_div(y, g);
    for (const auto& c : reduced.coefficients()) flat.push_back(c);
  }
  return Frac<K>::fraction(l, g) * Frac<K>(primitive_scale(flat));
}

}  // namespace skein

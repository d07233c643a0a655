#pragma once

#include <map>
#include <ostream>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <type_traits>
#include <vector>

#include "skein/field.hpp"

namespace skein {

// Polynomial expression grammar shared by every document format:
//
//   top      := group ('/' group)?
//   group    := '(' expr ')' | expr
//   expr     := ('+'|'-')? term (('+'|'-') term)*
//   term     := factor ('*' factor)*
//   factor   := rational | var ('^' signed-int)?
//   rational := int ('/' posint)?
//   var      := 'A' | 'm' | 'm2'
//
// Whitespace is insignificant. 'A' is the quantum parameter, 'm' the meridian
// (polynomial variable of presentations) and 'm2' the localizing variable.

struct VarSet {
  bool a = true;
  bool m = false;
  bool m2 = false;
};

/// Exponents of A, m, m2; ordered by (m, m2, A) so printing groups by meridian degree.
struct Exponents {
  int a = 0;
  int m = 0;
  int m2 = 0;
  friend bool operator<(const Exponents& x, const Exponents& y) {
    return std::tie(x.m, x.m2, x.a) < std::tie(y.m, y.m2, y.a);
  }
  friend bool operator==(const Exponents&, const Exponents&) = default;
  Exponents operator+(const Exponents& o) const { return {a + o.a, m + o.m, m2 + o.m2}; }
};

/// Sparse Laurent polynomial in A, m, m2 with rational coefficients; no zero entries.
using Multinomial = std::map<Exponents, Rational>;

struct Expression {
  Multinomial num;
  std::optional<Multinomial> den;
};

Expression parse_expression(std::string_view text, VarSet allowed);
std::string to_string(const Multinomial& p);

// Scalars.
template <class K>
K parse_scalar(std::string_view text);
template <>
RatFunc parse_scalar<RatFunc>(std::string_view text);
template <>
LocalizedField parse_scalar<LocalizedField>(std::string_view text);

std::string to_string(const LaurentPoly& p);
std::string to_string(const RatFunc& x);
std::string to_string(const LocalizedField& x);

inline std::ostream& operator<<(std::ostream& os, const RatFunc& x) { return os << to_string(x); }
inline std::ostream& operator<<(std::ostream& os, const LocalizedField& x) { return os << to_string(x); }

// Conversions between field elements and multinomials.
Multinomial to_multinomial(const RatFunc& x);         // requires x Laurent
Multinomial to_multinomial(const LocalizedField& x);  // requires polynomial in m2 with Laurent coefficients
bool is_printable_polynomial(const RatFunc& x);
bool is_printable_polynomial(const LocalizedField& x);
RatFunc clearing_scale(const std::vector<RatFunc>& xs);
LocalizedField clearing_scale(const std::vector<LocalizedField>& xs);

RatFunc scalar_from_multinomial(const Multinomial& p, std::type_identity<RatFunc>);
LocalizedField scalar_from_multinomial(const Multinomial& p, std::type_identity<LocalizedField>);

template <class K>
VarSet scalar_vars() {
  if constexpr (FieldTraits<K>::tag == FieldTag::Base)
    return {true, false, false};
  else
    return {true, false, true};
}

/// Polynomial in the meridian m with coefficients in K, e.g. "A^2*m - m^3".
template <class K>
UPoly<K> parse_poly_in_m(std::string_view text) {
  VarSet vars = scalar_vars<K>();
  vars.m = true;
  Expression e = parse_expression(text, vars);
  std::map<int, Multinomial> by_degree;
  for (const auto& [x, c] : e.num) {
    if (x.m < 0) throw ParseError("negative power of m in a polynomial");
    by_degree[x.m].emplace(Exponents{x.a, 0, x.m2}, c);
  }
  std::vector<K> coeffs;
  for (const auto& [deg, part] : by_degree) {
    coeffs.resize(static_cast<std::size_t>(deg) + 1, K(0));
    coeffs[static_cast<std::size_t>(deg)] = scalar_from_multinomial(part, std::type_identity<K>{});
  }
  UPoly<K> p(std::move(coeffs));
  if (e.den) {
    for (const auto& [x, c] : *e.den) {
      if (x.m != 0) throw ParseError("denominator of a polynomial may not involve m");
    }
    K d = scalar_from_multinomial(*e.den, std::type_identity<K>{});
    if (is_zero(d)) throw DivisionByZero();
    p = p.scaled(d.inverse());
  }
  return p;
}

template <class K>
std::string poly_to_string(const UPoly<K>& p) {
  const auto& cs = p.coefficients();
  K s = clearing_scale(cs);
  Multinomial num;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (is_zero(cs[i])) continue;
    for (const auto& [e, c] : to_multinomial(cs[i] * s)) num.emplace(Exponents{e.a, static_cast<int>(i), e.m2}, c);
  }
  if (s == K(1)) return to_string(num);
  return "(" + to_string(num) + ")/(" + to_string(to_multinomial(s)) + ")";
}

}  // namespace skein

// Fraction-free gcds for the two polynomial rings where the generic Euclidean
// algorithm suffers coefficient growth: Q[A] and Q(A)[x].

#include <utility>

#include "skein/field.hpp"
#include "skein/ratfunc.hpp"
#include "skein/upoly.hpp"

namespace skein {

namespace {

using ZPoly = std::vector<Integer>;  // low to high, no trailing zeros

void trim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Integer content(const ZPoly& p) {
  Integer g = 0;
  for (const auto& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

void make_primitive(ZPoly& p) {
  if (p.empty()) return;
  Integer g = content(p);
  if (sgn(p.back()) < 0) g = -g;
  if (g == 1) return;
  for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

ZPoly to_integer_primitive(const QPoly& p) {
  Integer l = 1;
  for (const auto& c : p.coefficients()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  ZPoly out;
  out.reserve(p.size());
  for (const auto& c : p.coefficients()) out.push_back(Integer(c.get_num() * (l / c.get_den())));
  make_primitive(out);
  return out;
}

// a <- lc(b) a - lc(a) x^k b until deg a < deg b.
void pseudo_remainder(ZPoly& a, const ZPoly& b) {
  const Integer& lb = b.back();
  while (!a.empty() && a.size() >= b.size()) {
    const Integer la = a.back();
    const std::size_t shift = a.size() - b.size();
    for (auto& c : a) c *= lb;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= la * b[j];
    trim(a);
  }
}

// Polynomials in x with coefficients in Q[A].
using BiPoly = std::vector<QPoly>;

void trim(BiPoly& p) {
  while (!p.empty() && p.back().is_zero_poly()) p.pop_back();
}

// Divides by the monic gcd of the coefficients and by the rational content.
void make_primitive(BiPoly& p) {
  if (p.empty()) return;
  QPoly g;
  for (const auto& c : p) {
    g = gcd(g, c);
    if (g.is_constant()) break;
  }
  if (!g.is_constant())
    for (auto& c : p) c = exact_div(c, g);
  Integer num = 0, den = 1;
  for (const auto& c : p)
    for (const auto& r : c.coefficients()) {
      mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), r.get_num_mpz_t());
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), r.get_den_mpz_t());
    }
  Rational s(den, num);
  s.canonicalize();
  if (s != 1)
    for (auto& c : p) c = c.scaled(s);
}

// lc(b)^(deg a - deg b + 1) a mod b.
BiPoly pseudo_remainder(BiPoly a, const BiPoly& b) {
  const QPoly& lb = b.back();
  std::size_t e = a.size() - b.size() + 1;
  while (!a.empty() && a.size() >= b.size()) {
    const QPoly la = a.back();
    const std::size_t shift = a.size() - b.size();
    for (auto& c : a) c = c * lb;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= la * b[j];
    trim(a);
    --e;
  }
  if (e > 0 && !a.empty()) {
    const QPoly f = pow(lb, static_cast<unsigned>(e));
    for (auto& c : a) c = c * f;
  }
  return a;
}

BiPoly to_bipoly(const UPoly<RatFunc>& p) {
  const RatFunc s = primitive_scale(p.coefficients());
  BiPoly out;
  for (const auto& c : p.coefficients()) {
    const RatFunc y = c * s;
    if (y.is_zero()) {
      out.emplace_back();
      continue;
    }
    if (!y.is_laurent() || y.num().low() < 0) throw InvariantError("content clearing left a denominator");
    out.push_back(y.num().body().shifted(static_cast<std::size_t>(y.num().low())));
  }
  return out;
}

// Specialising A to an integer that keeps both leading coefficients nonzero
// cannot lower the x-degree of a common factor, so a constant gcd after
// specialisation proves the gcd is 1.
bool coprime_by_specialisation(const BiPoly& x, const BiPoly& y) {
  for (int t : {2, 3, 5, 7}) {
    const Rational at(t);
    if (is_zero(x.back().evaluate(at)) || is_zero(y.back().evaluate(at))) continue;
    std::vector<Rational> xs, ys;
    for (const auto& c : x) xs.push_back(c.evaluate(at));
    for (const auto& c : y) ys.push_back(c.evaluate(at));
    return gcd(QPoly(std::move(xs)), QPoly(std::move(ys))).is_constant();
  }
  return false;
}

}  // namespace

UPoly<Rational> gcd(const UPoly<Rational>& a, const UPoly<Rational>& b) {
  if (a.is_zero_poly()) return b.monic();
  if (b.is_zero_poly()) return a.monic();
  if (a.is_constant() || b.is_constant()) return UPoly<Rational>(Rational(1));
  ZPoly x = to_integer_primitive(a), y = to_integer_primitive(b);
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty()) {
    pseudo_remainder(x, y);
    make_primitive(x);
    std::swap(x, y);
    if (y.size() == 1) return UPoly<Rational>(Rational(1));
  }
  std::vector<Rational> cs(x.begin(), x.end());
  return UPoly<Rational>(std::move(cs)).monic();
}

UPoly<RatFunc> gcd(const UPoly<RatFunc>& a, const UPoly<RatFunc>& b) {
  if (a.is_zero_poly()) return b.monic();
  if (b.is_zero_poly()) return a.monic();
  if (a.is_constant() || b.is_constant()) return UPoly<RatFunc>(RatFunc(1));
  BiPoly x = to_bipoly(a), y = to_bipoly(b);
  if (coprime_by_specialisation(x, y)) return UPoly<RatFunc>(RatFunc(1));
  if (x.size() < y.size()) std::swap(x, y);
  // Subresultant remainder sequence: every division below is exact in Q[A].
  QPoly g(1), h(1);
  for (;;) {
    const std::size_t delta = x.size() - y.size();
    BiPoly r = pseudo_remainder(x, y);
    if (r.empty()) break;
    if (r.size() == 1) return UPoly<RatFunc>(RatFunc(1));
    const QPoly divisor = g * pow(h, static_cast<unsigned>(delta));
    for (auto& c : r) c = exact_div(c, divisor);
    x = std::move(y);
    y = std::move(r);
    g = x.back();
    if (delta == 1)
      h = g;
    else if (delta > 1)
      h = exact_div(pow(g, static_cast<unsigned>(delta)), pow(h, static_cast<unsigned>(delta - 1)));
  }
  x = std::move(y);
  make_primitive(x);
  std::vector<RatFunc> cs;
  for (auto& c : x) cs.emplace_back(LaurentPoly(0, std::move(c)));
  return UPoly<RatFunc>(std::move(cs)).monic();
}

}  // namespace skein

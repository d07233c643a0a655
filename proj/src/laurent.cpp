#include "skein/laurent.hpp"

#include <algorithm>

namespace skein {

LaurentPoly::LaurentPoly(int low, QPoly body) : low_(low), body_(std::move(body)) { normalize(); }

LaurentPoly LaurentPoly::monomial(const Rational& c, int exponent) {
  LaurentPoly p(c);
  if (!p.is_zero()) p.low_ = exponent;
  return p;
}

void LaurentPoly::normalize() {
  if (body_.is_zero_poly()) {
    low_ = 0;
    return;
  }
  const auto& c = body_.coefficients();
  std::size_t k = 0;
  while (skein::is_zero(c[k])) ++k;
  if (k > 0) {
    body_ = QPoly(std::vector<Rational>(c.begin() + static_cast<std::ptrdiff_t>(k), c.end()));
    low_ += static_cast<int>(k);
  }
}

std::map<int, Rational> LaurentPoly::terms() const {
  std::map<int, Rational> out;
  const auto& c = body_.coefficients();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (!skein::is_zero(c[i])) out.emplace(low_ + static_cast<int>(i), c[i]);
  }
  return out;
}

int LaurentPoly::high() const {
  if (is_zero()) return 0;
  return low_ + static_cast<int>(body_.size()) - 1;
}

bool LaurentPoly::is_unit_monomial() const {
  if (body_.size() != 1) return false;
  const Rational& c = body_.leading();
  return c == 1 || c == -1;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly r = *this;
  if (!r.is_zero()) r.low_ += k;
  return r;
}

LaurentPoly LaurentPoly::scaled(const Rational& s) const {
  LaurentPoly r;
  r.body_ = body_.scaled(s);
  r.low_ = r.body_.is_zero_poly() ? 0 : low_;
  return r;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  r.body_ = -body_;
  return r;
}

namespace {

// Aligns both operands to the smaller lowest exponent.
LaurentPoly combine(const LaurentPoly& a, const LaurentPoly& b, bool subtract) {
  if (b.is_zero()) return a;
  if (a.is_zero()) return subtract ? -b : b;
  const int low = std::min(a.low(), b.low());
  QPoly pa = a.body().shifted(static_cast<std::size_t>(a.low() - low));
  QPoly pb = b.body().shifted(static_cast<std::size_t>(b.low() - low));
  return LaurentPoly(low, subtract ? pa - pb : pa + pb);
}

}  // namespace

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) { return combine(a, b, false); }
LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return combine(a, b, true); }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  // body(0) != 0 on both sides, so the product body needs no renormalization.
  LaurentPoly r;
  r.low_ = a.low_ + b.low_;
  r.body_ = a.body_ * b.body_;
  return r;
}

}  // namespace skein

// Multiplication in Q[x] through integer arithmetic.

#include <algorithm>

#include "skein/upoly.hpp"

namespace skein::detail {

namespace {

using ZVec = std::vector<Integer>;

// a = za / da with za integral.
ZVec clear_denominators(const std::vector<Rational>& a, Integer& da) {
  da = 1;
  for (const auto& c : a) mpz_lcm(da.get_mpz_t(), da.get_mpz_t(), c.get_den_mpz_t());
  ZVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    mpz_divexact(out[i].get_mpz_t(), da.get_mpz_t(), a[i].get_den_mpz_t());
    out[i] *= a[i].get_num();
  }
  return out;
}

std::size_t max_bits(const ZVec& a) {
  std::size_t m = 0;
  for (const auto& c : a) m = std::max(m, mpz_sizeinbase(c.get_mpz_t(), 2));
  return m;
}

ZVec schoolbook(const ZVec& a, const ZVec& b) {
  ZVec r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
  }
  return r;
}

// Evaluate at 2^bits, multiply the two integers, and read the signed
// coefficients back off in base 2^bits.
ZVec kronecker(const ZVec& a, const ZVec& b) {
  const std::size_t n = std::min(a.size(), b.size());
  std::size_t guard = 2;
  while ((std::size_t{1} << guard) < n) ++guard;
  const mp_bitcnt_t bits = max_bits(a) + max_bits(b) + guard + 2;
  auto pack = [bits](const ZVec& p) {
    Integer x = 0;
    for (std::size_t i = p.size(); i-- > 0;) {
      mpz_mul_2exp(x.get_mpz_t(), x.get_mpz_t(), bits);
      x += p[i];
    }
    return x;
  };
  Integer z = pack(a) * pack(b);
  ZVec r(a.size() + b.size() - 1);
  Integer half, digit;
  mpz_setbit(half.get_mpz_t(), bits - 1);
  for (auto& c : r) {
    mpz_fdiv_r_2exp(digit.get_mpz_t(), z.get_mpz_t(), bits);
    if (digit >= half) mpz_submul_ui(digit.get_mpz_t(), half.get_mpz_t(), 2);
    c = digit;
    z -= digit;
    mpz_fdiv_q_2exp(z.get_mpz_t(), z.get_mpz_t(), bits);
  }
  return r;
}

}  // namespace

std::vector<Rational> poly_product(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  // Short factors: converting costs more than it saves.
  if (std::min(a.size(), b.size()) < 12) return poly_product<Rational>(a, b);
  Integer da, db;
  const ZVec za = clear_denominators(a, da), zb = clear_denominators(b, db);
  const ZVec zr = std::min(a.size(), b.size()) >= 40 ? kronecker(za, zb) : schoolbook(za, zb);
  const Integer d = da * db;
  std::vector<Rational> r(zr.size());
  for (std::size_t i = 0; i < zr.size(); ++i) {
    r[i] = Rational(zr[i], d);
    r[i].canonicalize();
  }
  return r;
}

}  // namespace skein::detail

#pragma once

#include <gmpxx.h>

#include <string>

namespace skein {

using Integer = mpz_class;
using Rational = mpq_class;

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rational& x) { return x.get_str(); }

}  // namespace skein

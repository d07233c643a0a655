#pragma once

// Random generators shared by the unit and acceptance suites. All generators are
// deterministic given the engine state.

#include <random>
#include <vector>

#include "skein/field.hpp"
#include "skein/skein_t2.hpp"
#include "skein/torus.hpp"

namespace skein::testing {

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline Rational small_rational(Rng& rng, int range = 5, bool allow_fraction = true) {
  int n = uniform(rng, -range, range);
  int d = allow_fraction ? uniform(rng, 1, 3) : 1;
  return make_rational(n, d);
}

inline LaurentPoly random_laurent(Rng& rng, int max_terms = 3, int exp_range = 3) {
  LaurentPoly p;
  const int terms = uniform(rng, 0, max_terms);
  for (int i = 0; i < terms; ++i) p = p + LaurentPoly::monomial(small_rational(rng), uniform(rng, -exp_range, exp_range));
  return p;
}

inline LaurentPoly random_nonzero_laurent(Rng& rng, int max_terms = 3, int exp_range = 3) {
  for (;;) {
    LaurentPoly p = random_laurent(rng, max_terms, exp_range);
    if (!p.is_zero()) return p;
  }
}

inline RatFunc random_ratfunc(Rng& rng) {
  LaurentPoly num = random_laurent(rng);
  if (uniform(rng, 0, 2) == 0) return RatFunc(num);
  return RatFunc::fraction(num, random_nonzero_laurent(rng, 2, 2));
}

inline RatFunc random_nonzero_ratfunc(Rng& rng) {
  for (;;) {
    RatFunc x = random_ratfunc(rng);
    if (!x.is_zero()) return x;
  }
}

/// Unit-heavy scalars: +-A^k or small integers, keeping products cheap.
inline RatFunc random_light_scalar(Rng& rng) {
  switch (uniform(rng, 0, 3)) {
    case 0:
      return RatFunc::a_power(uniform(rng, -3, 3));
    case 1:
      return -RatFunc::a_power(uniform(rng, -3, 3));
    case 2:
      return RatFunc(uniform(rng, 1, 4));
    default:
      return RatFunc(random_nonzero_laurent(rng, 2, 2));
  }
}

inline UPoly<RatFunc> random_poly_over_qa(Rng& rng, int max_degree) {
  std::vector<RatFunc> cs;
  const int deg = uniform(rng, 0, max_degree);
  for (int i = 0; i <= deg; ++i) cs.push_back(uniform(rng, 0, 2) == 0 ? RatFunc() : random_light_scalar(rng));
  return UPoly<RatFunc>(std::move(cs));
}

inline LocalizedField random_localized(Rng& rng) {
  UPoly<RatFunc> num = random_poly_over_qa(rng, 2);
  if (uniform(rng, 0, 1) == 0) return LocalizedField(num);
  UPoly<RatFunc> den;
  while (den.is_zero_poly()) den = random_poly_over_qa(rng, 2);
  return LocalizedField::fraction(num, den);
}

template <class K>
K random_scalar(Rng& rng) {
  if constexpr (FieldTraits<K>::tag == FieldTag::Base)
    return random_light_scalar(rng);
  else
    return uniform(rng, 0, 3) == 0 ? LocalizedField(UPoly<RatFunc>::monomial(random_light_scalar(rng), 1))
                                   : LocalizedField(random_light_scalar(rng));
}

template <class K>
TorusElement<K> random_torus(Rng& rng, int max_terms = 3, int range = 8) {
  TorusElement<K> x;
  const int terms = uniform(rng, 1, max_terms);
  for (int i = 0; i < terms; ++i)
    x.add(ExponentPair{uniform(rng, -range, range), uniform(rng, -range, range)}, random_scalar<K>(rng));
  return x;
}

template <class K>
SymmetricElement<K> random_symmetric(Rng& rng, int max_terms = 3, int range = 8) {
  SymmetricElement<K> x;
  const int terms = uniform(rng, 1, max_terms);
  for (int i = 0; i < terms; ++i)
    x.add(SymmetricClass(uniform(rng, -range, range), uniform(rng, -range, range)), random_scalar<K>(rng));
  return x;
}

inline ExponentPair random_primitive(Rng& rng, int range) {
  for (;;) {
    ExponentPair d{uniform(rng, -range, range), uniform(rng, -range, range)};
    if (lattice_gcd(d) == 1) return d;
  }
}

template <class K>
SkeinElement<K> random_skein(Rng& rng, int max_terms = 3, int range = 6, unsigned max_copies = 5) {
  SkeinElement<K> x;
  const int terms = uniform(rng, 1, max_terms);
  for (int i = 0; i < terms; ++i) {
    const unsigned copies = static_cast<unsigned>(uniform(rng, 0, static_cast<int>(max_copies)));
    x.add(CurveMonomial(random_primitive(rng, range), copies), random_scalar<K>(rng));
  }
  return x;
}

}  // namespace skein::testing

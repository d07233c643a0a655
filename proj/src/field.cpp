#include "skein/field.hpp"

#include <algorithm>
#include <limits>

namespace skein {

RatFunc primitive_scale(const std::vector<RatFunc>& xs) {
  RatFunc scale(LaurentPoly(0, denominator_lcm(xs)));
  std::vector<LaurentPoly> ys;
  int low = std::numeric_limits<int>::max();
  for (const auto& x : xs) {
    RatFunc y = x * scale;
    if (!y.is_laurent()) throw InvariantError("denominator survived lcm clearing");
    if (!y.is_zero()) low = std::min(low, y.num().low());
    ys.push_back(y.num());
  }
  if (low == std::numeric_limits<int>::max()) return RatFunc(1);
  scale = scale.shifted(-low);

  QPoly g;
  for (const auto& y : ys) {
    if (!y.is_zero()) g = gcd(g, y.body());
  }
  // Rational content of the quotients.
  Integer den_lcm = 1;
  Integer num_gcd = 0;
  Rational last_lead;
  for (const auto& y : ys) {
    if (y.is_zero()) continue;
    QPoly q = exact_div(y.body(), g);
    for (const auto& c : q.coefficients()) {
      if (is_zero(c)) continue;
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
    }
    last_lead = q.leading();
  }
  Rational content(num_gcd, den_lcm);
  content.canonicalize();
  if (sgn(last_lead) < 0) content = -content;
  return scale / (RatFunc(LaurentPoly(0, g)) * RatFunc(content));
}

}  // namespace skein

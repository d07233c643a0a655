#include "skein/skein_t2.hpp"

namespace skein {

std::vector<Integer> chebyshev(unsigned n) {
  std::vector<Integer> prev{2};  // T_0
  if (n == 0) return prev;
  std::vector<Integer> cur{0, 1};  // T_1
  for (unsigned k = 1; k < n; ++k) {
    // T_{k+1} = x T_k - T_{k-1}
    std::vector<Integer> next(k + 2, 0);
    for (std::size_t i = 0; i < cur.size(); ++i) next[i + 1] += cur[i];
    for (std::size_t i = 0; i < prev.size(); ++i) next[i] -= prev[i];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

ChebyshevExpansion power_to_chebyshev(unsigned n) {
  // Multiply by x repeatedly: x T_k = T_{k+1} + T_{k-1}, x T_1 = T_2 + 2, x * 1 = T_1.
  ChebyshevExpansion cur;
  cur.unit = 1;
  for (unsigned step = 0; step < n; ++step) {
    ChebyshevExpansion next;
    if (cur.unit != 0) next.t[1] += cur.unit;
    for (const auto& [k, c] : cur.t) {
      next.t[k + 1] += c;
      if (k == 1)
        next.unit += 2 * c;
      else
        next.t[k - 1] += c;
    }
    std::erase_if(next.t, [](const auto& kv) { return kv.second == 0; });
    cur = std::move(next);
  }
  return cur;
}

CurveMonomial::CurveMonomial(ExponentPair dir, unsigned copies) : copies_(copies) {
  if (copies == 0) return;
  if (lattice_gcd(dir) != 1) throw PreconditionError("curve direction " + to_string(dir) + " is not primitive");
  dir_ = SymmetricClass(dir);
}

std::string to_string(const CurveMonomial& c) {
  if (c.is_empty()) return "empty";
  std::string s = "gamma" + to_string(c.direction());
  if (c.copies() != 1) s += "^" + std::to_string(c.copies());
  return s;
}

}  // namespace skein

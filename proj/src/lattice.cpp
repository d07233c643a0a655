#include "skein/lattice.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <ostream>

namespace skein {

namespace {

long long cross(const ExponentPair& o, const ExponentPair& a, const ExponentPair& b) {
  return static_cast<long long>(a.p - o.p) * (b.q - o.q) - static_cast<long long>(a.q - o.q) * (b.p - o.p);
}

int parse_int(std::string_view text, std::string_view whole) {
  int value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last)
    throw ParseError("malformed slope '" + std::string(whole) + "'");
  return value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Slope::Slope(int p, int q) {
  if (std::gcd(std::abs(p), std::abs(q)) != 1)
    throw PreconditionError("slope direction (" + std::to_string(p) + "," + std::to_string(q) + ") is not primitive");
  if (p < 0 || (p == 0 && q < 0)) {
    p = -p;
    q = -q;
  }
  p_ = p;
  q_ = q;
}

Slope Slope::of_direction(const ExponentPair& d) {
  const int g = lattice_gcd(d);
  if (g == 0) throw PreconditionError("zero direction has no slope");
  return Slope(d.p / g, d.q / g);
}

Slope Slope::parse(std::string_view text) {
  const std::string_view t = trim(text);
  if (t == "inf" || t == "infinity" || t == "∞") return infinity();
  const auto slash = t.find('/');
  const int q = parse_int(trim(t.substr(0, slash)), text);
  const int p = slash == std::string_view::npos ? 1 : parse_int(trim(t.substr(slash + 1)), text);
  if (std::gcd(std::abs(p), std::abs(q)) != 1)
    throw ParseError("slope '" + std::string(text) + "' is not in lowest terms");
  return Slope(p, q);
}

std::strong_ordering operator<=>(const Slope& a, const Slope& b) {
  if (a.is_infinite() || b.is_infinite()) return a.is_infinite() <=> b.is_infinite();
  return static_cast<long long>(a.q()) * b.p() <=> static_cast<long long>(b.q()) * a.p();
}

std::string to_string(const Slope& s) {
  if (s.is_infinite()) return "inf";
  if (s.p() == 1) return std::to_string(s.q());
  return std::to_string(s.q()) + "/" + std::to_string(s.p());
}

std::ostream& operator<<(std::ostream& os, const Slope& s) { return os << to_string(s); }

NewtonPolygon NewtonPolygon::hull(std::vector<ExponentPair> pts) {
  if (pts.empty()) throw PreconditionError("Newton polygon of an empty support");
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  NewtonPolygon out;
  if (pts.size() <= 2) {
    out.vertices_ = pts;
    return out;
  }
  // Andrew's monotone chain; strict turns only, so collinear points are dropped.
  std::vector<ExponentPair> h(2 * pts.size());
  std::size_t k = 0;
  for (const auto& pt : pts) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], pt) <= 0) --k;
    h[k++] = pt;
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  out.vertices_ = std::move(h);
  return out;
}

PolygonKind NewtonPolygon::kind() const {
  switch (vertices_.size()) {
    case 1:
      return PolygonKind::Point;
    case 2:
      return PolygonKind::Segment;
    default:
      return PolygonKind::Polygon;
  }
}

NewtonPolygon NewtonPolygon::negated() const {
  std::vector<ExponentPair> pts;
  for (const auto& v : vertices_) pts.push_back(-v);
  return hull(std::move(pts));
}

bool NewtonPolygon::is_symmetric() const { return negated() == *this; }

std::string to_string(PolygonKind k) {
  switch (k) {
    case PolygonKind::Point:
      return "point";
    case PolygonKind::Segment:
      return "segment";
    default:
      return "polygon";
  }
}

std::set<Slope> slopes(const NewtonPolygon& poly) {
  std::set<Slope> out;
  const auto& v = poly.vertices();
  if (v.size() < 2) return out;
  if (v.size() == 2) {
    out.insert(Slope::of_direction(v[1] - v[0]));
    return out;
  }
  for (std::size_t i = 0; i < v.size(); ++i) out.insert(Slope::of_direction(v[(i + 1) % v.size()] - v[i]));
  return out;
}

ExponentPair epsilon_form(int p, int q) {
  if (std::gcd(std::abs(p), std::abs(q)) != 1)
    throw PreconditionError("(" + std::to_string(p) + "," + std::to_string(q) + ") is not primitive");
  if (q == 0) return {p, 0};
  // a p + b q = 1 with 0 <= a < |q|.
  long long old_r = p, r = q, old_s = 1, s = 0;
  while (r != 0) {
    const long long quo = old_r / r;
    old_r -= quo * r;
    std::swap(old_r, r);
    old_s -= quo * s;
    std::swap(old_s, s);
  }
  // now old_r = +-1 and old_s * p = old_r mod q
  long long a = old_s * old_r;
  const long long m = std::abs(q);
  a = ((a % m) + m) % m;
  const long long b = (1 - a * p) / q;
  return {static_cast<int>(a), static_cast<int>(b)};
}

BandPair band_pair(int p, int q, const NewtonPolygon& poly) {
  BandPair bp;
  bp.eps = epsilon_form(p, q);
  bp.lam = {q, -p};
  const auto& v = poly.vertices();
  bp.M = apply(bp.lam, v.front());
  bp.top = v.front();
  for (const auto& x : v) {
    const int val = apply(bp.lam, x);
    if (val > bp.M) {
      bp.M = val;
      bp.top = x;
    }
  }
  bp.unique = std::count_if(v.begin(), v.end(), [&](const ExponentPair& x) { return apply(bp.lam, x) == bp.M; }) == 1;
  return bp;
}

long count_classes(int M) { return 3L * M + 2; }

std::vector<SymmetricClass> enumerate_classes(const BandPair& bp) {
  // (lambda; epsilon) is unimodular, so each value pair has exactly one preimage.
  const int a = bp.lam.p, b = bp.lam.q, c = bp.eps.p, d = bp.eps.q;
  const int det = a * d - b * c;
  if (det != 1 && det != -1) throw InvariantError("band homomorphisms are not unimodular");
  std::set<SymmetricClass> classes;
  for (int e = 0; e <= 1; ++e)
    for (int l = -bp.M; l <= bp.M; ++l) classes.insert(SymmetricClass(det * (d * l - b * e), det * (a * e - c * l)));
  return {classes.begin(), classes.end()};
}

}  // namespace skein

#pragma once

#include <compare>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "skein/torus.hpp"

namespace skein {

/// Slope q/p of the direction (p, q), stored as the direction with p > 0, or
/// (p, q) = (0, 1) for infinity. Ordered by value with infinity last.
class Slope {
 public:
  /// Slope 0 = 0/1.
  Slope() = default;
  /// Slope of the direction (p, q); requires gcd(|p|, |q|) = 1.
  Slope(int p, int q);
  /// Slope of any nonzero direction, reduced to lowest terms.
  static Slope of_direction(const ExponentPair& d);
  static Slope infinity() { return Slope(0, 1); }
  /// "q/p", "q" or "inf"; "q/0" with |q| = 1 is accepted for infinity.
  static Slope parse(std::string_view text);

  int p() const { return p_; }
  int q() const { return q_; }
  ExponentPair direction() const { return {p_, q_}; }
  bool is_infinite() const { return p_ == 0; }

  friend bool operator==(const Slope&, const Slope&) = default;
  friend std::strong_ordering operator<=>(const Slope& a, const Slope& b);

 private:
  int p_ = 1;
  int q_ = 0;
};

std::string to_string(const Slope& s);
std::ostream& operator<<(std::ostream& os, const Slope& s);

enum class PolygonKind { Point, Segment, Polygon };

/// Convex hull of a finite lattice set, stored by its extreme points in
/// counterclockwise order starting from the lexicographically smallest.
class NewtonPolygon {
 public:
  /// Throws PreconditionError on an empty support.
  static NewtonPolygon hull(std::vector<ExponentPair> support);

  PolygonKind kind() const;
  const std::vector<ExponentPair>& vertices() const { return vertices_; }
  bool is_symmetric() const;
  NewtonPolygon negated() const;

  friend bool operator==(const NewtonPolygon&, const NewtonPolygon&) = default;

 private:
  std::vector<ExponentPair> vertices_;
};

std::string to_string(PolygonKind k);

/// Edge slopes; a segment has one slope, a point none.
std::set<Slope> slopes(const NewtonPolygon& poly);

/// Value of the linear form f = (f.p, f.q) at x: f.p * x.p + f.q * x.q.
inline int apply(const ExponentPair& form, const ExponentPair& x) { return form.p * x.p + form.q * x.q; }

/// Band data for the filling direction (p, q): lambda vanishes on (p, q),
/// epsilon takes the value 1 there, and M is the maximum of lambda on the polygon.
struct BandPair {
  ExponentPair lam;
  ExponentPair eps;
  int M = 0;
  /// True iff lambda attains M at a single vertex.
  bool unique = false;
  /// A vertex where lambda attains M (the first in vertex order).
  ExponentPair top;
};

/// The form epsilon with epsilon(p, q) = 1 from the extended Euclidean
/// algorithm, first coefficient reduced into [0, |q|); (p, 0) when q = 0.
/// Throws PreconditionError if (p, q) is not primitive.
ExponentPair epsilon_form(int p, int q);

/// lambda = (q, -p); epsilon from the extended Euclidean algorithm. Throws
/// PreconditionError if (p, q) is not primitive.
BandPair band_pair(int p, int q, const NewtonPolygon& poly);

/// Number of classes mod +-1 of lattice points with |lambda| <= M and epsilon
/// in {0, 1}: 3M + 2 (implementation-derived closed form).
long count_classes(int M);

/// The classes counted by count_classes, one canonical representative each, in
/// ascending order.
std::vector<SymmetricClass> enumerate_classes(const BandPair& bp);

}  // namespace skein

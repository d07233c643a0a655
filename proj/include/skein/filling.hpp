#pragma once

#include <cstdlib>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "skein/annihilator.hpp"
#include "skein/lattice.hpp"

namespace skein {

/// Filling direction (p, q): the curve l^p m^q bounds a disk in E_K(q/p).
using FillingSlope = Slope;

/// A^2 + A^-2, the negated value of a trivial loop.
template <class K>
K loop_scalar() {
  return K(1).shifted(2) + K(1).shifted(-2);
}

/// Formal sum sum_i x_i f_i over generators f_i, with x_i in the
/// theta-invariant subalgebra; zero components are never stored.
template <class K>
class ModuleVector {
 public:
  using Map = std::map<std::size_t, SymmetricElement<K>>;

  ModuleVector() = default;
  ModuleVector(std::size_t generator, const SymmetricElement<K>& x) { add(generator, x); }

  void add(std::size_t generator, const SymmetricElement<K>& x) {
    if (x.is_zero()) return;
    auto [it, inserted] = components_.emplace(generator, x);
    if (!inserted) {
      it->second += x;
      if (it->second.is_zero()) components_.erase(it);
    }
  }

  SymmetricElement<K> component(std::size_t generator) const {
    auto it = components_.find(generator);
    return it == components_.end() ? SymmetricElement<K>() : it->second;
  }

  const Map& components() const { return components_; }
  bool is_zero() const { return components_.empty(); }
  auto begin() const { return components_.begin(); }
  auto end() const { return components_.end(); }

  ModuleVector& operator-=(const ModuleVector& o) {
    for (const auto& [i, x] : o) add(i, -x);
    return *this;
  }
  friend ModuleVector operator-(ModuleVector a, const ModuleVector& b) { return a -= b; }
  friend bool operator==(const ModuleVector&, const ModuleVector&) = default;

 private:
  Map components_;
};

enum class RelationKind { Translated, Dehn };

inline std::string to_string(RelationKind k) { return k == RelationKind::Translated ? "TRANSLATED" : "DEHN"; }

/// One elimination: scalar times a relation was subtracted from generator's
/// component. base is the shift (mu, nu) of a translated annihilating relation
/// e~_{mu,nu} R, or the base point (alpha, beta) of a Dehn relation.
template <class K>
struct CertificateStep {
  RelationKind kind;
  std::size_t generator;
  ExponentPair base;
  K scalar;
};

template <class K>
struct ReductionCertificate {
  std::vector<CertificateStep<K>> steps;
  /// Rounds of band reduction: each round clears one |lambda| level.
  std::size_t band_rounds = 0;
  /// Rounds of epsilon reduction: each round clears one epsilon level.
  std::size_t epsilon_rounds = 0;

  void append(const ReductionCertificate& o) {
    steps.insert(steps.end(), o.steps.begin(), o.steps.end());
    band_rounds += o.band_rounds;
    epsilon_rounds += o.epsilon_rounds;
  }
};

template <class K>
struct Reduction {
  SymmetricElement<K> result;
  ReductionCertificate<K> certificate;
};

template <class K>
struct ModuleReduction {
  ModuleVector<K> result;
  /// The vector after band reduction, before epsilon reduction.
  ModuleVector<K> banded;
  ReductionCertificate<K> certificate;
};

/// A^{p beta - q alpha} e~_{alpha+p, beta+q} + A^{q alpha - p beta} e~_{alpha-p, beta-q}
/// + (A^2 + A^-2) e~_{alpha, beta}, which vanishes on every skein of E_K(q/p).
template <class K>
SymmetricElement<K> dehn_relation(const FillingSlope& s, int alpha, int beta) {
  const ExponentPair d = s.direction(), x{alpha, beta};
  const int t = twist(d, x);
  SymmetricElement<K> out;
  out.add(SymmetricClass(x + d), K(1).shifted(t));
  out.add(SymmetricClass(x - d), K(1).shifted(-t));
  out.add(SymmetricClass(x), loop_scalar<K>());
  return out;
}

/// The union of the edge slopes of the relations' Newton polygons.
template <class K>
std::set<Slope> excluded_slopes(const std::vector<AnnihilatingRelation<K>>& relations) {
  std::set<Slope> out;
  for (const auto& r : relations) out.merge(slopes(r.polygon()));
  return out;
}

namespace detail {

/// The representative of cls on which form is >= 0.
inline ExponentPair nonnegative_rep(const SymmetricClass& cls, const ExponentPair& form) {
  const ExponentPair& a = cls.representative();
  return apply(form, a) < 0 ? -a : a;
}

inline int level(const SymmetricClass& cls, const ExponentPair& form) {
  return std::abs(apply(form, cls.representative()));
}

/// Classes of x on which |form| attains its maximum, together with that maximum.
template <class K>
std::pair<int, std::vector<SymmetricClass>> top_level(const SymmetricElement<K>& x, const ExponentPair& form) {
  int best = -1;
  std::vector<SymmetricClass> classes;
  for (const auto& [cls, c] : x) {
    const int l = level(cls, form);
    if (l > best) {
      best = l;
      classes.clear();
    }
    if (l == best) classes.push_back(cls);
  }
  return {best, classes};
}

}  // namespace detail

/// Rewrites x f (f the generator annihilated by r) into the band |lambda| <= M
/// by solving translated relations for their lambda-maximal term, highest
/// |lambda| first. Throws NotReducible if the slope is an edge slope of r's
/// polygon. If the polygon is the point (0,0), f = 0 and the result is zero.
template <class K>
Reduction<K> band_reduce(const AnnihilatingRelation<K>& r, const FillingSlope& s, const SymmetricElement<K>& x,
                         std::size_t generator = 0) {
  const NewtonPolygon& poly = r.polygon();
  if (slopes(poly).contains(s))
    throw NotReducible("slope " + to_string(s) + " is an edge slope of the Newton polygon");
  Reduction<K> out;
  if (poly.kind() == PolygonKind::Point) {
    // r = c e_{0,0} and e~_{a} r = c e~_{a}, so every term is a multiple of r.
    const K c = r.coeff({0, 0});
    for (const auto& [cls, xc] : x)
      out.certificate.steps.push_back({RelationKind::Translated, generator, cls.representative(), xc / c});
    return out;
  }
  const BandPair bp = band_pair(s.p(), s.q(), poly);
  if (!bp.unique) throw InvariantError("band maximum is not attained at a unique vertex");
  out.result = x;
  for (;;) {
    const auto [top, classes] = detail::top_level(out.result, bp.lam);
    if (top <= bp.M) break;
    ++out.certificate.band_rounds;
    for (const auto& cls : classes) {
      const ExponentPair shift = detail::nonnegative_rep(cls, bp.lam) - bp.top;
      const SymmetricElement<K> t = translate_relation(r, shift);
      const K scalar = out.result.coeff(cls) / t.coeff(cls);
      out.result.add(t, -scalar);
      if (!is_zero(out.result.coeff(cls))) throw InvariantError("band reduction did not clear " + to_string(cls));
      out.certificate.steps.push_back({RelationKind::Translated, generator, shift, scalar});
    }
  }
  return out;
}

/// Rewrites x f into terms with epsilon in {0, 1} using Dehn relations; lambda
/// is unchanged term by term since lambda(p, q) = 0.
template <class K>
Reduction<K> epsilon_reduce(const FillingSlope& s, const SymmetricElement<K>& x, std::size_t generator = 0) {
  const ExponentPair d = s.direction();
  const ExponentPair eps = epsilon_form(d.p, d.q);
  Reduction<K> out;
  out.result = x;
  for (;;) {
    const auto [top, classes] = detail::top_level(out.result, eps);
    if (top <= 1) break;
    ++out.certificate.epsilon_rounds;
    for (const auto& cls : classes) {
      const ExponentPair base = detail::nonnegative_rep(cls, eps) - d;
      const SymmetricElement<K> rel = dehn_relation<K>(s, base.p, base.q);
      const K scalar = out.result.coeff(cls) / rel.coeff(cls);
      out.result.add(rel, -scalar);
      if (!is_zero(out.result.coeff(cls))) throw InvariantError("epsilon reduction did not clear " + to_string(cls));
      out.certificate.steps.push_back({RelationKind::Dehn, generator, base, scalar});
    }
  }
  return out;
}

/// Band reduction followed by epsilon reduction, per generator; relations[i]
/// annihilates generator i. Throws NotReducible if s is an excluded slope.
template <class K>
ModuleReduction<K> reduce_full(const std::vector<AnnihilatingRelation<K>>& relations, const FillingSlope& s,
                               const ModuleVector<K>& v) {
  if (excluded_slopes(relations).contains(s)) throw NotReducible("slope " + to_string(s) + " is excluded");
  ModuleReduction<K> out;
  for (const auto& [i, x] : v) {
    if (i >= relations.size()) throw PreconditionError("no relation for generator " + std::to_string(i));
    Reduction<K> band = band_reduce(relations[i], s, x, i);
    Reduction<K> eps = epsilon_reduce(s, band.result, i);
    out.banded.add(i, band.result);
    out.result.add(i, eps.result);
    out.certificate.append(band.certificate);
    out.certificate.append(eps.certificate);
  }
  return out;
}

/// The combination sum_k scalar_k rel_k named by the certificate, each relation
/// rebuilt by etilde_mul: e~_{mu,nu} R for translated relations and
/// (e~_{p,q} + (A^2 + A^-2)) e~_{alpha,beta} for Dehn relations.
template <class K>
ModuleVector<K> replay(const std::vector<AnnihilatingRelation<K>>& relations, const FillingSlope& s,
                       const ReductionCertificate<K>& cert) {
  const SymmetricElement<K> filling_curve = etilde<K>(s.p(), s.q()) + loop_scalar<K>() * unit<K>();
  ModuleVector<K> out;
  for (const auto& step : cert.steps) {
    SymmetricElement<K> rel;
    if (step.kind == RelationKind::Translated) {
      if (step.generator >= relations.size()) throw PreconditionError("certificate names an unknown generator");
      rel = etilde_mul(etilde<K>(step.base.p, step.base.q), relations[step.generator].as_symmetric());
    } else {
      rel = etilde_mul(filling_curve, etilde<K>(step.base.p, step.base.q));
    }
    out.add(step.generator, rel.scaled(step.scalar));
  }
  return out;
}

/// Whether input - output equals the replayed certificate exactly.
template <class K>
bool verify_certificate(const std::vector<AnnihilatingRelation<K>>& relations, const FillingSlope& s,
                        const ModuleVector<K>& input, const ModuleVector<K>& output,
                        const ReductionCertificate<K>& cert) {
  return input - output == replay(relations, s, cert);
}

/// Spanning data of one generator at a non-excluded slope.
struct GeneratorBand {
  std::size_t generator = 0;
  /// The relation is a nonzero multiple of e_{0,0}, so the generator is zero.
  bool zero = false;
  BandPair band;
  /// Classes e~_{a} with e~_{a} f spanning the generator's image.
  std::vector<SymmetricClass> classes;
  /// Number of classes (0 for a zero generator).
  long bound = 0;
};

struct FillingReport {
  FillingSlope slope;
  bool excluded = false;
  /// Empty when the slope is excluded.
  std::vector<GeneratorBand> generators;
  /// Sum of the per-generator bounds; absent when the slope is excluded.
  std::optional<long> total;
  std::set<Slope> excluded_slopes;
};

/// Excluded verdict, band data, spanning classes and bounds at slope s, from the
/// Newton polygons of the generators' relations (polygons[i] for generator i).
FillingReport analyze_filling(const std::vector<NewtonPolygon>& polygons, const FillingSlope& s);

template <class K>
FillingReport analyze_filling(const std::vector<AnnihilatingRelation<K>>& relations, const FillingSlope& s) {
  std::vector<NewtonPolygon> polygons;
  for (const auto& r : relations) polygons.push_back(r.polygon());
  return analyze_filling(polygons, s);
}

}  // namespace skein

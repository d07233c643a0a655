// Acceptance checks: one PASS/FAIL line per criterion. With an argument N only
// criterion N runs; the exit status is nonzero if any selected criterion fails.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cli_cases.hpp"
#include "oracles.hpp"
#include "skein/io.hpp"

using namespace skein;
using namespace skein::testing;

namespace {

using F = RatFunc;

struct Verdict {
  bool pass = true;
  std::string detail;
};

/// Records the first failure message; later failures only count.
class Tally {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (first_.empty()) first_ = what;
  }
  Verdict verdict(const std::string& summary) const {
    if (failures_ == 0) return {true, summary};
    return {false, std::to_string(failures_) + " of " + std::to_string(checks_) + " checks failed; first: " + first_};
  }

 private:
  long checks_ = 0, failures_ = 0;
  std::string first_;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f s", s);
  return buf;
}

const std::filesystem::path kGolden = SKEIN_GOLDEN_DIR;
const std::string kData = SKEIN_DATA_DIR;

std::string scratch() {
  const auto dir = std::filesystem::temp_directory_path() / "skein_acceptance";
  std::filesystem::create_directories(dir);
  return dir.string();
}

// 1. Band data lambda = +-(a + 2b), M = 3, epsilon = a + b: 11 classes.
Verdict band_count() {
  const auto start = std::chrono::steady_clock::now();
  Tally t;
  const BandPair bp{{1, 2}, {1, 1}, 3, true, {1, 1}};
  const auto classes = enumerate_classes(bp);
  t.expect(classes.size() == 11, "enumerate_classes gave " + std::to_string(classes.size()));
  t.expect(count_classes(3) == 11, "count_classes(3) = " + std::to_string(count_classes(3)));
  t.expect(brute_force_band(bp).size() == 11, "box scan disagrees");
  // The same count from a hexagon whose band at slope -1/2 has these data.
  const auto rel = relation_from_json<F>(read_json_file(kData + "/hexagon_band.json"));
  const FillingReport rep = analyze_filling(std::vector<NewtonPolygon>{rel.polygon()}, Slope::parse("-1/2"));
  t.expect(!rep.excluded && rep.total == 11, "analyze_filling on the hexagon");
  t.expect(!rep.excluded && rep.generators[0].band.M == 3, "hexagon M");
  const double s = seconds_since(start);
  t.expect(s < 1.0, "runtime " + fmt_seconds(s));
  return t.verdict("11 classes, M = 3, " + fmt_seconds(s));
}

// 2. e-product vs e~-product, associativity, theta an algebra involution.
Verdict product_consistency() {
  const auto start = std::chrono::steady_clock::now();
  Rng rng(1002);
  Tally t;
  for (int i = 0; i < 500; ++i) {
    const auto x = random_symmetric<F>(rng, 3, 8), y = random_symmetric<F>(rng, 3, 8);
    t.expect(symmetrize(e_mul(expand(x), expand(y))) == etilde_mul(x, y), "symmetrized e-product");
    // Basis pairs against the product-to-sum formula written out by hand.
    const ExponentPair a{uniform(rng, -8, 8), uniform(rng, -8, 8)}, b{uniform(rng, -8, 8), uniform(rng, -8, 8)};
    const int w = a.p * b.q - a.q * b.p;
    SymmetricElement<F> expected;
    expected.add(SymmetricClass(a.p + b.p, a.q + b.q), F::a_power(w));
    expected.add(SymmetricClass(a.p - b.p, a.q - b.q), F::a_power(-w));
    t.expect(etilde_mul(etilde<F>(a.p, a.q), etilde<F>(b.p, b.q)) == expected, "basis product " + to_string(a));
  }
  for (int i = 0; i < 500; ++i) {
    const auto x = random_torus<F>(rng, 3, 8), y = random_torus<F>(rng, 3, 8), z = random_torus<F>(rng, 3, 8);
    t.expect(e_mul(e_mul(x, y), z) == e_mul(x, e_mul(y, z)), "e-associativity");
    const auto u = random_symmetric<F>(rng, 2, 8), v = random_symmetric<F>(rng, 2, 8), w = random_symmetric<F>(rng, 2, 8);
    t.expect(etilde_mul(etilde_mul(u, v), w) == etilde_mul(u, etilde_mul(v, w)), "e~-associativity");
    t.expect(theta(theta(x)) == x, "theta^2");
    t.expect(theta(e_mul(x, y)) == e_mul(theta(x), theta(y)), "theta multiplicative");
    t.expect(theta(x + y) == theta(x) + theta(y), "theta additive");
  }
  const double s = seconds_since(start);
  t.expect(s < 30.0, "runtime " + fmt_seconds(s));
  return t.verdict("500 pairs, 500 triples, " + fmt_seconds(s));
}

// 3. phi and phi^-1 are inverse; T_a T_b = T_{a+b} + T_{|a-b|} for parallel curves.
Verdict frohman_gelca() {
  Rng rng(1003);
  Tally t;
  for (int i = 0; i < 200; ++i) {
    const auto x = random_symmetric<F>(rng, 3, 6);
    t.expect(phi(phi_inv(x)) == x, "phi o phi^-1");
    const auto c = random_skein<F>(rng, 3, 6, 5);
    t.expect(phi_inv(phi(c)) == c, "phi^-1 o phi");
  }
  for (int i = 0; i < 20; ++i) {
    const ExponentPair d = random_primitive(rng, 6);
    // T_n of the curve by the recurrence, in the symmetric basis.
    const SymmetricElement<F> curve = phi(SkeinElement<F>(CurveMonomial(d, 1), F(1)));
    std::vector<SymmetricElement<F>> T{unit<F>().scaled(F(2)), curve};
    for (int n = 2; n <= 12; ++n) T.push_back(etilde_mul(curve, T[n - 1]) - T[n - 2]);
    for (int a = 0; a <= 6; ++a)
      for (int b = 0; b <= 6; ++b)
        t.expect(etilde_mul(T[a], T[b]) == T[a + b] + T[std::abs(a - b)], "Chebyshev product");
    for (unsigned n = 0; n <= 6; ++n) {
      // The same T_n through parallel copies: sum_k t_{n,k} (k copies).
      SkeinElement<F> copies;
      const auto coeffs = chebyshev(n);
      for (unsigned k = 0; k < coeffs.size(); ++k)
        copies.add(k == 0 ? CurveMonomial::empty() : CurveMonomial(d, k), F(Rational(coeffs[k])));
      t.expect(phi(copies) == T[n], "parallel copies");
      if (n > 0) t.expect(T[n] == etilde<F>(d.p * static_cast<int>(n), d.q * static_cast<int>(n)), "T_n = e~_{nd}");
    }
  }
  return t.verdict("200 round trips each way, a, b <= 6 over 20 directions");
}

// 4. Translated relations are left multiples by e~_{shift}.
Verdict translation_oracle() {
  Rng rng(1004);
  Tally t;
  for (int i = 0; i < 200; ++i) {
    const auto r = random_relation<F>(rng, false);
    const ExponentPair mu{uniform(rng, -8, 8), uniform(rng, -8, 8)};
    const auto translated = translate_relation(r, mu);
    t.expect(translated == etilde_mul(etilde<F>(mu.p, mu.q), r.as_symmetric()), "e~-product");
    t.expect(translated == symmetrize(e_mul(expand(etilde<F>(mu.p, mu.q)), expand(r.as_symmetric()))), "e-product");
  }
  return t.verdict("200 (relation, shift) pairs");
}

// 5. Annihilators of random free presentations.
Verdict annihilator_oracle() {
  const auto start = std::chrono::steady_clock::now();
  Rng rng(1005);
  Tally t;
  for (int i = 0; i < 50; ++i) {
    const int d = uniform(rng, 1, 4);
    const auto L = random_longitude<F>(rng, d, 3);
    const auto pres = free_presentation<F>(L);
    const auto target = static_cast<std::size_t>(uniform(rng, 0, d - 1));
    const auto ann = compute_annihilator(pres, target);
    const auto check = check_annihilator<F>(L, pres.generator_vector(target), ann);
    t.expect(check.annihilates, "Q(L) v != 0 in trial " + std::to_string(i));
    t.expect(check.minimal, "shorter dependence in trial " + std::to_string(i));
  }
  const double s = seconds_since(start);
  t.expect(s < 60.0, "runtime " + fmt_seconds(s));
  return t.verdict("50 presentations, d <= 4, degree <= 3, " + fmt_seconds(s));
}

// 6. reduce_full: step bounds, support in the band, certificate replay.
Verdict rewriting_soundness() {
  const auto start = std::chrono::steady_clock::now();
  Rng rng(1006);
  Tally t;
  std::size_t steps = 0;
  for (int i = 0; i < 100; ++i) {
    const auto r = random_relation<F>(rng);
    const std::vector<AnnihilatingRelation<F>> rs{r};
    const FillingSlope slope = random_admissible_slope(rng, excluded_slopes(rs));
    const ExponentPair st{uniform(rng, -20, 20), uniform(rng, -20, 20)};
    const ModuleVector<F> v(0, etilde<F>(st.p, st.q));
    const BandPair bp = band_pair(slope.p(), slope.q(), r.polygon());
    const auto red = reduce_full(rs, slope, v);
    steps += red.certificate.steps.size();
    const std::string trial = " in trial " + std::to_string(i);
    t.expect(red.certificate.band_rounds <= static_cast<std::size_t>(std::abs(apply(bp.lam, st))), "band rounds" + trial);
    int eps_bound = 0;
    for (const auto& [g, x] : red.banded)
      for (const auto& [cls, c] : x) {
        const int e = std::abs(apply(bp.eps, cls.representative()));
        eps_bound = std::max({eps_bound, e, 1 - e});
      }
    t.expect(red.certificate.epsilon_rounds <= static_cast<std::size_t>(eps_bound), "epsilon rounds" + trial);
    const bool zero = r.polygon().kind() == PolygonKind::Point;
    const auto classes = zero ? std::vector<SymmetricClass>{} : enumerate_classes(bp);
    const std::set<SymmetricClass> allowed(classes.begin(), classes.end());
    for (const auto& [g, x] : red.result)
      for (const auto& [cls, c] : x) t.expect(allowed.contains(cls), "support " + to_string(cls) + trial);
    t.expect(verify_certificate(rs, slope, v, red.result, red.certificate), "replay" + trial);
  }
  return t.verdict("100 reductions, |a|, |b| <= 20, " + std::to_string(steps) + " certificate steps, " +
                   fmt_seconds(seconds_since(start)));
}

// 7. count_classes against a box scan.
Verdict count_cross_validation() {
  Rng rng(1007);
  Tally t;
  for (int i = 0; i < 20; ++i) {
    ExponentPair d = random_primitive(rng, 6);
    if (d.p < 0 || (d.p == 0 && d.q < 0)) d = -d;
    const BandPair base{{d.q, -d.p}, epsilon_form(d.p, d.q), 0, true, {}};
    for (int M = 0; M <= 50; ++M) {
      BandPair bp = base;
      bp.M = M;
      const auto brute = brute_force_band(bp);
      t.expect(count_classes(M) == static_cast<long>(brute.size()),
               "M = " + std::to_string(M) + ", direction " + to_string(d));
      const auto listed = enumerate_classes(bp);
      t.expect(std::set<SymmetricClass>(listed.begin(), listed.end()) == brute, "class list " + to_string(d));
    }
  }
  return t.verdict("M <= 50 over 20 directions (closed form 3M + 2 is implementation-derived)");
}

// 8. At slope inf, e~_{0,k} f reduces to T_k(-(A^2 + A^-2)) f.
Verdict meridian_filling() {
  Rng rng(1008);
  Tally t;
  const F a = F::a_power(2) + F::a_power(-2);
  std::vector<AnnihilatingRelation<F>> relations{relation_from_json<F>(read_json_file(kData + "/square_relation.json"))};
  while (relations.size() < 6) {
    auto r = random_relation<F>(rng);
    if (!slopes(r.polygon()).contains(Slope::infinity())) relations.push_back(r);
  }
  for (const auto& r : relations) {
    const std::vector<AnnihilatingRelation<F>> rs{r};
    for (int k = 0; k <= 8; ++k) {
      const ModuleVector<F> v(0, etilde<F>(0, k));
      const auto red = reduce_full(rs, Slope::infinity(), v);
      const auto x = red.result.component(0);
      for (const auto& [cls, c] : x)
        t.expect(cls == SymmetricClass(0, 0) || cls == SymmetricClass(0, 1), "support " + to_string(cls));
      // e~_{0,0} acts as 2 and e~_{0,1} = m as -(A^2 + A^-2).
      const F value = F(2) * x.coeff(SymmetricClass(0, 0)) - a * x.coeff(SymmetricClass(0, 1));
      t.expect(value == chebyshev_at<F>(static_cast<unsigned>(k), -a), "k = " + std::to_string(k));
      t.expect(verify_certificate(rs, Slope::infinity(), v, red.result, red.certificate), "replay");
    }
  }
  return t.verdict("k <= 8 over 6 relations");
}

// 9. report on the bundled presentations: finite excluded set and a constant bound.
Verdict report_pipeline() {
  Tally t;
  std::string totals;
  for (const std::string name : {"square", "companion", "with_zero", "localized"}) {
    const CliRun run = run_case({name, {"report", kData + "/" + name + ".json"}});
    t.expect(run.code == 0, name + ": exit " + std::to_string(run.code) + " " + run.err);
    if (run.code != 0) continue;
    t.expect(run.out == slurp(kGolden / ("report_" + name + ".json")), name + ": differs from golden file");
    const Json doc = parse_json(run.out);
    t.expect(doc.at("excluded_slopes").is_array() &&
                 doc.at("excluded_slopes").size() == doc.at("excluded_slope_count").get<std::size_t>(),
             name + ": excluded-slope set");
    std::set<long> seen;
    for (const auto& sample : doc.at("bound_function").at("samples"))
      if (!sample.at("total").is_null()) seen.insert(sample.at("total").get<long>());
    std::ostringstream os;
    os << name << " {";
    for (long v : seen) os << (v == *seen.begin() ? "" : ", ") << v;
    os << "}";
    totals += (totals.empty() ? "" : "; ") + os.str();
    t.expect(doc.at("bound_function").at("constant").get<bool>(),
             "bound is not constant in the slope (sampled totals: " + os.str() +
                 "); M_i(q/p) = max of q*v.p - p*v.q over the polygon grows with |p| + |q|");
  }
  return t.verdict("pipeline complete, excluded sets finite, constant bounds; totals " + totals);
}

// 10. Golden files reproduced byte for byte on two consecutive runs.
Verdict golden_files() {
  Tally t;
  const auto cases = load_cli_cases(kGolden / "cases.txt", kData, scratch());
  t.expect(!cases.empty(), "no cases");
  for (const auto& c : cases) {
    const CliRun first = run_case(c), second = run_case(c);
    t.expect(first.code == 0, c.name + ": exit " + std::to_string(first.code));
    t.expect(first.out == second.out && first.svg == second.svg, c.name + ": runs differ");
    t.expect(first.out == slurp(kGolden / (c.name + ".json")), c.name + ": differs from golden file");
    if (!first.svg.empty()) t.expect(first.svg == slurp(kGolden / (c.name + ".svg")), c.name + ": svg differs");
  }
  return t.verdict(std::to_string(cases.size()) + " cases");
}

struct Criterion {
  const char* title;
  std::function<Verdict()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria = {
      {"class count of the M = 3 band", band_count},
      {"product consistency", product_consistency},
      {"Frohman-Gelca isomorphism", frohman_gelca},
      {"translated relations", translation_oracle},
      {"annihilator oracle", annihilator_oracle},
      {"rewriting soundness and termination", rewriting_soundness},
      {"class count cross-validation", count_cross_validation},
      {"meridian filling", meridian_filling},
      {"report pipeline and constant bound", report_pipeline},
      {"CLI golden files", golden_files},
  };
  const int only = argc > 1 ? std::atoi(argv[1]) : 0;
  if (only < 0 || only > static_cast<int>(criteria.size())) {
    std::fprintf(stderr, "usage: %s [criterion 1-%zu]\n", argv[0], criteria.size());
    return 2;
  }
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (only && static_cast<int>(i) + 1 != only) continue;
    Verdict v;
    try {
      v = criteria[i].run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    if (!v.pass) ++failures;
    std::printf("criterion %zu: %s  %s: %s\n", i + 1, v.pass ? "PASS" : "FAIL", criteria[i].title, v.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}

#include "skein/filling.hpp"

namespace skein {

FillingReport analyze_filling(const std::vector<NewtonPolygon>& polygons, const FillingSlope& s) {
  FillingReport out;
  out.slope = s;
  for (const auto& poly : polygons) out.excluded_slopes.merge(slopes(poly));
  out.excluded = out.excluded_slopes.contains(s);
  if (out.excluded) return out;
  long total = 0;
  for (std::size_t i = 0; i < polygons.size(); ++i) {
    GeneratorBand g;
    g.generator = i;
    g.band = band_pair(s.p(), s.q(), polygons[i]);
    g.zero = polygons[i].kind() == PolygonKind::Point;
    if (!g.zero) {
      g.classes = enumerate_classes(g.band);
      g.bound = static_cast<long>(g.classes.size());
      if (g.bound != count_classes(g.band.M))
        throw InvariantError("class enumeration disagrees with 3M + 2 for generator " + std::to_string(i));
    }
    total += g.bound;
    out.generators.push_back(std::move(g));
  }
  out.total = total;
  return out;
}

}  // namespace skein

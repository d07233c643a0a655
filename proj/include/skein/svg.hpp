#pragma once

#include <string>
#include <vector>

#include "skein/filling.hpp"

namespace skein {

/// Band diagram at one slope, one panel per generator: the lattice window, the
/// Newton polygon, the band |lambda| <= M in red, the strip 0 <= epsilon <= 1 in
/// blue and the spanning classes (both representatives of each class). At an
/// excluded slope the panels show the polygons with the offending edges marked.
/// The viewport depends only on the polygon and class extents, so the output is
/// a pure function of the input.
std::string filling_diagram(const std::vector<NewtonPolygon>& polygons, const FillingReport& report);

}  // namespace skein

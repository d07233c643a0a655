#include "skein/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace skein {

namespace {

constexpr double kCell = 24.0;
constexpr double kMargin = 24.0;
constexpr double kTitle = 28.0;

struct Point2 {
  double x, y;
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v == 0.0 ? 0.0 : v);
  return buf;
}

std::string escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += c;
    }
  }
  return out;
}

/// The part of polygon on which a*x + b*y <= c (Sutherland-Hodgman step).
std::vector<Point2> clip(const std::vector<Point2>& polygon, double a, double b, double c) {
  std::vector<Point2> out;
  for (std::size_t i = 0; i < polygon.size(); ++i) {
    const Point2& p = polygon[i];
    const Point2& q = polygon[(i + 1) % polygon.size()];
    const double fp = a * p.x + b * p.y - c, fq = a * q.x + b * q.y - c;
    if (fp <= 0) out.push_back(p);
    if ((fp < 0 && fq > 0) || (fp > 0 && fq < 0)) {
      const double t = fp / (fp - fq);
      out.push_back({p.x + t * (q.x - p.x), p.y + t * (q.y - p.y)});
    }
  }
  return out;
}

/// The strip lo <= form <= hi inside the square window [-r, r]^2.
std::vector<Point2> strip(const ExponentPair& form, double lo, double hi, int r) {
  std::vector<Point2> square = {{-double(r), -double(r)}, {double(r), -double(r)}, {double(r), double(r)},
                                {-double(r), double(r)}};
  square = clip(square, form.p, form.q, hi);
  return clip(square, -form.p, -form.q, -lo);
}

class Panel {
 public:
  Panel(double left, int radius) : left_(left), radius_(radius) {}

  double width() const { return 2 * radius_ * kCell + 2 * kMargin; }
  double x(double p) const { return left_ + kMargin + (p + radius_) * kCell; }
  double y(double q) const { return kTitle + kMargin + (radius_ - q) * kCell; }

  void polygon(std::ostream& os, const std::vector<Point2>& pts, const std::string& style) const {
    if (pts.empty()) return;
    os << "  <polygon points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) os << (i ? " " : "") << num(x(pts[i].x)) << ',' << num(y(pts[i].y));
    os << "\" " << style << "/>\n";
  }

  void line(std::ostream& os, Point2 a, Point2 b, const std::string& style) const {
    os << "  <line x1=\"" << num(x(a.x)) << "\" y1=\"" << num(y(a.y)) << "\" x2=\"" << num(x(b.x)) << "\" y2=\""
       << num(y(b.y)) << "\" " << style << "/>\n";
  }

  void dot(std::ostream& os, const ExponentPair& a, double r, const std::string& style) const {
    os << "  <circle cx=\"" << num(x(a.p)) << "\" cy=\"" << num(y(a.q)) << "\" r=\"" << num(r) << "\" " << style
       << "/>\n";
  }

  void grid(std::ostream& os) const {
    line(os, {-double(radius_), 0}, {double(radius_), 0}, "stroke=\"#999999\" stroke-width=\"1\"");
    line(os, {0, -double(radius_)}, {0, double(radius_)}, "stroke=\"#999999\" stroke-width=\"1\"");
    for (int p = -radius_; p <= radius_; ++p)
      for (int q = -radius_; q <= radius_; ++q) dot(os, {p, q}, 1.5, "fill=\"#bbbbbb\"");
  }

  void title(std::ostream& os, const std::string& text) const {
    os << "  <text x=\"" << num(left_ + kMargin) << "\" y=\"" << num(kTitle - 8)
       << "\" font-family=\"monospace\" font-size=\"13\">" << escape(text) << "</text>\n";
  }

 private:
  double left_;
  int radius_;
};

std::vector<Point2> to_points(const std::vector<ExponentPair>& vs) {
  std::vector<Point2> out;
  for (const auto& v : vs) out.push_back({double(v.p), double(v.q)});
  return out;
}

int extent(const NewtonPolygon& poly, const GeneratorBand* g) {
  int r = 3;
  for (const auto& v : poly.vertices()) r = std::max({r, std::abs(v.p) + 1, std::abs(v.q) + 1});
  if (g)
    for (const auto& c : g->classes)
      r = std::max({r, std::abs(c.representative().p) + 1, std::abs(c.representative().q) + 1});
  return r;
}

void draw_polygon(std::ostream& os, const Panel& panel, const NewtonPolygon& poly) {
  const auto& vs = poly.vertices();
  if (vs.size() >= 3)
    panel.polygon(os, to_points(vs), "fill=\"#dddddd\" fill-opacity=\"0.6\" stroke=\"black\" stroke-width=\"2\"");
  else if (vs.size() == 2)
    panel.line(os, {double(vs[0].p), double(vs[0].q)}, {double(vs[1].p), double(vs[1].q)},
               "stroke=\"black\" stroke-width=\"2\"");
  for (const auto& v : vs) panel.dot(os, v, 4, "fill=\"black\"");
}

/// Edges of poly parallel to the direction of s.
void mark_edges(std::ostream& os, const Panel& panel, const NewtonPolygon& poly, const FillingSlope& s) {
  const auto& vs = poly.vertices();
  if (vs.size() < 2) return;
  const std::size_t edges = vs.size() == 2 ? 1 : vs.size();
  for (std::size_t i = 0; i < edges; ++i) {
    const ExponentPair& a = vs[i];
    const ExponentPair& b = vs[(i + 1) % vs.size()];
    if (twist(b - a, s.direction()) == 0)
      panel.line(os, {double(a.p), double(a.q)}, {double(b.p), double(b.q)},
                 "stroke=\"#cc0000\" stroke-width=\"4\"");
  }
}

}  // namespace

std::string filling_diagram(const std::vector<NewtonPolygon>& polygons, const FillingReport& report) {
  std::ostringstream body;
  double left = 0, height = 0;
  for (std::size_t i = 0; i < polygons.size(); ++i) {
    const GeneratorBand* g = report.excluded ? nullptr : &report.generators.at(i);
    const int r = extent(polygons[i], g);
    const Panel panel(left, r);
    body << " <g id=\"generator-" << i << "\">\n";
    if (g && !g->zero) {
      const BandPair& bp = g->band;
      panel.polygon(body, strip(bp.lam, -bp.M, bp.M, r), "fill=\"#ff0000\" fill-opacity=\"0.15\" stroke=\"#cc0000\"");
      panel.polygon(body, strip(bp.eps, 0, 1, r), "fill=\"#0000ff\" fill-opacity=\"0.12\" stroke=\"#0000cc\"");
    }
    panel.grid(body);
    draw_polygon(body, panel, polygons[i]);
    std::string caption = "generator " + std::to_string(i) + ", slope " + to_string(report.slope);
    if (report.excluded) {
      mark_edges(body, panel, polygons[i], report.slope);
      caption += ": excluded";
    } else if (g->zero) {
      caption += ": zero";
    } else {
      for (const auto& c : g->classes) {
        panel.dot(body, c.representative(), 3.5, "fill=\"#008800\"");
        panel.dot(body, -c.representative(), 3.5, "fill=\"none\" stroke=\"#008800\"");
      }
      caption += ": M = " + std::to_string(g->band.M) + ", bound " + std::to_string(g->bound);
    }
    panel.title(body, caption);
    body << " </g>\n";
    left += panel.width();
    height = std::max(height, kTitle + panel.width());
  }
  if (polygons.empty()) height = kTitle;
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(left) << "\" height=\"" << num(height)
     << "\" viewBox=\"0 0 " << num(left) << ' ' << num(height) << "\">\n"
     << " <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
     << body.str() << "</svg>\n";
  return os.str();
}

}  // namespace skein

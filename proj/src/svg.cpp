#include "miquel/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <vector>

namespace miquel {

namespace {

using Q = Rational;

struct Labeled {
  std::string label;
  Vec2 at;
};

struct Disc {
  Vec2 center;
  double radius;
};

struct Scene {
  std::array<Vec2, 3> triangle;
  std::vector<std::pair<Vec2, Vec2>> segments;
  std::vector<Disc> circles;
  std::vector<Labeled> points;
};

Disc disc(const Circle<Q>& c, const TriangleMetric<Q>& m) {
  const CircleGeometry g = circle_geometry(c);
  return {cartesian_embed(g.center, m), std::sqrt(std::max(0.0, g.radius2.to_double()))};
}

/// Longest segment spanned by points that lie on one line.
std::pair<Vec2, Vec2> span(const std::vector<Vec2>& pts) {
  std::pair<Vec2, Vec2> best{pts[0], pts[0]};
  double longest = -1;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      const double d = std::hypot(pts[i].x - pts[j].x, pts[i].y - pts[j].y);
      if (d > longest) {
        longest = d;
        best = {pts[i], pts[j]};
      }
    }
  }
  return best;
}

Scene build_scene(const MiquelFigure& f, int figure) {
  if (figure != 1 && figure != 2) throw Error(ErrorKind::InvalidConfig, "figure must be 1 or 2");
  const auto& m = f.metric;
  auto at = [&](const ArealPoint<Q>& p) { return cartesian_embed(p, m); };
  Scene s;
  const Vec2 a = at(vertex_a<Q>()), b = at(vertex_b<Q>()), c = at(vertex_c<Q>());
  const Vec2 l = at(f.feet.l), mm = at(f.feet.m), n = at(f.feet.n);
  s.triangle = {a, b, c};
  s.points = {{"A", a}, {"B", b}, {"C", c}, {"L", l}, {"M", mm}, {"N", n}};
  if (figure == 1) {
    const Vec2 p = at(f.p);
    const std::array<Vec2, 3> uvw{at(f.uvw[0]), at(f.uvw[1]), at(f.uvw[2])};
    s.segments.push_back(span({a, l, p, uvw[0]}));
    s.segments.push_back(span({b, mm, p, uvw[1]}));
    s.segments.push_back(span({c, n, p, uvw[2]}));
    for (const auto& circle : f.miquel_circles) s.circles.push_back(disc(circle, m));
    s.circles.push_back(disc(f.uvw_circle, m));
    s.points.push_back({"P", p});
    s.points.push_back({"Q", at(f.q)});
    s.points.push_back({"U", uvw[0]});
    s.points.push_back({"V", uvw[1]});
    s.points.push_back({"W", uvw[2]});
  } else {
    if (f.r_tangent) throw Error(ErrorKind::DegeneratePoint, "point R", "circles AQL, BQM, CQN touch at Q");
    const Vec2 q = at(f.q), r = at(f.r);
    for (const auto& circle : f.q_circles) s.circles.push_back(disc(circle, m));
    s.segments.push_back({q, r});
    s.points.push_back({"Q", q});
    s.points.push_back({"R", r});
  }
  return s;
}

SvgFrame fit(const Scene& s) {
  double lo_x = std::numeric_limits<double>::infinity(), lo_y = lo_x;
  double hi_x = -lo_x, hi_y = -lo_x;
  auto include = [&](Vec2 p, double r) {
    lo_x = std::min(lo_x, p.x - r);
    lo_y = std::min(lo_y, p.y - r);
    hi_x = std::max(hi_x, p.x + r);
    hi_y = std::max(hi_y, p.y + r);
  };
  for (const auto& p : s.triangle) include(p, 0);
  for (const auto& p : s.points) include(p.at, 0);
  for (const auto& c : s.circles) include(c.center, c.radius);
  SvgFrame frame;
  const double inner = frame.size - 2 * frame.margin;
  const double w = hi_x - lo_x, h = hi_y - lo_y;
  frame.scale = inner / std::max({w, h, std::numeric_limits<double>::min()});
  frame.offset_x = frame.margin + (inner - w * frame.scale) / 2 - lo_x * frame.scale;
  frame.offset_y = frame.margin + (inner - h * frame.scale) / 2 - lo_y * frame.scale;
  return frame;
}

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  std::string out = buf;
  return out == "-0.000000" ? "0.000000" : out;
}

}  // namespace

SvgFrame figure_frame(const MiquelFigure& fig, int figure) { return fit(build_scene(fig, figure)); }

std::string render_svg(const MiquelFigure& fig, int figure) {
  const Scene s = build_scene(fig, figure);
  const SvgFrame frame = fit(s);
  const std::string size = num(frame.size);
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << size << "\" height=\"" << size
     << "\" viewBox=\"0 0 " << size << " " << size << "\">\n";
  os << "<rect x=\"0\" y=\"0\" width=\"" << size << "\" height=\"" << size << "\" fill=\"white\"/>\n";

  os << "<g fill=\"none\" stroke=\"black\" stroke-width=\"1.5\">\n<polygon points=\"";
  for (std::size_t i = 0; i < 3; ++i) {
    const Vec2 p = frame.to_canvas(s.triangle[i]);
    os << (i ? " " : "") << num(p.x) << "," << num(p.y);
  }
  os << "\"/>\n</g>\n";

  os << "<g stroke=\"#555555\" stroke-width=\"1\" stroke-dasharray=\"6,4\">\n";
  for (const auto& [p0, p1] : s.segments) {
    const Vec2 a = frame.to_canvas(p0), b = frame.to_canvas(p1);
    os << "<line x1=\"" << num(a.x) << "\" y1=\"" << num(a.y) << "\" x2=\"" << num(b.x) << "\" y2=\"" << num(b.y)
       << "\"/>\n";
  }
  os << "</g>\n";

  os << "<g fill=\"none\" stroke=\"#1f5fa8\" stroke-width=\"1.2\">\n";
  for (const auto& c : s.circles) {
    const Vec2 p = frame.to_canvas(c.center);
    os << "<circle cx=\"" << num(p.x) << "\" cy=\"" << num(p.y) << "\" r=\"" << num(c.radius * frame.scale)
       << "\"/>\n";
  }
  os << "</g>\n";

  constexpr double kMarker = 6;
  os << "<g fill=\"#b22222\" stroke=\"none\">\n";
  for (const auto& p : s.points) {
    const Vec2 v = frame.to_canvas(p.at);
    os << "<rect id=\"pt-" << p.label << "\" x=\"" << num(v.x - kMarker / 2) << "\" y=\"" << num(v.y - kMarker / 2)
       << "\" width=\"" << num(kMarker) << "\" height=\"" << num(kMarker) << "\"/>\n";
  }
  os << "</g>\n";

  // Labels of coincident points are stacked upward.
  os << "<g font-family=\"serif\" font-size=\"20\" fill=\"black\">\n";
  for (std::size_t i = 0; i < s.points.size(); ++i) {
    const Vec2 v = frame.to_canvas(s.points[i].at);
    int below = 0;
    for (std::size_t j = 0; j < i; ++j) {
      const Vec2 w = frame.to_canvas(s.points[j].at);
      if (std::hypot(v.x - w.x, v.y - w.y) < 1) ++below;
    }
    os << "<text x=\"" << num(v.x + 6) << "\" y=\"" << num(v.y - 6 - 20 * below) << "\">" << s.points[i].label
       << "</text>\n";
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

}  // namespace miquel

#include "miquel/areal.hpp"

#include <cmath>

namespace miquel {

Rational sixteen_area_squared(const TriangleMetric<Rational>& m) {
  const Rational two(2);
  return two * (m.a2 * m.b2 + m.b2 * m.c2 + m.c2 * m.a2) - (m.a2 * m.a2 + m.b2 * m.b2 + m.c2 * m.c2);
}

void validate_metric(const TriangleMetric<Rational>& m) {
  if (m.a2.sign() <= 0 || m.b2.sign() <= 0 || m.c2.sign() <= 0) {
    throw Error(ErrorKind::InvalidMetric, "squared side lengths must be positive");
  }
  if (sixteen_area_squared(m).sign() <= 0) {
    throw Error(ErrorKind::InvalidMetric,
                "side lengths violate the strict triangle inequality (16*area^2 = " +
                    sixteen_area_squared(m).to_string() + ")");
  }
}

ArealPoint<Rational> unit_sum(const ArealPoint<Rational>& p) {
  const Rational s = p.sum();
  if (s.is_zero()) throw Error(ErrorKind::PointAtInfinity, "point on the line at infinity");
  return {p.x / s, p.y / s, p.z / s};
}

Vec2 cartesian_embed(const ArealPoint<Rational>& p, const TriangleMetric<Rational>& m) {
  validate_metric(m);
  // Normalize exactly first so nearly-infinite points do not cancel in floating point.
  const ArealPoint<Rational> q = unit_sum(p);
  const double a = std::sqrt(m.a2.to_double());
  // x_A = (c² + a² − b²) / (2a); y_A² = c² − x_A² = 16·area² / (4a²).
  const double xa = (m.c2 + m.a2 - m.b2).to_double() / (2.0 * a);
  const double ya = std::sqrt(sixteen_area_squared(m).to_double()) / (2.0 * a);
  return {q.x.to_double() * xa + q.z.to_double() * a, q.x.to_double() * ya};
}

CircleGeometry circle_geometry(const Circle<Rational>& c) {
  const ArealPoint<Rational> center = unit_sum(circle_center(c));
  Rational r2 = circle_eval(c, center) / c.scale;
  return {center, std::move(r2)};
}

}  // namespace miquel

#pragma once

#include <optional>
#include <utility>

#include "miquel/ring.hpp"

namespace miquel {

/// Squared side lengths a² = |BC|², b² = |CA|², c² = |AB|².
template <ExactRing R>
struct TriangleMetric {
  R a2;
  R b2;
  R c2;

  friend bool operator==(const TriangleMetric&, const TriangleMetric&) = default;
};

/// Homogeneous areal coordinates (x : y : z) relative to ABC.
template <ExactRing R>
struct ArealPoint {
  R x;
  R y;
  R z;

  Triple<R> coords() const { return {x, y, z}; }
  static ArealPoint from(const Triple<R>& t) { return {t[0], t[1], t[2]}; }
  R sum() const { return x + y + z; }
  bool is_zero_vector() const { return is_zero(x) && is_zero(y) && is_zero(z); }
  bool at_infinity() const { return is_zero(sum()); }

  friend bool operator==(const ArealPoint&, const ArealPoint&) = default;
};

/// The line alpha·x + beta·y + gamma·z = 0.
template <ExactRing R>
struct ArealLine {
  R alpha;
  R beta;
  R gamma;

  Triple<R> coeffs() const { return {alpha, beta, gamma}; }
  R eval(const ArealPoint<R>& p) const { return alpha * p.x + beta * p.y + gamma * p.z; }
  bool contains(const ArealPoint<R>& p) const { return is_zero(eval(p)); }

  friend bool operator==(const ArealLine&, const ArealLine&) = default;
};

/// scale·(a²yz + b²zx + c²xy) + (x+y+z)(ux + vy + wz) = 0.
///
/// Over rationals circles are kept with scale = 1. Over polynomials the
/// fraction-free solver leaves a common factor on every coefficient, so the
/// scale is carried explicitly.
template <ExactRing R>
struct Circle {
  R u;
  R v;
  R w;
  TriangleMetric<R> metric;
  R scale = R(1);

  static Circle circumcircle(const TriangleMetric<R>& m) { return {R(0), R(0), R(0), m, R(1)}; }

  friend bool operator==(const Circle&, const Circle&) = default;
};

/// u x² + v y² + w z² + 2f yz + 2g zx + 2h xy = 0.
template <ExactRing R>
struct Conic {
  R u;
  R v;
  R w;
  R f;
  R g;
  R h;

  std::array<R, 6> coeffs() const { return {u, v, w, f, g, h}; }

  friend bool operator==(const Conic&, const Conic&) = default;
};

template <ExactRing R>
ArealPoint<R> vertex_a() { return {R(1), R(0), R(0)}; }
template <ExactRing R>
ArealPoint<R> vertex_b() { return {R(0), R(1), R(0)}; }
template <ExactRing R>
ArealPoint<R> vertex_c() { return {R(0), R(0), R(1)}; }

template <ExactRing R>
ArealPoint<R> normalized(const ArealPoint<R>& p) {
  return ArealPoint<R>::from(normalize_content(p.coords()));
}

template <ExactRing R>
ArealLine<R> normalized(const ArealLine<R>& l) {
  const auto c = normalize_content(l.coeffs());
  return {c[0], c[1], c[2]};
}

template <ExactRing R>
bool same_point(const ArealPoint<R>& p, const ArealPoint<R>& q) {
  return proportional(p.coords(), q.coords());
}

template <ExactRing R>
Triple<R> cross(const Triple<R>& p, const Triple<R>& q) {
  return {p[1] * q[2] - p[2] * q[1], p[2] * q[0] - p[0] * q[2], p[0] * q[1] - p[1] * q[0]};
}

/// Throws Error(CoincidentPoints) when p and q are the same projective point.
template <ExactRing R>
ArealLine<R> line_through(const ArealPoint<R>& p, const ArealPoint<R>& q) {
  const auto c = cross(p.coords(), q.coords());
  if (all_zero(c)) throw Error(ErrorKind::CoincidentPoints, "line through coincident points");
  return {c[0], c[1], c[2]};
}

/// Throws Error(CoincidentLines) when r and s are the same line.
template <ExactRing R>
ArealPoint<R> line_intersection(const ArealLine<R>& r, const ArealLine<R>& s) {
  const auto c = cross(r.coeffs(), s.coeffs());
  if (all_zero(c)) throw Error(ErrorKind::CoincidentLines, "intersection of coincident lines");
  return ArealPoint<R>::from(c);
}

template <ExactRing R>
R points_det(const ArealPoint<R>& p, const ArealPoint<R>& q, const ArealPoint<R>& r) {
  return det3<R>({p.coords(), q.coords(), r.coords()});
}

template <ExactRing R>
bool collinear(const ArealPoint<R>& p, const ArealPoint<R>& q, const ArealPoint<R>& r) {
  return is_zero(points_det(p, q, r));
}

/// a²yz + b²zx + c²xy at p.
template <ExactRing R>
R circumcircle_part(const TriangleMetric<R>& m, const ArealPoint<R>& p) {
  return m.a2 * p.y * p.z + m.b2 * p.z * p.x + m.c2 * p.x * p.y;
}

/// Left side of the circle equation at p; homogeneous of degree 2 in p.
template <ExactRing R>
R circle_eval(const Circle<R>& c, const ArealPoint<R>& p) {
  return c.scale * circumcircle_part(c.metric, p) + p.sum() * (c.u * p.x + c.v * p.y + c.w * p.z);
}

template <ExactRing R>
bool point_on_circle(const Circle<R>& c, const ArealPoint<R>& p) {
  return is_zero(circle_eval(c, p));
}

/// B(p, q) = S(p+q) − S(p) − S(q), the polarization of the circle's form.
template <ExactRing R>
R polar_bilinear(const Circle<R>& c, const ArealPoint<R>& p, const ArealPoint<R>& q) {
  const ArealPoint<R> s{p.x + q.x, p.y + q.y, p.z + q.z};
  return circle_eval(c, s) - circle_eval(c, p) - circle_eval(c, q);
}

/// Brings a fraction-free circle to canonical form: scale 1 over rationals,
/// joint content removed over polynomials.
template <ExactRing R>
Circle<R> canonical(const Circle<R>& c) {
  if constexpr (std::is_same_v<R, Rational>) {
    if (c.scale.is_zero()) return c;
    return {c.u / c.scale, c.v / c.scale, c.w / c.scale, c.metric, Rational(1)};
  } else {
    const auto n = normalize_content(std::array<R, 4>{c.scale, c.u, c.v, c.w});
    return {n[1], n[2], n[3], c.metric, n[0]};
  }
}

/// Circle through three finite, non-collinear points, solved by Cramer's
/// rule without division: with s_i = x_i + y_i + z_i and K_i the
/// circumcircle part at p_i, the system P·(u,v,w) = −K_i/s_i is cleared by
/// s1·s2·s3, so scale = det(P)·s1·s2·s3.
///
/// Throws Error(PointAtInfinity) or Error(CollinearPoints).
template <ExactRing R>
Circle<R> circle_through(const ArealPoint<R>& p1, const ArealPoint<R>& p2, const ArealPoint<R>& p3,
                         const TriangleMetric<R>& metric) {
  const std::array<const ArealPoint<R>*, 3> pts = {&p1, &p2, &p3};
  std::array<R, 3> s;
  for (std::size_t i = 0; i < 3; ++i) {
    s[i] = pts[i]->sum();
    if (is_zero(s[i])) throw Error(ErrorKind::PointAtInfinity, "circle through a point at infinity");
  }
  const Matrix3<R> p = {p1.coords(), p2.coords(), p3.coords()};
  const R det_p = det3(p);
  if (is_zero(det_p)) throw Error(ErrorKind::CollinearPoints, "circle through collinear points");

  std::array<R, 3> rhs;
  for (std::size_t i = 0; i < 3; ++i) {
    rhs[i] = -(circumcircle_part(metric, *pts[i]) * s[(i + 1) % 3] * s[(i + 2) % 3]);
  }
  std::array<R, 3> sol;
  for (std::size_t col = 0; col < 3; ++col) {
    Matrix3<R> m = p;
    for (std::size_t row = 0; row < 3; ++row) m[row][col] = rhs[row];
    sol[col] = det3(m);
  }
  const Circle<R> raw{sol[0], sol[1], sol[2], metric, det_p * s[0] * s[1] * s[2]};
  return canonical(raw);
}

/// Doubled expansion: (2u, 2v, 2w, σa²+v+w, σb²+w+u, σc²+u+v).
template <ExactRing R>
Conic<R> circle_to_conic(const Circle<R>& c) {
  const R two(2);
  return {two * c.u,
          two * c.v,
          two * c.w,
          c.scale * c.metric.a2 + c.v + c.w,
          c.scale * c.metric.b2 + c.w + c.u,
          c.scale * c.metric.c2 + c.u + c.v};
}

/// Recovers the circle form of a conic known to be a circle for the given
/// metric. Throws Error(NotACircle) if the conic is not of that form.
template <ExactRing R>
Circle<R> conic_to_circle(const Conic<R>& k, const TriangleMetric<R>& metric) {
  // 2f − v − w = 2σ'a² etc.; consistency across the three sides is the test.
  const R two(2);
  const R ta = two * k.f - k.v - k.w;
  const R tb = two * k.g - k.w - k.u;
  const R tc = two * k.h - k.u - k.v;
  if (!is_zero(ta * metric.b2 - tb * metric.a2) || !is_zero(ta * metric.c2 - tc * metric.a2)) {
    throw Error(ErrorKind::NotACircle, "conic does not have the circle form for this metric");
  }
  const Circle<R> raw{metric.a2 * k.u, metric.a2 * k.v, metric.a2 * k.w, metric, ta};
  if (is_zero(raw.scale)) throw Error(ErrorKind::NotACircle, "conic has no circumcircle part");
  return canonical(raw);
}

/// Value of the doubled conic form at p.
template <ExactRing R>
R conic_eval(const Conic<R>& k, const ArealPoint<R>& p) {
  const R two(2);
  return k.u * p.x * p.x + k.v * p.y * p.y + k.w * p.z * p.z +
         two * (k.f * p.y * p.z + k.g * p.z * p.x + k.h * p.x * p.y);
}

/// Pole of the line at infinity x + y + z = 0.
/// Throws Error(DegenerateConic) if all three coordinates vanish.
template <ExactRing R>
ArealPoint<R> conic_center(const Conic<R>& k) {
  const auto& [u, v, w, f, g, h] = k;
  ArealPoint<R> c{v * w - g * v - h * w - f * f + f * g + h * f,
                  w * u - h * w - f * u - g * g + g * h + f * g,
                  u * v - f * u - g * v - h * h + h * f + g * h};
  if (c.is_zero_vector()) throw Error(ErrorKind::DegenerateConic, "center formulas all vanish");
  return c;
}

template <ExactRing R>
ArealPoint<R> circle_center(const Circle<R>& c) {
  return conic_center(circle_to_conic(c));
}

/// Determinant of the symmetric matrix of the doubled conic.
template <ExactRing R>
R conic_discriminant(const Conic<R>& k) {
  return det3<R>({Triple<R>{k.u, k.h, k.g}, Triple<R>{k.h, k.v, k.f}, Triple<R>{k.g, k.f, k.w}});
}

template <ExactRing R>
bool circle_is_nondegenerate(const Circle<R>& c) {
  return !is_zero(conic_discriminant(circle_to_conic(c)));
}

/// Common points of the two circles lie on this line: after matching the
/// quadratic parts, the difference is (x+y+z)·(line). Throws
/// Error(IdenticalCircles) if the line vanishes.
template <ExactRing R>
ArealLine<R> radical_axis(const Circle<R>& c1, const Circle<R>& c2) {
  if (!(c1.metric == c2.metric)) throw Error(ErrorKind::IdenticalCircles, "circles use different metrics");
  ArealLine<R> l{c2.scale * c1.u - c1.scale * c2.u, c2.scale * c1.v - c1.scale * c2.v,
                 c2.scale * c1.w - c1.scale * c2.w};
  if (all_zero(l.coeffs())) throw Error(ErrorKind::IdenticalCircles, "radical axis of identical circles");
  return l;
}

/// Auxiliary point on the line, not proportional to avoid: the first valid
/// candidate of (0, γ, −β), (γ, 0, −α), (β, −α, 0).
template <ExactRing R>
ArealPoint<R> auxiliary_point(const ArealLine<R>& line, const ArealPoint<R>& avoid) {
  const std::array<ArealPoint<R>, 3> candidates = {
      ArealPoint<R>{R(0), line.gamma, -line.beta},
      ArealPoint<R>{line.gamma, R(0), -line.alpha},
      ArealPoint<R>{line.beta, -line.alpha, R(0)},
  };
  for (const auto& d : candidates) {
    if (d.is_zero_vector()) continue;
    if (avoid.is_zero_vector() || !all_zero(cross(d.coords(), avoid.coords()))) return d;
  }
  throw Error(ErrorKind::ZeroVector, "no auxiliary point on the line");
}

/// Other intersection of the line with the circle, given one intersection
/// `known`. Parametrizing λ·known + μ·D gives μ(λ·B(known, D) + μ·S(D)) = 0,
/// whose second root is S(D)·known − B(known, D)·D. The result equals
/// `known` projectively exactly when the line is tangent there.
///
/// Throws Error(KnownPointNotIncident) if known is not on both.
template <ExactRing R>
ArealPoint<R> second_intersection(const ArealLine<R>& line, const Circle<R>& c, const ArealPoint<R>& known) {
  if (!line.contains(known) || !point_on_circle(c, known)) {
    throw Error(ErrorKind::KnownPointNotIncident, "known point is not on the line and circle");
  }
  const ArealPoint<R> d = auxiliary_point(line, known);
  const R sd = circle_eval(c, d);
  if (is_zero(sd)) return normalized(d);
  const R b = polar_bilinear(c, known, d);
  return normalized(ArealPoint<R>{sd * known.x - b * d.x, sd * known.y - b * d.y, sd * known.z - b * d.z});
}

// --- rational-only helpers ---------------------------------------------------

struct Vec2 {
  double x = 0;
  double y = 0;
};

/// Throws Error(InvalidMetric) unless a², b², c² > 0 and
/// 2(a²b² + b²c² + c²a²) − (a⁴ + b⁴ + c⁴) > 0.
void validate_metric(const TriangleMetric<Rational>& m);

/// Sixteen times the squared area.
Rational sixteen_area_squared(const TriangleMetric<Rational>& m);

/// B = (0,0), C = (a,0), A above the x-axis. Throws Error(PointAtInfinity)
/// or Error(InvalidMetric).
Vec2 cartesian_embed(const ArealPoint<Rational>& p, const TriangleMetric<Rational>& m);

/// Exact center (coordinates summing to 1) and squared radius of a circle.
struct CircleGeometry {
  ArealPoint<Rational> center;
  Rational radius2;
};

/// For normalized coordinates the form equals minus the power of the point,
/// so the squared radius is S(center) / scale.
CircleGeometry circle_geometry(const Circle<Rational>& c);

/// Coordinates scaled to sum to 1. Throws Error(PointAtInfinity).
ArealPoint<Rational> unit_sum(const ArealPoint<Rational>& p);

}  // namespace miquel

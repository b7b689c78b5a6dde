#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "miquel/areal.hpp"

namespace miquel {

/// Triangle metric plus the Cevian point P = (l : m : n).
template <ExactRing R>
class CevianConfig {
 public:
  /// Throws Error(InvalidConfig) if any of l, m, n, l+m, m+n, n+l vanishes,
  /// and, over rationals, Error(InvalidMetric) for an impossible triangle.
  CevianConfig(TriangleMetric<R> metric, ArealPoint<R> p) : metric_(std::move(metric)), p_(std::move(p)) {
    if constexpr (std::is_same_v<R, Rational>) validate_metric(metric_);
    if (is_zero(p_.x)) throw Error(ErrorKind::InvalidConfig, "l must be nonzero");
    if (is_zero(p_.y)) throw Error(ErrorKind::InvalidConfig, "m must be nonzero");
    if (is_zero(p_.z)) throw Error(ErrorKind::InvalidConfig, "n must be nonzero");
    if (is_zero(p_.x + p_.y)) throw Error(ErrorKind::InvalidConfig, "l+m must be nonzero");
    if (is_zero(p_.y + p_.z)) throw Error(ErrorKind::InvalidConfig, "m+n must be nonzero");
    if (is_zero(p_.z + p_.x)) throw Error(ErrorKind::InvalidConfig, "n+l must be nonzero");
  }

  const TriangleMetric<R>& metric() const { return metric_; }
  const ArealPoint<R>& p() const { return p_; }
  const R& l() const { return p_.x; }
  const R& m() const { return p_.y; }
  const R& n() const { return p_.z; }
  const R& a2() const { return metric_.a2; }
  const R& b2() const { return metric_.b2; }
  const R& c2() const { return metric_.c2; }

 private:
  TriangleMetric<R> metric_;
  ArealPoint<R> p_;
};

/// The symbolic configuration: metric (A, B, C), P = (L, M, N).
CevianConfig<MultiPoly> symbolic_config();

// --- cyclic relabeling ---------------------------------------------------------
//
// shifted() relabels A→B→C so that vertex B of the original triangle plays
// the role of A. A point (x, y, z) has coordinates (y, z, x) in the shifted
// frame, so results computed there come back through unshift().

template <ExactRing R>
CevianConfig<R> shifted(const CevianConfig<R>& cfg) {
  return CevianConfig<R>({cfg.b2(), cfg.c2(), cfg.a2()}, {cfg.m(), cfg.n(), cfg.l()});
}

template <ExactRing R>
ArealPoint<R> unshift(const ArealPoint<R>& p) {
  return {p.z, p.x, p.y};
}

template <ExactRing R>
Circle<R> unshift(const Circle<R>& c) {
  return {c.w, c.u, c.v, {c.metric.c2, c.metric.a2, c.metric.b2}, c.scale};
}

template <ExactRing R>
ArealPoint<R> shift(const ArealPoint<R>& p) {
  return {p.y, p.z, p.x};
}

/// {f(cfg), its image for vertex B, its image for vertex C}, all in the
/// original frame.
template <ExactRing R, class F>
auto cyclic_images(const CevianConfig<R>& cfg, F&& f) {
  const CevianConfig<R> once = shifted(cfg);
  const CevianConfig<R> twice = shifted(once);
  using T = decltype(f(cfg));
  return std::array<T, 3>{f(cfg), unshift(f(once)), unshift(unshift(f(twice)))};
}

// --- Cevian feet -----------------------------------------------------------------

template <ExactRing R>
struct SideTriple {
  ArealPoint<R> l;  // on BC
  ArealPoint<R> m;  // on CA
  ArealPoint<R> n;  // on AB
};

template <ExactRing R>
SideTriple<R> cevian_feet(const CevianConfig<R>& cfg) {
  return {{R(0), cfg.m(), cfg.n()}, {cfg.l(), R(0), cfg.n()}, {cfg.l(), cfg.m(), R(0)}};
}

/// Throws Error(MalformedSidePoint) unless L = (0, m1, n1), M = (l2, 0, n2),
/// N = (l3, m3, 0) with all other coordinates nonzero.
template <ExactRing R>
void check_side_points(const SideTriple<R>& s) {
  auto on_side = [](const ArealPoint<R>& p, int zero_index, const char* name) {
    const Triple<R> c = p.coords();
    for (int i = 0; i < 3; ++i) {
      if ((i == zero_index) != is_zero(c[static_cast<std::size_t>(i)])) {
        throw Error(ErrorKind::MalformedSidePoint,
                    std::string(name) + " must lie on its sideline away from the vertices");
      }
    }
  };
  on_side(s.l, 0, "L");
  on_side(s.m, 1, "M");
  on_side(s.n, 2, "N");
}

/// Ceva: m1·n2·l3 = n1·l2·m3.
template <ExactRing R>
bool is_cevian_triple(const SideTriple<R>& s) {
  check_side_points(s);
  return is_zero(s.l.y * s.m.z * s.n.x - s.l.z * s.m.x * s.n.y);
}

// --- Miquel circles and point ----------------------------------------------------

/// Circle AMN: u = 0, v = −c²l/(l+m), w = −b²l/(n+l), cleared of denominators.
template <ExactRing R>
Circle<R> circle_amn_closed(const CevianConfig<R>& cfg) {
  const R lm = cfg.l() + cfg.m();
  const R nl = cfg.n() + cfg.l();
  return canonical(Circle<R>{R(0), -(cfg.c2() * cfg.l() * nl), -(cfg.b2() * cfg.l() * lm), cfg.metric(), lm * nl});
}

/// {AMN, BNL, CLM}.
template <ExactRing R>
std::array<Circle<R>, 3> miquel_circles_closed(const CevianConfig<R>& cfg) {
  return cyclic_images(cfg, [](const CevianConfig<R>& c) { return circle_amn_closed(c); });
}

/// Unnormalized Miquel point in closed form.
template <ExactRing R>
ArealPoint<R> miquel_point_closed_raw(const CevianConfig<R>& cfg) {
  const R &a2 = cfg.a2(), &b2 = cfg.b2(), &c2 = cfg.c2();
  const R &l = cfg.l(), &m = cfg.m(), &n = cfg.n();
  const R lm = l + m, mn = m + n, nl = n + l;
  const R ta = a2 * m * n * lm * nl;
  const R tb = b2 * n * l * lm * mn;
  const R tc = c2 * l * m * nl * mn;
  return {a2 * lm * nl * (-ta + tb + tc), b2 * lm * mn * (ta - tb + tc), c2 * mn * nl * (ta + tb - tc)};
}

/// Throws Error(DegenerateQ) if the closed form yields the zero vector.
template <ExactRing R>
ArealPoint<R> miquel_point_closed(const CevianConfig<R>& cfg) {
  const ArealPoint<R> q = miquel_point_closed_raw(cfg);
  if (q.is_zero_vector()) throw Error(ErrorKind::DegenerateQ, "closed-form Miquel point is the zero vector");
  return normalized(q);
}

/// Circle through three points with degeneracies reported against `name`.
template <ExactRing R>
Circle<R> named_circle(const std::string& name, const ArealPoint<R>& p1, const ArealPoint<R>& p2,
                       const ArealPoint<R>& p3, const TriangleMetric<R>& metric) {
  try {
    return circle_through(p1, p2, p3, metric);
  } catch (const Error& e) {
    throw Error(ErrorKind::DegenerateCircle, name, e.what());
  }
}

/// The generic Miquel construction for any side points (Cevian or not):
/// the radical axis of AMN and BNL meets AMN again at Q besides N.
///
/// Throws Error(DegenerateCircle) or Error(MiquelVerificationFailed).
template <ExactRing R>
ArealPoint<R> miquel_point_generic(const SideTriple<R>& s, const TriangleMetric<R>& metric) {
  check_side_points(s);
  const Circle<R> amn = named_circle("circle AMN", vertex_a<R>(), s.m, s.n, metric);
  const Circle<R> bnl = named_circle("circle BNL", vertex_b<R>(), s.n, s.l, metric);
  const Circle<R> clm = named_circle("circle CLM", vertex_c<R>(), s.l, s.m, metric);
  const ArealLine<R> axis = radical_axis(amn, bnl);
  const ArealPoint<R> q = second_intersection(axis, amn, s.n);
  if (!point_on_circle(clm, q)) {
    throw Error(ErrorKind::MiquelVerificationFailed, "Miquel point", "generic Q is not on circle CLM");
  }
  return q;
}

// --- U, V, W and circle UVW --------------------------------------------------------

/// Second intersection of AP with circle AMN, unnormalized.
template <ExactRing R>
ArealPoint<R> cevian_circle_point_closed_raw(const CevianConfig<R>& cfg) {
  const R &a2 = cfg.a2(), &b2 = cfg.b2(), &c2 = cfg.c2();
  const R &l = cfg.l(), &m = cfg.m(), &n = cfg.n();
  const R lm = l + m, mn = m + n, nl = n + l;
  const R k = b2 * n * n * lm + c2 * m * m * nl;
  return {-(a2 * m * n * lm * nl) + b2 * n * l * lm * mn + c2 * l * m * mn * nl, m * k, n * k};
}

/// {U, V, W}. Throws Error(DegeneratePoint) on a zero closed-form vector.
template <ExactRing R>
std::array<ArealPoint<R>, 3> cevian_circle_points_closed(const CevianConfig<R>& cfg) {
  return cyclic_images(cfg, [](const CevianConfig<R>& c) {
    const ArealPoint<R> u = cevian_circle_point_closed_raw(c);
    if (u.is_zero_vector()) throw Error(ErrorKind::DegeneratePoint, "closed-form U is the zero vector");
    return normalized(u);
  });
}

/// U as the second intersection of AP with circle AMN (generic oracle).
template <ExactRing R>
ArealPoint<R> cevian_circle_point_oracle(const CevianConfig<R>& cfg) {
  const SideTriple<R> feet = cevian_feet(cfg);
  const Circle<R> amn = named_circle("circle AMN", vertex_a<R>(), feet.m, feet.n, cfg.metric());
  return second_intersection(line_through(vertex_a<R>(), cfg.p()), amn, vertex_a<R>());
}

/// Throws Error(CollinearUVW) when U, V, W do not determine a circle.
template <ExactRing R>
Circle<R> circle_uvw(const std::array<ArealPoint<R>, 3>& uvw, const TriangleMetric<R>& metric) {
  try {
    return circle_through(uvw[0], uvw[1], uvw[2], metric);
  } catch (const Error& e) {
    throw Error(ErrorKind::CollinearUVW, "circle UVW", e.what());
  }
}

// --- circles AQL, BQM, CQN -----------------------------------------------------------

enum class AqlVariant {
  /// xy coefficient c²((m+n)(b²n(l+m) − c²m(n+l)) + a²mn(n+l)).
  Corrected,
  /// The same with a²mn(l+m) in the xy coefficient; not a circle.
  AsPrinted,
};

/// Conic coefficients of circle AQL, doubled so f, g, h stay integral.
template <ExactRing R>
Conic<R> circle_aql_conic(const CevianConfig<R>& cfg, AqlVariant variant = AqlVariant::Corrected) {
  const R &a2 = cfg.a2(), &b2 = cfg.b2(), &c2 = cfg.c2();
  const R &l = cfg.l(), &m = cfg.m(), &n = cfg.n();
  const R lm = l + m, mn = m + n, nl = n + l;
  const R two(2);
  const R common = mn * (b2 * n * lm - c2 * m * nl);
  const R xy_tail = variant == AqlVariant::Corrected ? a2 * m * n * nl : a2 * m * n * lm;
  return {R(0),
          two * a2 * c2 * m * n * nl,
          -(two * a2 * b2 * m * n * lm),
          a2 * (b2 * n * n * lm - c2 * m * m * nl),
          b2 * (common - a2 * m * n * lm),
          c2 * (common + xy_tail)};
}

/// Throws Error(DegenerateCircle) if the closed form is not a proper circle
/// or Q coincides with A or L (the formula then still yields a circle, but
/// not one determined by A, Q, L).
template <ExactRing R>
Circle<R> circle_aql_closed(const CevianConfig<R>& cfg) {
  const ArealPoint<R> q = miquel_point_closed_raw(cfg);
  if (q.is_zero_vector()) throw Error(ErrorKind::DegenerateCircle, "circle AQL", "Q is the zero vector");
  if (same_point(q, vertex_a<R>())) throw Error(ErrorKind::DegenerateCircle, "circle AQL", "Q coincides with A");
  if (same_point(q, ArealPoint<R>{R(0), cfg.m(), cfg.n()})) {
    throw Error(ErrorKind::DegenerateCircle, "circle AQL", "Q coincides with L");
  }
  try {
    return conic_to_circle(circle_aql_conic(cfg), cfg.metric());
  } catch (const Error& e) {
    throw Error(ErrorKind::DegenerateCircle, "circle AQL", e.what());
  }
}

/// {AQL, BQM, CQN} from the closed form.
template <ExactRing R>
std::array<Circle<R>, 3> q_circles_closed(const CevianConfig<R>& cfg) {
  return cyclic_images(cfg, [](const CevianConfig<R>& c) { return circle_aql_closed(c); });
}

/// {AQL, BQM, CQN} through their defining points.
template <ExactRing R>
std::array<Circle<R>, 3> q_circles_generic(const SideTriple<R>& s, const ArealPoint<R>& q,
                                           const TriangleMetric<R>& metric) {
  return {named_circle("circle AQL", vertex_a<R>(), q, s.l, metric),
          named_circle("circle BQM", vertex_b<R>(), q, s.m, metric),
          named_circle("circle CQN", vertex_c<R>(), q, s.n, metric)};
}

/// The printed closed form for the center of circle AQL, unnormalized.
template <ExactRing R>
ArealPoint<R> center_aql_printed(const CevianConfig<R>& cfg) {
  const R &a2 = cfg.a2(), &b2 = cfg.b2(), &c2 = cfg.c2();
  const R &l = cfg.l(), &m = cfg.m(), &n = cfg.n();
  const R lm = l + m, mn = m + n, nl = n + l;
  const R two(2);
  const R a4 = a2 * a2, b4 = b2 * b2, c4 = c2 * c2;
  const R k1 = c2 * l * mn - a2 * n * lm;
  const R x = a2 * nl *
              (a4 * n * lm * nl - a2 * (b2 * n * lm * (n + two * l) + c2 * nl * (l * m + m * n + two * n * l)) +
               l * (b4 * n * lm + b2 * c2 * (l * m - two * m * n - n * n) + c4 * nl * mn)) *
              k1;
  const R y = b2 * nl * (-k1) *
              (a4 * n * n * lm - a2 * (b2 * n * n * lm + c2 * (l * l * (m - n) + l * n * n - m * n * n)) +
               b2 * c2 * l * l * mn - c4 * l * l * mn);
  const R z = c2 * nl * (-k1) *
              (a4 * n * lm * nl - a2 * (b2 * n * (l * l + two * l * m - m * n) + c2 * nl * (l * m + m * n + two * n * l)) +
               l * mn * (b4 * n - b2 * c2 * (l + two * n) + c4 * nl));
  return {x, y, z};
}

/// Centers of three circles as the pole of the line at infinity.
template <ExactRing R>
std::array<ArealPoint<R>, 3> centers_of(const std::array<Circle<R>, 3>& circles) {
  return {circle_center(circles[0]), circle_center(circles[1]), circle_center(circles[2])};
}

template <ExactRing R>
R centers_determinant(const std::array<ArealPoint<R>, 3>& centers) {
  return points_det(centers[0], centers[1], centers[2]);
}

// --- the second common point R ----------------------------------------------------------

template <ExactRing R>
struct SecondPoint {
  /// The computed point; equals Q when the circles touch there.
  ArealPoint<R> point;
  bool tangent = false;
};

/// R from the radical axis of AQL and BQM, verified on CQN.
///
/// Throws Error(IdenticalCircles) or Error(VerificationFailed).
template <ExactRing R>
SecondPoint<R> second_common_point(const std::array<Circle<R>, 3>& q_circles, const ArealPoint<R>& q) {
  const ArealLine<R> axis = radical_axis(q_circles[0], q_circles[1]);
  const ArealPoint<R> r = second_intersection(axis, q_circles[0], q);
  if (!point_on_circle(q_circles[2], r)) {
    throw Error(ErrorKind::VerificationFailed, "point R", "second common point is not on circle CQN");
  }
  return {r, same_point(r, q)};
}

// --- rational figure and verification ----------------------------------------------------

struct CheckResult {
  std::string name;
  bool passed = false;
  /// Offending values when the check fails; empty on success.
  std::string witness;
};

/// Construction steps of a figure, in order.
enum class FigureStage { None, Feet, MiquelCircles, MiquelPoint, Uvw, UvwCircle, QCircles, Centers, Complete };

/// Every object of the configuration, using the generic constructions as the
/// trusted values. Closed-form cross-checks are listed in `checks`.
struct MiquelFigure {
  /// Last step whose objects are filled in.
  FigureStage stage = FigureStage::None;
  TriangleMetric<Rational> metric;
  ArealPoint<Rational> p;
  SideTriple<Rational> feet;
  std::array<Circle<Rational>, 3> miquel_circles;  // AMN, BNL, CLM
  ArealPoint<Rational> q;
  std::array<ArealPoint<Rational>, 3> uvw;
  Circle<Rational> uvw_circle;
  std::array<Circle<Rational>, 3> q_circles;  // AQL, BQM, CQN
  std::array<ArealPoint<Rational>, 3> centers;
  ArealPoint<Rational> r;
  bool r_tangent = false;
  std::vector<CheckResult> checks;
  /// Non-gating transcription audits.
  std::vector<CheckResult> audits;

  bool all_checks_passed() const;
};

/// Runs the full construction. Degeneracies throw Error labeled with the
/// failing construction; check failures are recorded, not thrown.
MiquelFigure build_figure(const CevianConfig<Rational>& cfg);

/// Like build_figure, but a degeneracy stops the construction and is
/// returned along with the objects completed before it.
struct PartialFigure {
  MiquelFigure figure;
  std::optional<Error> degeneracy;
};

PartialFigure build_figure_partial(const CevianConfig<Rational>& cfg);

enum class InstanceStatus { Pass, Fail, Degenerate };

std::string_view to_string(InstanceStatus s);

struct VerificationReport {
  InstanceStatus status = InstanceStatus::Pass;
  /// Failing construction and reason when status is Degenerate.
  std::string degeneracy;
  std::vector<CheckResult> checks;
  std::vector<CheckResult> audits;
};

VerificationReport verify_instance(const CevianConfig<Rational>& cfg);

struct NonCevianReport {
  InstanceStatus status = InstanceStatus::Pass;
  std::string degeneracy;
  /// The generic Miquel point lies on all three circles.
  bool miquel_ok = false;
  bool centers_collinear = false;
};

/// The Q-circle construction for arbitrary side points.
NonCevianReport verify_side_triple(const SideTriple<Rational>& sides, const TriangleMetric<Rational>& metric);

std::string to_string(const ArealPoint<Rational>& p);

}  // namespace miquel

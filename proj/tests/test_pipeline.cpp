#include <doctest.h>

#include <cmath>
#include <optional>

#include "support.hpp"

using namespace miquel;
using Q = Rational;
using Pt = ArealPoint<Q>;

namespace {

const TriangleMetric<Q> k345{25, 16, 9};

CevianConfig<Q> cfg_of(const TriangleMetric<Q>& m, Q l, Q mm, Q n) { return CevianConfig<Q>(m, Pt{l, mm, n}); }

// Plain floating-point Euclidean geometry, independent of the areal code.
struct FCircle {
  Vec2 c;
  double r;
};

FCircle fcircle(Vec2 p, Vec2 q, Vec2 s) {
  const double d = 2 * (p.x * (q.y - s.y) + q.x * (s.y - p.y) + s.x * (p.y - q.y));
  const double p2 = p.x * p.x + p.y * p.y, q2 = q.x * q.x + q.y * q.y, s2 = s.x * s.x + s.y * s.y;
  const Vec2 c{(p2 * (q.y - s.y) + q2 * (s.y - p.y) + s2 * (p.y - q.y)) / d,
               (p2 * (s.x - q.x) + q2 * (p.x - s.x) + s2 * (q.x - p.x)) / d};
  return {c, std::hypot(p.x - c.x, p.y - c.y)};
}

std::array<Vec2, 2> fintersect(const FCircle& a, const FCircle& b) {
  const double dx = b.c.x - a.c.x, dy = b.c.y - a.c.y;
  const double d = std::hypot(dx, dy);
  const double t = (a.r * a.r - b.r * b.r + d * d) / (2 * d);
  const double h = std::sqrt(std::max(0.0, a.r * a.r - t * t));
  const Vec2 mid{a.c.x + t * dx / d, a.c.y + t * dy / d};
  return {Vec2{mid.x - h * dy / d, mid.y + h * dx / d}, Vec2{mid.x + h * dy / d, mid.y - h * dx / d}};
}

double fdist(Vec2 a, Vec2 b) { return std::hypot(a.x - b.x, a.y - b.y); }

/// R of the figure recomputed in floating point from the triangle and the feet.
std::optional<Vec2> float_r(const MiquelFigure& f) {
  auto e = [&](const Pt& p) { return cartesian_embed(p, f.metric); };
  const Vec2 a = e(vertex_a<Q>()), b = e(vertex_b<Q>()), c = e(vertex_c<Q>());
  const Vec2 l = e(f.feet.l), m = e(f.feet.m), n = e(f.feet.n);
  const auto qs = fintersect(fcircle(a, m, n), fcircle(b, n, l));
  const Vec2 q = fdist(qs[0], n) > fdist(qs[1], n) ? qs[0] : qs[1];
  const auto rs = fintersect(fcircle(a, q, l), fcircle(b, q, m));
  const Vec2 r = fdist(rs[0], q) > fdist(rs[1], q) ? rs[0] : rs[1];
  if (!std::isfinite(r.x) || !std::isfinite(r.y)) return std::nullopt;
  return r;
}

}  // namespace

TEST_CASE("CevianConfig validation") {
  CHECK_NOTHROW(cfg_of(k345, 1, 2, 3));
  CHECK_NOTHROW(cfg_of(k345, -1, 2, 3));
  for (const auto& p : {Pt{0, 1, 1}, Pt{1, -1, 2}, Pt{1, 2, -2}, Pt{3, 1, -3}}) {
    try {
      CevianConfig<Q>(k345, p);
      FAIL("expected InvalidConfig");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::InvalidConfig);
    }
  }
  CHECK_THROWS_AS(CevianConfig<Q>(TriangleMetric<Q>{1, 1, 4}, Pt{1, 1, 1}), Error);
}

TEST_CASE("cevian_feet") {
  const auto f = cevian_feet(cfg_of(k345, 1, 2, 3));
  CHECK(f.l == Pt{0, 2, 3});
  CHECK(f.m == Pt{1, 0, 3});
  CHECK(f.n == Pt{1, 2, 0});
  const auto g = cevian_feet(cfg_of(k345, 1, 1, 1));
  CHECK(g.l == Pt{0, 1, 1});
  CHECK(g.m == Pt{1, 0, 1});
  CHECK(g.n == Pt{1, 1, 0});
}

TEST_CASE("is_cevian_triple") {
  CHECK(is_cevian_triple(cevian_feet(cfg_of(k345, 1, 2, 3))));
  CHECK_FALSE(is_cevian_triple(SideTriple<Q>{Pt{0, 1, 1}, Pt{1, 0, 1}, Pt{1, 2, 0}}));
  try {
    is_cevian_triple(SideTriple<Q>{Pt{1, 1, 0}, Pt{1, 0, 1}, Pt{1, 2, 0}});
    FAIL("expected MalformedSidePoint");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::MalformedSidePoint);
  }
  CHECK_THROWS_AS(is_cevian_triple(SideTriple<Q>{Pt{0, 1, 0}, Pt{1, 0, 1}, Pt{1, 2, 0}}), Error);
}

TEST_CASE("circle AMN closed form") {
  const auto cfg = cfg_of(k345, 1, 1, 1);
  CHECK(circle_amn_closed(cfg) == Circle<Q>{0, Q(-9, 2), -8, k345});

  std::mt19937_64 rng(21);
  for (int i = 0; i < 50; ++i) {
    const auto c = miquel::testing::random_config(rng);
    const auto f = cevian_feet(c);
    const auto circles = miquel_circles_closed(c);
    CHECK(circles[0] == circle_through(vertex_a<Q>(), f.m, f.n, c.metric()));
    CHECK(circles[1] == circle_through(vertex_b<Q>(), f.n, f.l, c.metric()));
    CHECK(circles[2] == circle_through(vertex_c<Q>(), f.l, f.m, c.metric()));
  }
}

TEST_CASE("Miquel point closed form") {
  CHECK(miquel_point_closed(cfg_of(k345, 1, 1, 1)) == Pt{0, 1, 1});
  CHECK(miquel_point_closed(cfg_of({1, 1, 1}, 1, 1, 1)) == Pt{1, 1, 1});
  const auto raw = miquel_point_closed_raw(cfg_of({1, 1, 1}, 1, 1, 1));
  CHECK(raw == Pt{16, 16, 16});
  CHECK(miquel_point_closed(cfg_of(k345, 1, 2, 3)) == Pt{5, -8, -9});
}

TEST_CASE("Miquel point: closed form agrees with the generic oracle") {
  std::mt19937_64 rng(22);
  for (int i = 0; i < 60; ++i) {
    const auto c = miquel::testing::random_config(rng);
    const auto q = miquel_point_generic(cevian_feet(c), c.metric());
    CHECK(same_point(q, miquel_point_closed(c)));
    for (const auto& circle : miquel_circles_closed(c)) CHECK(point_on_circle(circle, q));
    CHECK(miquel_point_generic(cevian_feet(c), c.metric()) == q);
  }
}

TEST_CASE("Miquel point for non-Cevian side points") {
  const SideTriple<Q> s{Pt{0, 1, 1}, Pt{1, 0, 1}, Pt{1, 2, 0}};
  const auto q = miquel_point_generic(s, k345);
  CHECK(point_on_circle(circle_through(vertex_a<Q>(), s.m, s.n, k345), q));
  CHECK(point_on_circle(circle_through(vertex_b<Q>(), s.n, s.l, k345), q));
  CHECK(point_on_circle(circle_through(vertex_c<Q>(), s.l, s.m, k345), q));
}

TEST_CASE("U, V, W") {
  CHECK(cevian_circle_points_closed(cfg_of(k345, 1, 1, 1))[0] == Pt{0, 1, 1});
  CHECK(cevian_circle_point_closed_raw(cfg_of(k345, 1, 1, 1)) == Pt{0, 50, 50});
  const auto eq = cevian_circle_points_closed(cfg_of({4, 4, 4}, 1, 1, 1));
  for (const auto& p : eq) CHECK(p == Pt{1, 1, 1});

  std::mt19937_64 rng(23);
  for (int i = 0; i < 50; ++i) {
    const auto c = miquel::testing::random_config(rng);
    const auto closed = cevian_circle_points_closed(c);
    const auto oracle = cyclic_images(c, [](const CevianConfig<Q>& k) { return cevian_circle_point_oracle(k); });
    const auto circles = miquel_circles_closed(c);
    const std::array<Pt, 3> vertices{vertex_a<Q>(), vertex_b<Q>(), vertex_c<Q>()};
    for (std::size_t j = 0; j < 3; ++j) {
      CHECK(same_point(closed[j], oracle[j]));
      CHECK(line_through(vertices[j], c.p()).contains(closed[j]));
      CHECK(point_on_circle(circles[j], closed[j]));
    }
  }
}

TEST_CASE("circle UVW rejects coincident inputs") {
  try {
    circle_uvw(std::array<Pt, 3>{Pt{1, 1, 1}, Pt{1, 1, 1}, Pt{1, 1, 1}}, k345);
    FAIL("expected CollinearUVW");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::CollinearUVW);
  }
}

TEST_CASE("P and Q lie on circle UVW") {
  std::mt19937_64 rng(24);
  for (int i = 0; i < 50; ++i) {
    const auto c = miquel::testing::random_config(rng);
    const auto circle = circle_uvw(cevian_circle_points_closed(c), c.metric());
    CHECK(point_on_circle(circle, c.p()));
    CHECK(point_on_circle(circle, miquel_point_closed(c)));
  }
}

TEST_CASE("circle AQL closed form") {
  std::mt19937_64 rng(25);
  int printed_misses = 0;
  for (int i = 0; i < 50; ++i) {
    const auto c = miquel::testing::random_config(rng);
    const auto q = miquel_point_closed(c);
    const auto feet = cevian_feet(c);
    const auto k = circle_aql_conic(c);
    CHECK(conic_eval(k, vertex_a<Q>()).is_zero());
    CHECK(conic_eval(k, q).is_zero());
    CHECK(conic_eval(k, feet.l).is_zero());
    const auto closed = q_circles_closed(c);
    const auto generic = q_circles_generic(feet, q, c.metric());
    for (std::size_t j = 0; j < 3; ++j) CHECK(closed[j] == generic[j]);
    if (!conic_eval(circle_aql_conic(c, AqlVariant::AsPrinted), q).is_zero()) ++printed_misses;
  }
  // The form with the xy coefficient exactly as printed misses Q.
  CHECK(printed_misses == 50);
}

TEST_CASE("circle AQL degenerates when Q = L") {
  try {
    circle_aql_closed(cfg_of(k345, 1, 1, 1));
    FAIL("expected DegenerateCircle");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DegenerateCircle);
  }
  try {
    build_figure(cfg_of(k345, 1, 1, 1));
    FAIL("expected a degeneracy");
  } catch (const Error& e) {
    CHECK(category(e.kind()) == ErrorCategory::Degeneracy);
    CHECK(std::string(e.what()).find("AQL") != std::string::npos);
  }
  const auto report = verify_instance(cfg_of(k345, 1, 1, 1));
  CHECK(report.status == InstanceStatus::Degenerate);
}

TEST_CASE("centers of the Q circles") {
  std::mt19937_64 rng(26);
  for (int i = 0; i < 50; ++i) {
    const auto c = miquel::testing::random_config(rng);
    const auto centers = centers_of(q_circles_closed(c));
    CHECK(centers_determinant(centers).is_zero());
    // The printed center formula lands on the center of BQM rather than AQL.
    const auto printed = center_aql_printed(c);
    CHECK(same_point(printed, centers[1]));
    CHECK_FALSE(same_point(printed, centers[0]));
  }
  CHECK_THROWS_AS(conic_center(Conic<Q>{1, 1, 1, 1, 1, 1}), Error);
}

TEST_CASE("second common point R") {
  const auto fig = build_figure(cfg_of(k345, 1, 2, 3));
  CHECK(fig.all_checks_passed());
  CHECK(fig.q == Pt{5, -8, -9});
  CHECK(fig.r == Pt{5, 0, -1});
  CHECK_FALSE(fig.r_tangent);
  const auto r = float_r(fig);
  REQUIRE(r.has_value());
  const Vec2 exact = cartesian_embed(fig.r, fig.metric);
  CHECK(fdist(*r, exact) <= 1e-9 * std::max(1.0, std::hypot(exact.x, exact.y)));
  CHECK(exact.x == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(exact.y == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("tangent marker") {
  // Three circles touching the circumcircle's tangent c²y + b²z = 0 at A.
  const std::array<Circle<Q>, 3> circles{Circle<Q>::circumcircle(k345), Circle<Q>{0, 9, 16, k345},
                                         Circle<Q>{0, 18, 32, k345}};
  const auto second = second_common_point(circles, vertex_a<Q>());
  CHECK(second.tangent);
  CHECK(same_point(second.point, vertex_a<Q>()));
}

TEST_CASE("full figure on random configurations") {
  std::mt19937_64 rng(27);
  int checked = 0;
  for (int i = 0; i < 40; ++i) {
    const auto c = miquel::testing::random_config(rng);
    MiquelFigure fig;
    try {
      fig = build_figure(c);
    } catch (const Error& e) {
      CHECK(category(e.kind()) == ErrorCategory::Degeneracy);
      continue;
    }
    ++checked;
    for (const auto& check : fig.checks) {
      INFO(check.name << " " << check.witness);
      CHECK(check.passed);
    }
    CHECK(verify_instance(c).status != InstanceStatus::Fail);
    if (fig.r_tangent) continue;
    const auto r = float_r(fig);
    if (!r) continue;
    const Vec2 exact = cartesian_embed(fig.r, fig.metric);
    const double scale = std::max(1.0, std::hypot(exact.x, exact.y));
    CHECK(fdist(*r, exact) <= 1e-6 * scale);
  }
  CHECK(checked >= 30);
}

TEST_CASE("normalized outputs are invariant under scaling P") {
  std::mt19937_64 rng(28);
  for (int i = 0; i < 20; ++i) {
    const auto c = miquel::testing::random_config(rng);
    const Q k = miquel::testing::random_rational(rng, 9, 7, false);
    const CevianConfig<Q> scaled(c.metric(), Pt{k * c.l(), k * c.m(), k * c.n()});
    MiquelFigure f1, f2;
    try {
      f1 = build_figure(c);
    } catch (const Error&) {
      CHECK_THROWS_AS(build_figure(scaled), Error);
      continue;
    }
    f2 = build_figure(scaled);
    CHECK(f1.p == f2.p);
    CHECK(f1.q == f2.q);
    CHECK(f1.uvw == f2.uvw);
    CHECK(f1.centers == f2.centers);
    CHECK(f1.r == f2.r);
    CHECK(f1.uvw_circle == f2.uvw_circle);
  }
}

TEST_CASE("cyclic relabeling commutes with the construction") {
  std::mt19937_64 rng(29);
  for (int i = 0; i < 20; ++i) {
    const auto c = miquel::testing::random_config(rng);
    MiquelFigure f;
    try {
      f = build_figure(c);
    } catch (const Error&) {
      continue;
    }
    const auto g = build_figure(shifted(c));
    CHECK(same_point(g.q, shift(f.q)));
    CHECK(same_point(g.r, shift(f.r)));
    for (std::size_t j = 0; j < 3; ++j) {
      CHECK(same_point(g.uvw[j], shift(f.uvw[(j + 1) % 3])));
      CHECK(same_point(g.centers[j], shift(f.centers[(j + 1) % 3])));
    }
  }
}

TEST_CASE("non-Cevian side triples keep Miquel but lose collinear centers") {
  std::mt19937_64 rng(30);
  int trials = 0;
  int collinear_count = 0;
  for (int i = 0; i < 60; ++i) {
    const auto metric = miquel::testing::random_metric(rng);
    auto r = [&] { return miquel::testing::random_rational(rng, 9, 4, false); };
    const SideTriple<Q> s{Pt{0, r(), r()}, Pt{r(), 0, r()}, Pt{r(), r(), 0}};
    if (s.l.at_infinity() || s.m.at_infinity() || s.n.at_infinity() || is_cevian_triple(s)) continue;
    const auto report = verify_side_triple(s, metric);
    if (report.status == InstanceStatus::Degenerate) continue;
    ++trials;
    CHECK(report.miquel_ok);
    if (report.centers_collinear) ++collinear_count;
  }
  CHECK(trials >= 40);
  CHECK(collinear_count <= trials / 10);
}

TEST_CASE("equilateral centroid is fully symmetric") {
  const auto c = cfg_of({1, 1, 1}, 1, 1, 1);
  CHECK(miquel_point_generic(cevian_feet(c), c.metric()) == Pt{1, 1, 1});
  const auto report = verify_instance(c);
  CHECK(report.status == InstanceStatus::Degenerate);
  CHECK(report.degeneracy.find("UVW") != std::string::npos);
}

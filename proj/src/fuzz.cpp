#include "miquel/fuzz.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

namespace miquel {

namespace {

using Q = Rational;
using Pt = ArealPoint<Q>;

Q draw(std::mt19937_64& rng, int lo, int k) {
  std::uniform_int_distribution<int> num(lo, k);
  std::uniform_int_distribution<int> den(1, k);
  while (true) {
    const int p = num(rng);
    const int q = den(rng);
    if (p != 0) return Q(p, q);
  }
}

Q draw_signed(std::mt19937_64& rng, int k) { return draw(rng, -k, k); }

std::string construction_of(const std::string& what) {
  const auto colon = what.find(':');
  return colon == std::string::npos ? what : what.substr(0, colon);
}

// --- floating geometry -----------------------------------------------------------

double norm(Vec2 v) { return std::hypot(v.x, v.y); }
Vec2 sub(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
double cross2(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }

struct FloatCircle {
  Vec2 center;
  double radius;
};

class FloatChecker {
 public:
  FloatChecker(const TriangleMetric<Q>& m, double tol) : metric_(m), tol_(tol) {}

  Vec2 at(const Pt& p) {
    const Vec2 v = cartesian_embed(p, metric_);
    scale_ = std::max(scale_, norm(v));
    return v;
  }

  FloatCircle circle(const Circle<Q>& c) {
    const CircleGeometry g = circle_geometry(c);
    FloatCircle f{at(g.center), std::sqrt(std::max(0.0, g.radius2.to_double()))};
    scale_ = std::max(scale_, f.radius);
    return f;
  }

  void on_circle(const std::string& what, Vec2 p, const FloatCircle& c) {
    record(what, std::abs(norm(sub(p, c.center)) - c.radius));
  }

  /// Distance of p from the line through a and b.
  void on_line(const std::string& what, Vec2 p, Vec2 a, Vec2 b) {
    const Vec2 d = sub(b, a);
    record(what, std::abs(cross2(d, sub(p, a))) / norm(d));
  }

  void same(const std::string& what, Vec2 p, Vec2 q) { record(what, norm(sub(p, q))); }

  /// Call after every coordinate has been embedded, so the scale is final.
  FloatCheck finish() {
    FloatCheck out;
    const double scale = std::max(1.0, scale_);
    for (const auto& [what, err] : pending_) {
      const double rel = err / scale;
      ++out.incidences;
      out.max_error = std::max(out.max_error, rel);
      if (!(rel <= tol_)) {
        ++out.failures;
        out.failed.push_back(what);
      }
    }
    return out;
  }

 private:
  void record(const std::string& what, double err) { pending_.emplace_back(what, err); }

  TriangleMetric<Q> metric_;
  double tol_;
  double scale_ = 0;
  std::vector<std::pair<std::string, double>> pending_;
};

/// Circumcenter of three Cartesian points, independent of the areal code.
Vec2 float_circumcenter(Vec2 p, Vec2 q, Vec2 s) {
  const double d = 2 * (p.x * (q.y - s.y) + q.x * (s.y - p.y) + s.x * (p.y - q.y));
  const double p2 = p.x * p.x + p.y * p.y, q2 = q.x * q.x + q.y * q.y, s2 = s.x * s.x + s.y * s.y;
  return {(p2 * (q.y - s.y) + q2 * (s.y - p.y) + s2 * (p.y - q.y)) / d,
          (p2 * (s.x - q.x) + q2 * (p.x - s.x) + s2 * (q.x - p.x)) / d};
}

}  // namespace

TriangleMetric<Q> sample_metric(std::mt19937_64& rng, int max_coeff) {
  while (true) {
    TriangleMetric<Q> m{draw(rng, 1, max_coeff), draw(rng, 1, max_coeff), draw(rng, 1, max_coeff)};
    if (sixteen_area_squared(m).sign() > 0) return m;
  }
}

CevianConfig<Q> sample_config(std::mt19937_64& rng, int max_coeff) {
  const TriangleMetric<Q> metric = sample_metric(rng, max_coeff);
  while (true) {
    Pt p{draw_signed(rng, max_coeff), draw_signed(rng, max_coeff), draw_signed(rng, max_coeff)};
    if ((p.x + p.y).is_zero() || (p.y + p.z).is_zero() || (p.z + p.x).is_zero()) continue;
    return CevianConfig<Q>(metric, p);
  }
}

SideTriple<Q> sample_non_cevian(std::mt19937_64& rng, int max_coeff) {
  auto r = [&] { return draw_signed(rng, max_coeff); };
  while (true) {
    SideTriple<Q> s{Pt{0, r(), r()}, Pt{r(), 0, r()}, Pt{r(), r(), 0}};
    if (s.l.at_infinity() || s.m.at_infinity() || s.n.at_infinity()) continue;
    if (is_cevian_triple(s)) continue;
    return s;
  }
}

FloatCheck float_cross_check(const MiquelFigure& f, double tolerance) {
  FloatChecker fc(f.metric, tolerance);
  const Vec2 a = fc.at(vertex_a<Q>()), b = fc.at(vertex_b<Q>()), c = fc.at(vertex_c<Q>());
  const Vec2 p = fc.at(f.p), q = fc.at(f.q);
  const Vec2 l = fc.at(f.feet.l), m = fc.at(f.feet.m), n = fc.at(f.feet.n);
  const std::array<Vec2, 3> uvw{fc.at(f.uvw[0]), fc.at(f.uvw[1]), fc.at(f.uvw[2])};
  std::array<FloatCircle, 3> miquel, qc;
  for (std::size_t i = 0; i < 3; ++i) {
    miquel[i] = fc.circle(f.miquel_circles[i]);
    qc[i] = fc.circle(f.q_circles[i]);
  }
  const FloatCircle uvw_circle = fc.circle(f.uvw_circle);
  const std::array<Vec2, 3> centers{fc.at(f.centers[0]), fc.at(f.centers[1]), fc.at(f.centers[2])};
  const Vec2 r = fc.at(f.r);

  fc.on_line("L on BC", l, b, c);
  fc.on_line("M on CA", m, c, a);
  fc.on_line("N on AB", n, a, b);
  fc.on_line("P on AL", p, a, l);
  fc.on_line("P on BM", p, b, m);
  fc.on_line("P on CN", p, c, n);

  const std::array<std::array<std::pair<const char*, Vec2>, 4>, 3> on_miquel = {{
      {{{"A", a}, {"M", m}, {"N", n}, {"U", uvw[0]}}},
      {{{"B", b}, {"N", n}, {"L", l}, {"V", uvw[1]}}},
      {{{"C", c}, {"L", l}, {"M", m}, {"W", uvw[2]}}},
  }};
  constexpr std::array<const char*, 3> miquel_names = {"AMN", "BNL", "CLM"};
  for (std::size_t i = 0; i < 3; ++i) {
    for (const auto& [name, pt] : on_miquel[i]) fc.on_circle(std::string(name) + " on " + miquel_names[i], pt, miquel[i]);
    fc.on_circle(std::string("Q on ") + miquel_names[i], q, miquel[i]);
  }
  fc.on_line("U on AP", uvw[0], a, p);
  fc.on_line("V on BP", uvw[1], b, p);
  fc.on_line("W on CP", uvw[2], c, p);
  fc.on_circle("U on UVW", uvw[0], uvw_circle);
  fc.on_circle("V on UVW", uvw[1], uvw_circle);
  fc.on_circle("W on UVW", uvw[2], uvw_circle);
  fc.on_circle("P on UVW", p, uvw_circle);
  fc.on_circle("Q on UVW", q, uvw_circle);

  const std::array<std::array<std::pair<const char*, Vec2>, 2>, 3> on_q = {{
      {{{"A", a}, {"L", l}}},
      {{{"B", b}, {"M", m}}},
      {{{"C", c}, {"N", n}}},
  }};
  constexpr std::array<const char*, 3> q_names = {"AQL", "BQM", "CQN"};
  for (std::size_t i = 0; i < 3; ++i) {
    const std::string circle = q_names[i];
    for (const auto& [name, pt] : on_q[i]) fc.on_circle(std::string(name) + " on " + circle, pt, qc[i]);
    fc.on_circle("Q on " + circle, q, qc[i]);
    fc.on_circle("R on " + circle, r, qc[i]);
    fc.same("center of " + circle, centers[i], qc[i].center);
    fc.same("center of " + circle + " vs three-point circumcenter", centers[i],
            float_circumcenter(on_q[i][0].second, q, on_q[i][1].second));
  }
  fc.on_line("centers collinear", centers[2], centers[0], centers[1]);
  return fc.finish();
}

std::string describe(const CevianConfig<Q>& cfg) {
  return "triangle (" + cfg.a2().to_string() + ", " + cfg.b2().to_string() + ", " + cfg.c2().to_string() +
         ") cevian (" + cfg.l().to_string() + ", " + cfg.m().to_string() + ", " + cfg.n().to_string() + ")";
}

std::string describe(const SideTriple<Q>& s, const TriangleMetric<Q>& m) {
  return "triangle (" + m.a2.to_string() + ", " + m.b2.to_string() + ", " + m.c2.to_string() + ") L " +
         to_string(s.l) + " M " + to_string(s.m) + " N " + to_string(s.n);
}

FuzzSummary run_fuzz(const FuzzOptions& opts) {
  FuzzSummary out;
  out.options = opts;
  std::mt19937_64 rng(opts.seed);
  for (std::size_t t = 0; t < opts.trials; ++t) {
    if (opts.non_cevian) {
      const TriangleMetric<Q> metric = sample_metric(rng, opts.max_coeff);
      const SideTriple<Q> s = sample_non_cevian(rng, opts.max_coeff);
      const NonCevianReport r = verify_side_triple(s, metric);
      if (r.status == InstanceStatus::Degenerate) {
        ++out.degenerate;
        ++out.degeneracies[construction_of(r.degeneracy)];
        continue;
      }
      if (r.status == InstanceStatus::Fail || !r.miquel_ok) {
        ++out.failed;
        out.failures.push_back("trial " + std::to_string(t) + ": " + describe(s, metric) + ": " + r.degeneracy);
        continue;
      }
      ++out.passed;
      ++out.miquel_ok;
      if (r.centers_collinear) ++out.centers_collinear;
      continue;
    }

    const CevianConfig<Q> cfg = sample_config(rng, opts.max_coeff);
    const VerificationReport r = verify_instance(cfg);
    switch (r.status) {
      case InstanceStatus::Degenerate:
        ++out.degenerate;
        ++out.degeneracies[construction_of(r.degeneracy)];
        continue;
      case InstanceStatus::Fail:
        ++out.failed;
        for (const auto& c : r.checks) {
          if (!c.passed) {
            out.failures.push_back("trial " + std::to_string(t) + ": " + describe(cfg) + ": " + c.name + " " +
                                   c.witness);
          }
        }
        continue;
      case InstanceStatus::Pass:
        ++out.passed;
        break;
    }
    if (out.float_instances < opts.float_checks) {
      const FloatCheck fc = float_cross_check(build_figure(cfg));
      ++out.float_instances;
      out.float_incidences += fc.incidences;
      out.float_failures += fc.failures;
      out.float_max_error = std::max(out.float_max_error, fc.max_error);
      for (const auto& what : fc.failed) {
        out.failures.push_back("trial " + std::to_string(t) + ": " + describe(cfg) + ": floating " + what);
      }
    }
  }
  return out;
}

std::string FuzzSummary::text() const {
  std::ostringstream os;
  os << (options.non_cevian ? "non-cevian" : "cevian") << " trials " << options.trials << " seed " << options.seed
     << " max-coeff " << options.max_coeff << "\n";
  os << "pass " << passed << " fail " << failed << " degenerate " << degenerate << "\n";
  for (const auto& [what, count] : degeneracies) os << "  degenerate at " << what << ": " << count << "\n";
  if (options.non_cevian) {
    os << "miquel point found " << miquel_ok << " of " << (options.trials - degenerate) << " nondegenerate\n";
    os << "centers collinear " << centers_collinear << " of " << miquel_ok << "\n";
  }
  if (float_instances > 0) {
    os << "floating cross-check: " << float_instances << " instances, " << float_incidences << " incidences, "
       << float_failures << " failures, max relative error " << std::scientific << std::setprecision(2)
       << float_max_error << "\n";
  }
  for (const auto& f : failures) os << "FAIL " << f << "\n";
  return os.str();
}

}  // namespace miquel

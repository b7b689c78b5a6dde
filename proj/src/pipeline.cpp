#include "miquel/pipeline.hpp"

#include <functional>

namespace miquel {

namespace {

using Q = Rational;

bool same_circle(const Circle<Q>& a, const Circle<Q>& b) {
  return a.metric == b.metric &&
         proportional(std::array<Q, 4>{a.scale, a.u, a.v, a.w}, std::array<Q, 4>{b.scale, b.u, b.v, b.w});
}

std::string circle_string(const Circle<Q>& c) {
  const Circle<Q> n = canonical(c);
  return "(u,v,w) = (" + n.u.to_string() + ", " + n.v.to_string() + ", " + n.w.to_string() + ")";
}

class CheckLog {
 public:
  explicit CheckLog(std::vector<CheckResult>& out) : out_(out) {}

  void record(std::string name, bool passed, std::string witness = {}) {
    out_.push_back({std::move(name), passed, passed ? std::string() : std::move(witness)});
  }

  /// Runs a check whose evaluation may itself hit a degeneracy; the
  /// degeneracy is then the witness of a failed check.
  void guarded(std::string name, const std::function<std::pair<bool, std::string>()>& body) {
    try {
      auto [ok, witness] = body();
      record(std::move(name), ok, std::move(witness));
    } catch (const Error& e) {
      record(std::move(name), false, e.what());
    }
  }

 private:
  std::vector<CheckResult>& out_;
};

constexpr std::array<const char*, 3> kMiquelCircleNames = {"AMN", "BNL", "CLM"};
constexpr std::array<const char*, 3> kQCircleNames = {"AQL", "BQM", "CQN"};
constexpr std::array<const char*, 3> kUvwNames = {"U", "V", "W"};

}  // namespace

CevianConfig<MultiPoly> symbolic_config() {
  return CevianConfig<MultiPoly>({MultiPoly::var(Var::A), MultiPoly::var(Var::B), MultiPoly::var(Var::C)},
                                 {MultiPoly::var(Var::L), MultiPoly::var(Var::M), MultiPoly::var(Var::N)});
}

std::string to_string(const ArealPoint<Q>& p) {
  return "(" + p.x.to_string() + " : " + p.y.to_string() + " : " + p.z.to_string() + ")";
}

std::string_view to_string(InstanceStatus s) {
  switch (s) {
    case InstanceStatus::Pass: return "pass";
    case InstanceStatus::Fail: return "fail";
    case InstanceStatus::Degenerate: return "degenerate";
  }
  return "unknown";
}

bool MiquelFigure::all_checks_passed() const {
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

namespace {

/// Fills f step by step; a degeneracy throws with the completed steps kept.
void build_into(const CevianConfig<Q>& cfg, MiquelFigure& f) {
  CheckLog log(f.checks);
  CheckLog audit(f.audits);
  const auto& metric = cfg.metric();
  const auto a = vertex_a<Q>();
  const auto b = vertex_b<Q>();
  const auto c = vertex_c<Q>();
  f.metric = metric;
  f.p = normalized(cfg.p());
  f.feet = cevian_feet(cfg);
  f.stage = FigureStage::Feet;
  const auto& [fl, fm, fn] = f.feet;

  log.record("cevians AL, BM, CN concur at P",
             same_point(line_intersection(line_through(a, fl), line_through(b, fm)), f.p) &&
                 line_through(c, fn).contains(f.p));

  f.miquel_circles = {named_circle("circle AMN", a, fm, fn, metric), named_circle("circle BNL", b, fn, fl, metric),
                      named_circle("circle CLM", c, fl, fm, metric)};
  f.stage = FigureStage::MiquelCircles;
  log.guarded("Miquel circles: closed form matches circle through defining points", [&] {
    const auto closed = miquel_circles_closed(cfg);
    for (std::size_t i = 0; i < 3; ++i) {
      if (!same_circle(closed[i], f.miquel_circles[i])) {
        return std::pair{false, std::string(kMiquelCircleNames[i]) + ": closed " + circle_string(closed[i]) +
                                    " vs generic " + circle_string(f.miquel_circles[i])};
      }
    }
    return std::pair{true, std::string()};
  });

  f.q = normalized(miquel_point_generic(f.feet, metric));
  f.stage = FigureStage::MiquelPoint;
  log.record("Q on circles AMN, BNL, CLM",
             point_on_circle(f.miquel_circles[0], f.q) && point_on_circle(f.miquel_circles[1], f.q) &&
                 point_on_circle(f.miquel_circles[2], f.q),
             "Q = " + to_string(f.q));
  log.guarded("Q closed form matches intersection oracle", [&] {
    const auto closed = miquel_point_closed(cfg);
    return std::pair{same_point(closed, f.q), "closed " + to_string(closed) + " vs oracle " + to_string(f.q)};
  });

  f.uvw = cyclic_images(cfg, [](const CevianConfig<Q>& k) { return cevian_circle_point_oracle(k); });
  f.stage = FigureStage::Uvw;
  log.guarded("U, V, W closed forms match second-intersection oracle", [&] {
    const auto closed = cevian_circle_points_closed(cfg);
    for (std::size_t i = 0; i < 3; ++i) {
      if (!same_point(closed[i], f.uvw[i])) {
        return std::pair{false, std::string(kUvwNames[i]) + ": closed " + to_string(closed[i]) + " vs oracle " +
                                    to_string(f.uvw[i])};
      }
    }
    return std::pair{true, std::string()};
  });
  log.record("U, V, W on their Cevians and Miquel circles",
             line_through(a, f.p).contains(f.uvw[0]) && line_through(b, f.p).contains(f.uvw[1]) &&
                 line_through(c, f.p).contains(f.uvw[2]) && point_on_circle(f.miquel_circles[0], f.uvw[0]) &&
                 point_on_circle(f.miquel_circles[1], f.uvw[1]) && point_on_circle(f.miquel_circles[2], f.uvw[2]));

  f.uvw_circle = circle_uvw(f.uvw, metric);
  f.stage = FigureStage::UvwCircle;
  log.record("P on circle UVW", point_on_circle(f.uvw_circle, f.p),
             "S(P) = " + circle_eval(f.uvw_circle, f.p).to_string());
  log.record("Q on circle UVW", point_on_circle(f.uvw_circle, f.q),
             "S(Q) = " + circle_eval(f.uvw_circle, f.q).to_string());

  f.q_circles = q_circles_generic(f.feet, f.q, metric);
  f.stage = FigureStage::QCircles;
  log.guarded("circles AQL, BQM, CQN: closed form matches circle through defining points", [&] {
    const auto closed = q_circles_closed(cfg);
    for (std::size_t i = 0; i < 3; ++i) {
      if (!same_circle(closed[i], f.q_circles[i])) {
        return std::pair{false, std::string(kQCircleNames[i]) + ": closed " + circle_string(closed[i]) +
                                    " vs generic " + circle_string(f.q_circles[i])};
      }
    }
    return std::pair{true, std::string()};
  });

  bool nondegenerate = true;
  for (const auto* circle : {&f.miquel_circles[0], &f.miquel_circles[1], &f.miquel_circles[2], &f.uvw_circle,
                             &f.q_circles[0], &f.q_circles[1], &f.q_circles[2]}) {
    nondegenerate = nondegenerate && circle_is_nondegenerate(*circle);
  }
  log.record("all circles have nondegenerate quadratic forms", nondegenerate);

  try {
    f.centers = centers_of(f.q_circles);
    for (auto& center : f.centers) center = normalized(center);
  } catch (const Error& e) {
    throw Error(e.kind(), "centers of AQL, BQM, CQN", e.what());
  }
  f.stage = FigureStage::Centers;
  const Q det = centers_determinant(f.centers);
  log.record("centers of AQL, BQM, CQN collinear", det.is_zero(), "det = " + det.to_string());

  audit.guarded("printed center formula matches center of AQL", [&] {
    const auto printed = center_aql_printed(cfg);
    if (printed.is_zero_vector()) return std::pair{false, std::string("printed formula gives the zero vector")};
    std::string witness = "printed " + to_string(normalized(printed)) + " vs center " + to_string(f.centers[0]);
    if (same_point(printed, f.centers[1])) witness += "; it matches the center of BQM";
    return std::pair{same_point(printed, f.centers[0]), witness};
  });

  SecondPoint<Q> second{};
  try {
    second = second_common_point(f.q_circles, f.q);
  } catch (const Error& e) {
    if (category(e.kind()) == ErrorCategory::Degeneracy) throw Error(e.kind(), "point R", e.what());
    log.record("R on circles AQL, BQM, CQN", false, e.what());
    return;
  }
  f.r = second.point;
  f.r_tangent = second.tangent;
  log.record("R on circles AQL, BQM, CQN",
             point_on_circle(f.q_circles[0], f.r) && point_on_circle(f.q_circles[1], f.r) &&
                 point_on_circle(f.q_circles[2], f.r),
             "R = " + to_string(f.r));
  f.stage = FigureStage::Complete;
}

}  // namespace

MiquelFigure build_figure(const CevianConfig<Q>& cfg) {
  MiquelFigure f;
  build_into(cfg, f);
  return f;
}

PartialFigure build_figure_partial(const CevianConfig<Q>& cfg) {
  PartialFigure out;
  try {
    build_into(cfg, out.figure);
  } catch (const Error& e) {
    if (category(e.kind()) != ErrorCategory::Degeneracy) throw;
    out.degeneracy = e;
  }
  return out;
}

VerificationReport verify_instance(const CevianConfig<Q>& cfg) {
  VerificationReport report;
  MiquelFigure fig;
  try {
    fig = build_figure(cfg);
  } catch (const Error& e) {
    if (category(e.kind()) == ErrorCategory::Degeneracy) {
      report.status = InstanceStatus::Degenerate;
      report.degeneracy = e.what();
    } else {
      report.status = InstanceStatus::Fail;
      report.checks.push_back({"construction", false, e.what()});
    }
    return report;
  }
  report.checks = fig.checks;
  report.audits = fig.audits;
  if (!fig.all_checks_passed()) {
    report.status = InstanceStatus::Fail;
  } else if (fig.r_tangent) {
    report.status = InstanceStatus::Degenerate;
    report.degeneracy = "point R: circles AQL, BQM, CQN touch at Q (R = Q)";
  }
  return report;
}

NonCevianReport verify_side_triple(const SideTriple<Q>& sides, const TriangleMetric<Q>& metric) {
  NonCevianReport report;
  try {
    const ArealPoint<Q> q = miquel_point_generic(sides, metric);
    report.miquel_ok = true;
    const auto circles = q_circles_generic(sides, q, metric);
    report.centers_collinear = centers_determinant(centers_of(circles)).is_zero();
  } catch (const Error& e) {
    if (category(e.kind()) == ErrorCategory::Degeneracy) {
      report.status = InstanceStatus::Degenerate;
      report.degeneracy = e.what();
    } else {
      report.status = InstanceStatus::Fail;
      report.degeneracy = e.what();
    }
    return report;
  }
  return report;
}

}  // namespace miquel

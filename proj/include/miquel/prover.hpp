#pragma once

// Polynomial identity checks for the Cevian Miquel figure.
//
// Every task is a claim builder templated on the scalar ring. Over
// MultiPoly with symbolic_config() each claim is an identity in
// a², b², c², l, m, n; over Rational the same builders give the numeric
// residuals for one instance.

#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

#include "miquel/pipeline.hpp"

namespace miquel {

enum class ProofKind { Core, Audit, Info };
enum class ProofStatus { Proved, Refuted, BudgetExceeded };

std::string_view to_string(ProofKind k);
std::string_view to_string(ProofStatus s);
ProofKind parse_proof_kind(std::string_view s);
ProofStatus parse_proof_status(std::string_view s);

/// Deliberate corruption of one input, for refutation controls.
enum class Mutation { None, PerturbQ, PerturbU, PerturbAql, PerturbCenter };

template <ExactRing R>
struct Claim {
  std::string label;
  R residual;
};

template <ExactRing R>
class ClaimSet {
 public:
  void zero(std::string label, R residual) {
    note(residual);
    claims_.push_back({std::move(label), std::move(residual)});
  }

  /// All 2×2 minors of (v, w).
  template <std::size_t N>
  void proportional(const std::string& label, const std::array<R, N>& v, const std::array<R, N>& w) {
    for (const R& x : v) note(x);
    for (const R& x : w) note(x);
    for (std::size_t i = 0; i < N; ++i) {
      for (std::size_t j = i + 1; j < N; ++j) {
        zero(label + " [minor " + std::to_string(i) + std::to_string(j) + "]", v[i] * w[j] - v[j] * w[i]);
      }
    }
  }

  void note(const R& x) {
    if constexpr (std::is_same_v<R, MultiPoly>) {
      max_terms_ = std::max(max_terms_, x.size());
      max_degree_ = std::max(max_degree_, x.total_degree());
    }
  }
  void note(const ArealPoint<R>& p) {
    for (const R& x : p.coords()) note(x);
  }
  void note(const Circle<R>& c) {
    for (const R* x : {&c.u, &c.v, &c.w, &c.scale}) note(*x);
  }

  const std::vector<Claim<R>>& claims() const { return claims_; }
  std::size_t max_terms() const { return max_terms_; }
  unsigned max_degree() const { return max_degree_; }

 private:
  std::vector<Claim<R>> claims_;
  std::size_t max_terms_ = 0;
  unsigned max_degree_ = 0;
};

// --- printed closed forms --------------------------------------------------------

/// The printed equation of circle AMN as a doubled conic. Its coefficients
/// are those of the circle form negated.
template <ExactRing R>
Conic<R> printed_amn_conic(const CevianConfig<R>& cfg) {
  const R &a2 = cfg.a2(), &b2 = cfg.b2(), &c2 = cfg.c2();
  const R &l = cfg.l(), &m = cfg.m(), &n = cfg.n();
  const R lm = l + m, nl = n + l;
  const R two(2);
  return {R(0),
          two * c2 * l * nl,
          two * b2 * l * lm,
          -(a2 * lm * nl - b2 * l * lm - c2 * l * nl),
          -(b2 * n * lm),
          -(c2 * m * nl)};
}

/// The two printed coefficients of circle UVW: x² and yz.
template <ExactRing R>
std::pair<R, R> printed_uvw_coefficients(const CevianConfig<R>& cfg) {
  const R &a2 = cfg.a2(), &b2 = cfg.b2(), &c2 = cfg.c2();
  const R &l = cfg.l(), &m = cfg.m(), &n = cfg.n();
  const R lm = l + m, mn = m + n, nl = n + l;
  return {mn * (b2 * n * n * lm + c2 * m * m * nl),
          l * l * mn * (b2 * lm + c2 * nl) - a2 * lm * nl * (l * m + R(2) * m * n + n * l)};
}

// --- claim builders --------------------------------------------------------------

namespace detail {

template <ExactRing R>
std::array<R, 4> circle_vector(const Circle<R>& c) {
  return {c.scale, c.u, c.v, c.w};
}

template <ExactRing R>
std::array<CevianConfig<R>, 3> frames(const CevianConfig<R>& cfg) {
  const CevianConfig<R> once = shifted(cfg);
  return {cfg, once, shifted(once)};
}

template <ExactRing R>
ArealPoint<R> shift_times(ArealPoint<R> p, std::size_t k) {
  for (std::size_t i = 0; i < k; ++i) p = shift(p);
  return p;
}

template <ExactRing R>
ArealPoint<R> bump_x(ArealPoint<R> p) {
  p.x += R(1);
  return p;
}

constexpr std::array<const char*, 3> kAmnNames = {"AMN", "BNL", "CLM"};
constexpr std::array<const char*, 3> kUvwNames = {"U", "V", "W"};

}  // namespace detail

template <ExactRing R>
void claims_circle_amn(const CevianConfig<R>& cfg, Mutation, ClaimSet<R>& out) {
  const auto k = printed_amn_conic(cfg);
  const auto feet = cevian_feet(cfg);
  out.zero("A on printed AMN", conic_eval(k, vertex_a<R>()));
  out.zero("M on printed AMN", conic_eval(k, feet.m));
  out.zero("N on printed AMN", conic_eval(k, feet.n));
  const auto closed = circle_amn_closed(cfg);
  out.note(closed);
  out.proportional("printed AMN ~ closed circle AMN", k.coeffs(), circle_to_conic(closed).coeffs());
  out.proportional("closed AMN ~ circle through A, M, N", detail::circle_vector(closed),
                   detail::circle_vector(circle_through(vertex_a<R>(), feet.m, feet.n, cfg.metric())));
}

template <ExactRing R>
void claims_miquel_closed(const CevianConfig<R>& cfg, Mutation mut, ClaimSet<R>& out) {
  ArealPoint<R> q = miquel_point_closed_raw(cfg);
  if (mut == Mutation::PerturbQ) q = detail::bump_x(q);
  out.note(q);
  const auto fr = detail::frames(cfg);
  for (std::size_t i = 0; i < 3; ++i) {
    out.zero(std::string("Q on ") + detail::kAmnNames[i],
             conic_eval(printed_amn_conic(fr[i]), detail::shift_times(q, i)));
  }
  out.proportional("Q ~ generic Miquel point", q.coords(),
                   miquel_point_generic(cevian_feet(cfg), cfg.metric()).coords());
}

template <ExactRing R>
void claims_u_closed(const CevianConfig<R>& cfg, Mutation mut, ClaimSet<R>& out) {
  const auto fr = detail::frames(cfg);
  for (std::size_t i = 0; i < 3; ++i) {
    const auto& c = fr[i];
    ArealPoint<R> u = cevian_circle_point_closed_raw(c);
    if (mut == Mutation::PerturbU && i == 0) u = detail::bump_x(u);
    out.note(u);
    const std::string name = detail::kUvwNames[i];
    out.zero(name + " on its Cevian", c.n() * u.y - c.m() * u.z);
    out.zero(name + " on " + detail::kAmnNames[i], conic_eval(printed_amn_conic(c), u));
    out.proportional(name + " ~ second intersection oracle", u.coords(), cevian_circle_point_oracle(c).coords());
  }
}

template <ExactRing R>
void claims_theorem1(const CevianConfig<R>& cfg, Mutation, ClaimSet<R>& out) {
  const auto circle = circle_uvw(cevian_circle_points_closed(cfg), cfg.metric());
  out.note(circle);
  out.zero("P on circle UVW", circle_eval(circle, cfg.p()));
  out.zero("Q on circle UVW", circle_eval(circle, miquel_point_closed_raw(cfg)));
}

template <ExactRing R>
void claims_audit_uvw_printed(const CevianConfig<R>& cfg, Mutation, ClaimSet<R>& out) {
  const auto circle = circle_uvw(cevian_circle_points_closed(cfg), cfg.metric());
  const auto k = circle_to_conic(circle);
  const auto [x2, yz] = printed_uvw_coefficients(cfg);
  // x² coefficient k.u/2 and yz coefficient k.f against the printed pair.
  out.note(k.u);
  out.note(k.f);
  out.zero("x2 : yz matches the printed pair", k.u * yz - R(2) * k.f * x2);
}

template <ExactRing R>
void claims_circle_aql(const CevianConfig<R>& cfg, Mutation mut, ClaimSet<R>& out) {
  Conic<R> k = circle_aql_conic(cfg, AqlVariant::Corrected);
  if (mut == Mutation::PerturbAql) k.h += R(1);
  const ArealPoint<R> q = miquel_point_closed_raw(cfg);
  const ArealPoint<R> l{R(0), cfg.m(), cfg.n()};
  out.zero("A on AQL", conic_eval(k, vertex_a<R>()));
  out.zero("Q on AQL", conic_eval(k, q));
  out.zero("L on AQL", conic_eval(k, l));
  const auto through = circle_through(vertex_a<R>(), q, l, cfg.metric());
  out.note(through);
  out.proportional("AQL ~ circle through A, Q, L", k.coeffs(), circle_to_conic(through).coeffs());
}

template <ExactRing R>
void claims_audit_aql_printed(const CevianConfig<R>& cfg, Mutation, ClaimSet<R>& out) {
  const Conic<R> k = circle_aql_conic(cfg, AqlVariant::AsPrinted);
  out.zero("A on printed AQL", conic_eval(k, vertex_a<R>()));
  out.zero("L on printed AQL", conic_eval(k, ArealPoint<R>{R(0), cfg.m(), cfg.n()}));
  out.zero("Q on printed AQL", conic_eval(k, miquel_point_closed_raw(cfg)));
}

template <ExactRing R>
std::array<ArealPoint<R>, 3> q_circle_centers(const CevianConfig<R>& cfg) {
  return cyclic_images(cfg, [](const CevianConfig<R>& c) { return conic_center(circle_aql_conic(c)); });
}

template <ExactRing R>
void claims_centers(const CevianConfig<R>& cfg, Mutation mut, ClaimSet<R>& out) {
  auto centers = q_circle_centers(cfg);
  if (mut == Mutation::PerturbCenter) centers[2] = detail::bump_x(centers[2]);
  for (const auto& c : centers) out.note(c);
  out.zero("det(centers of AQL, BQM, CQN)", centers_determinant(centers));
}

template <ExactRing R>
void claims_audit_center_printed(const CevianConfig<R>& cfg, Mutation, ClaimSet<R>& out) {
  out.proportional("printed center ~ center of AQL", center_aql_printed(cfg).coords(),
                   conic_center(circle_aql_conic(cfg)).coords());
}

template <ExactRing R>
void claims_center_printed_bqm(const CevianConfig<R>& cfg, Mutation, ClaimSet<R>& out) {
  out.proportional("printed center ~ center of BQM", center_aql_printed(cfg).coords(),
                   q_circle_centers(cfg)[1].coords());
}

template <ExactRing R>
void claims_r(const CevianConfig<R>& cfg, Mutation, ClaimSet<R>& out) {
  const auto circles = q_circles_closed(cfg);
  const auto second = second_common_point(circles, miquel_point_closed_raw(cfg));
  out.note(second.point);
  out.zero("R on AQL", circle_eval(circles[0], second.point));
  out.zero("R on BQM", circle_eval(circles[1], second.point));
  out.zero("R on CQN", circle_eval(circles[2], second.point));
}

// --- task table --------------------------------------------------------------------

struct ProofTaskInfo {
  std::string_view name;
  std::string_view statement;
  ProofKind kind;
};

/// Deterministic task order.
inline constexpr std::array<ProofTaskInfo, 11> kProofTasks = {{
    {"circle_amn", "A, M, N satisfy the printed equation of circle AMN", ProofKind::Core},
    {"miquel_closed", "closed-form Q lies on AMN, BNL, CLM", ProofKind::Core},
    {"u_closed", "closed-form U, V, W lie on their Cevians and Miquel circles", ProofKind::Core},
    {"theorem1", "P and Q lie on circle UVW", ProofKind::Core},
    {"circle_aql", "A, Q, L satisfy the corrected equation of circle AQL", ProofKind::Core},
    {"centers_collinear", "centers of AQL, BQM, CQN are collinear", ProofKind::Core},
    {"audit_uvw_printed", "printed x2 and yz coefficients of circle UVW", ProofKind::Audit},
    {"audit_aql_printed", "printed equation of circle AQL passes through A, Q, L", ProofKind::Audit},
    {"audit_center_printed", "printed center formula equals the center of AQL", ProofKind::Audit},
    {"center_printed_bqm", "printed center formula equals the center of BQM", ProofKind::Info},
    {"second_point_r", "second common point R of AQL, BQM, CQN", ProofKind::Info},
}};

const ProofTaskInfo* find_task(std::string_view name);

/// Claims of the named task for one configuration. Throws std::out_of_range
/// for an unknown name.
template <ExactRing R>
ClaimSet<R> task_claims(std::string_view name, const CevianConfig<R>& cfg, Mutation mut = Mutation::None) {
  ClaimSet<R> out;
  if (name == "circle_amn") claims_circle_amn(cfg, mut, out);
  else if (name == "miquel_closed") claims_miquel_closed(cfg, mut, out);
  else if (name == "u_closed") claims_u_closed(cfg, mut, out);
  else if (name == "theorem1") claims_theorem1(cfg, mut, out);
  else if (name == "circle_aql") claims_circle_aql(cfg, mut, out);
  else if (name == "centers_collinear") claims_centers(cfg, mut, out);
  else if (name == "audit_uvw_printed") claims_audit_uvw_printed(cfg, mut, out);
  else if (name == "audit_aql_printed") claims_audit_aql_printed(cfg, mut, out);
  else if (name == "audit_center_printed") claims_audit_center_printed(cfg, mut, out);
  else if (name == "center_printed_bqm") claims_center_printed_bqm(cfg, mut, out);
  else if (name == "second_point_r") claims_r(cfg, mut, out);
  else throw std::out_of_range("unknown proof task: " + std::string(name));
  return out;
}

// --- running and reporting -------------------------------------------------------------

inline constexpr std::size_t kDefaultBudget = 5'000'000;

struct ProverOptions {
  std::size_t budget = kDefaultBudget;
  Mutation mutation = Mutation::None;
};

struct ProofOutcome {
  std::string name;
  std::string statement;
  ProofKind kind = ProofKind::Core;
  ProofStatus status = ProofStatus::Proved;
  std::size_t claims = 0;
  /// First claim with a nonzero residual, and that residual.
  std::string failed_claim;
  std::string residual;
  std::size_t peak_terms = 0;
  std::size_t max_terms = 0;
  unsigned max_degree = 0;
  double wall_ms = 0;
  std::string message;

  friend bool operator==(const ProofOutcome&, const ProofOutcome&) = default;
};

/// Runs one task symbolically under a fresh term budget.
ProofOutcome run_proof(const ProofTaskInfo& task, const ProverOptions& opts = {});
std::vector<ProofOutcome> prove_all(const ProverOptions& opts = {});

std::string proof_report_json(const std::vector<ProofOutcome>& outcomes);
std::vector<ProofOutcome> parse_proof_report(const std::string& json);
std::string proof_report_text(const std::vector<ProofOutcome>& outcomes);

}  // namespace miquel

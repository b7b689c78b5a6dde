#pragma once

// Seeded random instances and the exact / floating verification harness.

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "miquel/pipeline.hpp"

namespace miquel {

/// Triangle with a², b², c² = p/q, 1 ≤ p, q ≤ K, by rejection until valid.
TriangleMetric<Rational> sample_metric(std::mt19937_64& rng, int max_coeff);

/// P = (l, m, n) with numerators in [−K, K] \ {0} and denominators in
/// [1, K], redrawn until l+m, m+n, n+l are nonzero.
CevianConfig<Rational> sample_config(std::mt19937_64& rng, int max_coeff);

/// Side points L, M, N with nonzero finite coordinates that fail Ceva.
SideTriple<Rational> sample_non_cevian(std::mt19937_64& rng, int max_coeff);

/// Cartesian re-verification of every incidence of a built figure.
struct FloatCheck {
  std::size_t incidences = 0;
  std::size_t failures = 0;
  double max_error = 0;  // relative to the figure's coordinate scale
  std::vector<std::string> failed;
};

FloatCheck float_cross_check(const MiquelFigure& fig, double tolerance = 1e-9);

struct FuzzOptions {
  std::size_t trials = 100;
  std::uint64_t seed = 0;
  int max_coeff = 20;
  bool non_cevian = false;
  /// Floating cross-checks on the first this-many nondegenerate instances.
  std::size_t float_checks = 0;
};

struct FuzzSummary {
  FuzzOptions options;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t degenerate = 0;
  /// Degenerate instances grouped by the construction that failed.
  std::map<std::string, std::size_t> degeneracies;
  /// One line per failure: the instance and the failing check.
  std::vector<std::string> failures;

  // Non-Cevian mode.
  std::size_t miquel_ok = 0;
  std::size_t centers_collinear = 0;

  // Floating cross-check.
  std::size_t float_instances = 0;
  std::size_t float_incidences = 0;
  std::size_t float_failures = 0;
  double float_max_error = 0;

  /// Deterministic report; contains no timings.
  std::string text() const;
};

FuzzSummary run_fuzz(const FuzzOptions& opts);

std::string describe(const CevianConfig<Rational>& cfg);
std::string describe(const SideTriple<Rational>& s, const TriangleMetric<Rational>& m);

}  // namespace miquel

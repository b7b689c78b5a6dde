#pragma once

// Random generators shared by the property tests.

#include <random>

#include "miquel/pipeline.hpp"

namespace miquel::testing {

inline Rational random_rational(std::mt19937_64& rng, int max_num, int max_den, bool allow_zero = true) {
  std::uniform_int_distribution<int> num(-max_num, max_num);
  std::uniform_int_distribution<int> den(1, max_den);
  while (true) {
    Rational r(num(rng), den(rng));
    if (allow_zero || !r.is_zero()) return r;
  }
}

inline MultiPoly random_poly(std::mt19937_64& rng, std::size_t max_terms = 5, unsigned max_exp = 3) {
  std::uniform_int_distribution<std::size_t> count(0, max_terms);
  std::uniform_int_distribution<unsigned> exp(0, max_exp);
  std::uniform_int_distribution<int> which(0, static_cast<int>(kVarCount) - 1);
  MultiPoly p;
  const std::size_t n = count(rng);
  for (std::size_t i = 0; i < n; ++i) {
    Monomial mono;
    for (int k = 0; k < 3; ++k) mono = mono * Monomial::of(static_cast<Var>(which(rng)), exp(rng));
    p += MultiPoly::term(random_rational(rng, 9, 4), mono);
  }
  return p;
}

inline std::map<Var, Rational> random_bindings(std::mt19937_64& rng) {
  std::map<Var, Rational> b;
  for (Var v : kAllVars) b[v] = random_rational(rng, 12, 5);
  return b;
}

inline TriangleMetric<Rational> random_metric(std::mt19937_64& rng, int k = 20) {
  std::uniform_int_distribution<int> num(1, k);
  std::uniform_int_distribution<int> den(1, k);
  while (true) {
    TriangleMetric<Rational> m{Rational(num(rng), den(rng)), Rational(num(rng), den(rng)),
                               Rational(num(rng), den(rng))};
    if (sixteen_area_squared(m).sign() > 0) return m;
  }
}

inline CevianConfig<Rational> random_config(std::mt19937_64& rng, int k = 20) {
  const TriangleMetric<Rational> metric = random_metric(rng, k);
  while (true) {
    ArealPoint<Rational> p{random_rational(rng, k, k, false), random_rational(rng, k, k, false),
                           random_rational(rng, k, k, false)};
    if ((p.x + p.y).is_zero() || (p.y + p.z).is_zero() || (p.z + p.x).is_zero()) continue;
    return CevianConfig<Rational>(metric, p);
  }
}

inline ArealPoint<Rational> random_point(std::mt19937_64& rng, int k = 12) {
  while (true) {
    ArealPoint<Rational> p{random_rational(rng, k, 4), random_rational(rng, k, 4), random_rational(rng, k, 4)};
    if (!p.is_zero_vector() && !p.at_infinity()) return p;
  }
}

inline std::map<Var, Rational> bindings_for(const CevianConfig<Rational>& cfg) {
  return {{Var::A, cfg.a2()}, {Var::B, cfg.b2()}, {Var::C, cfg.c2()},
          {Var::L, cfg.l()},  {Var::M, cfg.m()},  {Var::N, cfg.n()}};
}

inline ArealPoint<Rational> eval_point(const ArealPoint<MultiPoly>& p, const std::map<Var, Rational>& b) {
  return {p.x.eval(b), p.y.eval(b), p.z.eval(b)};
}

inline MultiPoly P(const char* text) { return MultiPoly::parse(text); }

}  // namespace miquel::testing

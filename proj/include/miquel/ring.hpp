#pragma once

#include <array>
#include <concepts>
#include <cstddef>
#include <type_traits>

#include "miquel/errors.hpp"
#include "miquel/multipoly.hpp"
#include "miquel/rational.hpp"

namespace miquel {

/// Commutative ring with an exact zero test. Geometry is written against
/// this and never divides, so it runs over Rational and MultiPoly alike.
template <class R>
concept ExactRing = std::regular<R> && requires(const R& a, const R& b) {
  { a + b } -> std::convertible_to<R>;
  { a - b } -> std::convertible_to<R>;
  { a * b } -> std::convertible_to<R>;
  { -a } -> std::convertible_to<R>;
  { is_zero(a) } -> std::same_as<bool>;
  R(0);
  R(1);
};

template <ExactRing R>
using Triple = std::array<R, 3>;

template <ExactRing R>
using Matrix3 = std::array<Triple<R>, 3>;

/// Cofactor expansion along the first row.
template <ExactRing R>
R det3(const Matrix3<R>& m) {
  const R minor0 = m[1][1] * m[2][2] - m[1][2] * m[2][1];
  const R minor1 = m[1][0] * m[2][2] - m[1][2] * m[2][0];
  const R minor2 = m[1][0] * m[2][1] - m[1][1] * m[2][0];
  return m[0][0] * minor0 - m[0][1] * minor1 + m[0][2] * minor2;
}

template <ExactRing R, std::size_t N>
bool all_zero(const std::array<R, N>& v) {
  for (const auto& x : v) {
    if (!is_zero(x)) return false;
  }
  return true;
}

/// Canonical representative of a homogeneous vector: divide out the joint
/// content and make the first nonzero entry positive (for polynomials, its
/// leading coefficient). Idempotent. Throws Error(ZeroVector) on all-zero.
///
/// Rationals: the result is a primitive integer vector. Polynomials: the
/// joint rational content and the common monomial factor are removed.
template <std::size_t N>
std::array<Rational, N> normalize_content(std::array<Rational, N> v) {
  if (all_zero(v)) throw Error(ErrorKind::ZeroVector, "cannot normalize the zero vector");
  mpz_class num_gcd = 0;
  mpz_class den_lcm = 1;
  for (const auto& x : v) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), x.raw().get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.raw().get_den_mpz_t());
  }
  Rational scale(mpq_class(den_lcm, num_gcd));
  for (const auto& x : v) {
    if (!x.is_zero()) {
      if (x.sign() < 0) scale = -scale;
      break;
    }
  }
  for (auto& x : v) x *= scale;
  return v;
}

template <std::size_t N>
std::array<MultiPoly, N> normalize_content(std::array<MultiPoly, N> v) {
  if (all_zero(v)) throw Error(ErrorKind::ZeroVector, "cannot normalize the zero vector");
  mpz_class num_gcd = 0;
  mpz_class den_lcm = 1;
  bool have_mono = false;
  Monomial mono;
  for (const auto& p : v) {
    if (p.is_zero()) continue;
    const Rational c = p.content();
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.raw().get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.raw().get_den_mpz_t());
    mono = have_mono ? mono.gcd(p.monomial_content()) : p.monomial_content();
    have_mono = true;
  }
  Rational divisor(mpq_class(num_gcd, den_lcm));
  for (const auto& p : v) {
    if (!p.is_zero()) {
      if (p.leading_coefficient().sign() < 0) divisor = -divisor;
      break;
    }
  }
  for (auto& p : v) p = p.divide_term(divisor, mono);
  return v;
}

/// True iff every 2×2 minor vanishes. Throws Error(ZeroVector) if either
/// vector is all-zero.
template <ExactRing R, std::size_t N>
bool proportional(const std::array<R, N>& v, const std::array<R, N>& w) {
  if (all_zero(v) || all_zero(w)) throw Error(ErrorKind::ZeroVector, "proportionality of a zero vector");
  for (std::size_t i = 0; i < N; ++i) {
    for (std::size_t j = i + 1; j < N; ++j) {
      if (!is_zero(v[i] * w[j] - v[j] * w[i])) return false;
    }
  }
  return true;
}

/// The 2×2 minors v_i·w_j − v_j·w_i in (i, j) lexicographic order.
template <ExactRing R, std::size_t N>
std::array<R, N*(N - 1) / 2> minors(const std::array<R, N>& v, const std::array<R, N>& w) {
  std::array<R, N*(N - 1) / 2> out;
  std::size_t k = 0;
  for (std::size_t i = 0; i < N; ++i) {
    for (std::size_t j = i + 1; j < N; ++j) out[k++] = v[i] * w[j] - v[j] * w[i];
  }
  return out;
}

}  // namespace miquel

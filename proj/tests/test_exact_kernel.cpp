#include <doctest.h>

#include "miquel/pipeline.hpp"
#include "support.hpp"

using namespace miquel;
using miquel::testing::P;

TEST_CASE("rational parsing and canonical form") {
  CHECK(Rational::parse("6/4").to_string() == "3/2");
  CHECK(Rational::parse("-4").to_string() == "-4");
  CHECK(Rational::parse(" 0/7 ").is_zero());
  CHECK(Rational::parse("+5/10") == Rational(1, 2));
}

TEST_CASE("rational parse errors") {
  CHECK_THROWS_AS(Rational::parse("1/0"), Error);
  CHECK_THROWS_AS(Rational::parse("abc"), Error);
  CHECK_THROWS_AS(Rational::parse("1.5"), Error);
  CHECK_THROWS_AS(Rational::parse(""), Error);
  CHECK_THROWS_AS(Rational::parse("-6/-4"), Error);
}

TEST_CASE("poly_arith examples") {
  CHECK((P("X+Y") * P("X-Y")) == P("X^2-Y^2"));
  const MultiPoly p = P("3/2*A^2*L - M + 7");
  CHECK(p + MultiPoly() == p);
  const MultiPoly circum =
      MultiPoly::var(Var::A) * P("Y*Z") + MultiPoly::var(Var::B) * P("Z*X") + MultiPoly::var(Var::C) * P("X*Y");
  CHECK(circum.to_string() == "A*Y*Z + B*X*Z + C*X*Y");
  CHECK((p - p).is_zero());
}

TEST_CASE("canonical serialization") {
  CHECK(P("7 - Y^2 + 3/2*X*A^2").to_string() == "3/2*A^2*X - Y^2 + 7");
  CHECK(MultiPoly().to_string() == "0");
  CHECK(P("-(L+M)").to_string() == "-L - M");
  CHECK_THROWS_AS(P("X + "), Error);
  CHECK_THROWS_AS(P("Q*X"), Error);
  CHECK_THROWS_AS(P("(X"), Error);
}

TEST_CASE("serialization round-trips through the parser") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const MultiPoly p = miquel::testing::random_poly(rng, 8);
    CHECK(MultiPoly::parse(p.to_string()) == p);
  }
}

TEST_CASE("poly_eval examples") {
  CHECK(P("X^2-Y^2").eval({{Var::X, 3}, {Var::Y, 2}}) == Rational(5));
  CHECK(MultiPoly().eval({}) == Rational(0));
  CHECK_THROWS_AS(P("X*Y").eval({{Var::X, 1}}), Error);

  // x-component of the closed-form Miquel point at the 3-4-5 centroid instance:
  // 16·a²(b²+c²−a²) = 0.
  const auto q = miquel_point_closed_raw(symbolic_config());
  CHECK(q.x.eval({{Var::A, 25}, {Var::B, 16}, {Var::C, 9}, {Var::L, 1}, {Var::M, 1}, {Var::N, 1}}).is_zero());
}

TEST_CASE("cyclic_shift examples") {
  CHECK(P("A*Y*Z").cyclic_shift() == P("B*Z*X"));
  CHECK(MultiPoly(7).cyclic_shift() == MultiPoly(7));
  const MultiPoly amn = P(
      "C*L*(N+L)*Y^2 + B*L*(L+M)*Z^2 - (A*(L+M)*(N+L) - B*L*(L+M) - C*L*(N+L))*Y*Z"
      " - B*N*(L+M)*Z*X - C*M*(N+L)*X*Y");
  CHECK(amn.cyclic_shift() != amn);
  CHECK(amn.cyclic_shift().cyclic_shift().cyclic_shift() == amn);
}

TEST_CASE("det3 examples") {
  using M3 = Matrix3<Rational>;
  CHECK(det3<Rational>(M3{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}}) == Rational(1));
  CHECK(det3<Rational>(M3{{{1, 2, 3}, {4, 5, 6}, {1, 2, 3}}}).is_zero());
  CHECK(det3<Rational>(M3{{{2, 0, 1}, {1, 3, 2}, {1, 1, 2}}}) == Rational(6));
}

TEST_CASE("content_normalize examples") {
  using T = std::array<Rational, 3>;
  CHECK(normalize_content(T{0, 288, 288}) == T{0, 1, 1});
  CHECK(normalize_content(T{2, -4, 6}) == T{1, -2, 3});
  CHECK(normalize_content(T{Rational(-1, 2), Rational(1, 3), 0}) == T{3, -2, 0});
  CHECK_THROWS_AS(normalize_content(T{0, 0, 0}), Error);

  using PT = std::array<MultiPoly, 3>;
  CHECK(normalize_content(PT{P("-4*A*L^2"), P("6*A*L*M"), P("0")}) == PT{P("2*L"), P("-3*M"), P("0")});
  CHECK_THROWS_AS(normalize_content(PT{}), Error);
}

TEST_CASE("proportional examples") {
  using T = std::array<Rational, 3>;
  CHECK(proportional(T{1, 2, 3}, T{2, 4, 6}));
  CHECK_FALSE(proportional(T{1, 2, 3}, T{1, 2, 4}));
  CHECK_THROWS_AS(proportional(T{0, 0, 0}, T{1, 2, 3}), Error);
}

TEST_CASE("exponent overflow is detected") {
  CHECK_THROWS_AS(Monomial::of(Var::X, 128), Error);
  const MultiPoly big = MultiPoly::var(Var::X, 100);
  CHECK_THROWS_AS(big * big, Error);
}

TEST_CASE("term budget aborts large products and records the peak") {
  const MultiPoly p = P("(A+B+C+L+M+N)^3");
  {
    TermBudget budget(10);
    CHECK_THROWS_AS(p * p, Error);
  }
  TermBudget budget(1000000);
  const MultiPoly q = p * p;
  CHECK(budget.peak() >= q.size());
}

TEST_CASE("ring laws hold on random polynomials") {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 100; ++i) {
    const MultiPoly p = miquel::testing::random_poly(rng);
    const MultiPoly q = miquel::testing::random_poly(rng);
    const MultiPoly r = miquel::testing::random_poly(rng);
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * (q + r) == p * q + p * r);
    CHECK(p * q == q * p);
    CHECK((p + q) + r == p + (q + r));
    CHECK(p - q == -(q - p));
  }
}

TEST_CASE("eval is a ring homomorphism") {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 100; ++i) {
    const MultiPoly p = miquel::testing::random_poly(rng);
    const MultiPoly q = miquel::testing::random_poly(rng);
    const auto b = miquel::testing::random_bindings(rng);
    CHECK((p + q).eval(b) == p.eval(b) + q.eval(b));
    CHECK((p * q).eval(b) == p.eval(b) * q.eval(b));
  }
}

TEST_CASE("substitute agrees with eval") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    const MultiPoly p = miquel::testing::random_poly(rng);
    const MultiPoly sx = miquel::testing::random_poly(rng, 3, 2);
    const auto b = miquel::testing::random_bindings(rng);
    auto b2 = b;
    b2[Var::X] = sx.eval(b);
    CHECK(p.substitute({{Var::X, sx}}).eval(b) == p.eval(b2));
  }
}

TEST_CASE("cyclic_shift is an order-3 automorphism") {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 100; ++i) {
    const MultiPoly p = miquel::testing::random_poly(rng);
    const MultiPoly q = miquel::testing::random_poly(rng);
    CHECK((p * q).cyclic_shift() == p.cyclic_shift() * q.cyclic_shift());
    CHECK((p + q).cyclic_shift() == p.cyclic_shift() + q.cyclic_shift());
    CHECK(p.cyclic_shift().cyclic_shift().cyclic_shift() == p);
  }
}

TEST_CASE("det3 is alternating and multilinear in rows") {
  std::mt19937_64 rng(5);
  auto rnd = [&] { return miquel::testing::random_poly(rng, 3, 2); };
  for (int i = 0; i < 30; ++i) {
    Matrix3<MultiPoly> m;
    for (auto& row : m) row = {rnd(), rnd(), rnd()};
    const MultiPoly d = det3(m);
    Matrix3<MultiPoly> swapped = m;
    std::swap(swapped[0], swapped[2]);
    CHECK(det3(swapped) == -d);

    const MultiPoly k = rnd();
    Matrix3<MultiPoly> scaled = m;
    for (auto& e : scaled[1]) e = e * k;
    CHECK(det3(scaled) == k * d);

    const Triple<MultiPoly> extra{rnd(), rnd(), rnd()};
    Matrix3<MultiPoly> summed = m;
    Matrix3<MultiPoly> other = m;
    for (std::size_t j = 0; j < 3; ++j) {
      summed[2][j] = m[2][j] + extra[j];
      other[2][j] = extra[j];
    }
    CHECK(det3(summed) == d + det3(other));
  }
}

TEST_CASE("content normalization is idempotent and preserves the projective point") {
  std::mt19937_64 rng(6);
  for (int i = 0; i < 100; ++i) {
    std::array<MultiPoly, 3> v{miquel::testing::random_poly(rng), miquel::testing::random_poly(rng),
                               miquel::testing::random_poly(rng)};
    if (all_zero(v)) continue;
    const auto n = normalize_content(v);
    CHECK(normalize_content(n) == n);
    CHECK(proportional(n, v));

    std::array<Rational, 3> r{miquel::testing::random_rational(rng, 50, 9),
                              miquel::testing::random_rational(rng, 50, 9),
                              miquel::testing::random_rational(rng, 50, 9)};
    if (all_zero(r)) continue;
    const auto rn = normalize_content(r);
    CHECK(normalize_content(rn) == rn);
    CHECK(proportional(rn, r));
  }
}

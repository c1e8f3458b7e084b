#include <gtest/gtest.h>

#include <random>

#include "dforge/algebraic.hpp"
#include "dforge/error.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace dforge;

namespace {

AlgebraicNumber sqrt2() { return AlgebraicNumber::from_isolating(parse_upoly("x^2-2"), 1, 2); }
AlgebraicNumber phi() { return AlgebraicNumber::from_isolating(parse_upoly("x^2-x-1"), 1, 2); }

}  // namespace

TEST(RationalParse, AcceptsFractionsAndDecimals) {
  EXPECT_EQ(parse_rational("21/1100"), Rational(21, 1100));
  EXPECT_EQ(parse_rational("-0.75"), Rational(-3, 4));
  EXPECT_EQ(parse_rational("0.101000001"), Rational(101000001, 1000000000));
  EXPECT_EQ(parse_integer("010"), Integer(10));
  EXPECT_THROW(parse_rational("1/0"), Error);
  EXPECT_THROW(parse_rational("abc"), Error);
  EXPECT_THROW(parse_integer("1/2"), Error);
}

TEST(UPoly, GcdAndSquarefree) {
  const UPoly p = parse_upoly("x^3-x^2-2*x+2");  // (x-1)(x^2-2)
  EXPECT_EQ(gcd(p, parse_upoly("x^2-1")), parse_upoly("x-1"));
  EXPECT_EQ(squarefree_part(parse_upoly("x^2-2*x+1")), parse_upoly("x-1"));
}

TEST(UPoly, SturmCountsRoots) {
  SturmSequence s(parse_upoly("x^3-x^2-2*x+2"));
  EXPECT_EQ(s.count_all(), 3u);
  EXPECT_EQ(s.count_open(0, 2), 2u);
  EXPECT_EQ(s.count_closed(1, 1), 1u);
  EXPECT_EQ(SturmSequence(parse_upoly("x^2+1")).count_all(), 0u);
}

TEST(RealRoots, CanonicalIntervals) {
  auto r = real_roots(parse_upoly("x^2-2"));
  ASSERT_EQ(r.size(), 2u);
  EXPECT_EQ(r[1].lower(), 1);
  EXPECT_EQ(r[1].upper(), 2);
  EXPECT_EQ(r[0].lower(), -2);
  EXPECT_EQ(r[0].upper(), -1);
  auto q = real_roots(parse_upoly("4*x^2-1"));
  ASSERT_EQ(q.size(), 2u);
  EXPECT_TRUE(q[1].is_rational());
  EXPECT_EQ(q[1].rational_value(), Rational(1, 2));
}

TEST(Refine, SqrtTwoWithinEighth) {
  auto a = sqrt2().refine(Rational(1, 8));
  EXPECT_LE(a.upper() - a.lower(), Rational(1, 8));
  EXPECT_LE(a.lower(), Rational(1414, 1000));
  EXPECT_GE(a.upper(), Rational(1415, 1000));
}

TEST(Refine, GoldenMeanWithinHundredth) {
  auto a = phi().refine(Rational(1, 100));
  EXPECT_LE(a.upper() - a.lower(), Rational(1, 100));
  const auto [lo, hi] = oracle::bisect_root({-1, -1, 1}, 1, 2, Rational(1, 100000));
  EXPECT_LE(a.lower(), lo);
  EXPECT_GE(a.upper(), hi);
  EXPECT_GE(a.lower(), Rational(16, 10));
  EXPECT_LE(a.upper(), Rational(163, 100));
}

TEST(Refine, RationalUnchanged) {
  AlgebraicNumber h(Rational(1, 2));
  auto r = h.refine(Rational(1, 1000));
  EXPECT_TRUE(r.is_rational());
  EXPECT_EQ(r.rational_value(), Rational(1, 2));
}

TEST(Refine, KeepsExactlyOneRoot) {
  const UPoly p = parse_upoly("x^5-3*x+1");
  for (const auto& root : real_roots(p)) {
    AlgebraicNumber a = root;
    for (int k = 1; k <= 20; ++k) {
      a = a.refine(Rational(1, 1 << k));
      if (a.is_rational()) break;
      EXPECT_EQ(SturmSequence(p).count_closed(a.lower(), a.upper()), 1u);
    }
  }
}

TEST(Compare, Examples) {
  EXPECT_LT(sqrt2(), AlgebraicNumber(Rational(3, 2)));
  EXPECT_EQ(sqrt2(), AlgebraicNumber::from_isolating(parse_upoly("x^2-2"), Rational(14, 10), Rational(15, 10)));
  EXPECT_GT(phi(), sqrt2());
  EXPECT_EQ(AlgebraicNumber(Rational(2)), AlgebraicNumber::from_isolating(parse_upoly("x^2-4"), 0, 3));
}

TEST(Compare, AgreesWithRefinementOnRandomQuadratics) {
  std::mt19937_64 rng(11);
  std::vector<AlgebraicNumber> pool;
  for (int i = 0; i < 30; ++i) {
    const long c = std::uniform_int_distribution<long>(2, 30)(rng);
    const long b = std::uniform_int_distribution<long>(-3, 3)(rng);
    for (auto& r : real_roots(UPoly({Integer(-c), Integer(b), Integer(1)}))) pool.push_back(r);
  }
  for (std::size_t i = 0; i < pool.size(); ++i) {
    for (std::size_t j = 0; j < pool.size(); ++j) {
      const auto ord = compare(pool[i], pool[j]);
      if (ord == 0) continue;
      const auto& lo = ord < 0 ? pool[i] : pool[j];
      const auto& hi = ord < 0 ? pool[j] : pool[i];
      Rational w(1);
      bool separated = false;
      for (int k = 0; k < 60 && !separated; ++k, w /= 2) separated = lo.refine(w).upper() < hi.refine(w).lower();
      EXPECT_TRUE(separated) << i << " " << j;
    }
  }
}

TEST(Mobius, FloorAndFrac) {
  EXPECT_EQ(sqrt2().floor(), 1);
  EXPECT_EQ((-sqrt2()).floor(), -2);
  EXPECT_EQ(sqrt2().floor_scaled(1000), 1414);
  auto f = sqrt2().frac();
  EXPECT_EQ(f.floor_scaled(100000), 41421);
}

TEST(ParseAlgebraic, RoundTripsRendering) {
  for (const auto& a : {sqrt2(), phi(), AlgebraicNumber(Rational(-7, 3))}) {
    EXPECT_EQ(parse_algebraic(a.to_string()), a);
  }
  EXPECT_EQ(sqrt2().to_string(), "alg poly=\"x^2-2\" interval=(1,2)");
}

TEST(BisectionOracle, AgreesOnSqrtTwoDigits) {
  const auto a = sqrt2();
  const auto digits = oracle::bisection_digits({-2, 0, 1}, 1, 2, 12);
  Integer scale = 1;
  for (std::size_t n = 1; n <= digits.size(); ++n) {
    scale *= 10;
    EXPECT_EQ(mpz_fdiv_ui(a.floor_scaled(scale).get_mpz_t(), 10), static_cast<unsigned long>(digits[n - 1]));
  }
}

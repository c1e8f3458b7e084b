#include <gtest/gtest.h>

#include <random>

#include "dforge/error.hpp"
#include "dforge/qe.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace dforge;

namespace {

PolyFormula pf(const char* text) { return parse_formula(text).formula; }

bool eval_qf(const Formula& f, const std::vector<Rational>& p) {
  return f.evaluate([&](std::size_t i) { return p.at(i - 1); });
}

}  // namespace

TEST(Eliminate, SumOfSquareGivesOrder) {
  const auto e = eliminate(pf("exists z . x + z*z = y"));
  EXPECT_TRUE(e.prefix.empty());
  EXPECT_EQ(render_formula(e), "x1 - x2 <= 0");
}

TEST(Eliminate, SquareRootsExistForNonnegatives) {
  EXPECT_EQ(render_formula(eliminate(pf("exists y . y*y = x"))), "x1 >= 0");
}

TEST(Eliminate, QuadraticSolvabilityOnRationalGrid) {
  const auto e = eliminate(pf("exists y . a*y^2 + b*y + c = 0"));
  ASSERT_TRUE(e.matrix.is_quantifier_free());
  for (int a = -3; a <= 3; ++a) {
    for (int b = -3; b <= 3; ++b) {
      for (int c = -3; c <= 3; ++c) {
        // Exact root check: linear, constant, or discriminant square test via Sturm.
        bool solvable;
        if (a == 0) {
          solvable = b != 0 || c == 0;
        } else {
          solvable = !real_roots(UPoly({Integer(c), Integer(b), Integer(a)})).empty();
        }
        EXPECT_EQ(eval_qf(e.matrix, {a, b, c}), solvable) << a << " " << b << " " << c;
      }
    }
  }
}

TEST(Eliminate, EmptyPrefixIsNoOp) {
  const auto f = pf("x*x < 1");
  EXPECT_EQ(render_formula(eliminate(f)), render_formula(f));
}

TEST(Eliminate, CubicWithParametersIsUnsupported) {
  try {
    eliminate(pf("exists y . y^3 = x"));
    FAIL();
  } catch (const UnsupportedDegree& e) {
    EXPECT_EQ(e.degree(), 3u);
  }
}

TEST(Decide, Examples) {
  EXPECT_TRUE(decide(pf("exists x . x*x = 2")));
  EXPECT_TRUE(decide(pf("forall x . x*x >= 0")));
  EXPECT_FALSE(decide(pf("exists x . x*x + 1 = 0")));
  EXPECT_TRUE(decide(pf("forall x . forall y . (x <= y <-> exists z . x + z*z = y)")));
  EXPECT_TRUE(decide(pf("exists x . x^3 - 2 = 0")));
  EXPECT_FALSE(decide(pf("exists x . x^4 + x^2 + 1 <= 0")));
}

TEST(Decide, FreeVariablesRejected) {
  try {
    decide(pf("x > 0"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidArgument);
  }
}

TEST(Decide, AbsoluteValueIsDefinable) {
  // |x| as the y with y >= 0 and y^2 = x^2; functional on every x.
  EXPECT_TRUE(decide(pf("forall x . exists y . y >= 0 and y*y = x*x and (x >= 0 -> y = x) and (x < 0 -> y = -x)")));
}

TEST(Describe, SqrtTwo) {
  const auto d = describe_unary(pf("x>0 and x*x=2"));
  ASSERT_EQ(d.components().size(), 1u);
  const auto& c = d.components()[0];
  EXPECT_EQ(c.kind, UnaryComponent::Kind::Point);
  EXPECT_EQ(c.point.poly(), parse_upoly("x^2-2"));
  EXPECT_EQ(c.point.lower(), 1);
  EXPECT_EQ(c.point.upper(), 2);
  EXPECT_EQ(d.to_string(), "point poly=\"x^2-2\" in (1,2)");
}

TEST(Describe, OpenUnitInterval) {
  const auto d = describe_unary(pf("x*x < 1"));
  ASSERT_EQ(d.components().size(), 1u);
  EXPECT_EQ(d.components()[0].kind, UnaryComponent::Kind::Interval);
  EXPECT_EQ(d.to_string(), "interval (-1,1)");
  EXPECT_FALSE(extract_singleton(d).has_value());
}

TEST(Describe, EmptySet) {
  const auto d = describe_unary(pf("x*x + 1 = 0"));
  EXPECT_TRUE(d.empty());
  EXPECT_EQ(d.to_string(), "empty");
}

TEST(Describe, GoldenMean) {
  const auto s = extract_singleton(describe_unary(pf("x>0 and x*x = x+1")));
  ASSERT_TRUE(s.has_value());
  EXPECT_EQ(s->poly(), parse_upoly("x^2-x-1"));
  EXPECT_EQ(s->lower(), 1);
  EXPECT_EQ(s->upper(), 2);
  const auto [lo, hi] = oracle::bisect_root({-1, -1, 1}, 1, 2, Rational(1, 1000000));
  EXPECT_TRUE(s->lower() <= lo && hi <= s->upper());
}

TEST(Describe, QuantifiedInput) {
  const auto d = describe_unary(pf("exists y . y*y = x and y > 1"));
  EXPECT_EQ(d.to_string(), "interval (1,+inf)");
}

TEST(QeProperty, EliminationSoundAtRationalPoints) {
  std::mt19937_64 rng(5);
  int instances = 0;
  while (instances < 40) {
    const std::size_t free = std::uniform_int_distribution<std::size_t>(1, 2)(rng);
    const std::size_t x = free + 1;
    const Formula body = gen::qf_formula(rng, x, 2, 3, x, 2);
    if (!body.free_variables().empty() && body.free_variables().back() != x) continue;
    const Quantifier q = rng() % 2 ? Quantifier::Exists : Quantifier::Forall;
    PolyFormula f{{{q, x}}, body, free};
    const PolyFormula e = eliminate(f);
    ASSERT_TRUE(e.prefix.empty());
    ++instances;
    for (int k = 0; k < 200; ++k) {
      std::vector<Rational> p;
      for (std::size_t i = 0; i < free; ++i) p.push_back(gen::rational(rng, 4, 3));
      const bool expected = oracle::univariate_quantified(q, x, oracle::instantiate(body, p));
      ASSERT_EQ(eval_qf(e.matrix, p), expected) << render_formula(f) << " => " << render_formula(e);
    }
  }
}

TEST(QeProperty, TwoHundredPointsOnFixedQuadratic) {
  const auto f = pf("exists z . a*z^2 + b*z + c < 0 and z > a");
  const auto e = eliminate(f);
  std::mt19937_64 rng(6);
  for (int k = 0; k < 200; ++k) {
    std::vector<Rational> p{gen::rational(rng, 5, 4), gen::rational(rng, 5, 4), gen::rational(rng, 5, 4)};
    EXPECT_EQ(eval_qf(e.matrix, p),
              oracle::univariate_quantified(Quantifier::Exists, 4, oracle::instantiate(f.matrix, p)));
  }
}

TEST(QeProperty, LinearDecisionsMatchFourierMotzkin) {
  std::mt19937_64 rng(7);
  int trues = 0, falses = 0;
  for (int i = 0; i < 500; ++i) {
    const std::size_t nvars = 1 + i % 3;
    const auto lin = oracle::random_linear_sentence(rng, nvars, 2 + i % 3);
    const std::string text = oracle::to_text(lin);
    const bool truth = oracle::fm_decide(lin, nvars);
    ASSERT_EQ(decide(pf(text.c_str())), truth) << text;
    (truth ? trues : falses) += 1;
  }
  EXPECT_GT(trues, 100);
  EXPECT_GT(falses, 100);
}

TEST(QeProperty, DescribeMembershipAtProbes) {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 30; ++i) {
    const Formula body = gen::qf_formula(rng, 1, 1 + i % 3, 3);
    if (body.free_variables().empty()) continue;
    const PolyFormula f{{}, body, 1};
    const auto d = describe_unary(f);
    std::vector<Rational> probes;
    for (const auto& c : d.components()) {
      for (const auto* end : {c.kind == UnaryComponent::Kind::Point ? &c.point : nullptr,
                              c.lower ? &*c.lower : nullptr, c.upper ? &*c.upper : nullptr}) {
        if (!end) continue;
        for (Rational eps : {Rational(1, 1000), Rational(1, 7)}) {
          const auto r = end->refine(eps / 4);
          probes.push_back(r.lower() - eps);
          probes.push_back(r.upper() + eps);
          if (r.is_rational()) probes.push_back(r.rational_value());
        }
      }
    }
    while (probes.size() < 100) probes.push_back(gen::rational(rng, 12, 5));
    for (const auto& q : probes) {
      EXPECT_EQ(d.contains(AlgebraicNumber(q)), eval_qf(body, {q})) << render_formula(f) << " at " << to_string(q);
    }
    // Components are ordered, disjoint and never adjacent intervals.
    const auto& cs = d.components();
    for (std::size_t k = 0; k + 1 < cs.size(); ++k) {
      const auto right_end = cs[k].kind == UnaryComponent::Kind::Point ? cs[k].point : *cs[k].upper;
      const auto left_next = cs[k + 1].kind == UnaryComponent::Kind::Point ? cs[k + 1].point : *cs[k + 1].lower;
      EXPECT_LE(right_end, left_next);
      if (cs[k].kind == UnaryComponent::Kind::Point && cs[k + 1].kind == UnaryComponent::Kind::Point) {
        EXPECT_LT(right_end, left_next);
      }
    }
  }
}

TEST(QeProperty, SingletonIffUniqueExistence) {
  std::mt19937_64 rng(9);
  int checked = 0;
  for (int i = 0; i < 80 && checked < 40; ++i) {
    const Formula body = gen::qf_formula(rng, 1, 1 + i % 2, 2);
    if (body.free_variables().empty()) continue;
    ++checked;
    const bool single = extract_singleton(describe_unary(PolyFormula{{}, body, 1})).has_value();
    // exists x . f(x) and forall y . (f(y) -> y = x)
    const Formula fy = body.rename([](std::size_t) { return std::size_t{2}; });
    const Formula unique = Formula::disj({Formula::negation(fy), Formula::atom(Poly::var(2) - Poly::var(1), Relation::Eq)});
    const PolyFormula eu{{{Quantifier::Exists, 1}, {Quantifier::Forall, 2}}, Formula::conj({body, unique}), 0};
    EXPECT_EQ(single, decide(eu)) << render_formula(PolyFormula{{}, body, 1});
  }
}

TEST(Simplify, MergesSignConditions) {
  const auto f = pf("x > 0 or x = 0");
  EXPECT_EQ(render_formula(simplify(f.matrix)), "x1 >= 0");
  EXPECT_TRUE(simplify(pf("x > 0 and x < 0").matrix).is_false());
  EXPECT_TRUE(simplify(pf("x >= 0 or x < 0").matrix).is_true());
}

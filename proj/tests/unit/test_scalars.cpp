#include "helpers.hpp"

#include "superdensity/algebraic.hpp"
#include "superdensity/rational_function.hpp"
#include "superdensity/roots.hpp"

#include <gtest/gtest.h>

using namespace superdensity;

namespace {

ParamPoly L() { return lambda_param(); }

std::shared_ptr<const QuadraticField> field(long c0, long c1) {
  return std::make_shared<const QuadraticField>(QuadraticField{Rational(c0), Rational(c1)});
}

}  // namespace

TEST(Rational, CanonicalForm) {
  Rational r(6, -4);
  EXPECT_EQ(r.to_string(), "-3/2");
  EXPECT_EQ(Rational(0, 5).to_string(), "0");
  EXPECT_EQ(Rational::parse("10/-4"), Rational(-5, 2));
  EXPECT_THROW(Rational::parse("1/0"), std::invalid_argument);
  EXPECT_THROW(Rational::parse("1.5"), std::invalid_argument);
  EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
}

TEST(ParamPoly, Arithmetic) {
  EXPECT_EQ((L() + 1) * (L() - 1), L() * L() - 1);
  EXPECT_TRUE((L() + (-L())).is_zero());
  ParamPoly p = Scalar(2) * L().pow(2) + Scalar(10) * L() + 3;
  EXPECT_EQ(p - Scalar(2) * (L().pow(2) + Scalar(5) * L()), ParamPoly(3));
  EXPECT_EQ(p.to_string(), "2*l^2 + 10*l + 3");
}

TEST(ParamPoly, VariableListMismatch) {
  VarList a = make_vars({"l"});
  VarList b = make_vars({"m"});
  EXPECT_THROW(ParamPoly::variable(a, "l") + ParamPoly::variable(b, "m"), std::invalid_argument);
}

TEST(ParamPoly, Gcd) {
  EXPECT_EQ(gcd(L() * L() - 1, L() - 1), L() - 1);
  EXPECT_EQ(gcd(L(), L() + 1), ParamPoly(1));
  ParamPoly p = Scalar(2) * L().pow(2) + Scalar(10) * L() + 3;
  EXPECT_TRUE(gcd(p, Scalar(4) * L() + 10).is_constant());
  EXPECT_EQ(gcd(Scalar(3) * L() + 6, ParamPoly(0)), L() + 2);
  // multivariate: content/primitive-part recursion
  ParamPoly t = tau_param();
  EXPECT_EQ(gcd((L() + t) * (L() - 1), (L() + t) * (t + 2)), L() + t);
}

TEST(ParamPoly, ExactDivision) {
  ParamPoly t = tau_param();
  ParamPoly a = (L() + t) * (L() * t - 3);
  EXPECT_EQ(divide_exact(a, L() * t - 3), L() + t);
  EXPECT_THROW(divide_exact(a, L() + 5), std::domain_error);
}

TEST(Roots, RationalRoots) {
  EXPECT_EQ(rational_roots(L() * (L() + 4)), (std::vector<Rational>{Rational(-4), Rational(0)}));
  EXPECT_TRUE(rational_roots(L() * L() + 1).empty());
  EXPECT_EQ(rational_roots((Scalar(2) * L() + 5) * (L() - 3)), (std::vector<Rational>{Rational(-5, 2), Rational(3)}));
  // multiplicity stripped
  EXPECT_EQ(rational_roots((L() - 1).pow(3) * L()), (std::vector<Rational>{Rational(0), Rational(1)}));
}

TEST(Roots, SquareFreeAndFactors) {
  ParamPoly q = Scalar(2) * L().pow(2) + Scalar(10) * L() + 3;
  EXPECT_EQ(square_free_part(q * q * L()), q * L());
  auto fs = irreducible_factors(L() * (L() + 4) * q * q);
  ASSERT_EQ(fs.size(), 3u);
  EXPECT_EQ(fs[2], q);
  // a product of two irreducible quadratics needs Kronecker's search
  ParamPoly q2 = Scalar(2) * L().pow(2) + Scalar(7) * L() + 2;
  auto gs = irreducible_factors(q * q2);
  ASSERT_EQ(gs.size(), 2u);
  EXPECT_TRUE(gs[0] == q || gs[1] == q);
  EXPECT_THROW(irreducible_factors(L().pow(3) - 2), std::domain_error);
}

TEST(Roots, QuadraticSplit) {
  ParamPoly p = Scalar(2) * L().pow(2) + Scalar(10) * L() + 3;
  auto [r0, r1] = quadratic_split(p);
  for (const auto& r : {r0, r1}) EXPECT_TRUE((AlgebraicScalar(2) * r * r + AlgebraicScalar(10) * r + AlgebraicScalar(3)).is_zero());
  // -(5 -/+ sqrt 19)/2: (2r + 5)^2 = 19, positive radical first
  auto s0 = AlgebraicScalar(2) * r0 + AlgebraicScalar(5);
  EXPECT_EQ(s0 * s0, AlgebraicScalar(19));
  EXPECT_GT(s0.sign(), 0);
  EXPECT_LT((AlgebraicScalar(2) * r1 + AlgebraicScalar(5)).sign(), 0);
  EXPECT_EQ(r0 + r1, AlgebraicScalar(-5));

  auto [u0, u1] = quadratic_split(Scalar(2) * L().pow(2) + Scalar(7) * L() + 2);
  auto w = AlgebraicScalar(4) * u0 + AlgebraicScalar(7);
  EXPECT_EQ(w * w, AlgebraicScalar(33));
  EXPECT_GT(w.sign(), 0);
  EXPECT_EQ(u0 * u1, AlgebraicScalar(1));

  auto [v0, v1] = quadratic_split(L() * L() - 2);
  EXPECT_EQ(v0 * v0, AlgebraicScalar(2));
  EXPECT_EQ(v1, -v0);
  EXPECT_THROW(quadratic_split(L() * L() - 4), std::invalid_argument);
}

TEST(Algebraic, Arithmetic) {
  auto f = field(-19, 0);
  AlgebraicScalar t = AlgebraicScalar::generator(f);
  EXPECT_EQ(t * t, AlgebraicScalar(19));
  EXPECT_EQ((AlgebraicScalar(1) + t) + (AlgebraicScalar(1) - t), AlgebraicScalar(2));
  AlgebraicScalar inv = AlgebraicScalar(1) / (AlgebraicScalar(2) + t);
  EXPECT_EQ(inv, (AlgebraicScalar(-2) + t) * AlgebraicScalar(Rational(1, 15)));
  EXPECT_EQ(inv * (AlgebraicScalar(2) + t), AlgebraicScalar(1));
  EXPECT_THROW(AlgebraicScalar(0).inverse(), std::domain_error);
  EXPECT_THROW(t + AlgebraicScalar::generator(field(-2, 0)), std::invalid_argument);
}

TEST(Algebraic, FieldAxiomsRandomized) {
  std::mt19937 rng(7);
  auto f = field(-19, 0);
  auto f2 = std::make_shared<const QuadraticField>(QuadraticField{Rational(3, 2), Rational(5)});
  int checked = 0;
  for (int i = 0; i < 1000; ++i) {
    auto fld = (i % 2) ? f : f2;
    auto rnd = [&] { return AlgebraicScalar(fld, random_rational(rng), random_rational(rng)); };
    AlgebraicScalar a = rnd(), b = rnd(), c = rnd();
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ((a + b) + c, a + (b + c));
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ(a * b, b * a);
    if (!a.is_zero()) ASSERT_EQ(a * a.inverse(), AlgebraicScalar(1));
    Rational p = random_rational(rng), q = random_rational(rng), r = random_rational(rng);
    ASSERT_EQ((p * q) * r, p * (q * r));
    ASSERT_EQ(p * (q + r), p * q + p * r);
    if (!p.is_zero()) ASSERT_EQ(p * p.inverse(), Rational(1));
    ++checked;
  }
  EXPECT_EQ(checked, 1000);
}

TEST(RationalFunction, NormalizationAndEvaluation) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> coef(-5, 5);
  auto random_poly = [&] {
    ParamPoly p(0);
    for (int e = 0; e <= 3; ++e) p += Scalar(coef(rng)) * L().pow(unsigned(e));
    return p;
  };
  for (int trial = 0; trial < 30; ++trial) {
    ParamPoly common = random_poly();
    ParamPoly num = random_poly() * common;
    ParamPoly den = random_poly() * common;
    if (den.is_zero()) continue;
    RationalFunction r(num, den);
    RationalFunction again(r.num(), r.den());
    EXPECT_EQ(again, r);
    EXPECT_GT(r.den().leading_coeff().sign(), 0);
    if (!r.den().is_constant()) EXPECT_EQ(r.den().content(), Rational(1));
    for (int k = 0; k < 20; ++k) {
      Rational v = random_rational(rng, 50);
      std::vector<Rational> vals{v, Rational(0), Rational(0)};
      Rational dv = den.evaluate<Rational>(vals);
      Rational rd = r.den().evaluate<Rational>(vals);
      if (dv.is_zero() || rd.is_zero()) continue;
      EXPECT_EQ(r.evaluate<Rational>(vals), num.evaluate<Rational>(vals) / dv);
    }
  }
  EXPECT_THROW(RationalFunction(L(), ParamPoly(0)), std::domain_error);
}

TEST(Parse, Scalars) {
  EXPECT_EQ(S("2*l^2 + 10*l + 3"), Scalar(2) * L().pow(2) + Scalar(10) * L() + 3);
  EXPECT_EQ(S("l + 1/2"), L() + Scalar(Rational(1, 2)));
  EXPECT_THROW(S("x"), ParseError);
}

#include "helpers.hpp"

#include <gtest/gtest.h>

using namespace superdensity;

namespace {

Density D(const char* poly, int n, const Scalar& w, bool flag = false) { return Density{P(poly, n), w, flag}; }

}  // namespace

TEST(Densities, ActExamples) {
  const Scalar l = lambda_param();
  EXPECT_EQ(act(l, P("1", 2), D("x^3*t1 + x", 2, l)).payload, P("3*x^2*t1 + 1", 2));
  for (unsigned m = 0; m < 5; ++m) {
    Density d{SuperPoly::monomial(1, m, 0), l, false};
    EXPECT_EQ(act(l, P("x", 1), d).payload, d.payload * (l + Scalar(long(m))));
  }
  EXPECT_EQ(act(l, P("x", 1), D("t1", 1, l)).payload, P("t1", 1) * (l + Scalar(Rational(1, 2))));
  EXPECT_THROW(act(l + 1, P("x", 1), D("t1", 1, l)), std::invalid_argument);
}

TEST(Densities, ActTensor) {
  const Scalar l = lambda_param(), t = tau_param();
  TensorDensity td{D("x^2", 1, t), D("x*t1", 1, l)};
  auto terms = act_tensor(P("1", 1), {t, l}, td);
  ASSERT_EQ(terms.size(), 2u);
  EXPECT_EQ(terms[0][0].payload, P("2*x", 1));
  EXPECT_EQ(terms[1][1].payload, P("t1", 1));

  TensorDensity odd{D("t1", 1, t), D("x", 1, l)};
  auto signed_terms = act_tensor(P("t1", 1), {t, l}, odd);
  ASSERT_EQ(signed_terms.size(), 2u);
  Density plain = act(P("t1", 1), odd[1]);
  EXPECT_EQ(signed_terms[1][1].payload, -plain.payload);
}

TEST(Densities, RepresentationProperty) {
  const Scalar l = lambda_param();
  for (int n = 0; n <= 2; ++n) {
    auto ms = monomials(n, 2);
    for (const auto& F : ms) {
      for (const auto& G : ms) {
        const int s = (parity_of(F) && parity_of(G)) ? -1 : 1;
        SuperPoly FG = contact_bracket(F, G);
        for (const auto& h : ms) {
          Density d{h, l, false};
          SuperPoly lhs = act(FG, d).payload;
          SuperPoly rhs = act(F, act(G, d)).payload - act(G, act(F, d)).payload * Scalar(s);
          ASSERT_EQ(lhs, rhs);
        }
      }
    }
  }
}

TEST(Densities, PiAndSigma) {
  Density d = D("x + t1", 1, lambda_param());
  EXPECT_EQ(pi(pi(d)), d);
  EXPECT_TRUE(pi(d).pi);
  EXPECT_EQ(sigma(P("x + t1", 1)), P("x - t1", 1));
  EXPECT_EQ(D("t1", 1, Scalar(0), true).parity_bit(), 0);
}

TEST(Densities, Split) {
  const Scalar l = lambda_param();
  const Scalar half(Rational(1, 2));
  auto [a1, a2] = split(D("x^2 + 3", 1, l));
  EXPECT_EQ(a1.payload, P("x^2 + 3", 0));
  EXPECT_TRUE(a2.payload.is_zero());
  auto [b1, b2] = split(D("t2", 2, l));
  EXPECT_TRUE(b1.payload.is_zero());
  EXPECT_EQ(b2.payload, P("1", 1));
  EXPECT_EQ(b2.weight, l + half);
  EXPECT_TRUE(b2.pi);
  auto [c1, c2] = split(D("t1*t2", 2, l));
  EXPECT_EQ(c2.payload, P("t1", 1));
}

TEST(Densities, SplitBijectionAndEquivariance) {
  const Scalar l = lambda_param();
  for (int n = 1; n <= 2; ++n) {
    const SubalgebraSpec sub{SubalgebraKind::Aff, n - 1, std::nullopt};
    for (const auto& p : monomials(n, 3)) {
      Density d{p, l, false};
      auto [d1, d2] = split(d);
      EXPECT_EQ(merge(d1, d2), d);
      for (const auto& h : generators(sub)) {
        auto [e1, e2] = split(act(widen(h, n), d));
        EXPECT_EQ(e1, act(h, d1));
        EXPECT_EQ(e2, act(h, d2));
      }
    }
  }
}

TEST(Densities, ParseDensity) {
  Density d = parse_density("x^2*t1 @ l+1/2 pi", 1);
  EXPECT_EQ(d.payload, P("x^2*t1", 1));
  EXPECT_EQ(d.weight, lambda_param() + Scalar(Rational(1, 2)));
  EXPECT_TRUE(d.pi);
  EXPECT_FALSE(parse_density("x @ 3", 1).pi);
  EXPECT_THROW(parse_density("x", 1), ParseError);
}

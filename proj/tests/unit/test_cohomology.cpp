#include "helpers.hpp"

#include "superdensity/claims.hpp"
#include "superdensity/cohomology.hpp"

#include <gtest/gtest.h>

using namespace superdensity;

namespace {

const SubalgebraSpec kAff0{SubalgebraKind::Aff, 0, std::nullopt};
const SubalgebraSpec kAff1{SubalgebraKind::Aff, 1, std::nullopt};
const SubalgebraSpec kAff2{SubalgebraKind::Aff, 2, std::nullopt};

std::size_t invariant_dim(int n, const Rational& k) {
  const SubalgebraSpec spec{SubalgebraKind::Aff, n, std::nullopt};
  return solve_invariance_bi(build_ansatz(n, k), spec).solutions.generic_dimension;
}

H1Options fast() {
  H1Options o;
  o.stability_check = false;
  return o;
}

}  // namespace

TEST(Ansatz, TermCounts) {
  EXPECT_EQ(build_ansatz(0, Rational(2)).terms.size(), 3u);
  EXPECT_EQ(build_ansatz(1, Rational(1, 2), 0).terms.size(), 2u);
  // (eta|1), (1|eta), theta(d|1), theta(1|d), theta(eta|eta)
  EXPECT_EQ(build_ansatz(1, Rational(1, 2)).terms.size(), 5u);
  EXPECT_EQ(build_ansatz(2, Rational(1), 0).terms.size(), 8u);
  EXPECT_EQ(build_ansatz(2, Rational(1, 2), 0).terms.size(), 4u);
}

TEST(Ansatz, RangeErrors) {
  EXPECT_THROW(build_ansatz(0, Rational(17, 2)), std::invalid_argument);
  EXPECT_THROW(build_ansatz(0, Rational(1, 3)), std::invalid_argument);
  EXPECT_THROW(build_ansatz(0, Rational(-1, 2)), std::invalid_argument);
  EXPECT_THROW(h1(3, Rational(1)), std::invalid_argument);
  EXPECT_THROW(h1(0, Rational(15, 2)), std::invalid_argument);
}

TEST(Ansatz, CoordinatesRoundTrip) {
  const Ansatz a = build_ansatz(1, Rational(3, 2));
  PolyVector v(a.terms.size(), ParamPoly());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = ParamPoly(Rational(long(i) + 1));
  const BiDiffOp J = ansatz_operator(a, v, tau_param(), lambda_param(), tau_param() + lambda_param() + Scalar(a.k));
  const auto back = ansatz_coordinates(a, J);
  ASSERT_TRUE(back.has_value());
  EXPECT_EQ(*back, v);
}

TEST(Invariance, TransvectantCountsN0) {
  for (int k = 0; k <= 7; ++k) EXPECT_EQ(invariant_dim(0, Rational(k)), std::size_t(k + 1)) << "k = " << k;
}

TEST(Invariance, CountsN1) {
  EXPECT_EQ(invariant_dim(1, Rational(0)), 1u);
  EXPECT_EQ(invariant_dim(1, Rational(1, 2)), 2u);
  EXPECT_EQ(invariant_dim(1, Rational(1)), 3u);
  EXPECT_EQ(invariant_dim(1, Rational(3, 2)), 4u);
  EXPECT_EQ(invariant_dim(1, Rational(2)), 5u);
}

TEST(Invariance, CountsN2) {
  EXPECT_EQ(invariant_dim(2, Rational(0)), 1u);
  EXPECT_EQ(invariant_dim(2, Rational(1, 2)), 0u);
  EXPECT_EQ(invariant_dim(2, Rational(1)), 6u);
  EXPECT_EQ(invariant_dim(2, Rational(3, 2)), 0u);
  EXPECT_EQ(invariant_dim(2, Rational(2)), 12u);
}

TEST(Invariance, BasisIsInvariantAtRandomWeights) {
  std::mt19937 rng(7);
  const InvariantFamily fam = solve_invariance_bi(build_ansatz(1, Rational(3, 2)), kAff1);
  for (const auto& J : fam.basis) {
    const BiDiffOp t = J.substitute(0, Scalar(random_rational(rng))).substitute(1, Scalar(random_rational(rng)));
    for (const auto& h : generators(kAff1)) EXPECT_TRUE(act_on_bi(h, t).is_zero());
  }
}

TEST(Invariance, LinearFamilies) {
  EXPECT_EQ(solve_invariance_lin(0, Rational(3), kAff0).solutions.generic_dimension, 1u);
  EXPECT_EQ(solve_invariance_lin(0, Rational(1, 2), kAff0).solutions.generic_dimension, 0u);
  EXPECT_EQ(solve_invariance_lin(1, Rational(1, 2), kAff1).solutions.generic_dimension, 1u);
  EXPECT_EQ(solve_invariance_lin(2, Rational(0), kAff2).solutions.generic_dimension, 1u);
}

TEST(Relative, VanishingOnAffN0) {
  const RelativeCochains rc = relative_cochains(0, Rational(2));
  EXPECT_EQ(rc.basis.size(), 2u);
  EXPECT_TRUE(relative_cochains(0, Rational(0)).basis.empty());
  for (const auto& J : rc.basis) {
    for (const auto& h : generators(kAff0)) EXPECT_TRUE(fix_first(J, h).is_zero());
  }
}

TEST(Coboundary, DeltaSquaredIsZero) {
  std::mt19937 rng(11);
  for (int n = 0; n <= 2; ++n) {
    for (int parity = 0; parity <= 1; ++parity) {
      if (n == 0 && parity == 1) continue;
      const LinDiffOp A = random_lin(rng, n, parity, lambda_param(), lambda_param() + Scalar(Rational(3, 2)));
      if (A.is_zero()) continue;
      EXPECT_FALSE(first_cocycle_failure(n, coboundary(A), 4).has_value()) << A.to_string();
    }
  }
}

TEST(Coboundary, InvariantZeroCochainsGiveRelativeCocycles) {
  for (int n = 0; n <= 2; ++n) {
    const CoboundarySpace cs = coboundary_space(n, Rational(2));
    for (const auto& d : cs.ops) {
      EXPECT_FALSE(first_cocycle_failure(n, d, 6).has_value());
      EXPECT_TRUE(ansatz_coordinates(build_ansatz(n, Rational(3)), d).has_value());
    }
  }
}

TEST(Cocycle, DefectDetectsNonCocycle) {
  // d/dx(G)' f' is invariant and vanishes on aff but is not a cocycle.
  BiDiffOp J(0, Scalar(-1), lambda_param(), lambda_param() + Scalar(1));
  J.add(WordPair{Word{2, 0}, Word{1, 0}}, P("1", 0));
  EXPECT_TRUE(first_cocycle_failure(0, J, 6).has_value());
}

TEST(H1, GenericN0) {
  const H1Report r = h1(0, Rational(2));
  EXPECT_EQ(r.dim_H1, 1u);
  EXPECT_EQ(r.basis.size(), 1u);
  EXPECT_TRUE(r.coboundaries_closed);
  EXPECT_TRUE(r.stable);
  EXPECT_TRUE(r.resonances.empty());
  EXPECT_EQ(h1(0, Rational(0), fast()).dim_H1, 0u);
  EXPECT_EQ(h1(0, Rational(1, 2), fast()).dim_H1, 0u);
}

TEST(H1, ResonanceAtZeroN0) {
  const H1Report r = h1(0, Rational(1), fast());
  EXPECT_EQ(r.dim_H1, 0u);
  ASSERT_EQ(r.resonances.size(), 1u);
  EXPECT_TRUE(algebraic_equal(r.resonances[0].lambda, AlgebraicScalar(Rational(0))));
  EXPECT_EQ(r.resonances[0].dim_H1, 1u);
}

TEST(H1, IrrationalResonancesN0) {
  const H1Report r = h1(0, Rational(6), fast());
  EXPECT_EQ(r.dim_H1, 0u);
  ASSERT_EQ(r.resonances.size(), 2u);
  auto f = sqrt_field(19);
  const AlgebraicScalar a1(f, Rational(-5, 2), Rational(-1, 2)), a2(f, Rational(-5, 2), Rational(1, 2));
  int hits = 0;
  for (const auto& c : r.resonances) {
    EXPECT_EQ(c.dim_H1, 1u);
    EXPECT_EQ(c.factor.to_string(), "2*l^2 + 10*l + 3");
    hits += algebraic_equal(c.lambda, a1) + algebraic_equal(c.lambda, a2);
  }
  EXPECT_EQ(hits, 2);
}

TEST(H1, ValueModeMatchesSymbolicN1) {
  H1Options o = fast();
  o.lambda_value = AlgebraicScalar(Rational(-5, 2));
  EXPECT_EQ(h1(1, Rational(3), o).at_value->dim_H1, 1u);
  o.lambda_value = AlgebraicScalar(Rational(7));
  EXPECT_EQ(h1(1, Rational(3), o).at_value->dim_H1, 0u);
}

TEST(H1, RandomSpecializationsAgree) {
  H1Options o;
  o.random_checks = 5;
  const H1Report r = h1(1, Rational(3, 2), o);
  EXPECT_EQ(r.dim_H1, 1u);
  EXPECT_TRUE(r.stable);
  EXPECT_TRUE(r.discrepancies.empty());
}

TEST(H1, N2Generic) {
  EXPECT_EQ(h1(2, Rational(1), fast()).dim_H1, 1u);
  EXPECT_EQ(h1(2, Rational(2), fast()).dim_H1, 2u);
  EXPECT_EQ(h1(2, Rational(0), fast()).dim_H1, 0u);
}

// Cochains that vanish on aff and satisfy the cocycle identity including
// aff pairs are automatically invariant.
TEST(H1, VanishingOnAffImpliesInvariance) {
  for (const auto& [n, shift] : {std::pair{1, Rational(3, 2)}, std::pair{2, Rational(1)}}) {
    const RelativeCochains loose = relative_cochains(n, shift, false);
    const RelativeCochains tight = relative_cochains(n, shift, true);
    EXPECT_GT(loose.basis.size(), tight.basis.size());
    const unsigned D = default_degree_bound(shift + Rational(1));
    const SolutionSpace zl = generic_nullspace(cocycle_system(n, loose.basis, D, true).matrix);
    const SolutionSpace zt = generic_nullspace(cocycle_system(n, tight.basis, D, true).matrix);
    EXPECT_EQ(zl.generic_dimension, zt.generic_dimension);
  }
}

TEST(Span, InSpanOverQuadraticField) {
  auto f = sqrt_field(19);
  const AlgebraicScalar r(f, Rational(0), Rational(1)), one(Rational(1));
  const std::vector<std::vector<AlgebraicScalar>> vs{{one, r}};
  EXPECT_TRUE(in_span(vs, {r, AlgebraicScalar(Rational(19))}));
  EXPECT_FALSE(in_span(vs, {one, one}));
  EXPECT_EQ(rank_of({{one, r}, {r, AlgebraicScalar(Rational(19))}}), 1u);
}

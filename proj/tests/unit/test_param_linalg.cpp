#include "helpers.hpp"

#include "superdensity/param_linalg.hpp"
#include "superdensity/roots.hpp"

#include <gtest/gtest.h>

using namespace superdensity;

namespace {

ParamPoly L() { return lambda_param(); }

ParamMatrix matrix(std::initializer_list<std::initializer_list<const char*>> rows) {
  std::size_t cols = rows.begin()->size();
  ParamMatrix M(cols);
  for (const auto& r : rows) {
    PolyVector v;
    for (const char* e : r) v.push_back(S(e));
    M.add_row(v);
  }
  return M;
}

void expect_sound(const ParamMatrix& M, const SolutionSpace& S) {
  for (const auto& v : S.basis) {
    for (const auto& e : M.apply(v)) EXPECT_TRUE(e.is_zero());
  }
}

}  // namespace

TEST(ParamLinalg, Identity) {
  SolutionSpace S = generic_nullspace(matrix({{"1", "0", "0"}, {"0", "1", "0"}, {"0", "0", "1"}}));
  EXPECT_EQ(S.generic_dimension, 0u);
  EXPECT_EQ(S.rank, 3u);
}

TEST(ParamLinalg, SingleEntry) {
  ParamMatrix M = matrix({{"l"}});
  SolutionSpace S = generic_nullspace(M);
  EXPECT_EQ(S.generic_dimension, 0u);
  ASSERT_EQ(S.pivot_polynomials.size(), 1u);
  EXPECT_EQ(S.pivot_polynomials[0], L());
  EXPECT_EQ(specialize_and_solve(M, Rational(0)).dimension, 1u);
  EXPECT_EQ(specialize_and_solve(M, Rational(1)).dimension, 0u);
  ResonanceReport rep = find_resonances(M, S);
  ASSERT_EQ(rep.confirmed.size(), 1u);
  EXPECT_EQ(rep.confirmed[0].root, AlgebraicScalar(0));
}

TEST(ParamLinalg, ProportionalRows) {
  ParamMatrix M = matrix({{"l", "1"}, {"l^2", "l"}});
  SolutionSpace S = generic_nullspace(M);
  EXPECT_EQ(S.generic_dimension, 1u);
  expect_sound(M, S);
  std::mt19937 rng(71);
  for (int i = 0; i < 5; ++i) {
    Rational r = random_rational(rng, 1000);
    EXPECT_EQ(specialize_and_solve(M, r).dimension, 1u);
  }
  ASSERT_EQ(S.basis.size(), 1u);
  EXPECT_EQ(S.basis[0][0], ParamPoly(1));
  EXPECT_EQ(S.basis[0][1], -L());
}

TEST(ParamLinalg, ResonanceCandidates) {
  SolutionSpace a;
  a.pivot_polynomials = {ParamPoly(1), L(), L()};
  EXPECT_EQ(resonance_candidates(a), L());
  SolutionSpace b;
  b.pivot_polynomials = {L() * (L() + 4)};
  EXPECT_EQ(resonance_candidates(b), L() * (L() + 4));
  SolutionSpace c;
  ParamPoly q = Scalar(2) * L().pow(2) + Scalar(10) * L() + 3;
  c.pivot_polynomials = {q};
  EXPECT_EQ(resonance_candidates(c), q);
  EXPECT_TRUE(gcd(q, q.derivative(0)).is_constant());
  SolutionSpace d;
  d.pivot_polynomials = {L(), tau_param()};
  EXPECT_THROW(resonance_candidates(d), std::invalid_argument);
}

TEST(ParamLinalg, QuadraticResonance) {
  // 2x2 witness: singular exactly on 2l^2 + 10l + 3 = 0
  ParamMatrix M = matrix({{"2*l + 5", "1"}, {"19", "2*l + 5"}});
  SolutionSpace S = generic_nullspace(M);
  EXPECT_EQ(S.generic_dimension, 0u);
  ResonanceReport rep = find_resonances(M, S);
  ParamPoly q = Scalar(2) * L().pow(2) + Scalar(10) * L() + 3;
  EXPECT_EQ(rep.candidate_locus.primitive_part(), q);
  ASSERT_EQ(rep.confirmed.size(), 2u);
  for (const auto& r : rep.confirmed) {
    EXPECT_EQ(r.dimension, 1u);
    EXPECT_EQ(r.factor, q);
    SpecialSolution sol = specialize_and_solve(M, r.root);
    for (std::size_t i = 0; i < M.rows(); ++i) {
      auto row = specialize(M.row(i), r.root);
      AlgebraicScalar acc(0);
      for (std::size_t j = 0; j < M.cols(); ++j) acc += row[j] * sol.basis[0][j];
      EXPECT_TRUE(acc.is_zero());
    }
  }
}

TEST(ParamLinalg, RandomSystemsSoundAndConsistent) {
  std::mt19937 rng(73);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t rows = 2 + trial % 4, cols = 3 + trial % 3;
    // low rank by construction: product of random affine-in-l factors
    const std::size_t inner = 1 + trial % 2;
    std::vector<PolyVector> A(rows, PolyVector(inner)), B(inner, PolyVector(cols));
    for (auto& r : A) {
      for (auto& e : r) e = Scalar(coef(rng)) * L() + Scalar(coef(rng));
    }
    for (auto& r : B) {
      for (auto& e : r) e = Scalar(coef(rng)) + (coef(rng) > 1 ? L() : ParamPoly(0));
    }
    ParamMatrix M(cols);
    for (std::size_t i = 0; i < rows; ++i) {
      PolyVector r(cols);
      for (std::size_t j = 0; j < cols; ++j) {
        for (std::size_t k = 0; k < inner; ++k) r[j] += A[i][k] * B[k][j];
      }
      M.add_row(r);
    }
    SolutionSpace S = generic_nullspace(M);
    expect_sound(M, S);
    ParamPoly locus = resonance_candidates(S);
    int checked = 0;
    for (int i = 0; i < 40 && checked < 10; ++i) {
      Rational r = random_rational(rng, 60);
      std::vector<Rational> pt{r, Rational(0), Rational(0)};
      if (!locus.is_constant() && locus.evaluate<Rational>(pt).is_zero()) continue;
      ASSERT_EQ(specialize_and_solve(M, r).dimension, S.generic_dimension);
      ++checked;
    }
    ResonanceReport rep = find_resonances(M, S);
    for (const auto& c : rep.confirmed) EXPECT_GT(c.dimension, S.generic_dimension);
    for (const auto& c : rep.rejected) EXPECT_EQ(c.dimension, S.generic_dimension);
  }
}

TEST(ParamLinalg, JsonRoundTrip) {
  ParamMatrix M = matrix({{"l + 1/2", "0"}, {"-3", "l^2"}});
  ParamMatrix back = param_matrix_from_json(nlohmann::json::parse(to_json(M).dump()));
  ASSERT_EQ(back.rows(), 2u);
  EXPECT_EQ(back.at(0, 0), M.at(0, 0));
  EXPECT_EQ(back.at(1, 1), M.at(1, 1));
}

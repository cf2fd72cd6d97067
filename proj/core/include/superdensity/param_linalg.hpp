#pragma once

#include "superdensity/algebraic.hpp"
#include "superdensity/param_poly.hpp"

#include <nlohmann/json.hpp>

#include <cstddef>
#include <vector>

namespace superdensity {

using PolyVector = std::vector<ParamPoly>;

/// Dense matrix of parameter polynomials. Rows may be appended one at a time.
class ParamMatrix {
public:
  explicit ParamMatrix(std::size_t cols = 0) : cols_(cols) {}
  ParamMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, PolyVector(cols)) {}

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  const ParamPoly& at(std::size_t i, std::size_t j) const { return rows_[i][j]; }
  ParamPoly& at(std::size_t i, std::size_t j) { return rows_[i][j]; }
  const PolyVector& row(std::size_t i) const { return rows_[i]; }
  void add_row(PolyVector r);
  /// True when no entry involves a parameter.
  bool is_constant() const;
  /// M v, entrywise polynomial.
  PolyVector apply(const PolyVector& v) const;

private:
  std::size_t cols_;
  std::vector<PolyVector> rows_;
};

/// Nullspace over the fraction field of the parameters.
struct SolutionSpace {
  std::size_t cols = 0;
  std::size_t rank = 0;
  std::size_t generic_dimension = 0;
  /// Polynomial basis vectors: content 1, first nonzero coordinate positive.
  std::vector<PolyVector> basis;
  std::vector<std::size_t> pivot_columns;
  /// Univariate: the square-free locus where some maximal minor set
  /// vanishes (a superset of the rank-drop locus). Multivariate: the monic
  /// nonconstant pivots and polynomials divided out during elimination.
  std::vector<ParamPoly> pivot_polynomials;
};

/// Fraction-free Gauss-Jordan elimination. Each column pivots on its
/// lowest-degree nonzero entry (ties: smallest row index); rows are made
/// primitive after every update. Constant matrices use plain rational
/// elimination.
SolutionSpace generic_nullspace(const ParamMatrix& M);

/// Square-free product of the nonconstant pivot factors. Throws
/// std::invalid_argument when more than one parameter occurs.
ParamPoly resonance_candidates(const SolutionSpace& S);

struct SpecialSolution {
  std::size_t dimension = 0;
  std::size_t rank = 0;
  std::vector<std::vector<AlgebraicScalar>> basis;
};

/// Substitutes `value` for parameter `var` (every other parameter must be
/// absent) and solves exactly over Q or the value's quadratic field.
SpecialSolution specialize_and_solve(const ParamMatrix& M, const AlgebraicScalar& value, std::size_t var = 0);

/// Values of a polynomial vector at a root.
std::vector<AlgebraicScalar> specialize(const PolyVector& v, const AlgebraicScalar& value, std::size_t var = 0);

struct Resonance {
  /// Irreducible factor of the candidate locus with this root.
  ParamPoly factor;
  AlgebraicScalar root;
  std::size_t dimension = 0;
};

struct ResonanceReport {
  ParamPoly candidate_locus;
  std::size_t generic_dimension = 0;
  std::vector<Resonance> confirmed;
  /// Candidate roots where the dimension did not jump.
  std::vector<Resonance> rejected;
};

/// Runs specialize_and_solve on every root of the candidate locus.
/// Irreducible factors of degree >= 3 throw std::domain_error.
ResonanceReport find_resonances(const ParamMatrix& M, const SolutionSpace& S, std::size_t var = 0);

/// Roots of a square-free univariate polynomial, grouped with their factor:
/// rational roots first, then conjugate pairs (positive radical first).
std::vector<std::pair<ParamPoly, AlgebraicScalar>> exact_roots(const ParamPoly& p);

/// Row-major arrays of scalar text.
nlohmann::json to_json(const ParamMatrix& M);
ParamMatrix param_matrix_from_json(const nlohmann::json& j);

}  // namespace superdensity

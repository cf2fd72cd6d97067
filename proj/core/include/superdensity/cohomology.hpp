#pragma once

#include "superdensity/contact.hpp"
#include "superdensity/diffop.hpp"
#include "superdensity/param_linalg.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace superdensity {

/// Weight-homogeneous bilinear terms theta^S (W1 (x) W2) with
/// k1 + k2 + (|e1| + |e2| - |S|)/2 = k and constant coefficients.
struct Ansatz {
  int n = 0;
  Rational k;
  unsigned max_theta = 0;
  int parity = 0;
  std::vector<BiKey> terms;
};

/// Throws std::invalid_argument unless 2k is an integer in [0, 16].
Ansatz build_ansatz(int n, const Rational& k, unsigned max_theta);
inline Ansatz build_ansatz(int n, const Rational& k) { return build_ansatz(n, k, unsigned(n)); }

/// sum_i coords[i] terms[i] from F_tau (x) F_lambda to F_mu.
BiDiffOp ansatz_operator(const Ansatz& a, const PolyVector& coords, const Scalar& tau, const Scalar& lambda,
                         const Scalar& mu);
/// Coordinates of J; nullopt when J has a term outside the ansatz.
std::optional<PolyVector> ansatz_coordinates(const Ansatz& a, const BiDiffOp& J);

struct InvariantFamily {
  Ansatz ansatz;
  Scalar tau;
  Scalar lambda;
  Scalar mu;
  SolutionSpace solutions;
  std::vector<BiDiffOp> basis;
};

/// Operators of the ansatz annihilated by every generator of `spec`, with
/// mu = tau + lambda + k.
InvariantFamily solve_invariance_bi(const Ansatz& a, const SubalgebraSpec& spec, const Scalar& tau = tau_param(),
                                    const Scalar& lambda = lambda_param());

/// Linear terms x^0 theta^S d^k eta^E with k + (|E| - |S|)/2 = shift.
struct LinAnsatz {
  int n = 0;
  Rational shift;
  unsigned max_theta = 0;
  int parity = 0;
  std::vector<OpWord> terms;
};

LinAnsatz build_lin_ansatz(int n, const Rational& shift, unsigned max_theta);
LinDiffOp lin_ansatz_operator(const LinAnsatz& a, const PolyVector& coords, const Scalar& lambda, const Scalar& mu);

struct LinInvariantFamily {
  LinAnsatz ansatz;
  Scalar lambda;
  Scalar mu;
  SolutionSpace solutions;
  std::vector<LinDiffOp> basis;
};

/// Invariant linear operators F_lambda -> F_{lambda + shift}.
LinInvariantFamily solve_invariance_lin(int n, const Rational& shift, const SubalgebraSpec& spec,
                                        const Scalar& lambda = lambda_param());

/// Relative 1-cochains of K(n) with values in D_{lambda, lambda + shift}:
/// bilinear operators on F_{-1} (x) F_lambda of order k = shift + 1 that
/// vanish on aff(n|1) and (optionally) are aff(n|1)-invariant.
struct RelativeCochains {
  int n = 0;
  Rational shift;
  Ansatz ansatz;
  bool invariance_imposed = true;
  /// Rational coordinate vectors in the ansatz.
  std::vector<PolyVector> coords;
  /// tau = -1, lambda symbolic, mu = lambda + shift.
  std::vector<BiDiffOp> basis;
};

RelativeCochains relative_cochains(int n, const Rational& shift, bool impose_invariance = true);

/// delta Y (X_F, X_G) = (-1)^{|F||Y|} X_F.Y(X_G) - (-1)^{|G|(|F|+|Y|)} X_G.Y(X_F) - Y(X_{F,G})
/// for a cochain J with J(G, f) = Y(X_G)(f). F and G must be homogeneous.
LinDiffOp cocycle_defect(const BiDiffOp& J, const SuperPoly& F, const SuperPoly& G);

struct CocycleRow {
  Monomial F;
  Monomial G;
  OpWord word;
};

struct CocycleSystem {
  unsigned degree_bound = 0;
  ParamMatrix matrix;
  std::vector<CocycleRow> labels;
};

/// Rows: normal-form coefficients of delta(sum c_j columns[j])(x^a theta^S, x^b theta^T)
/// for a + b <= D, one pair per unordered couple. Pairs involving an element
/// of aff(n|1) are skipped unless requested (on invariant cochains vanishing
/// on aff they reduce to the invariance equations).
CocycleSystem cocycle_system(int n, const std::vector<BiDiffOp>& columns, unsigned degree_bound,
                             bool include_aff_pairs = false);

/// Smallest monomial pair (ordered by a + b, then F, then G) on which J fails
/// the cocycle condition, up to degree D.
std::optional<std::pair<Monomial, Monomial>> first_cocycle_failure(int n, const BiDiffOp& J, unsigned degree_bound);

/// 2k + 4, rounded up.
unsigned default_degree_bound(const Rational& k);

/// delta A (X_G) = (-1)^{|G||A|} X_G . A, as a bilinear operator on
/// F_{-1} (x) F_lambda.
BiDiffOp coboundary(const LinDiffOp& A);

struct CoboundarySpace {
  LinInvariantFamily zero_cochains;
  std::vector<BiDiffOp> ops;
};

CoboundarySpace coboundary_space(int n, const Rational& shift, const Scalar& lambda = lambda_param());

/// Cochain with coefficients in Q or a quadratic field (normal-form keys).
using AlgebraicCochain = std::map<BiKey, AlgebraicScalar>;

struct H1Cell {
  AlgebraicScalar lambda;
  /// Irreducible factor with this root (zero for user-supplied values).
  ParamPoly factor;
  std::size_t dim_Z = 0;
  std::size_t dim_B = 0;
  std::size_t dim_H1 = 0;
  std::vector<AlgebraicCochain> basis;
};

struct PaperExpectation {
  std::size_t generic = 0;
  /// lambda -> dim where it differs from the generic value.
  std::vector<std::pair<AlgebraicScalar, std::size_t>> special;
};

struct H1Options {
  std::optional<unsigned> degree_bound;
  /// Re-run the cocycle system at D + 2 and compare.
  bool stability_check = true;
  /// Compare against random rational specializations.
  std::size_t random_checks = 0;
  /// Value mode: compute only at this lambda.
  std::optional<AlgebraicScalar> lambda_value;
};

struct H1Report {
  int n = 0;
  Rational shift;
  std::optional<AlgebraicScalar> lambda_value;
  unsigned degree_bound = 0;
  std::size_t relative_dim = 0;
  std::size_t dim_Z = 0;
  std::size_t dim_B = 0;
  std::size_t dim_H1 = 0;
  ParamPoly cocycle_locus;
  ParamPoly coboundary_locus;
  /// Roots of the loci where dim H1 differs from the generic value.
  std::vector<H1Cell> resonances;
  /// Roots of the loci where it does not.
  std::vector<H1Cell> regular_roots;
  /// Generic cocycles completing B to Z (lambda symbolic).
  std::vector<BiDiffOp> basis;
  /// Value mode only.
  std::optional<H1Cell> at_value;
  bool coboundaries_closed = true;
  bool stable = true;
  std::vector<std::string> checks;
  std::optional<PaperExpectation> paper_expected;
  std::vector<std::string> discrepancies;
};

/// Throws std::invalid_argument outside n <= 2, 2 shift in [-2, 14].
H1Report h1(int n, const Rational& shift, const H1Options& opts = {});

/// Exact membership of v in span(vectors) over the field of `value`.
bool in_span(const std::vector<std::vector<AlgebraicScalar>>& vectors, const std::vector<AlgebraicScalar>& v);
std::size_t rank_of(const std::vector<std::vector<AlgebraicScalar>>& vectors);

}  // namespace superdensity

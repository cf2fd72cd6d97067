#pragma once

#include "superdensity/algebraic.hpp"
#include "superdensity/superpoly.hpp"

#include <nlohmann/json.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace superdensity {

/// A published coefficient: a polynomial in l, or a number in Q(sqrt d).
using ClaimCoeff = std::variant<Scalar, AlgebraicScalar>;

/// One printed term coeff * W_G(G) * W_F(F), read literally (no Koszul sign),
/// with G replaced by sigma(G) when `sigma_G` is set. Eta factors keep their
/// printed order.
struct ClaimTerm {
  ClaimCoeff coeff;
  bool sigma_G = false;
  unsigned g_dx = 0;
  std::vector<int> g_eta;
  unsigned f_dx = 0;
  std::vector<int> f_eta;
};

struct CocycleClaim {
  std::string id;
  std::string label;
  int n = 0;
  Rational shift;
  /// Empty when the formula is stated for symbolic l.
  std::optional<AlgebraicScalar> lambda;
  std::vector<ClaimTerm> terms;
  /// Weights the statement leaves out.
  std::vector<AlgebraicScalar> excluded;
};

struct TableCellClaim {
  Rational shift;
  std::size_t generic = 0;
  std::vector<std::pair<AlgebraicScalar, std::size_t>> special;
};

/// Cells not listed are zero for 2 shift <= max_twice_shift.
struct TableClaim {
  int n = 0;
  int max_twice_shift = 0;
  std::vector<TableCellClaim> cells;
};

/// J(X_g)(f) = factor * target(g, f) for theta-free g and f, with the
/// target an operator of the arity n-1 theory.
struct RestrictionClaim {
  std::string id;
  int n = 0;
  Rational shift;
  std::string statement;
  std::vector<ClaimTerm> target;
  /// Weights the nontriviality statement leaves out.
  std::vector<AlgebraicScalar> excluded;
};

struct SpanClaim {
  std::string id;
  int n = 0;
  Rational shift;
  std::vector<std::string> cocycles;
};

struct LniClaim {
  std::string family;
  std::string shift;
  int n_min = 0;
  std::string op;
};

struct PaperClaims {
  int version = 0;
  std::vector<TableClaim> tables;
  std::vector<CocycleClaim> cocycles;
  std::vector<RestrictionClaim> restrictions;
  std::vector<SpanClaim> spans;
  std::vector<LniClaim> lni;

  /// Throws std::out_of_range on an unknown id.
  const CocycleClaim& cocycle(const std::string& id) const;
  const TableClaim* table(int n) const;
};

PaperClaims parse_claims(const nlohmann::json& j);
/// The transcription compiled into the library.
const nlohmann::json& builtin_claims_json();
const PaperClaims& builtin_claims();

/// Q(sqrt d) with generator sqrt d; one shared instance per d.
std::shared_ptr<const QuadraticField> sqrt_field(long d);

/// Value comparison across differently presented quadratic fields.
bool algebraic_equal(const AlgebraicScalar& x, const AlgebraicScalar& y);
/// "p + q*sqrt(D)" with D the field discriminant.
std::string algebraic_text(const AlgebraicScalar& x);

}  // namespace superdensity

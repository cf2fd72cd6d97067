#pragma once

#include "superdensity/claims.hpp"
#include "superdensity/cohomology.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace superdensity {

/// Operator of a printed term with unit coefficient on F_{-1} (x) F_l, l
/// symbolic: the literal product W_G(G) W_F(F) re-expressed in the
/// application convention of BiDiffOp.
BiDiffOp claim_term_operator(int n, const Rational& shift, const ClaimTerm& t);

/// The whole printed cochain when every coefficient is a polynomial in l;
/// value claims at a rational weight are substituted. Nullopt for
/// coefficients in a quadratic field.
std::optional<BiDiffOp> claim_operator(const CocycleClaim& c);

struct ClaimVerdict {
  std::string id;
  std::string label;
  int n = 0;
  Rational shift;
  std::optional<AlgebraicScalar> lambda;
  unsigned degree_bound = 0;
  bool in_ansatz = true;
  bool vanishes_on_aff = true;
  bool invariant = true;
  bool cocycle = true;
  bool nontrivial = true;
  /// Smallest monomial pair violating the cocycle identity.
  std::optional<std::pair<Monomial, Monomial>> failing_pair;
  std::vector<std::string> notes;

  bool confirmed() const { return in_ansatz && vanishes_on_aff && invariant && cocycle && nontrivial; }
};

/// Checks vanishing on aff(n|1), invariance, the cocycle identity (at the
/// stated weight or identically in l) and independence from the
/// coboundaries. Defaults to degree bound 2k + 4.
ClaimVerdict verify_claim(const CocycleClaim& c, std::optional<unsigned> degree_bound = std::nullopt);
/// Throws std::out_of_range on an unknown id.
ClaimVerdict verify_printed(const std::string& id, std::optional<unsigned> degree_bound = std::nullopt);

struct RestrictionVerdict {
  std::string id;
  bool found = false;
  /// The matching cocycle (l symbolic) when found.
  std::optional<BiDiffOp> cocycle;
  bool nontrivial = false;
  /// Excluded weights where the matching cocycle is a coboundary.
  std::vector<AlgebraicScalar> trivial_at;
  std::vector<std::string> notes;
  bool confirmed() const { return found && nontrivial; }
};

/// Searches the cocycle space for J with J(X_g)(f) = -theta_n target(g, f)
/// on theta-free g, f (checked on x^a, x^b with a, b up to the degree bound).
RestrictionVerdict verify_restriction(const RestrictionClaim& r, std::optional<unsigned> degree_bound = std::nullopt);

struct SpanVerdict {
  std::string id;
  std::size_t dim_Z = 0;
  bool inside_Z = false;
  bool spans = false;
  bool confirmed() const { return inside_Z && spans; }
};

/// The listed cocycles together with the coboundaries span the generic
/// cocycle space.
SpanVerdict verify_span(const SpanClaim& s, const PaperClaims& pc);

/// Generic expectation for a cell; nullopt outside the transcribed range.
std::optional<PaperExpectation> expected_h1(const PaperClaims& pc, int n, const Rational& shift);
/// Fills paper_expected and appends mismatches to discrepancies.
void compare_with_paper(H1Report& rep, const PaperClaims& pc);

struct RestrictionComponent {
  /// Index into kPsiOrder.
  std::size_t part = 0;
  std::string cocycle;  // "generic" or the resonance weight
  Scalar lambda;
  Scalar mu;
  bool pi = false;
  bool vanishes_on_aff = true;
  std::optional<std::pair<Monomial, Monomial>> failing_pair;
  bool ok() const { return vanishes_on_aff && !failing_pair; }
};

/// Splits every basis cocycle of an arity-n report (generic and rational
/// resonances) over arity n-1 and checks that the components with a
/// theta_n-free first argument are relative cocycles there.
std::vector<RestrictionComponent> restriction_checks(const H1Report& rep);

struct LniRow {
  int n = 0;
  Rational shift;
  std::size_t dim = 0;
  /// 1 on the published families, 0 elsewhere.
  std::size_t expected = 0;
  /// bar-eta_1 ... bar-eta_n d^k is invariant (bar-eta_i = d_i + theta_i d_x).
  std::optional<bool> bar_eta_invariant;
  /// eta_1 ... eta_n d^k is invariant.
  std::optional<bool> eta_invariant;
};

/// Invariant linear operators F_l -> F_{l + shift} for 2 shift in [0, max].
std::vector<LniRow> lni_check(int n, int max_twice_shift);

struct OpenQuestionNote {
  std::string topic;
  std::string outcome;
};
/// The n=1 shift-2 basis at l = -1, the C_{l,l+4} pattern, and every span
/// claim.
std::vector<OpenQuestionNote> open_questions(const PaperClaims& pc);

}  // namespace superdensity

#pragma once

#include "superdensity/serialize.hpp"
#include "superdensity/verify.hpp"

#include <string>
#include <vector>

namespace superdensity {

/// Exact text "p + q*sqrt(D)".
Json to_json(const AlgebraicScalar& x);
/// Rational coefficients become a BiDiffOp document at the given weight;
/// otherwise a term list with exact text coefficients.
Json to_json(const AlgebraicCochain& c, int n, const AlgebraicScalar& lambda, const Rational& shift);
Json to_json(const H1Report& r);
Json to_json(const ClaimVerdict& v);
Json to_json(const RestrictionVerdict& v);
Json to_json(const SpanVerdict& v);
Json to_json(const RestrictionComponent& c);
Json to_json(const LniRow& r);

std::string to_markdown(const H1Report& r);
/// One row per shift: generic dimension, resonances, and the transcribed
/// table entry with a match column.
std::string h1_table_markdown(int n, const std::vector<H1Report>& reports);
std::string claims_markdown(const std::vector<ClaimVerdict>& verdicts, const std::vector<RestrictionVerdict>& restrictions,
                            const std::vector<SpanVerdict>& spans);

std::string monomial_text(const Monomial& m);

}  // namespace superdensity

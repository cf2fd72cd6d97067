#pragma once

#include "superdensity/algebraic.hpp"
#include "superdensity/param_poly.hpp"

#include <utility>
#include <vector>

namespace superdensity {

/// Derivative-based square-free part, made primitive with positive leading
/// coefficient. Requires a univariate (or constant) input.
ParamPoly square_free_part(const ParamPoly& p);

/// Distinct rational roots in increasing order. `p` must be univariate and
/// nonzero.
std::vector<Rational> rational_roots(const ParamPoly& p);

/// Irreducible factors over Q (primitive, positive leading coefficient,
/// multiplicity dropped), sorted by degree then text. Factors of degree >= 3
/// are not supported: throws std::domain_error naming the offending factor.
std::vector<ParamPoly> irreducible_factors(const ParamPoly& p);

/// The two conjugate roots of an irreducible quadratic, positive-radical
/// branch first. Throws std::invalid_argument on reducible or non-quadratic
/// input.
std::pair<AlgebraicScalar, AlgebraicScalar> quadratic_split(const ParamPoly& p);

/// Sorted positive divisors of |n| (n != 0).
std::vector<mpz_class> divisors(const mpz_class& n);

}  // namespace superdensity

#pragma once

#include "superdensity/diffop.hpp"

#include <nlohmann/json.hpp>

namespace superdensity {

using Json = nlohmann::json;

/// Scalars travel as their canonical text form.
Json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j);

/// {n, tau, lambda, mu, parity, pi: [p1, p2, pt], terms: [{coeff, x_deg,
/// theta_mask, slot1: {dx, eta_mask}, slot2: {dx, eta_mask}}]}
Json to_json(const BiDiffOp& J);
BiDiffOp bidiffop_from_json(const Json& j);

/// {n, lambda, mu, parity, pi: [src, tgt], terms: [{coeff, x_deg, theta_mask,
/// dx, eta_mask}]}
Json to_json(const LinDiffOp& A);
LinDiffOp lindiffop_from_json(const Json& j);

}  // namespace superdensity

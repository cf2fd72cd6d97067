#pragma once

#include "superdensity/contact.hpp"

#include <string>
#include <utility>
#include <vector>

namespace superdensity {

/// Element F alpha^weight of F_weight, optionally parity-reversed.
struct Density {
  SuperPoly payload;
  Scalar weight;
  bool pi = false;

  int arity() const { return payload.arity(); }
  /// Effective parity (payload parity XOR pi); mixed payloads throw.
  int parity_bit() const { return payload.parity_bit() ^ int(pi); }
  friend bool operator==(const Density&, const Density&) = default;
  /// `poly @ weight [pi]`.
  std::string to_string() const;
};

/// The lifted action L^lambda_{X_F} = X_F + lambda F'. The weight is taken
/// from `d`; `lambda` must match it. Pi acts without a sign.
Density act(const Scalar& lambda, const SuperPoly& F, const Density& d);
Density act(const SuperPoly& F, const Density& d);

using TensorDensity = std::vector<Density>;

/// Leibniz action on a tensor product: sum over j of the tensor with factor j
/// replaced by L_{X_F}(d_j), with sign (-1)^{|F|(|d_1|+...+|d_{j-1}|)} folded
/// into that factor. Mixed F is split into parities first.
std::vector<TensorDensity> act_tensor(const SuperPoly& F, const std::vector<Scalar>& weights, const TensorDensity& t);

Density pi(const Density& d);

/// phi_lambda: F = F1 + F2 theta_n  ->  (F1 alpha^lambda, Pi(F2 alpha^{lambda+1/2}))
/// over arity n-1.
std::pair<Density, Density> split(const Density& d);
/// Inverse of split.
Density merge(const Density& first, const Density& second);

/// Extends an arity-m polynomial to arity n >= m (same monomials).
SuperPoly widen(const SuperPoly& p, int n);
/// Restricts to arity m: the polynomial must not involve theta_{m+1..}.
SuperPoly narrow(const SuperPoly& p, int m);

}  // namespace superdensity

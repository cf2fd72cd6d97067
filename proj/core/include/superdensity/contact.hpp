#pragma once

#include "superdensity/superpoly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace superdensity {

/// {F,G} = FG' - F'G - 1/2 (-1)^{|F|} sum_i eta_i(F) eta_i(G), extended
/// linearly to mixed parity.
SuperPoly contact_bracket(const SuperPoly& F, const SuperPoly& G);

/// The contact field X_F with hamiltonian F.
struct ContactField {
  SuperPoly hamiltonian;
};

/// X_F(G) = F G' - 1/2 (-1)^{|F|} sum_i eta_i(F) eta_i(G).
SuperPoly field_apply(const ContactField& X, const SuperPoly& G);
inline SuperPoly field_apply(const SuperPoly& F, const SuperPoly& G) { return field_apply(ContactField{F}, G); }

enum class SubalgebraKind { Aff, K, Vect };

struct SubalgebraSpec {
  SubalgebraKind kind = SubalgebraKind::Aff;
  int n = 0;
  /// Drop theta_i (the aff(n-1|1)_i and K(n-1)^i embeddings).
  std::optional<int> excluded;

  std::string name() const;
};

/// aff: 1, x, theta_i, theta_i theta_j (i < j). K and vect: every monomial
/// x^a theta^S with a <= max_degree. Ordered by (theta count, x degree, mask).
std::vector<SuperPoly> generators(const SubalgebraSpec& spec, unsigned max_degree = 0);

}  // namespace superdensity

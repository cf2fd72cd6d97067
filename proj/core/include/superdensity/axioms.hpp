#pragma once

#include "superdensity/densities.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace superdensity {

struct AxiomReport {
  int n = 0;
  unsigned max_x_degree = 0;
  std::size_t jacobi_checked = 0;
  std::size_t jacobi_failed = 0;
  std::size_t representation_checked = 0;
  std::size_t representation_failed = 0;
  /// The first few failures, as text.
  std::vector<std::string> failures;
  bool ok() const { return jacobi_failed == 0 && representation_failed == 0; }
};

/// Super-Jacobi {F,{G,H}} = {{F,G},H} + (-1)^{|F||G|} {G,{F,H}} on all
/// monomial triples, and [L_F, L_G] = L_{F,G} on every monomial density of
/// symbolic weight l, for monomials of x-degree <= max_x_degree.
AxiomReport check_axioms(int n, unsigned max_x_degree = 3);

}  // namespace superdensity

#include "superdensity/contact.hpp"

#include <algorithm>
#include <stdexcept>

namespace superdensity {

namespace {

// -1/2 (-1)^{|F|} eta_i(F) = 1/2 sigma(eta_i(F)) because eta_i(F) has the
// opposite parity; this form is linear in F, so no splitting is needed.
SuperPoly half_sigma_eta(int i, const SuperPoly& F) { return sigma(eta(i, F)) * Scalar(Rational(1, 2)); }

}  // namespace

SuperPoly contact_bracket(const SuperPoly& F, const SuperPoly& G) {
  if (F.arity() != G.arity()) throw std::invalid_argument("arity mismatch");
  SuperPoly r = F * d_x(G) - d_x(F) * G;
  for (int i = 1; i <= F.arity(); ++i) r += half_sigma_eta(i, F) * eta(i, G);
  return r;
}

SuperPoly field_apply(const ContactField& X, const SuperPoly& G) {
  const SuperPoly& F = X.hamiltonian;
  if (F.arity() != G.arity()) throw std::invalid_argument("arity mismatch");
  SuperPoly r = F * d_x(G);
  for (int i = 1; i <= F.arity(); ++i) r += half_sigma_eta(i, F) * eta(i, G);
  return r;
}

std::string SubalgebraSpec::name() const {
  std::string base = kind == SubalgebraKind::Aff ? "aff" : (kind == SubalgebraKind::K ? "K" : "vect");
  std::string s = base + "(" + std::to_string(n) + ")";
  if (excluded) s += "^" + std::to_string(*excluded);
  return s;
}

std::vector<SuperPoly> generators(const SubalgebraSpec& spec, unsigned max_degree) {
  const int n = spec.n;
  if (spec.excluded && (*spec.excluded < 1 || *spec.excluded > n)) throw std::invalid_argument("excluded index out of range");
  const ThetaMask allowed = ThetaMask(((1u << n) - 1) & ~(spec.excluded ? theta_bit(*spec.excluded) : 0u));
  std::vector<SuperPoly> out;
  if (spec.kind == SubalgebraKind::Aff) {
    out.push_back(SuperPoly(n, Scalar(1)));
    out.push_back(SuperPoly::x(n));
    for (int i = 1; i <= n; ++i) {
      if (allowed & theta_bit(i)) out.push_back(SuperPoly::theta(n, i));
    }
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        if ((allowed & theta_bit(i)) && (allowed & theta_bit(j))) {
          out.push_back(SuperPoly::monomial(n, 0, ThetaMask(theta_bit(i) | theta_bit(j))));
        }
      }
    }
    return out;
  }
  std::vector<ThetaMask> masks;
  for (unsigned m = 0; m < (1u << n); ++m) {
    if ((m & allowed) == m) masks.push_back(ThetaMask(m));
  }
  std::stable_sort(masks.begin(), masks.end(), [](ThetaMask a, ThetaMask b) { return popcount(a) < popcount(b); });
  for (ThetaMask m : masks) {
    for (unsigned a = 0; a <= max_degree; ++a) out.push_back(SuperPoly::monomial(n, a, m));
  }
  return out;
}

}  // namespace superdensity

#include "superdensity/axioms.hpp"

namespace superdensity {

namespace {

constexpr std::size_t kMaxListed = 10;

std::vector<SuperPoly> monomials(int n, unsigned max_x_degree) {
  std::vector<SuperPoly> r;
  for (unsigned a = 0; a <= max_x_degree; ++a) {
    for (unsigned s = 0; s < (1u << n); ++s) r.push_back(SuperPoly::monomial(n, a, ThetaMask(s)));
  }
  return r;
}

}  // namespace

AxiomReport check_axioms(int n, unsigned max_x_degree) {
  AxiomReport rep;
  rep.n = n;
  rep.max_x_degree = max_x_degree;
  const auto ms = monomials(n, max_x_degree);
  auto fail = [&](std::string what) {
    if (rep.failures.size() < kMaxListed) rep.failures.push_back(std::move(what));
  };
  for (const auto& F : ms) {
    for (const auto& G : ms) {
      const bool odd = F.parity_bit() && G.parity_bit();
      const SuperPoly FG = contact_bracket(F, G);
      for (const auto& H : ms) {
        const SuperPoly lhs = contact_bracket(F, contact_bracket(G, H));
        SuperPoly rhs = contact_bracket(FG, H);
        const SuperPoly t = contact_bracket(G, contact_bracket(F, H));
        rhs = odd ? rhs - t : rhs + t;
        ++rep.jacobi_checked;
        if (!(lhs == rhs)) {
          ++rep.jacobi_failed;
          fail("Jacobi: " + F.to_string() + ", " + G.to_string() + ", " + H.to_string());
        }
      }
      for (const auto& d : ms) {
        const Density phi{d, lambda_param()};
        Density lhs = act(F, act(G, phi));
        const Density t = act(G, act(F, phi));
        lhs.payload = odd ? lhs.payload + t.payload : lhs.payload - t.payload;
        ++rep.representation_checked;
        if (!(lhs.payload == act(FG, phi).payload)) {
          ++rep.representation_failed;
          fail("representation: " + F.to_string() + ", " + G.to_string() + " on " + d.to_string());
        }
      }
    }
  }
  return rep;
}

}  // namespace superdensity

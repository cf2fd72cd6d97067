#pragma once

#include "superdensity/diffop.hpp"
#include "superdensity/parse.hpp"

#include <random>

namespace sd = superdensity;

inline sd::SuperPoly P(const char* text, int n) { return sd::parse_superpoly(text, n); }
inline sd::Scalar S(const char* text) { return sd::parse_scalar(text); }

// All monomials x^a theta^S with a <= max_x.
inline std::vector<sd::SuperPoly> monomials(int n, unsigned max_x) {
  std::vector<sd::SuperPoly> out;
  for (unsigned m = 0; m < (1u << n); ++m) {
    for (unsigned a = 0; a <= max_x; ++a) out.push_back(sd::SuperPoly::monomial(n, a, sd::ThetaMask(m)));
  }
  return out;
}

inline int parity_of(const sd::SuperPoly& p) { return p.parity_bit(); }

inline sd::Rational random_rational(std::mt19937& rng, int range = 20) {
  std::uniform_int_distribution<long> num(-range, range), den(1, range);
  return sd::Rational(num(rng), den(rng));
}

// Random operators with small integer coefficients, of fixed term parity.
inline sd::LinDiffOp random_lin(std::mt19937& rng, int n, int parity, const sd::Scalar& lambda, const sd::Scalar& mu,
                                int max_k = 2) {
  std::uniform_int_distribution<int> coef(-2, 2);
  sd::LinDiffOp A(n, lambda, mu);
  for (unsigned k = 0; k <= unsigned(max_k); ++k) {
    for (unsigned e = 0; e < (1u << n); ++e) {
      for (unsigned s = 0; s < (1u << n); ++s) {
        if (((sd::popcount(sd::ThetaMask(e)) + sd::popcount(sd::ThetaMask(s))) & 1) != parity) continue;
        for (unsigned a = 0; a <= 1; ++a) {
          int c = coef(rng);
          if (c != 0 && coef(rng) > 0) {
            A.add(sd::Word{k, sd::ThetaMask(e)}, sd::SuperPoly::monomial(n, a, sd::ThetaMask(s), sd::Scalar(c)));
          }
        }
      }
    }
  }
  return A;
}

inline sd::BiDiffOp random_bi(std::mt19937& rng, int n, int parity, bool pi1, bool pi2, bool pit,
                              const sd::Scalar& tau = sd::tau_param(), const sd::Scalar& lambda = sd::lambda_param(),
                              const sd::Scalar& mu = sd::mu_param()) {
  std::uniform_int_distribution<int> coef(-2, 2);
  sd::BiDiffOp J(n, tau, lambda, mu, pi1, pi2, pit);
  for (unsigned k1 = 0; k1 <= 1; ++k1) {
    for (unsigned k2 = 0; k2 <= 1; ++k2) {
      for (unsigned e1 = 0; e1 < (1u << n); ++e1) {
        for (unsigned e2 = 0; e2 < (1u << n); ++e2) {
          for (unsigned s = 0; s < (1u << n); ++s) {
            int p = (sd::popcount(sd::ThetaMask(e1)) + sd::popcount(sd::ThetaMask(e2)) + sd::popcount(sd::ThetaMask(s))) & 1;
            if (p != parity || coef(rng) <= 0) continue;
            J.add(sd::WordPair{sd::Word{k1, sd::ThetaMask(e1)}, sd::Word{k2, sd::ThetaMask(e2)}},
                  sd::SuperPoly::monomial(n, unsigned(coef(rng) > 0), sd::ThetaMask(s), sd::Scalar(coef(rng))));
          }
        }
      }
    }
  }
  return J;
}

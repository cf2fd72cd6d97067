#pragma once

#include "superdensity/param_poly.hpp"

#include <bit>
#include <cstdint>
#include <map>
#include <string>
#include <utility>

namespace superdensity {

/// Coefficient ring of polynomials and operators: polynomials in the weight
/// parameters.
using Scalar = ParamPoly;

/// The standard weight parameters {l, tau, mu} shared by every symbolic
/// computation (index 0 = lambda, 1 = tau, 2 = mu).
const VarList& weight_params();
Scalar lambda_param();
Scalar tau_param();
Scalar mu_param();

constexpr int kMaxArity = 8;

/// Subset of {theta_1..theta_n}; bit i-1 stands for theta_i.
using ThetaMask = std::uint8_t;

inline int popcount(ThetaMask m) { return std::popcount(unsigned(m)); }
inline ThetaMask theta_bit(int i) { return ThetaMask(1u << (i - 1)); }
/// Number of j in `m` with j < i.
inline int count_below(ThetaMask m, int i) { return popcount(ThetaMask(m & (theta_bit(i) - 1))); }
/// Sign of theta^S * theta^T = sign * theta^(S|T) (S, T disjoint).
int merge_sign(ThetaMask s, ThetaMask t);

enum class Parity { Zero, Even, Odd, Mixed };

struct Monomial {
  unsigned x = 0;
  ThetaMask theta = 0;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Polynomial in x and theta_1..theta_n with Scalar coefficients.
class SuperPoly {
public:
  using TermMap = std::map<Monomial, Scalar>;

  SuperPoly() = default;
  explicit SuperPoly(int n) : n_(check_arity(n)) {}
  SuperPoly(int n, const Scalar& c);
  static SuperPoly monomial(int n, unsigned x, ThetaMask theta, const Scalar& c = Scalar(1));
  static SuperPoly x(int n) { return monomial(n, 1, 0); }
  static SuperPoly theta(int n, int i);

  int arity() const { return n_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Parity parity() const;
  /// Parity of a homogeneous polynomial (0 = even). Zero counts as even;
  /// throws std::invalid_argument on mixed input.
  int parity_bit() const;
  SuperPoly even_part() const;
  SuperPoly odd_part() const;
  Scalar coeff(unsigned x, ThetaMask theta) const;
  unsigned x_degree() const;

  void add_term(unsigned x, ThetaMask theta, const Scalar& c);
  SuperPoly& operator+=(const SuperPoly& o);
  SuperPoly& operator-=(const SuperPoly& o);
  SuperPoly& operator*=(const Scalar& c);
  friend SuperPoly operator+(SuperPoly a, const SuperPoly& b) { return a += b; }
  friend SuperPoly operator-(SuperPoly a, const SuperPoly& b) { return a -= b; }
  friend SuperPoly operator-(SuperPoly a) { return a *= Scalar(-1); }
  friend SuperPoly operator*(SuperPoly a, const Scalar& c) { return a *= c; }
  friend SuperPoly operator*(const Scalar& c, SuperPoly a) { return a *= c; }
  friend SuperPoly operator*(const SuperPoly& a, const SuperPoly& b);
  friend bool operator==(const SuperPoly& a, const SuperPoly& b);

  /// Substitutes a value for the weight parameter `var` in every coefficient.
  SuperPoly substitute(std::size_t var, const Scalar& value) const;

  /// Canonical text in the input grammar: x, t1..tn, ^ on x, p/q literals.
  /// Parameter-dependent coefficients are parenthesised.
  std::string to_string() const;

private:
  static int check_arity(int n);
  int n_ = 0;
  TermMap terms_;
};

SuperPoly d_x(const SuperPoly& p);
/// Left derivative by theta_i (1-based).
SuperPoly d_theta(int i, const SuperPoly& p);
/// eta_i = d_theta_i - theta_i d_x.
SuperPoly eta(int i, const SuperPoly& p);
/// sigma(p) = (-1)^{|p|} p on each homogeneous part.
SuperPoly sigma(const SuperPoly& p);

}  // namespace superdensity

#pragma once

#include "superdensity/densities.hpp"

#include <array>
#include <map>
#include <string>
#include <tuple>
#include <vector>

namespace superdensity {

/// d_x^k eta^E with the eta factors in ascending order.
struct Word {
  unsigned k = 0;
  ThetaMask eta = 0;
  int parity() const { return popcount(eta) & 1; }
  friend auto operator<=>(const Word&, const Word&) = default;
};

/// eta_i * w = sign * word.
std::pair<int, Word> eta_times(int i, const Word& w);
/// a * b = sign * word.
std::pair<int, Word> word_times(const Word& a, const Word& b);
/// Applies a word to a polynomial (rightmost eta first).
SuperPoly apply_word(const Word& w, const SuperPoly& p);
std::string word_to_string(const Word& w);

/// Canonical monomial x^a theta^S d_x^k eta^E.
struct OpWord {
  unsigned a = 0;
  ThetaMask theta = 0;
  unsigned k = 0;
  ThetaMask eta = 0;
  int parity() const { return (popcount(theta) + popcount(eta)) & 1; }
  friend auto operator<=>(const OpWord&, const OpWord&) = default;
};

/// Linear differential operator sum_W m_W(x, theta) W between density
/// modules. Pi flags mark parity-reversed source/target.
class LinDiffOp {
public:
  using TermMap = std::map<Word, SuperPoly>;

  LinDiffOp() = default;
  LinDiffOp(int n, Scalar lambda, Scalar mu, bool pi_src = false, bool pi_tgt = false)
      : n_(n), lambda_(std::move(lambda)), mu_(std::move(mu)), pi_src_(pi_src), pi_tgt_(pi_tgt) {}

  static LinDiffOp identity(int n, const Scalar& lambda);
  /// Single word with coefficient polynomial m.
  static LinDiffOp word(int n, const Scalar& lambda, const Scalar& mu, const Word& w, const SuperPoly& m);
  /// The lifted action L^lambda_{X_H} = H d_x + 1/2 sum sigma(eta_i H) eta_i + lambda H'
  /// as an operator on F_lambda.
  static LinDiffOp lift(const SuperPoly& H, const Scalar& lambda);

  int arity() const { return n_; }
  const Scalar& lambda() const { return lambda_; }
  const Scalar& mu() const { return mu_; }
  bool pi_src() const { return pi_src_; }
  bool pi_tgt() const { return pi_tgt_; }
  void set_weights(Scalar lambda, Scalar mu) {
    lambda_ = std::move(lambda);
    mu_ = std::move(mu);
  }
  void set_pi(bool src, bool tgt) {
    pi_src_ = src;
    pi_tgt_ = tgt;
  }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Parity of the term polynomials times words, ignoring pi flags.
  Parity term_parity() const;
  /// Effective parity bit (terms + pi flags); throws on mixed operators.
  int parity_bit() const;
  LinDiffOp even_part() const;
  LinDiffOp odd_part() const;

  void add(const Word& w, const SuperPoly& m);
  LinDiffOp& operator+=(const LinDiffOp& o);
  LinDiffOp& operator-=(const LinDiffOp& o);
  LinDiffOp& operator*=(const Scalar& c);
  friend LinDiffOp operator+(LinDiffOp a, const LinDiffOp& b) { return a += b; }
  friend LinDiffOp operator-(LinDiffOp a, const LinDiffOp& b) { return a -= b; }
  friend LinDiffOp operator*(LinDiffOp a, const Scalar& c) { return a *= c; }
  /// Equality of canonical term maps (weights and flags ignored).
  friend bool operator==(const LinDiffOp& a, const LinDiffOp& b) { return a.terms_ == b.terms_; }

  /// Flattened canonical form.
  std::map<OpWord, Scalar> normal_form() const;
  std::string to_string() const;

private:
  int n_ = 0;
  Scalar lambda_;
  Scalar mu_;
  bool pi_src_ = false;
  bool pi_tgt_ = false;
  TermMap terms_;
};

/// Left multiplication by the generators.
LinDiffOp left_dx(const LinDiffOp& A);
LinDiffOp left_eta(int i, const LinDiffOp& A);
LinDiffOp left_mul(const SuperPoly& p, const LinDiffOp& A);
/// A o B; weights: source of B, target of A.
LinDiffOp compose(const LinDiffOp& A, const LinDiffOp& B);

/// Generator symbols of the formal words accepted by normal_order.
struct Generator {
  enum Kind { X, Theta, Dx, Eta } kind;
  int index = 0;  // 1-based for Theta and Eta
};
LinDiffOp normal_order(int n, const std::vector<Generator>& product);

Density apply_lin(const LinDiffOp& A, const Density& d);

/// X_H . A = L^mu_H o A - (-1)^{|A||H|} A o L^lambda_H (mixed inputs are
/// split).
LinDiffOp act_on_lin(const SuperPoly& H, const LinDiffOp& A);

/// lift_generator: L^lambda_{X_H} for H in {1, x, theta_i, theta_i theta_j}.
LinDiffOp lift_generator(const SuperPoly& H, const Scalar& lambda);

struct WordPair {
  Word w1;
  Word w2;
  int parity() const { return (w1.parity() + w2.parity()) & 1; }
  friend auto operator<=>(const WordPair&, const WordPair&) = default;
};

/// Flattened key of a bilinear term x^a theta^S (W1 (x) W2).
struct BiKey {
  unsigned a = 0;
  ThetaMask theta = 0;
  Word w1;
  Word w2;
  int parity() const { return (popcount(theta) + w1.parity() + w2.parity()) & 1; }
  friend auto operator<=>(const BiKey&, const BiKey&) = default;
};

/// Bilinear differential operator J(F, G) = sum m W1(F) W2(G) (-1)^{|W2||F|}
/// from F_tau (x) F_lambda to F_mu, with effective parities throughout.
class BiDiffOp {
public:
  using TermMap = std::map<WordPair, SuperPoly>;

  BiDiffOp() = default;
  BiDiffOp(int n, Scalar tau, Scalar lambda, Scalar mu, bool pi1 = false, bool pi2 = false, bool pi_t = false)
      : n_(n), tau_(std::move(tau)), lambda_(std::move(lambda)), mu_(std::move(mu)), pi1_(pi1), pi2_(pi2), pi_t_(pi_t) {}

  int arity() const { return n_; }
  const Scalar& tau() const { return tau_; }
  const Scalar& lambda() const { return lambda_; }
  const Scalar& mu() const { return mu_; }
  bool pi1() const { return pi1_; }
  bool pi2() const { return pi2_; }
  bool pi_t() const { return pi_t_; }
  void set_weights(Scalar tau, Scalar lambda, Scalar mu) {
    tau_ = std::move(tau);
    lambda_ = std::move(lambda);
    mu_ = std::move(mu);
  }
  void set_pi(bool p1, bool p2, bool pt) {
    pi1_ = p1;
    pi2_ = p2;
    pi_t_ = pt;
  }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Parity term_parity() const;
  int parity_bit() const;
  BiDiffOp even_part() const;
  BiDiffOp odd_part() const;

  void add(const WordPair& w, const SuperPoly& m);
  void add(const BiKey& key, const Scalar& c);
  BiDiffOp& operator+=(const BiDiffOp& o);
  BiDiffOp& operator-=(const BiDiffOp& o);
  BiDiffOp& operator*=(const Scalar& c);
  friend BiDiffOp operator+(BiDiffOp a, const BiDiffOp& b) { return a += b; }
  friend BiDiffOp operator-(BiDiffOp a, const BiDiffOp& b) { return a -= b; }
  friend BiDiffOp operator*(BiDiffOp a, const Scalar& c) { return a *= c; }
  friend bool operator==(const BiDiffOp& a, const BiDiffOp& b) { return a.terms_ == b.terms_; }

  std::map<BiKey, Scalar> normal_form() const;
  static BiDiffOp from_normal_form(int n, const std::map<BiKey, Scalar>& nf);
  BiDiffOp substitute(std::size_t var, const Scalar& value) const;
  std::string to_string() const;

private:
  int n_ = 0;
  Scalar tau_;
  Scalar lambda_;
  Scalar mu_;
  bool pi1_ = false;
  bool pi2_ = false;
  bool pi_t_ = false;
  TermMap terms_;
};

/// J(d1, d2).
Density apply_bi(const BiDiffOp& J, const Density& d1, const Density& d2);

/// L o J (post-composition; L's source weight should be J's target).
BiDiffOp compose_left(const LinDiffOp& L, const BiDiffOp& J);
/// J o (L (x) 1).
BiDiffOp compose_slot1(const BiDiffOp& J, const LinDiffOp& L);
/// J o (1 (x) L), with the Koszul sign of L passing the first argument.
BiDiffOp compose_slot2(const BiDiffOp& J, const LinDiffOp& L);

/// X_H . J = L^mu o J - (-1)^{|J||H|} (J o (L^tau (x) 1) + J o (1 (x) L^lambda)).
BiDiffOp act_on_bi(const SuperPoly& H, const BiDiffOp& J);

/// Operator f -> J(G, f) for a fixed first argument G (unflagged).
LinDiffOp fix_first(const BiDiffOp& J, const SuperPoly& G);

/// The bilinear operator (G, f) -> L^nu_{X_G}(f) on F_{-1} (x) F_nu.
BiDiffOp adjoint_action(int n, const Scalar& nu);

/// sigma = prod_i (1 - 2 theta_i eta_i) as an operator on F_lambda.
LinDiffOp sigma_op(int n, const Scalar& lambda);

/// The eight components of the splitting of a bilinear operator over arity n
/// into operators over arity n-1. Component (a, b, c) acts from the a-th part
/// of the first argument and the b-th part of the second to the c-th part of
/// the target; part 2 carries weight + 1/2 and a pi flag.
struct PsiIndex {
  int a, b, c;
};
inline constexpr std::array<PsiIndex, 8> kPsiOrder{{
    {1, 1, 1}, {2, 2, 1}, {1, 2, 2}, {2, 1, 2}, {1, 1, 2}, {1, 2, 1}, {2, 1, 1}, {2, 2, 2}}};
using PsiParts = std::array<BiDiffOp, 8>;

/// Empty components with the weights and flags required at (tau, lambda; mu).
PsiParts psi_shape(int n_minus_1, const Scalar& tau, const Scalar& lambda, const Scalar& mu);
/// phi_mu^{-1} o A o (phi_tau (x) phi_lambda), assembled over arity n_minus_1 + 1.
BiDiffOp psi_lift(const PsiParts& parts, const Scalar& tau, const Scalar& lambda, const Scalar& mu);
/// Inverse of psi_lift.
PsiParts decompose_psi(const BiDiffOp& J);

/// phi_mu o A o phi_lambda^{-1}: components (1->1), (2->2), (1->2), (2->1),
/// i.e. weights (l, m), (l+1/2, m+1/2), pi(l, m+1/2), pi(l+1/2, m).
std::array<LinDiffOp, 4> phi_decompose(const LinDiffOp& A);
LinDiffOp phi_assemble(const std::array<LinDiffOp, 4>& parts);

/// Pi(A o (sigma (x) sigma)): toggles the target flag. With flag-only pi the
/// map is an involution.
BiDiffOp parity_swap(const BiDiffOp& A);

/// Extends operators to a larger arity (same words and coefficients).
LinDiffOp widen(const LinDiffOp& A, int n);
BiDiffOp widen(const BiDiffOp& J, int n);

}  // namespace superdensity

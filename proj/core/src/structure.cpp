// Splitting of operators along the last odd coordinate, and the parity swap.
#include "superdensity/diffop.hpp"

#include <stdexcept>

namespace superdensity {

namespace {

const Scalar kHalf(Rational(1, 2));

LinDiffOp with(LinDiffOp A, const Scalar& lambda, const Scalar& mu, bool src, bool tgt) {
  A.set_weights(lambda, mu);
  A.set_pi(src, tgt);
  return A;
}

// F -> F1 where F = F1 + F2 theta_n: 1 - theta_n eta_n.
LinDiffOp proj1(int n, const Scalar& w) {
  LinDiffOp r = LinDiffOp::identity(n, w);
  r.add(Word{0, theta_bit(n)}, -SuperPoly::theta(n, n));
  return r;
}

// F -> Pi(F2) = sigma(d_n F), with d_n = eta_n + theta_n d_x.
LinDiffOp proj2(int n, const Scalar& w) {
  LinDiffOp dn(n, w, w);
  dn.add(Word{0, theta_bit(n)}, SuperPoly(n, Scalar(1)));
  dn.add(Word{1, 0}, SuperPoly::theta(n, n));
  return with(compose(sigma_op(n, w), dn), w, w + kHalf, false, true);
}

// Pi(F2) -> F2 theta_n = theta_n sigma(F2).
LinDiffOp embed2(int n, const Scalar& w) {
  return with(left_mul(SuperPoly::theta(n, n), sigma_op(n, w)), w + kHalf, w, true, false);
}

Scalar shifted(const Scalar& w, int part) { return part == 2 ? w + kHalf : w; }

// On theta_n-free inputs eta_n F = -theta_n F', so a word d^k eta^E eta_n acts
// as (-1)^{|E|+1} theta_n d^{k+1} eta^E.
std::pair<int, Word> drop_top_eta(const Word& w, int n) {
  const ThetaMask rest = ThetaMask(w.eta & ~theta_bit(n));
  return {(popcount(rest) & 1) ? 1 : -1, Word{w.k + 1, rest}};
}

LinDiffOp restrict_lin(const LinDiffOp& K, const Scalar& lambda, const Scalar& mu, bool src, bool tgt) {
  const int n = K.arity();
  LinDiffOp wide(n, lambda, mu, src, tgt);
  const SuperPoly th = SuperPoly::theta(n, n);
  for (const auto& [w, m] : K.terms()) {
    if (!(w.eta & theta_bit(n))) {
      wide.add(w, m);
      continue;
    }
    auto [s, nw] = drop_top_eta(w, n);
    SuperPoly c = m * th;
    wide.add(nw, s < 0 ? -c : c);
  }
  LinDiffOp r(n - 1, lambda, mu, src, tgt);
  for (const auto& [w, m] : wide.terms()) r.add(w, narrow(m, n - 1));
  return r;
}

BiDiffOp restrict_bi(const BiDiffOp& K) {
  const int n = K.arity();
  BiDiffOp wide = K * Scalar(0);
  const SuperPoly th = SuperPoly::theta(n, n);
  const ThetaMask top = theta_bit(n);
  for (const auto& [wp, m] : K.terms()) {
    Word w1 = wp.w1, w2 = wp.w2;
    SuperPoly c = m;
    if (w1.eta & top) {
      auto [s, nw] = drop_top_eta(w1, n);
      w1 = nw;
      c = c * th;
      if (s < 0) c = -c;
    }
    if (w2.eta & top) {
      auto [s, nw] = drop_top_eta(w2, n);
      w2 = nw;
      c = c * th;
      // theta_n passes W1(F); the slot-2 word also changes parity
      if ((w1.parity() + int(K.pi1())) & 1) s = -s;
      if (s < 0) c = -c;
    }
    wide.add(WordPair{w1, w2}, c);
  }
  BiDiffOp r(n - 1, K.tau(), K.lambda(), K.mu(), K.pi1(), K.pi2(), K.pi_t());
  for (const auto& [wp, m] : wide.terms()) r.add(wp, narrow(m, n - 1));
  return r;
}

}  // namespace

LinDiffOp widen(const LinDiffOp& A, int n) {
  LinDiffOp r(n, A.lambda(), A.mu(), A.pi_src(), A.pi_tgt());
  for (const auto& [w, m] : A.terms()) r.add(w, widen(m, n));
  return r;
}

BiDiffOp widen(const BiDiffOp& J, int n) {
  BiDiffOp r(n, J.tau(), J.lambda(), J.mu(), J.pi1(), J.pi2(), J.pi_t());
  for (const auto& [wp, m] : J.terms()) r.add(wp, widen(m, n));
  return r;
}

PsiParts psi_shape(int m, const Scalar& tau, const Scalar& lambda, const Scalar& mu) {
  PsiParts parts;
  for (std::size_t i = 0; i < kPsiOrder.size(); ++i) {
    const PsiIndex& ix = kPsiOrder[i];
    parts[i] = BiDiffOp(m, shifted(tau, ix.a), shifted(lambda, ix.b), shifted(mu, ix.c), ix.a == 2, ix.b == 2, ix.c == 2);
  }
  return parts;
}

BiDiffOp psi_lift(const PsiParts& parts, const Scalar& tau, const Scalar& lambda, const Scalar& mu) {
  const int m = parts[0].arity();
  const int n = m + 1;
  const PsiParts shape = psi_shape(m, tau, lambda, mu);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const BiDiffOp& p = parts[i];
    const BiDiffOp& s = shape[i];
    if (p.arity() != m || !(p.tau() == s.tau()) || !(p.lambda() == s.lambda()) || !(p.mu() == s.mu()) ||
        p.pi1() != s.pi1() || p.pi2() != s.pi2() || p.pi_t() != s.pi_t()) {
      throw std::invalid_argument("psi_lift: component " + std::to_string(i) + " violates the weight pattern");
    }
  }
  const std::array<LinDiffOp, 2> q1{proj1(n, tau), proj2(n, tau)};
  const std::array<LinDiffOp, 2> q2{proj1(n, lambda), proj2(n, lambda)};
  const LinDiffOp back = embed2(n, mu);
  BiDiffOp r(n, tau, lambda, mu);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].is_zero()) continue;
    const PsiIndex& ix = kPsiOrder[i];
    BiDiffOp K = compose_slot2(compose_slot1(widen(parts[i], n), q1[ix.a - 1]), q2[ix.b - 1]);
    r += ix.c == 2 ? compose_left(back, K) : K;
  }
  return r;
}

PsiParts decompose_psi(const BiDiffOp& J) {
  const int n = J.arity();
  if (n < 1) throw std::invalid_argument("decompose_psi needs arity >= 1");
  if (J.pi1() || J.pi2() || J.pi_t()) throw std::invalid_argument("decompose_psi expects an unflagged operator");
  const LinDiffOp e1 = embed2(n, J.tau()), e2 = embed2(n, J.lambda());
  const std::array<LinDiffOp, 2> out{with(proj1(n, J.mu()), J.mu(), J.mu(), false, false), proj2(n, J.mu())};
  PsiParts parts = psi_shape(n - 1, J.tau(), J.lambda(), J.mu());
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const PsiIndex& ix = kPsiOrder[i];
    BiDiffOp K = J;
    if (ix.a == 2) K = compose_slot1(K, e1);
    if (ix.b == 2) K = compose_slot2(K, e2);
    K = compose_left(out[ix.c - 1], K);
    BiDiffOp part = restrict_bi(K);
    const BiDiffOp& s = parts[i];
    part.set_weights(s.tau(), s.lambda(), s.mu());
    parts[i] = part;
  }
  return parts;
}

std::array<LinDiffOp, 4> phi_decompose(const LinDiffOp& A) {
  const int n = A.arity();
  if (n < 1) throw std::invalid_argument("phi_decompose needs arity >= 1");
  if (A.pi_src() || A.pi_tgt()) throw std::invalid_argument("phi_decompose expects an unflagged operator");
  const Scalar& l = A.lambda();
  const Scalar& m = A.mu();
  const LinDiffOp e = embed2(n, l);
  const LinDiffOp p1 = proj1(n, m), p2 = proj2(n, m);
  return {restrict_lin(compose(p1, A), l, m, false, false),
          restrict_lin(compose(p2, compose(A, e)), l + kHalf, m + kHalf, true, true),
          restrict_lin(compose(p2, A), l, m + kHalf, false, true),
          restrict_lin(compose(p1, compose(A, e)), l + kHalf, m, true, false)};
}

LinDiffOp phi_assemble(const std::array<LinDiffOp, 4>& parts) {
  const int n = parts[0].arity() + 1;
  const Scalar l = parts[0].lambda();
  const Scalar m = parts[0].mu();
  const LinDiffOp q1 = proj1(n, l), q2 = proj2(n, l), back = embed2(n, m);
  LinDiffOp r(n, l, m);
  r += compose(widen(parts[0], n), q1);
  r += compose(back, compose(widen(parts[1], n), q2));
  r += compose(back, compose(widen(parts[2], n), q1));
  r += compose(widen(parts[3], n), q2);
  return r;
}

BiDiffOp parity_swap(const BiDiffOp& A) {
  const int n = A.arity();
  LinDiffOp s1 = sigma_op(n, A.tau()), s2 = sigma_op(n, A.lambda());
  s1.set_pi(A.pi1(), A.pi1());
  s2.set_pi(A.pi2(), A.pi2());
  BiDiffOp r = compose_slot2(compose_slot1(A, s1), s2);
  r.set_weights(A.tau(), A.lambda(), A.mu());
  r.set_pi(A.pi1(), A.pi2(), !A.pi_t());
  return r;
}

}  // namespace superdensity

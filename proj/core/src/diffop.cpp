#include "superdensity/diffop.hpp"

#include <stdexcept>

namespace superdensity {

namespace {

const Scalar kHalf(Rational(1, 2));

Parity combine(Parity acc, int bit) {
  Parity p = bit ? Parity::Odd : Parity::Even;
  if (acc == Parity::Zero) return p;
  return acc == p ? acc : Parity::Mixed;
}

int parity_or_throw(Parity p, const char* what) {
  if (p == Parity::Mixed) throw std::invalid_argument(std::string("mixed parity ") + what);
  return p == Parity::Odd ? 1 : 0;
}

SuperPoly scaled(const SuperPoly& p, int sign) { return sign < 0 ? -p : p; }

// Applies the generators of w (rightmost eta first, then d_x^k) on the left.
LinDiffOp word_on_left(const Word& w, LinDiffOp B) {
  for (int i = kMaxArity; i >= 1; --i) {
    if (w.eta & theta_bit(i)) B = left_eta(i, B);
  }
  for (unsigned j = 0; j < w.k; ++j) B = left_dx(B);
  return B;
}

// w o (multiplication by p), as an operator.
LinDiffOp word_after_mul(const Word& w, const SuperPoly& p) {
  LinDiffOp m(p.arity(), Scalar(0), Scalar(0));
  m.add(Word{}, p);
  return word_on_left(w, m);
}

}  // namespace

std::pair<int, Word> eta_times(int i, const Word& w) {
  const ThetaMask bit = theta_bit(i);
  int sign = (count_below(w.eta, i) & 1) ? -1 : 1;
  if (w.eta & bit) return {-sign, Word{w.k + 1, ThetaMask(w.eta & ~bit)}};
  return {sign, Word{w.k, ThetaMask(w.eta | bit)}};
}

std::pair<int, Word> word_times(const Word& a, const Word& b) {
  Word w{a.k + b.k, b.eta};
  int sign = 1;
  for (int i = kMaxArity; i >= 1; --i) {
    if (!(a.eta & theta_bit(i))) continue;
    auto [s, next] = eta_times(i, w);
    sign *= s;
    w = next;
  }
  return {sign, w};
}

SuperPoly apply_word(const Word& w, const SuperPoly& p) {
  SuperPoly r = p;
  for (int i = kMaxArity; i >= 1; --i) {
    if (w.eta & theta_bit(i)) r = eta(i, r);
  }
  for (unsigned j = 0; j < w.k; ++j) r = d_x(r);
  return r;
}

std::string word_to_string(const Word& w) {
  std::string s;
  if (w.k > 0) s = w.k == 1 ? "D" : "D^" + std::to_string(w.k);
  for (int i = 1; i <= kMaxArity; ++i) {
    if (!(w.eta & theta_bit(i))) continue;
    if (!s.empty()) s += "*";
    s += "e" + std::to_string(i);
  }
  return s.empty() ? "1" : s;
}

// ---------------------------------------------------------------- LinDiffOp

LinDiffOp LinDiffOp::identity(int n, const Scalar& lambda) {
  LinDiffOp r(n, lambda, lambda);
  r.add(Word{}, SuperPoly(n, Scalar(1)));
  return r;
}

LinDiffOp LinDiffOp::word(int n, const Scalar& lambda, const Scalar& mu, const Word& w, const SuperPoly& m) {
  LinDiffOp r(n, lambda, mu);
  r.add(w, m);
  return r;
}

LinDiffOp LinDiffOp::lift(const SuperPoly& H, const Scalar& lambda) {
  const int n = H.arity();
  LinDiffOp r(n, lambda, lambda);
  r.add(Word{1, 0}, H);
  for (int i = 1; i <= n; ++i) r.add(Word{0, theta_bit(i)}, sigma(eta(i, H)) * kHalf);
  r.add(Word{}, d_x(H) * lambda);
  return r;
}

Parity LinDiffOp::term_parity() const {
  Parity p = Parity::Zero;
  for (const auto& [w, m] : terms_) {
    for (const auto& [mono, c] : m.terms()) p = combine(p, (popcount(mono.theta) + w.parity()) & 1);
  }
  return p;
}

int LinDiffOp::parity_bit() const { return parity_or_throw(term_parity(), "operator") ^ int(pi_src_) ^ int(pi_tgt_); }

LinDiffOp LinDiffOp::even_part() const {
  LinDiffOp r(n_, lambda_, mu_, pi_src_, pi_tgt_);
  for (const auto& [w, m] : terms_) r.add(w, w.parity() ? m.odd_part() : m.even_part());
  return r;
}

LinDiffOp LinDiffOp::odd_part() const {
  LinDiffOp r(n_, lambda_, mu_, pi_src_, pi_tgt_);
  for (const auto& [w, m] : terms_) r.add(w, w.parity() ? m.even_part() : m.odd_part());
  return r;
}

void LinDiffOp::add(const Word& w, const SuperPoly& m) {
  if (m.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, m);
  if (!inserted) {
    it->second += m;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

LinDiffOp& LinDiffOp::operator+=(const LinDiffOp& o) {
  if (terms_.empty() && n_ == 0) n_ = o.n_;
  for (const auto& [w, m] : o.terms_) add(w, m);
  return *this;
}

LinDiffOp& LinDiffOp::operator-=(const LinDiffOp& o) {
  if (terms_.empty() && n_ == 0) n_ = o.n_;
  for (const auto& [w, m] : o.terms_) add(w, -m);
  return *this;
}

LinDiffOp& LinDiffOp::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, m] : terms_) m *= c;
  return *this;
}

std::map<OpWord, Scalar> LinDiffOp::normal_form() const {
  std::map<OpWord, Scalar> out;
  for (const auto& [w, m] : terms_) {
    for (const auto& [mono, c] : m.terms()) out.emplace(OpWord{mono.x, mono.theta, w.k, w.eta}, c);
  }
  return out;
}

std::string LinDiffOp::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [w, m] : terms_) {
    if (!s.empty()) s += " + ";
    s += "(" + m.to_string() + ")*" + word_to_string(w);
  }
  return s;
}

LinDiffOp left_dx(const LinDiffOp& A) {
  LinDiffOp r(A.arity(), A.lambda(), A.mu(), A.pi_src(), A.pi_tgt());
  for (const auto& [w, m] : A.terms()) {
    r.add(w, d_x(m));
    r.add(Word{w.k + 1, w.eta}, m);
  }
  return r;
}

LinDiffOp left_eta(int i, const LinDiffOp& A) {
  LinDiffOp r(A.arity(), A.lambda(), A.mu(), A.pi_src(), A.pi_tgt());
  for (const auto& [w, m] : A.terms()) {
    r.add(w, eta(i, m));
    auto [s, nw] = eta_times(i, w);
    r.add(nw, scaled(sigma(m), s));
  }
  return r;
}

LinDiffOp left_mul(const SuperPoly& p, const LinDiffOp& A) {
  LinDiffOp r(A.arity(), A.lambda(), A.mu(), A.pi_src(), A.pi_tgt());
  for (const auto& [w, m] : A.terms()) r.add(w, p * m);
  return r;
}

LinDiffOp compose(const LinDiffOp& A, const LinDiffOp& B) {
  LinDiffOp r(B.arity(), B.lambda(), A.mu(), B.pi_src(), A.pi_tgt());
  for (const auto& [w, m] : A.terms()) r += left_mul(m, word_on_left(w, B));
  return r;
}

LinDiffOp normal_order(int n, const std::vector<Generator>& product) {
  LinDiffOp r = LinDiffOp::identity(n, Scalar(0));
  for (auto it = product.rbegin(); it != product.rend(); ++it) {
    switch (it->kind) {
      case Generator::X:
        r = left_mul(SuperPoly::x(n), r);
        break;
      case Generator::Theta:
        r = left_mul(SuperPoly::theta(n, it->index), r);
        break;
      case Generator::Dx:
        r = left_dx(r);
        break;
      case Generator::Eta:
        if (it->index < 1 || it->index > n) throw std::invalid_argument("eta index out of range");
        r = left_eta(it->index, r);
        break;
    }
  }
  return r;
}

Density apply_lin(const LinDiffOp& A, const Density& d) {
  if (d.arity() != A.arity()) throw std::invalid_argument("arity mismatch");
  if (!(d.weight == A.lambda())) throw std::invalid_argument("density weight does not match operator source");
  if (d.pi != A.pi_src()) throw std::invalid_argument("parity flag does not match operator source");
  SuperPoly out(A.arity());
  for (const auto& [w, m] : A.terms()) out += m * apply_word(w, d.payload);
  return Density{out, A.mu(), A.pi_tgt()};
}

LinDiffOp act_on_lin(const SuperPoly& H, const LinDiffOp& A) {
  LinDiffOp r(A.arity(), A.lambda(), A.mu(), A.pi_src(), A.pi_tgt());
  for (const SuperPoly& h : {H.even_part(), H.odd_part()}) {
    if (h.is_zero()) continue;
    const int hp = h.parity_bit();
    const LinDiffOp Lmu = LinDiffOp::lift(h, A.mu());
    const LinDiffOp Llambda = LinDiffOp::lift(h, A.lambda());
    for (const LinDiffOp& a : {A.even_part(), A.odd_part()}) {
      if (a.is_zero()) continue;
      r += compose(Lmu, a);
      LinDiffOp tail = compose(a, Llambda);
      if (hp && a.parity_bit()) {
        r += tail;
      } else {
        r -= tail;
      }
    }
  }
  return r;
}

LinDiffOp lift_generator(const SuperPoly& H, const Scalar& lambda) {
  const auto gens = generators(SubalgebraSpec{SubalgebraKind::Aff, H.arity(), std::nullopt});
  bool ok = false;
  for (const auto& g : gens) ok = ok || g == H;
  if (!ok) throw std::invalid_argument("not an aff generator: " + H.to_string());
  return LinDiffOp::lift(H, lambda);
}

LinDiffOp sigma_op(int n, const Scalar& lambda) {
  LinDiffOp r = LinDiffOp::identity(n, lambda);
  for (int i = 1; i <= n; ++i) {
    LinDiffOp f = LinDiffOp::identity(n, lambda);
    f.add(Word{0, theta_bit(i)}, SuperPoly::theta(n, i) * Scalar(-2));
    r = compose(f, r);
  }
  return r;
}

// ----------------------------------------------------------------- BiDiffOp

Parity BiDiffOp::term_parity() const {
  Parity p = Parity::Zero;
  for (const auto& [wp, m] : terms_) {
    for (const auto& [mono, c] : m.terms()) p = combine(p, (popcount(mono.theta) + wp.parity()) & 1);
  }
  return p;
}

int BiDiffOp::parity_bit() const {
  return parity_or_throw(term_parity(), "bilinear operator") ^ int(pi1_) ^ int(pi2_) ^ int(pi_t_);
}

BiDiffOp BiDiffOp::even_part() const {
  BiDiffOp r(n_, tau_, lambda_, mu_, pi1_, pi2_, pi_t_);
  for (const auto& [wp, m] : terms_) r.add(wp, wp.parity() ? m.odd_part() : m.even_part());
  return r;
}

BiDiffOp BiDiffOp::odd_part() const {
  BiDiffOp r(n_, tau_, lambda_, mu_, pi1_, pi2_, pi_t_);
  for (const auto& [wp, m] : terms_) r.add(wp, wp.parity() ? m.even_part() : m.odd_part());
  return r;
}

void BiDiffOp::add(const WordPair& w, const SuperPoly& m) {
  if (m.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, m);
  if (!inserted) {
    it->second += m;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void BiDiffOp::add(const BiKey& key, const Scalar& c) {
  add(WordPair{key.w1, key.w2}, SuperPoly::monomial(n_, key.a, key.theta, c));
}

BiDiffOp& BiDiffOp::operator+=(const BiDiffOp& o) {
  if (terms_.empty() && n_ == 0) n_ = o.n_;
  for (const auto& [w, m] : o.terms_) add(w, m);
  return *this;
}

BiDiffOp& BiDiffOp::operator-=(const BiDiffOp& o) {
  if (terms_.empty() && n_ == 0) n_ = o.n_;
  for (const auto& [w, m] : o.terms_) add(w, -m);
  return *this;
}

BiDiffOp& BiDiffOp::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, m] : terms_) m *= c;
  return *this;
}

std::map<BiKey, Scalar> BiDiffOp::normal_form() const {
  std::map<BiKey, Scalar> out;
  for (const auto& [wp, m] : terms_) {
    for (const auto& [mono, c] : m.terms()) out.emplace(BiKey{mono.x, mono.theta, wp.w1, wp.w2}, c);
  }
  return out;
}

BiDiffOp BiDiffOp::from_normal_form(int n, const std::map<BiKey, Scalar>& nf) {
  BiDiffOp r(n, Scalar(0), Scalar(0), Scalar(0));
  for (const auto& [key, c] : nf) r.add(key, c);
  return r;
}

BiDiffOp BiDiffOp::substitute(std::size_t var, const Scalar& value) const {
  BiDiffOp r(n_, tau_.substitute(var, value), lambda_.substitute(var, value), mu_.substitute(var, value), pi1_, pi2_,
             pi_t_);
  for (const auto& [wp, m] : terms_) r.add(wp, m.substitute(var, value));
  return r;
}

std::string BiDiffOp::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [wp, m] : terms_) {
    if (!s.empty()) s += " + ";
    s += "(" + m.to_string() + ")*[" + word_to_string(wp.w1) + "|" + word_to_string(wp.w2) + "]";
  }
  return s;
}

namespace {

BiDiffOp bi_left_dx(const BiDiffOp& J) {
  BiDiffOp r = J * Scalar(0);
  for (const auto& [wp, m] : J.terms()) {
    r.add(wp, d_x(m));
    r.add(WordPair{Word{wp.w1.k + 1, wp.w1.eta}, wp.w2}, m);
    r.add(WordPair{wp.w1, Word{wp.w2.k + 1, wp.w2.eta}}, m);
  }
  return r;
}

BiDiffOp bi_left_eta(int i, const BiDiffOp& J) {
  BiDiffOp r = J * Scalar(0);
  for (const auto& [wp, m] : J.terms()) {
    r.add(wp, eta(i, m));
    SuperPoly sm = sigma(m);
    auto [s1, w1] = eta_times(i, wp.w1);
    r.add(WordPair{w1, wp.w2}, scaled(sm, s1));
    auto [s2, w2] = eta_times(i, wp.w2);
    if ((wp.w1.parity() + int(J.pi1())) & 1) s2 = -s2;
    r.add(WordPair{wp.w1, w2}, scaled(sm, s2));
  }
  return r;
}

BiDiffOp bi_left_mul(const SuperPoly& p, const BiDiffOp& J) {
  BiDiffOp r = J * Scalar(0);
  for (const auto& [wp, m] : J.terms()) r.add(wp, p * m);
  return r;
}

BiDiffOp bi_word_on_left(const Word& w, BiDiffOp J) {
  for (int i = kMaxArity; i >= 1; --i) {
    if (w.eta & theta_bit(i)) J = bi_left_eta(i, J);
  }
  for (unsigned j = 0; j < w.k; ++j) J = bi_left_dx(J);
  return J;
}

struct MulCache {
  std::map<std::pair<Word, Monomial>, LinDiffOp> entries;
  const LinDiffOp& get(const Word& w, int n, const Monomial& mono) {
    auto key = std::make_pair(w, mono);
    auto it = entries.find(key);
    if (it == entries.end()) {
      it = entries.emplace(key, word_after_mul(w, SuperPoly::monomial(n, mono.x, mono.theta))).first;
    }
    return it->second;
  }
};

}  // namespace

Density apply_bi(const BiDiffOp& J, const Density& d1, const Density& d2) {
  if (d1.arity() != J.arity() || d2.arity() != J.arity()) throw std::invalid_argument("arity mismatch");
  if (!(d1.weight == J.tau()) || !(d2.weight == J.lambda())) throw std::invalid_argument("density weights do not match operator");
  if (d1.pi != J.pi1() || d2.pi != J.pi2()) throw std::invalid_argument("parity flags do not match operator");
  SuperPoly out(J.arity());
  for (const SuperPoly& F : {d1.payload.even_part(), d1.payload.odd_part()}) {
    if (F.is_zero()) continue;
    const int fp = F.parity_bit() ^ int(d1.pi);
    for (const auto& [wp, m] : J.terms()) {
      SuperPoly v = m * apply_word(wp.w1, F) * apply_word(wp.w2, d2.payload);
      out += (fp && wp.w2.parity()) ? -v : v;
    }
  }
  return Density{out, J.mu(), J.pi_t()};
}

BiDiffOp compose_left(const LinDiffOp& L, const BiDiffOp& J) {
  BiDiffOp r(J.arity(), J.tau(), J.lambda(), L.mu(), J.pi1(), J.pi2(), L.pi_tgt());
  for (const auto& [w, m] : L.terms()) r += bi_left_mul(m, bi_word_on_left(w, J));
  return r;
}

BiDiffOp compose_slot1(const BiDiffOp& J, const LinDiffOp& L) {
  BiDiffOp r(J.arity(), L.lambda(), J.lambda(), J.mu(), L.pi_src(), J.pi2(), J.pi_t());
  MulCache cache;
  const int n = J.arity();
  const int flags = int(L.pi_src()) ^ int(L.pi_tgt());
  for (const auto& [wp, m] : J.terms()) {
    for (const auto& [v, ell] : L.terms()) {
      for (const auto& [mono, c] : ell.terms()) {
        const int lp = (popcount(mono.theta) + v.parity() + flags) & 1;
        const int outer = (wp.w2.parity() && lp) ? -1 : 1;
        for (const auto& [wr, mr] : cache.get(wp.w1, n, mono).terms()) {
          auto [s, nw] = word_times(wr, v);
          r.add(WordPair{nw, wp.w2}, scaled(m * mr, s * outer) * c);
        }
      }
    }
  }
  return r;
}

BiDiffOp compose_slot2(const BiDiffOp& J, const LinDiffOp& L) {
  BiDiffOp r(J.arity(), J.tau(), L.lambda(), J.mu(), J.pi1(), L.pi_src(), J.pi_t());
  MulCache cache;
  const int n = J.arity();
  for (const auto& [wp, m] : J.terms()) {
    const int w1p = (wp.w1.parity() + int(J.pi1())) & 1;
    for (const auto& [v, ell] : L.terms()) {
      for (const auto& [mono, c] : ell.terms()) {
        for (const auto& [wr, mr] : cache.get(wp.w2, n, mono).terms()) {
          auto [s, nw] = word_times(wr, v);
          // mr is homogeneous for a fixed word
          const int mp = mr.is_zero() ? 0 : mr.parity_bit();
          if (mp && w1p) s = -s;
          r.add(WordPair{wp.w1, nw}, scaled(m * mr, s) * c);
        }
      }
    }
  }
  if (L.pi_src() == L.pi_tgt()) return r;
  // The expansion above carries (-1)^{|terms of L||F|}; a flag change makes
  // the effective parity differ by one, i.e. a missing sigma on slot 1.
  LinDiffOp sig = sigma_op(n, J.tau());
  sig.set_pi(J.pi1(), J.pi1());
  BiDiffOp fixed = compose_slot1(r, sig);
  return J.pi1() ? fixed * Scalar(-1) : fixed;
}

BiDiffOp act_on_bi(const SuperPoly& H, const BiDiffOp& J) {
  BiDiffOp r(J.arity(), J.tau(), J.lambda(), J.mu(), J.pi1(), J.pi2(), J.pi_t());
  for (const SuperPoly& h : {H.even_part(), H.odd_part()}) {
    if (h.is_zero()) continue;
    const int hp = h.parity_bit();
    const LinDiffOp Lmu = LinDiffOp::lift(h, J.mu());
    const LinDiffOp Ltau = LinDiffOp::lift(h, J.tau());
    const LinDiffOp Llambda = LinDiffOp::lift(h, J.lambda());
    for (const BiDiffOp& j : {J.even_part(), J.odd_part()}) {
      if (j.is_zero()) continue;
      r += compose_left(Lmu, j);
      BiDiffOp tail = compose_slot1(j, Ltau) + compose_slot2(j, Llambda);
      if (hp && j.parity_bit()) {
        r += tail;
      } else {
        r -= tail;
      }
    }
  }
  return r;
}

LinDiffOp fix_first(const BiDiffOp& J, const SuperPoly& G) {
  LinDiffOp r(J.arity(), J.lambda(), J.mu(), J.pi2(), J.pi_t());
  for (const SuperPoly& g : {G.even_part(), G.odd_part()}) {
    if (g.is_zero()) continue;
    const int gp = g.parity_bit() ^ int(J.pi1());
    for (const auto& [wp, m] : J.terms()) {
      SuperPoly v = m * apply_word(wp.w1, g);
      r.add(wp.w2, (gp && wp.w2.parity()) ? -v : v);
    }
  }
  return r;
}

BiDiffOp adjoint_action(int n, const Scalar& nu) {
  BiDiffOp r(n, Scalar(-1), nu, nu);
  r.add(WordPair{Word{}, Word{1, 0}}, SuperPoly(n, Scalar(1)));
  for (int i = 1; i <= n; ++i) r.add(WordPair{Word{0, theta_bit(i)}, Word{0, theta_bit(i)}}, SuperPoly(n, -kHalf));
  r.add(WordPair{Word{1, 0}, Word{}}, SuperPoly(n, nu));
  return r;
}

}  // namespace superdensity

#include "superdensity/superpoly.hpp"

#include <stdexcept>

namespace superdensity {

const VarList& weight_params() {
  static const VarList vars = make_vars({"l", "tau", "mu"});
  return vars;
}

Scalar lambda_param() { return Scalar::variable(weight_params(), std::size_t(0)); }
Scalar tau_param() { return Scalar::variable(weight_params(), std::size_t(1)); }
Scalar mu_param() { return Scalar::variable(weight_params(), std::size_t(2)); }

int merge_sign(ThetaMask s, ThetaMask t) {
  int swaps = 0;
  for (int j = 1; j <= kMaxArity; ++j) {
    if (t & theta_bit(j)) swaps += popcount(ThetaMask(s & ~((theta_bit(j) << 1) - 1)));
  }
  return (swaps & 1) ? -1 : 1;
}

int SuperPoly::check_arity(int n) {
  if (n < 0 || n > kMaxArity) throw std::invalid_argument("arity must be in 0..8");
  return n;
}

SuperPoly::SuperPoly(int n, const Scalar& c) : n_(check_arity(n)) {
  if (!c.is_zero()) terms_.emplace(Monomial{0, 0}, c);
}

SuperPoly SuperPoly::monomial(int n, unsigned x, ThetaMask theta, const Scalar& c) {
  SuperPoly p(n);
  if (theta >> n) throw std::invalid_argument("theta index out of range");
  p.add_term(x, theta, c);
  return p;
}

SuperPoly SuperPoly::theta(int n, int i) {
  if (i < 1 || i > n) throw std::invalid_argument("theta index out of range");
  return monomial(n, 0, theta_bit(i));
}

Parity SuperPoly::parity() const {
  bool even = false, odd = false;
  for (const auto& [m, c] : terms_) (popcount(m.theta) & 1 ? odd : even) = true;
  if (even && odd) return Parity::Mixed;
  if (odd) return Parity::Odd;
  return even ? Parity::Even : Parity::Zero;
}

int SuperPoly::parity_bit() const {
  switch (parity()) {
    case Parity::Odd:
      return 1;
    case Parity::Mixed:
      throw std::invalid_argument("parity of a mixed polynomial: " + to_string());
    default:
      return 0;
  }
}

SuperPoly SuperPoly::even_part() const {
  SuperPoly r(n_);
  for (const auto& [m, c] : terms_) {
    if (!(popcount(m.theta) & 1)) r.terms_.emplace(m, c);
  }
  return r;
}

SuperPoly SuperPoly::odd_part() const {
  SuperPoly r(n_);
  for (const auto& [m, c] : terms_) {
    if (popcount(m.theta) & 1) r.terms_.emplace(m, c);
  }
  return r;
}

Scalar SuperPoly::coeff(unsigned x, ThetaMask theta) const {
  auto it = terms_.find(Monomial{x, theta});
  return it == terms_.end() ? Scalar(0) : it->second;
}

unsigned SuperPoly::x_degree() const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.x);
  return d;
}

void SuperPoly::add_term(unsigned x, ThetaMask theta, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(Monomial{x, theta}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

SuperPoly& SuperPoly::operator+=(const SuperPoly& o) {
  if (o.n_ != n_ && !o.terms_.empty() && !terms_.empty()) throw std::invalid_argument("arity mismatch");
  if (terms_.empty()) n_ = std::max(n_, o.n_);
  for (const auto& [m, c] : o.terms_) add_term(m.x, m.theta, c);
  return *this;
}

SuperPoly& SuperPoly::operator-=(const SuperPoly& o) {
  if (o.n_ != n_ && !o.terms_.empty() && !terms_.empty()) throw std::invalid_argument("arity mismatch");
  if (terms_.empty()) n_ = std::max(n_, o.n_);
  for (const auto& [m, c] : o.terms_) add_term(m.x, m.theta, -c);
  return *this;
}

SuperPoly& SuperPoly::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

SuperPoly operator*(const SuperPoly& a, const SuperPoly& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("arity mismatch");
  SuperPoly r(a.n_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      if (ma.theta & mb.theta) continue;
      Scalar c = ca * cb;
      if (merge_sign(ma.theta, mb.theta) < 0) c = -c;
      r.add_term(ma.x + mb.x, ThetaMask(ma.theta | mb.theta), c);
    }
  }
  return r;
}

bool operator==(const SuperPoly& a, const SuperPoly& b) {
  if (a.terms_.empty() || b.terms_.empty()) return a.terms_.empty() && b.terms_.empty();
  return a.n_ == b.n_ && a.terms_ == b.terms_;
}

SuperPoly SuperPoly::substitute(std::size_t var, const Scalar& value) const {
  SuperPoly r(n_);
  for (const auto& [m, c] : terms_) r.add_term(m.x, m.theta, c.substitute(var, value));
  return r;
}

std::string SuperPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    std::string mono;
    if (m.x > 0) mono = m.x == 1 ? "x" : "x^" + std::to_string(m.x);
    for (int i = 1; i <= n_; ++i) {
      if (!(m.theta & theta_bit(i))) continue;
      if (!mono.empty()) mono += "*";
      mono += "t" + std::to_string(i);
    }
    bool neg = false;
    std::string coef;
    if (c.is_constant()) {
      Rational v = c.constant_value();
      neg = v.sign() < 0;
      if (neg) v = -v;
      if (!v.is_one() || mono.empty()) coef = v.to_string();
    } else {
      coef = "(" + c.to_string() + ")";
    }
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    if (coef.empty()) {
      out += mono;
    } else if (mono.empty()) {
      out += coef;
    } else {
      out += coef + "*" + mono;
    }
  }
  return out;
}

SuperPoly d_x(const SuperPoly& p) {
  SuperPoly r(p.arity());
  for (const auto& [m, c] : p.terms()) {
    if (m.x == 0) continue;
    r.add_term(m.x - 1, m.theta, c * Scalar(long(m.x)));
  }
  return r;
}

SuperPoly d_theta(int i, const SuperPoly& p) {
  if (i < 1 || i > p.arity()) throw std::invalid_argument("theta index out of range");
  SuperPoly r(p.arity());
  const ThetaMask bit = theta_bit(i);
  for (const auto& [m, c] : p.terms()) {
    if (!(m.theta & bit)) continue;
    r.add_term(m.x, ThetaMask(m.theta & ~bit), (count_below(m.theta, i) & 1) ? -c : c);
  }
  return r;
}

SuperPoly eta(int i, const SuperPoly& p) {
  if (i < 1 || i > p.arity()) throw std::invalid_argument("theta index out of range");
  SuperPoly r = d_theta(i, p);
  const ThetaMask bit = theta_bit(i);
  // theta_i * d_x(p), moving theta_i into place
  for (const auto& [m, c] : p.terms()) {
    if (m.x == 0 || (m.theta & bit)) continue;
    Scalar v = c * Scalar(long(m.x));
    if (count_below(m.theta, i) & 1) v = -v;
    r.add_term(m.x - 1, ThetaMask(m.theta | bit), -v);
  }
  return r;
}

SuperPoly sigma(const SuperPoly& p) {
  SuperPoly r(p.arity());
  for (const auto& [m, c] : p.terms()) r.add_term(m.x, m.theta, (popcount(m.theta) & 1) ? -c : c);
  return r;
}

}  // namespace superdensity

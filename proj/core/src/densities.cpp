#include "superdensity/densities.hpp"

#include <stdexcept>

namespace superdensity {

std::string Density::to_string() const {
  std::string w = weight.to_string();
  return payload.to_string() + " @ " + w + (pi ? " pi" : "");
}

Density act(const Scalar& lambda, const SuperPoly& F, const Density& d) {
  if (!(lambda == d.weight)) throw std::invalid_argument("weight mismatch: " + lambda.to_string() + " vs " + d.weight.to_string());
  return act(F, d);
}

Density act(const SuperPoly& F, const Density& d) {
  Density r = d;
  r.payload = field_apply(F, d.payload) + d.weight * (d_x(F) * d.payload);
  return r;
}

std::vector<TensorDensity> act_tensor(const SuperPoly& F, const std::vector<Scalar>& weights, const TensorDensity& t) {
  if (t.empty()) throw std::invalid_argument("empty tensor");
  if (weights.size() != t.size()) throw std::invalid_argument("weights do not match factors");
  for (std::size_t j = 0; j < t.size(); ++j) {
    if (!(weights[j] == t[j].weight)) throw std::invalid_argument("weight mismatch in tensor factor");
    if (t[j].arity() != F.arity()) throw std::invalid_argument("arity mismatch");
  }
  std::vector<TensorDensity> out;
  for (const SuperPoly& part : {F.even_part(), F.odd_part()}) {
    if (part.is_zero()) continue;
    const int fp = part.parity_bit();
    int passed = 0;
    for (std::size_t j = 0; j < t.size(); ++j) {
      TensorDensity term = t;
      term[j] = act(part, t[j]);
      if (fp && (passed & 1)) term[j].payload = -term[j].payload;
      out.push_back(std::move(term));
      passed += t[j].parity_bit();
    }
  }
  return out;
}

Density pi(const Density& d) {
  Density r = d;
  r.pi = !r.pi;
  return r;
}

SuperPoly widen(const SuperPoly& p, int n) {
  if (n < p.arity()) throw std::invalid_argument("widen to a smaller arity");
  SuperPoly r(n);
  for (const auto& [m, c] : p.terms()) r.add_term(m.x, m.theta, c);
  return r;
}

SuperPoly narrow(const SuperPoly& p, int m) {
  SuperPoly r(m);
  for (const auto& [mono, c] : p.terms()) {
    if (mono.theta >> m) throw std::invalid_argument("narrow: polynomial involves theta_" + std::to_string(m + 1));
    r.add_term(mono.x, mono.theta, c);
  }
  return r;
}

std::pair<Density, Density> split(const Density& d) {
  const int n = d.arity();
  if (n < 1) throw std::invalid_argument("split needs arity >= 1");
  const ThetaMask top = theta_bit(n);
  SuperPoly f1(n - 1), f2(n - 1);
  // theta_n is the largest index, so theta^S = theta^{S\n} theta_n already.
  for (const auto& [m, c] : d.payload.terms()) {
    if (m.theta & top) {
      f2.add_term(m.x, ThetaMask(m.theta & ~top), c);
    } else {
      f1.add_term(m.x, m.theta, c);
    }
  }
  return {Density{f1, d.weight, d.pi}, Density{f2, d.weight + Scalar(Rational(1, 2)), !d.pi}};
}

Density merge(const Density& first, const Density& second) {
  const int n = first.arity() + 1;
  if (second.arity() != first.arity()) throw std::invalid_argument("merge: arity mismatch");
  if (!(second.weight == first.weight + Scalar(Rational(1, 2))) || second.pi == first.pi) {
    throw std::invalid_argument("merge: component weights do not follow the splitting pattern");
  }
  SuperPoly p = widen(first.payload, n);
  p += widen(second.payload, n) * SuperPoly::theta(n, n);
  return Density{p, first.weight, first.pi};
}

}  // namespace superdensity

#include "superdensity/roots.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace superdensity {

namespace {

// Dense univariate helper over Z, index = degree.
using ZPoly = std::vector<mpz_class>;

struct Univariate {
  VarList vars;
  int var = -1;
  ZPoly coeffs;  // primitive integer coefficients
};

Univariate to_dense(const ParamPoly& p) {
  Univariate u;
  u.vars = p.vars();
  u.var = p.sole_variable();
  ParamPoly q = p.primitive_part();
  int deg = u.var < 0 ? 0 : q.degree(std::size_t(u.var));
  u.coeffs.assign(std::size_t(std::max(deg, 0)) + 1, 0);
  for (const auto& t : q.terms()) {
    int e = u.var < 0 ? 0 : t.exp[std::size_t(u.var)];
    u.coeffs[std::size_t(e)] = t.coeff.num();
  }
  return u;
}

ParamPoly from_dense(const Univariate& u, const ZPoly& c) {
  ParamPoly r = ParamPoly(0).with_vars(u.vars);
  for (std::size_t e = 0; e < c.size(); ++e) {
    if (c[e] == 0) continue;
    ParamPoly::Exponent x{};
    if (e > 0) x[std::size_t(u.var)] = static_cast<std::uint8_t>(e);
    r += ParamPoly::monomial(u.vars, x, Rational(c[e]));
  }
  return r;
}

Rational eval(const ZPoly& c, const Rational& v) {
  Rational acc(0);
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * v + Rational(*it);
  return acc;
}

mpz_class eval_int(const ZPoly& c, long v) {
  mpz_class acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * v + *it;
  return acc;
}

mpz_class pollard_brent(const mpz_class& n) {
  if (n % 2 == 0) return 2;
  for (unsigned long c = 1;; ++c) {
    mpz_class y = 2, x, g = 1, q = 1, ys;
    unsigned long r = 1, m = 64;
    auto f = [&](const mpz_class& v) -> mpz_class { return (v * v + c) % n; };
    while (g == 1) {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = f(y);
      unsigned long k = 0;
      while (k < r && g == 1) {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          mpz_class d = x - y;
          q = (q * abs(d)) % n;
        }
        g = gcd(q, n);
        k += m;
      }
      r *= 2;
    }
    if (g == n) {
      do {
        ys = f(ys);
        mpz_class d = x - ys;
        g = gcd(abs(d), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_into(mpz_class n, std::map<mpz_class, int>& out) {
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 30) > 0) {
    ++out[n];
    return;
  }
  mpz_class d = pollard_brent(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

std::map<mpz_class, int> factor_integer(mpz_class n) {
  std::map<mpz_class, int> out;
  n = abs(n);
  for (unsigned long p = 2; p < 10000 && p * p <= n; p += (p == 2 ? 1 : 2)) {
    while (n % p == 0) {
      ++out[mpz_class(p)];
      n /= p;
    }
  }
  if (n > 1) factor_into(n, out);
  return out;
}

// Exact division of dense polynomials over Q; false if not exact.
bool divide_dense(const ZPoly& a, const ZPoly& b, ZPoly& q) {
  std::vector<Rational> r(a.begin(), a.end());
  std::vector<Rational> quo(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
  const Rational lb(b.back());
  const long shift = long(b.size()) - 1;
  for (long i = long(r.size()) - 1; i >= shift; --i) {
    if (r[std::size_t(i)].is_zero()) continue;
    Rational f = r[std::size_t(i)] / lb;
    quo[std::size_t(i - shift)] = f;
    for (std::size_t j = 0; j < b.size(); ++j) r[std::size_t(i - shift) + j] -= f * Rational(b[j]);
  }
  for (const auto& x : r) {
    if (!x.is_zero()) return false;
  }
  mpz_class l = 1;
  for (const auto& x : quo) l = lcm(l, x.den());
  q.clear();
  for (const auto& x : quo) q.push_back(x.num() * (l / x.den()));
  mpz_class g = 0;
  for (const auto& x : q) g = gcd(g, x);
  if (g != 0) {
    if (q.back() < 0) g = -g;
    for (auto& x : q) x /= g;
  }
  return true;
}

void trim(ZPoly& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}

// Searches for a quadratic factor of a primitive integer polynomial without
// rational roots (Kronecker's method at 0, 1, -1).
bool find_quadratic_factor(const ZPoly& p, ZPoly& factor) {
  mpz_class v0 = eval_int(p, 0), v1 = eval_int(p, 1), v2 = eval_int(p, -1);
  auto d0s = divisors(v0), d1s = divisors(v1), d2s = divisors(v2);
  for (const auto& a0 : d0s) {
    for (int s0 : {1, -1}) {
      mpz_class c = a0 * s0;
      for (const auto& a1 : d1s) {
        for (int s1 : {1, -1}) {
          mpz_class e1 = a1 * s1;
          for (const auto& a2 : d2s) {
            for (int s2 : {1, -1}) {
              mpz_class e2 = a2 * s2;
              mpz_class sum = e1 + e2;
              if (mpz_odd_p(sum.get_mpz_t())) continue;
              mpz_class lead = sum / 2 - c;
              if (lead <= 0) continue;
              if (p.back() % lead != 0) continue;
              ZPoly g{c, (e1 - e2) / 2, lead};
              ZPoly q;
              if (divide_dense(p, g, q)) {
                factor = g;
                return true;
              }
            }
          }
        }
      }
    }
  }
  return false;
}

}  // namespace

std::vector<mpz_class> divisors(const mpz_class& n) {
  if (n == 0) throw std::invalid_argument("divisors of zero");
  std::vector<mpz_class> ds{1};
  for (const auto& [p, e] : factor_integer(n)) {
    std::size_t base = ds.size();
    mpz_class pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) ds.push_back(ds[i] * pk);
    }
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

ParamPoly square_free_part(const ParamPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("square-free part of zero");
  int v = p.sole_variable();
  if (v < 0) return ParamPoly(1).with_vars(p.vars());
  ParamPoly g = gcd(p, p.derivative(std::size_t(v)));
  return divide_exact(p, g).primitive_part();
}

std::vector<Rational> rational_roots(const ParamPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("rational roots of the zero polynomial");
  Univariate u = to_dense(p);
  std::vector<Rational> roots;
  ZPoly c = u.coeffs;
  std::size_t low = 0;
  while (low < c.size() && c[low] == 0) ++low;
  if (low > 0) {
    roots.emplace_back(0);
    c.erase(c.begin(), c.begin() + long(low));
  }
  if (c.size() > 1) {
    for (const auto& num : divisors(c.front())) {
      for (const auto& den : divisors(c.back())) {
        if (gcd(num, den) != 1) continue;
        for (int s : {1, -1}) {
          Rational r(mpz_class(num * s), den);
          if (eval(c, r).is_zero()) roots.push_back(r);
        }
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

std::vector<ParamPoly> irreducible_factors(const ParamPoly& p) {
  ParamPoly sf = square_free_part(p);
  if (sf.is_constant()) return {};
  Univariate u = to_dense(sf);
  std::vector<ZPoly> found;
  ZPoly rest = u.coeffs;
  for (const auto& r : rational_roots(sf)) {
    ZPoly lin{-r.num(), r.den()};
    ZPoly q;
    if (!divide_dense(rest, lin, q)) throw std::logic_error("root does not divide");
    rest = q;
    found.push_back(lin);
  }
  std::vector<ZPoly> work{rest};
  while (!work.empty()) {
    ZPoly q = work.back();
    work.pop_back();
    trim(q);
    std::size_t d = q.size() - 1;
    if (d == 0) continue;
    if (d <= 2) {
      found.push_back(q);
      continue;
    }
    ZPoly g;
    if (d >= 4 && find_quadratic_factor(q, g)) {
      ZPoly h;
      divide_dense(q, g, h);
      found.push_back(g);
      work.push_back(h);
      continue;
    }
    throw std::domain_error("irreducible factor of degree >= 3 is not supported: " + from_dense(u, q).to_string());
  }
  std::vector<ParamPoly> out;
  for (const auto& f : found) out.push_back(from_dense(u, f).primitive_part());
  std::sort(out.begin(), out.end(), [&](const ParamPoly& a, const ParamPoly& b) {
    int da = a.degree(std::size_t(u.var)), db = b.degree(std::size_t(u.var));
    if (da != db) return da < db;
    return a.to_string() < b.to_string();
  });
  return out;
}

std::pair<AlgebraicScalar, AlgebraicScalar> quadratic_split(const ParamPoly& p) {
  int v = p.is_zero() ? -1 : p.sole_variable();
  if (v < 0 || p.degree(std::size_t(v)) != 2) throw std::invalid_argument("quadratic_split needs a univariate quadratic");
  if (!rational_roots(p).empty()) throw std::invalid_argument("quadratic_split: reducible input " + p.to_string());
  Univariate u = to_dense(p);
  Rational a(u.coeffs[2]), b(u.coeffs[1]), c(u.coeffs[0]);
  auto field = std::make_shared<const QuadraticField>(QuadraticField{c / a, b / a});
  AlgebraicScalar t = AlgebraicScalar::generator(field);
  AlgebraicScalar other = -t - AlgebraicScalar(b / a);
  return {t, other};
}

}  // namespace superdensity

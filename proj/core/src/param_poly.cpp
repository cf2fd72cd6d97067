#include "superdensity/param_poly.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace superdensity {

VarList make_vars(std::initializer_list<std::string> names) {
  return make_vars(std::vector<std::string>(names));
}

VarList make_vars(std::vector<std::string> names) {
  if (names.size() > ParamPoly::kMaxVars) throw std::invalid_argument("too many parameters (max 4)");
  return std::make_shared<const std::vector<std::string>>(std::move(names));
}

bool same_vars(const VarList& a, const VarList& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

namespace {

using Exponent = ParamPoly::Exponent;

bool divides(const Exponent& small, const Exponent& big) {
  for (std::size_t i = 0; i < ParamPoly::kMaxVars; ++i) {
    if (small[i] > big[i]) return false;
  }
  return true;
}

Exponent exp_add(const Exponent& a, const Exponent& b) {
  Exponent r{};
  for (std::size_t i = 0; i < ParamPoly::kMaxVars; ++i) {
    unsigned s = unsigned(a[i]) + b[i];
    if (s > 255) throw std::overflow_error("parameter exponent overflow");
    r[i] = static_cast<std::uint8_t>(s);
  }
  return r;
}

Exponent exp_sub(const Exponent& a, const Exponent& b) {
  Exponent r{};
  for (std::size_t i = 0; i < ParamPoly::kMaxVars; ++i) r[i] = static_cast<std::uint8_t>(a[i] - b[i]);
  return r;
}

}  // namespace

ParamPoly::ParamPoly(const Rational& c) {
  if (!c.is_zero()) terms_.push_back(Term{Exponent{}, c});
}

ParamPoly ParamPoly::variable(const VarList& vars, std::size_t index) {
  if (!vars || index >= vars->size()) throw std::invalid_argument("parameter index out of range");
  Exponent e{};
  e[index] = 1;
  return monomial(vars, e, Rational(1));
}

ParamPoly ParamPoly::variable(const VarList& vars, std::string_view name) {
  if (vars) {
    for (std::size_t i = 0; i < vars->size(); ++i) {
      if ((*vars)[i] == name) return variable(vars, i);
    }
  }
  throw std::invalid_argument("unknown parameter '" + std::string(name) + "'");
}

ParamPoly ParamPoly::monomial(const VarList& vars, const Exponent& exp, const Rational& c) {
  ParamPoly p;
  p.vars_ = vars;
  if (!c.is_zero()) p.terms_.push_back(Term{exp, c});
  return p;
}

ParamPoly ParamPoly::with_vars(const VarList& vars) const {
  ParamPoly p = *this;
  p.adopt_vars(vars);
  return p;
}

void ParamPoly::adopt_vars(const VarList& other) {
  if (!other) return;
  if (!vars_) {
    vars_ = other;
    return;
  }
  if (!same_vars(vars_, other)) throw std::invalid_argument("parameter list mismatch");
}

bool ParamPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].exp == Exponent{});
}

Rational ParamPoly::constant_value() const {
  if (!is_constant()) throw std::invalid_argument("polynomial is not constant: " + to_string());
  return terms_.empty() ? Rational(0) : terms_[0].coeff;
}

Rational ParamPoly::constant_term() const {
  if (!terms_.empty() && terms_[0].exp == Exponent{}) return terms_[0].coeff;
  return Rational(0);
}

int ParamPoly::degree(std::size_t var) const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& t : terms_) d = std::max<int>(d, t.exp[var]);
  return d;
}

int ParamPoly::total_degree() const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& t : terms_) {
    int s = 0;
    for (auto e : t.exp) s += e;
    d = std::max(d, s);
  }
  return d;
}

int ParamPoly::sole_variable() const {
  int found = -1;
  for (const auto& t : terms_) {
    for (std::size_t v = 0; v < kMaxVars; ++v) {
      if (t.exp[v] == 0) continue;
      if (found >= 0 && found != int(v)) throw std::invalid_argument("polynomial is not univariate: " + to_string());
      found = int(v);
    }
  }
  return found;
}

bool ParamPoly::is_univariate() const {
  try {
    (void)sole_variable();
    return true;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

const ParamPoly::Term& ParamPoly::leading_term() const {
  if (terms_.empty()) throw std::domain_error("leading term of zero polynomial");
  return terms_.back();
}

void ParamPoly::normalize_sorted() {
  std::erase_if(terms_, [](const Term& t) { return t.coeff.is_zero(); });
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& o) {
  adopt_vars(o.vars_);
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) {
    terms_ = o.terms_;
    return *this;
  }
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto i = terms_.begin();
  auto j = o.terms_.begin();
  while (i != terms_.end() || j != o.terms_.end()) {
    if (j == o.terms_.end() || (i != terms_.end() && i->exp < j->exp)) {
      out.push_back(std::move(*i++));
    } else if (i == terms_.end() || j->exp < i->exp) {
      out.push_back(*j++);
    } else {
      Rational c = i->coeff + j->coeff;
      if (!c.is_zero()) out.push_back(Term{i->exp, std::move(c)});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
  return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& o) { return *this += -o; }

ParamPoly operator-(ParamPoly a) {
  for (auto& t : a.terms_) t.coeff = -t.coeff;
  return a;
}

ParamPoly& ParamPoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= c;
  return *this;
}

ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
  ParamPoly r;
  r.vars_ = a.vars_;
  r.adopt_vars(b.vars_);
  if (a.terms_.empty() || b.terms_.empty()) return r;
  if (a.is_constant()) {
    r.terms_ = b.terms_;
    r *= a.terms_[0].coeff;
    return r;
  }
  if (b.is_constant()) {
    r.terms_ = a.terms_;
    r *= b.terms_[0].coeff;
    return r;
  }
  std::map<Exponent, Rational> acc;
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) {
      auto [it, inserted] = acc.try_emplace(exp_add(x.exp, y.exp), x.coeff * y.coeff);
      if (!inserted) it->second += x.coeff * y.coeff;
    }
  }
  r.terms_.reserve(acc.size());
  for (auto& [e, c] : acc) {
    if (!c.is_zero()) r.terms_.push_back(ParamPoly::Term{e, c});
  }
  return r;
}

ParamPoly& ParamPoly::operator*=(const ParamPoly& o) {
  *this = *this * o;
  return *this;
}

bool operator==(const ParamPoly& a, const ParamPoly& b) {
  if (a.terms_ != b.terms_) return false;
  if (a.terms_.empty() || a.is_constant()) return true;
  return same_vars(a.vars_, b.vars_);
}

ParamPoly ParamPoly::derivative(std::size_t var) const {
  ParamPoly r;
  r.vars_ = vars_;
  for (const auto& t : terms_) {
    if (t.exp[var] == 0) continue;
    Term d = t;
    d.coeff *= Rational(long(t.exp[var]));
    d.exp[var] -= 1;
    r.terms_.push_back(std::move(d));
  }
  std::sort(r.terms_.begin(), r.terms_.end(), [](const Term& x, const Term& y) { return x.exp < y.exp; });
  return r;
}

ParamPoly ParamPoly::pow(unsigned e) const {
  ParamPoly r = ParamPoly(1).with_vars(vars_);
  ParamPoly b = *this;
  while (e > 0) {
    if (e & 1u) r *= b;
    b *= b;
    e >>= 1u;
  }
  return r;
}

ParamPoly ParamPoly::substitute(std::size_t var, const ParamPoly& value) const {
  ParamPoly r;
  r.vars_ = vars_;
  r.adopt_vars(value.vars_);
  std::map<int, ParamPoly> powers;
  for (const auto& t : terms_) {
    Term rest = t;
    int e = rest.exp[var];
    rest.exp[var] = 0;
    ParamPoly piece = monomial(vars_, rest.exp, rest.coeff);
    if (e > 0) {
      auto it = powers.find(e);
      if (it == powers.end()) it = powers.emplace(e, value.pow(unsigned(e))).first;
      piece *= it->second;
    }
    r += piece;
  }
  return r;
}

Rational ParamPoly::content() const {
  if (terms_.empty()) return Rational(1);
  mpz_class g = 0;
  mpz_class l = 1;
  for (const auto& t : terms_) {
    g = gcd(g, t.coeff.num());
    l = lcm(l, t.coeff.den());
  }
  Rational c(g, l);
  if (leading_coeff().sign() < 0) c = -c;
  return c;
}

ParamPoly ParamPoly::primitive_part() const {
  if (terms_.empty()) return *this;
  ParamPoly r = *this;
  r *= content().inverse();
  return r;
}

ParamPoly ParamPoly::monic() const {
  if (terms_.empty()) return *this;
  ParamPoly r = *this;
  r *= leading_coeff().inverse();
  return r;
}

std::string ParamPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& t = *it;
    Rational c = t.coeff;
    bool neg = c.sign() < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t v = 0; v < kMaxVars; ++v) {
      if (t.exp[v] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += vars_ ? (*vars_)[v] : ("p" + std::to_string(v));
      if (t.exp[v] > 1) mono += "^" + std::to_string(t.exp[v]);
    }
    if (mono.empty()) {
      out += c.to_string();
    } else if (c.is_one()) {
      out += mono;
    } else {
      out += c.to_string() + "*" + mono;
    }
  }
  return out;
}

std::size_t ParamPoly::hash() const {
  std::size_t h = terms_.size();
  for (const auto& t : terms_) {
    std::size_t e = 0;
    for (auto x : t.exp) e = e * 131 + x;
    h ^= (t.coeff.hash() + e * 0x9e3779b97f4a7c15ULL) + (h << 6) + (h >> 2);
  }
  return h;
}

bool try_divide(const ParamPoly& a, const ParamPoly& b, ParamPoly& q) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  q = ParamPoly(0).with_vars(a.vars());
  if (b.is_constant()) {
    q = a;
    q *= b.constant_value().inverse();
    return true;
  }
  ParamPoly r = a;
  const auto& lb = b.leading_term();
  while (!r.is_zero()) {
    const auto& lr = r.leading_term();
    if (!divides(lb.exp, lr.exp)) return false;
    ParamPoly t = ParamPoly::monomial(b.vars(), exp_sub(lr.exp, lb.exp), lr.coeff / lb.coeff);
    q += t;
    r -= t * b;
  }
  return true;
}

ParamPoly divide_exact(const ParamPoly& a, const ParamPoly& b) {
  ParamPoly q;
  if (!try_divide(a, b, q)) throw std::domain_error("inexact polynomial division: (" + a.to_string() + ") / (" + b.to_string() + ")");
  return q;
}

namespace {

int main_variable(const ParamPoly& a, const ParamPoly& b) {
  int v = -1;
  for (const auto* p : {&a, &b}) {
    for (const auto& t : p->terms()) {
      for (int i = int(ParamPoly::kMaxVars) - 1; i > v; --i) {
        if (t.exp[i] > 0) {
          v = i;
          break;
        }
      }
    }
  }
  return v;
}

// Coefficients of p as a polynomial in variable v.
std::vector<ParamPoly> coeffs_in(const ParamPoly& p, int v) {
  std::vector<ParamPoly> cs(std::max(0, p.degree(v)) + 1, ParamPoly(0).with_vars(p.vars()));
  for (const auto& t : p.terms()) {
    auto e = t.exp;
    int d = e[v];
    e[v] = 0;
    cs[d] += ParamPoly::monomial(p.vars(), e, t.coeff);
  }
  return cs;
}

ParamPoly content_in(const ParamPoly& p, int v) {
  ParamPoly g(0);
  for (const auto& c : coeffs_in(p, v)) {
    g = gcd(g, c);
    if (g.is_constant() && !g.is_zero()) return ParamPoly(1).with_vars(p.vars());
  }
  return g;
}

ParamPoly lead_in(const ParamPoly& p, int v) { return coeffs_in(p, v).back(); }

ParamPoly var_power(const VarList& vars, int v, int e) {
  ParamPoly::Exponent x{};
  x[v] = static_cast<std::uint8_t>(e);
  return ParamPoly::monomial(vars, x, Rational(1));
}

ParamPoly pseudo_remainder(ParamPoly a, const ParamPoly& b, int v) {
  const int db = b.degree(v);
  const ParamPoly lb = lead_in(b, v);
  while (!a.is_zero() && a.degree(v) >= db) {
    const int da = a.degree(v);
    ParamPoly la = lead_in(a, v);
    a = lb * a - la * var_power(b.vars(), v, da - db) * b;
  }
  return a;
}

ParamPoly primitive_in(const ParamPoly& p, int v) {
  if (p.is_zero()) return p;
  return divide_exact(p, content_in(p, v));
}

}  // namespace

ParamPoly gcd(const ParamPoly& a, const ParamPoly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  VarList vars = a.vars() ? a.vars() : b.vars();
  const int v = main_variable(a, b);
  if (v < 0) return ParamPoly(1).with_vars(vars);
  if (a.degree(v) == 0) return gcd(a, content_in(b, v)).with_vars(vars);
  if (b.degree(v) == 0) return gcd(content_in(a, v), b).with_vars(vars);

  ParamPoly ca = content_in(a, v);
  ParamPoly cb = content_in(b, v);
  ParamPoly c = gcd(ca, cb);
  ParamPoly p = divide_exact(a, ca);
  ParamPoly q = divide_exact(b, cb);
  if (p.degree(v) < q.degree(v)) std::swap(p, q);
  while (true) {
    ParamPoly r = pseudo_remainder(p, q, v);
    if (r.is_zero()) break;
    if (r.degree(v) == 0) {
      q = ParamPoly(1).with_vars(vars);
      break;
    }
    p = std::move(q);
    q = primitive_in(r, v);
  }
  return (c * primitive_in(q, v)).monic().with_vars(vars);
}

}  // namespace superdensity

#include "superdensity/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace superdensity {

namespace {

bool is_int_literal(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

mpz_class parse_int(std::string_view s) {
  if (!is_int_literal(s)) throw std::invalid_argument("malformed integer literal: '" + std::string(s) + "'");
  std::string t(s);
  if (t[0] == '+') t.erase(0, 1);
  return mpz_class(t, 10);
}

}  // namespace

Rational::Rational(long num, long den) : v_(num, den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  v_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  mpz_class n = parse_int(text.substr(0, slash));
  mpz_class d = parse_int(text.substr(slash + 1));
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return Rational(n, d);
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  return Rational(mpq_class(1 / v_));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  v_ /= o.v_;
  return *this;
}

std::string Rational::to_string() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::size_t Rational::hash() const {
  std::size_t h = std::hash<long>{}(mpz_get_si(v_.get_num_mpz_t()));
  h ^= std::hash<long>{}(mpz_get_si(v_.get_den_mpz_t())) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  h ^= mpz_size(v_.get_num_mpz_t()) * 31;
  return h;
}

Rational Rational::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  Rational r(1);
  Rational b = *this;
  while (e > 0) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

mpz_class gcd(const mpz_class& a, const mpz_class& b) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

mpz_class lcm(const mpz_class& a, const mpz_class& b) {
  mpz_class l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

}  // namespace superdensity

#pragma once

#include "superdensity/param_poly.hpp"

#include <string>

namespace superdensity {

/// Reduced quotient of two ParamPolys. The denominator is primitive with a
/// positive leading coefficient.
class RationalFunction {
public:
  RationalFunction() : den_(1) {}
  RationalFunction(const ParamPoly& p) : num_(p), den_(ParamPoly(1).with_vars(p.vars())) {}  // NOLINT
  RationalFunction(const Rational& c) : num_(c), den_(1) {}  // NOLINT
  RationalFunction(int c) : num_(c), den_(1) {}  // NOLINT
  /// Throws std::domain_error when `den` is zero.
  RationalFunction(const ParamPoly& num, const ParamPoly& den);

  const ParamPoly& num() const { return num_; }
  const ParamPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }

  RationalFunction inverse() const;

  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o) { return *this *= o.inverse(); }

  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  friend RationalFunction operator-(RationalFunction a) {
    a.num_ = -a.num_;
    return a;
  }
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  template <class C>
  C evaluate(std::span<const C> values) const {
    return num_.evaluate(values) / den_.evaluate(values);
  }

  std::string to_string() const;

private:
  void normalize();

  ParamPoly num_;
  ParamPoly den_;
};

inline bool is_zero(const RationalFunction& r) { return r.is_zero(); }

}  // namespace superdensity

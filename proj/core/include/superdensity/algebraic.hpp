#pragma once

#include "superdensity/rational.hpp"

#include <memory>
#include <string>

namespace superdensity {

/// Q[t]/(t^2 + c1 t + c0) with the polynomial irreducible over Q. The
/// generator t is bound to the real root (-c1 + sqrt(c1^2 - 4 c0)) / 2.
struct QuadraticField {
  Rational c0;
  Rational c1;

  Rational discriminant() const { return c1 * c1 - Rational(4) * c0; }
  friend bool operator==(const QuadraticField&, const QuadraticField&) = default;
};

/// Element a + b t of a quadratic field, or a plain rational when no field is
/// attached. Rationals mix freely with any field; two different fields do
/// not mix.
class AlgebraicScalar {
public:
  AlgebraicScalar() = default;
  AlgebraicScalar(const Rational& a) : a_(a) {}  // NOLINT
  AlgebraicScalar(int a) : a_(a) {}  // NOLINT
  AlgebraicScalar(std::shared_ptr<const QuadraticField> field, Rational a, Rational b);

  /// The generator t of `field`.
  static AlgebraicScalar generator(std::shared_ptr<const QuadraticField> field);

  const std::shared_ptr<const QuadraticField>& field() const { return field_; }
  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool is_rational() const { return b_.is_zero(); }
  /// Sign as a real number.
  int sign() const;
  AlgebraicScalar conjugate() const;
  /// Throws std::domain_error on zero.
  AlgebraicScalar inverse() const;

  AlgebraicScalar& operator+=(const AlgebraicScalar& o);
  AlgebraicScalar& operator-=(const AlgebraicScalar& o);
  AlgebraicScalar& operator*=(const AlgebraicScalar& o);
  AlgebraicScalar& operator/=(const AlgebraicScalar& o) { return *this *= o.inverse(); }

  friend AlgebraicScalar operator+(AlgebraicScalar x, const AlgebraicScalar& y) { return x += y; }
  friend AlgebraicScalar operator-(AlgebraicScalar x, const AlgebraicScalar& y) { return x -= y; }
  friend AlgebraicScalar operator*(AlgebraicScalar x, const AlgebraicScalar& y) { return x *= y; }
  friend AlgebraicScalar operator/(AlgebraicScalar x, const AlgebraicScalar& y) { return x /= y; }
  friend AlgebraicScalar operator-(const AlgebraicScalar& x);
  friend bool operator==(const AlgebraicScalar& x, const AlgebraicScalar& y);

  /// "a + b*t" style text with t standing for the field generator.
  std::string to_string() const;

private:
  void join(const AlgebraicScalar& o);

  std::shared_ptr<const QuadraticField> field_;
  Rational a_;
  Rational b_;
};

inline bool is_zero(const AlgebraicScalar& x) { return x.is_zero(); }

}  // namespace superdensity

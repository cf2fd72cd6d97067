#include "superdensity/algebraic.hpp"

#include <stdexcept>

namespace superdensity {

AlgebraicScalar::AlgebraicScalar(std::shared_ptr<const QuadraticField> field, Rational a, Rational b)
    : field_(std::move(field)), a_(std::move(a)), b_(std::move(b)) {
  if (!field_ && !b_.is_zero()) throw std::invalid_argument("irrational part without a field");
}

AlgebraicScalar AlgebraicScalar::generator(std::shared_ptr<const QuadraticField> field) {
  return AlgebraicScalar(std::move(field), Rational(0), Rational(1));
}

void AlgebraicScalar::join(const AlgebraicScalar& o) {
  if (!o.field_) return;
  if (!field_) {
    field_ = o.field_;
    return;
  }
  if (field_ != o.field_ && !(*field_ == *o.field_)) {
    throw std::invalid_argument("mixed quadratic extensions");
  }
}

int AlgebraicScalar::sign() const {
  if (b_.is_zero()) return a_.sign();
  const Rational d = field_->discriminant();
  if (d.sign() < 0) throw std::domain_error("sign of a non-real algebraic number");
  // value = u + v*sqrt(d)
  Rational u = a_ - b_ * field_->c1 / Rational(2);
  Rational v = b_ / Rational(2);
  if (u.is_zero()) return v.sign();
  if (u.sign() == v.sign()) return u.sign();
  return (u * u > v * v * d) ? u.sign() : v.sign();
}

AlgebraicScalar AlgebraicScalar::conjugate() const {
  if (b_.is_zero()) return *this;
  // t -> -c1 - t
  return AlgebraicScalar(field_, a_ - b_ * field_->c1, -b_);
}

AlgebraicScalar AlgebraicScalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  if (b_.is_zero()) return AlgebraicScalar(field_, a_.inverse(), Rational(0));
  // x * conj(x) is the rational norm a^2 - a b c1 + b^2 c0
  Rational norm = a_ * a_ - a_ * b_ * field_->c1 + b_ * b_ * field_->c0;
  AlgebraicScalar c = conjugate();
  c.a_ /= norm;
  c.b_ /= norm;
  return c;
}

AlgebraicScalar& AlgebraicScalar::operator+=(const AlgebraicScalar& o) {
  join(o);
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

AlgebraicScalar& AlgebraicScalar::operator-=(const AlgebraicScalar& o) {
  join(o);
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

AlgebraicScalar& AlgebraicScalar::operator*=(const AlgebraicScalar& o) {
  join(o);
  if (b_.is_zero() || o.b_.is_zero()) {
    Rational na = a_ * o.a_;
    Rational nb = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(na);
    b_ = std::move(nb);
    return *this;
  }
  // t^2 = -c1 t - c0
  Rational bd = b_ * o.b_;
  Rational na = a_ * o.a_ - bd * field_->c0;
  Rational nb = a_ * o.b_ + b_ * o.a_ - bd * field_->c1;
  a_ = std::move(na);
  b_ = std::move(nb);
  return *this;
}

AlgebraicScalar operator-(const AlgebraicScalar& x) {
  AlgebraicScalar r = x;
  r.a_ = -r.a_;
  r.b_ = -r.b_;
  return r;
}

bool operator==(const AlgebraicScalar& x, const AlgebraicScalar& y) {
  if (x.a_ != y.a_ || x.b_ != y.b_) return false;
  if (x.b_.is_zero()) return true;
  return x.field_ == y.field_ || *x.field_ == *y.field_;
}

std::string AlgebraicScalar::to_string() const {
  if (b_.is_zero()) return a_.to_string();
  std::string bt = b_.is_one() ? "t" : (b_ == Rational(-1) ? "-t" : b_.to_string() + "*t");
  if (a_.is_zero()) return bt;
  if (b_.sign() < 0) {
    std::string nb = (-b_).is_one() ? "t" : (-b_).to_string() + "*t";
    return a_.to_string() + " - " + nb;
  }
  return a_.to_string() + " + " + bt;
}

}  // namespace superdensity

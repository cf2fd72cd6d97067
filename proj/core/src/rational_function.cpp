#include "superdensity/rational_function.hpp"

#include <stdexcept>

namespace superdensity {

RationalFunction::RationalFunction(const ParamPoly& num, const ParamPoly& den) : num_(num), den_(den) {
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  normalize();
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = ParamPoly(1).with_vars(den_.vars());
    return;
  }
  if (!den_.is_constant()) {
    ParamPoly g = gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = divide_exact(num_, g);
      den_ = divide_exact(den_, g);
    }
  }
  Rational c = den_.content();
  if (!c.is_one()) {
    num_ *= c.inverse();
    den_ *= c.inverse();
  }
}

RationalFunction RationalFunction::inverse() const {
  if (num_.is_zero()) throw std::domain_error("division by zero");
  return RationalFunction(den_, num_);
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  if (o.num_.is_zero()) return *this;
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  }
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  normalize();
  return *this;
}

std::string RationalFunction::to_string() const {
  if (den_.is_constant()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace superdensity

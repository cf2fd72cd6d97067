#pragma once

#include "superdensity/rational.hpp"

#include <array>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace superdensity {

/// Shared, immutable list of parameter names. Two polynomials may be combined
/// only when their lists agree (a polynomial without a list is a pure constant
/// and combines with anything).
using VarList = std::shared_ptr<const std::vector<std::string>>;

VarList make_vars(std::initializer_list<std::string> names);
VarList make_vars(std::vector<std::string> names);
bool same_vars(const VarList& a, const VarList& b);

/// Multivariate polynomial over Q in a fixed, ordered list of named
/// parameters (at most four). Terms are kept sorted by exponent vector in
/// lexicographic order with no zero coefficients.
class ParamPoly {
public:
  static constexpr std::size_t kMaxVars = 4;
  using Exponent = std::array<std::uint8_t, kMaxVars>;
  struct Term {
    Exponent exp{};
    Rational coeff;
    friend bool operator==(const Term&, const Term&) = default;
  };

  ParamPoly() = default;
  ParamPoly(const Rational& c);  // NOLINT: constants promote implicitly
  ParamPoly(int c) : ParamPoly(Rational(c)) {}  // NOLINT
  ParamPoly(long c) : ParamPoly(Rational(c)) {}  // NOLINT

  static ParamPoly variable(const VarList& vars, std::size_t index);
  static ParamPoly variable(const VarList& vars, std::string_view name);
  static ParamPoly monomial(const VarList& vars, const Exponent& exp, const Rational& c);

  const VarList& vars() const { return vars_; }
  std::size_t arity() const { return vars_ ? vars_->size() : 0; }
  const std::vector<Term>& terms() const { return terms_; }
  /// Returns a copy carrying `vars` (which must be compatible).
  ParamPoly with_vars(const VarList& vars) const;

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Value of a constant polynomial; throws std::invalid_argument otherwise.
  Rational constant_value() const;
  Rational constant_term() const;
  int degree(std::size_t var) const;
  int total_degree() const;
  /// Index of the only variable that occurs, or -1 for constants. Throws if
  /// more than one variable occurs.
  int sole_variable() const;
  bool is_univariate() const;

  const Term& leading_term() const;  // lexicographically largest
  Rational leading_coeff() const { return leading_term().coeff; }

  ParamPoly& operator+=(const ParamPoly& o);
  ParamPoly& operator-=(const ParamPoly& o);
  ParamPoly& operator*=(const ParamPoly& o);
  ParamPoly& operator*=(const Rational& c);

  friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { return a += b; }
  friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) { return a -= b; }
  friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b);
  friend ParamPoly operator-(ParamPoly a);
  friend bool operator==(const ParamPoly& a, const ParamPoly& b);

  ParamPoly derivative(std::size_t var) const;
  /// Substitutes `value` for variable `var`; the result keeps the variable list.
  ParamPoly substitute(std::size_t var, const ParamPoly& value) const;
  ParamPoly pow(unsigned e) const;

  /// Evaluates with one value per variable in any ring that accepts
  /// Rational constants.
  template <class C>
  C evaluate(std::span<const C> values) const;

  /// Positive rational c such that this / c has coprime integer coefficients
  /// and a positive leading coefficient (sign folded into c).
  Rational content() const;
  ParamPoly primitive_part() const;
  ParamPoly monic() const;

  std::string to_string() const;
  std::size_t hash() const;

private:
  void adopt_vars(const VarList& other);
  void normalize_sorted();

  VarList vars_;
  std::vector<Term> terms_;
};

inline bool is_zero(const ParamPoly& p) { return p.is_zero(); }

/// Exact division; throws std::domain_error when `b` does not divide `a`.
ParamPoly divide_exact(const ParamPoly& a, const ParamPoly& b);
/// True and sets q when b | a exactly.
bool try_divide(const ParamPoly& a, const ParamPoly& b, ParamPoly& q);

/// Greatest common divisor. Univariate inputs give the monic gcd; for
/// multivariate inputs the result is made monic in lexicographic order.
/// gcd(a, 0) = monic(a); gcd(0, 0) = 0.
ParamPoly gcd(const ParamPoly& a, const ParamPoly& b);

template <class C>
C ParamPoly::evaluate(std::span<const C> values) const {
  C acc{};
  for (const auto& t : terms_) {
    C m{t.coeff};
    for (std::size_t v = 0; v < kMaxVars; ++v) {
      for (int e = 0; e < t.exp[v]; ++e) m = m * values[v];
    }
    acc = acc + m;
  }
  return acc;
}

}  // namespace superdensity

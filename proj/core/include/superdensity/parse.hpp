#pragma once

#include "superdensity/densities.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace superdensity {

class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& message() const { return message_; }

private:
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

/// Grammar: sums and products of rational literals (p or p/q), x, t1..tn,
/// the weight names l (or lambda), tau, mu, and parentheses; `^` takes a
/// non-negative integer exponent and is rejected on theta symbols.
SuperPoly parse_superpoly(std::string_view text, int n);

/// Same grammar without x and theta symbols.
Scalar parse_scalar(std::string_view text);

/// `poly @ weight [pi]`.
Density parse_density(std::string_view text, int n);

}  // namespace superdensity

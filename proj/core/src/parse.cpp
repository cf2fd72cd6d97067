#include "superdensity/parse.hpp"

#include <algorithm>
#include <cctype>

namespace superdensity {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column),
      message_(message) {}

namespace {

class Parser {
public:
  Parser(std::string_view text, int n, bool allow_space) : text_(text), n_(n), allow_space_(allow_space) {}

  SuperPoly parse_all() {
    SuperPoly v = expr();
    skip();
    if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return v;
  }

private:
  [[noreturn]] void fail(const std::string& msg) const { fail_at(pos_, msg); }

  [[noreturn]] void fail_at(std::size_t at, const std::string& msg) const {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < at && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(line, col, msg);
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  SuperPoly expr() {
    SuperPoly v = term();
    while (true) {
      if (peek('+')) {
        ++pos_;
        v += term();
      } else if (peek('-')) {
        ++pos_;
        v -= term();
      } else {
        return v;
      }
    }
  }

  SuperPoly term() {
    SuperPoly v = unary();
    while (true) {
      if (peek('*')) {
        ++pos_;
        v = v * unary();
      } else if (peek('/')) {
        std::size_t at = ++pos_;
        SuperPoly d = unary();
        if (d.is_zero() || d.terms().size() != 1 || d.terms().begin()->first != Monomial{} ||
            !d.terms().begin()->second.is_constant()) {
          fail_at(at, "division only by nonzero rational constants");
        }
        v *= Scalar(d.terms().begin()->second.constant_value().inverse());
      } else {
        return v;
      }
    }
  }

  SuperPoly unary() {
    if (peek('-')) {
      ++pos_;
      return -unary();
    }
    if (peek('+')) {
      ++pos_;
      return unary();
    }
    return power();
  }

  SuperPoly power() {
    bool is_theta = false;
    SuperPoly base = atom(is_theta);
    if (peek('^')) {
      if (is_theta) fail("theta powers are not allowed (theta_i^2 = 0)");
      ++pos_;
      skip();
      std::size_t s = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (s == pos_) fail("expected a non-negative integer exponent");
      unsigned long e = std::stoul(std::string(text_.substr(s, pos_ - s)));
      if (e > 64) fail_at(s, "exponent too large");
      SuperPoly r(n_, Scalar(1));
      for (unsigned long i = 0; i < e; ++i) r = r * base;
      return r;
    }
    return base;
  }

  SuperPoly atom(bool& is_theta) {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      SuperPoly v = expr();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t s = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return SuperPoly(n_, Scalar(Rational(mpz_class(std::string(text_.substr(s, pos_ - s))))));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t s = pos_;
      while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      std::string id(text_.substr(s, pos_ - s));
      if (id == "l" || id == "lambda") return SuperPoly(n_, lambda_param());
      if (id == "tau") return SuperPoly(n_, tau_param());
      if (id == "mu") return SuperPoly(n_, mu_param());
      if (id == "x") {
        if (!allow_space_) fail_at(s, "'x' is not allowed in a scalar");
        return SuperPoly::x(n_);
      }
      if (id.size() >= 2 && id[0] == 't' && std::all_of(id.begin() + 1, id.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); })) {
        if (!allow_space_) fail_at(s, "theta symbols are not allowed in a scalar");
        int i = std::stoi(id.substr(1));
        if (i < 1 || i > n_) fail_at(s, "theta index " + std::to_string(i) + " out of range for n = " + std::to_string(n_));
        is_theta = true;
        return SuperPoly::theta(n_, i);
      }
      fail_at(s, "unknown symbol '" + id + "'");
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  int n_;
  bool allow_space_;
  std::size_t pos_ = 0;
};

}  // namespace

SuperPoly parse_superpoly(std::string_view text, int n) { return Parser(text, n, true).parse_all(); }

Scalar parse_scalar(std::string_view text) {
  SuperPoly p = Parser(text, 0, false).parse_all();
  return p.coeff(0, 0);
}

Density parse_density(std::string_view text, int n) {
  auto at = text.find('@');
  if (at == std::string_view::npos) throw ParseError(1, text.size() + 1, "expected '@ weight'");
  std::string_view rest = text.substr(at + 1);
  bool flag = false;
  std::size_t end = rest.find_last_not_of(" \t\n");
  std::string_view trimmed = end == std::string_view::npos ? rest : rest.substr(0, end + 1);
  if (trimmed.size() >= 2 && trimmed.substr(trimmed.size() - 2) == "pi" &&
      (trimmed.size() == 2 || std::isspace(static_cast<unsigned char>(trimmed[trimmed.size() - 3])))) {
    flag = true;
    trimmed = trimmed.substr(0, trimmed.size() - 2);
  }
  SuperPoly payload = parse_superpoly(text.substr(0, at), n);
  Scalar w;
  try {
    w = parse_scalar(trimmed);
  } catch (const ParseError& e) {
    throw ParseError(e.line(), e.column() + at + 1, e.message());
  }
  return Density{payload, w, flag};
}

}  // namespace superdensity

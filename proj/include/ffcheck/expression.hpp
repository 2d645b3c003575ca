#pragma once

#include <cctype>
#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "ffcheck/bivariate.hpp"
#include "ffcheck/rational_function.hpp"

namespace ffcheck {

// Grammar (whitespace ignored):
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := ('+' | '-') unary | power
//   power   := primary ('^' integer)?
//   primary := integer | variable | '(' expr ')'
// so that -t^2 is -(t^2) and 1/2*t is (1/2)*t.

struct Expr {
  enum class Kind { Number, Variable, Negate, Add, Sub, Mul, Div, Pow };
  Kind kind;
  BigInt number;
  char variable = 0;
  unsigned long exponent = 0;
  std::size_t offset = 0;
  std::unique_ptr<Expr> lhs;
  std::unique_ptr<Expr> rhs;
};

namespace detail {

class ExpressionParser {
 public:
  ExpressionParser(std::string_view text, std::string_view variables) : text_(text), variables_(variables) {}

  std::unique_ptr<Expr> parse() {
    skip_space();
    if (pos_ == text_.size()) throw ParseError("empty expression", pos_);
    auto e = parse_expr();
    skip_space();
    if (pos_ != text_.size()) throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    return e;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  static std::unique_ptr<Expr> node(Expr::Kind k, std::size_t off, std::unique_ptr<Expr> l,
                                    std::unique_ptr<Expr> r = nullptr) {
    auto e = std::make_unique<Expr>();
    e->kind = k;
    e->offset = off;
    e->lhs = std::move(l);
    e->rhs = std::move(r);
    return e;
  }

  std::unique_ptr<Expr> parse_expr() {
    auto e = parse_term();
    for (;;) {
      skip_space();
      const std::size_t at = pos_;
      if (accept('+')) e = node(Expr::Kind::Add, at, std::move(e), parse_term());
      else if (accept('-')) e = node(Expr::Kind::Sub, at, std::move(e), parse_term());
      else return e;
    }
  }
  std::unique_ptr<Expr> parse_term() {
    auto e = parse_unary();
    for (;;) {
      skip_space();
      const std::size_t at = pos_;
      if (accept('*')) e = node(Expr::Kind::Mul, at, std::move(e), parse_unary());
      else if (accept('/')) e = node(Expr::Kind::Div, at, std::move(e), parse_unary());
      else return e;
    }
  }
  std::unique_ptr<Expr> parse_unary() {
    skip_space();
    const std::size_t at = pos_;
    if (accept('-')) return node(Expr::Kind::Negate, at, parse_unary());
    if (accept('+')) return parse_unary();
    return parse_power();
  }
  std::unique_ptr<Expr> parse_power() {
    auto base = parse_primary();
    skip_space();
    const std::size_t at = pos_;
    if (!accept('^')) return base;
    skip_space();
    const std::size_t digits_at = pos_;
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      throw ParseError("exponent must be a nonnegative integer literal", digits_at);
    unsigned long value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + static_cast<unsigned long>(text_[pos_] - '0');
      if (value > 100000) throw ParseError("exponent too large", digits_at);
      ++pos_;
    }
    auto e = node(Expr::Kind::Pow, at, std::move(base));
    e->exponent = value;
    return e;
  }
  std::unique_ptr<Expr> parse_primary() {
    skip_space();
    const std::size_t at = pos_;
    if (pos_ >= text_.size()) throw ParseError("unexpected end of expression", pos_);
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      auto e = parse_expr();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t end = pos_;
      while (end < text_.size() && std::isdigit(static_cast<unsigned char>(text_[end]))) ++end;
      auto e = node(Expr::Kind::Number, at, nullptr);
      e->number = BigInt(std::string(text_.substr(pos_, end - pos_)));
      pos_ = end;
      return e;
    }
    if (variables_.find(c) != std::string_view::npos) {
      const bool word_follows = pos_ + 1 < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_ + 1]));
      if (!word_follows) {
        ++pos_;
        auto e = node(Expr::Kind::Variable, at, nullptr);
        e->variable = c;
        return e;
      }
    }
    if (std::isalpha(static_cast<unsigned char>(c))) throw ParseError("unknown identifier", pos_);
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  std::string_view text_;
  std::string_view variables_;
  std::size_t pos_ = 0;
};

inline RationalFunction eval_rational(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Number: return RationalFunction(BigRational(e.number));
    case Expr::Kind::Variable: return RationalFunction::t();
    case Expr::Kind::Negate: return -eval_rational(*e.lhs);
    case Expr::Kind::Add: return eval_rational(*e.lhs) + eval_rational(*e.rhs);
    case Expr::Kind::Sub: return eval_rational(*e.lhs) - eval_rational(*e.rhs);
    case Expr::Kind::Mul: return eval_rational(*e.lhs) * eval_rational(*e.rhs);
    case Expr::Kind::Div: {
      RationalFunction d = eval_rational(*e.rhs);
      if (d.is_zero()) throw ParseError("division by zero", e.offset);
      return eval_rational(*e.lhs) / d;
    }
    case Expr::Kind::Pow: return eval_rational(*e.lhs).pow(static_cast<long>(e.exponent));
  }
  throw InternalError("unhandled expression node");
}

inline BivariatePolynomial eval_bivariate(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Number: return BivariatePolynomial(BigRational(e.number));
    case Expr::Kind::Variable:
      if (e.variable == 'X') return BivariatePolynomial::X();
      if (e.variable == 'Y') return BivariatePolynomial::Y();
      return BivariatePolynomial(RationalFunction::t());
    case Expr::Kind::Negate: return -eval_bivariate(*e.lhs);
    case Expr::Kind::Add: return eval_bivariate(*e.lhs) + eval_bivariate(*e.rhs);
    case Expr::Kind::Sub: return eval_bivariate(*e.lhs) - eval_bivariate(*e.rhs);
    case Expr::Kind::Mul: return eval_bivariate(*e.lhs) * eval_bivariate(*e.rhs);
    case Expr::Kind::Div: {
      const BivariatePolynomial d = eval_bivariate(*e.rhs);
      if (d.is_zero()) throw ParseError("division by zero", e.offset);
      if (d.total_degree() != 0) throw ParseError("division by a polynomial in X or Y", e.offset);
      return eval_bivariate(*e.lhs) * BivariatePolynomial(d.coeff(0, 0).inverse());
    }
    case Expr::Kind::Pow: return eval_bivariate(*e.lhs).pow(static_cast<unsigned>(e.exponent));
  }
  throw InternalError("unhandled expression node");
}

}  // namespace detail

/// Parses a rational function of t. Errors carry the byte offset.
inline RationalFunction parse_rational_function(std::string_view text) {
  return detail::eval_rational(*detail::ExpressionParser(text, "t").parse());
}

inline Polynomial parse_polynomial(std::string_view text) {
  RationalFunction f = parse_rational_function(text);
  if (!f.is_polynomial()) throw ParseError("expected a polynomial", 0);
  return f.num().scaled(BigRational(1) / f.den().leading());
}

/// Parses a polynomial in X, Y whose coefficients may involve t.
inline BivariatePolynomial parse_bivariate(std::string_view text) {
  return detail::eval_bivariate(*detail::ExpressionParser(text, "XYt").parse());
}

/// "num" for polynomials, "(num)/(den)" otherwise; parse_rational_function
/// reads it back to the identical reduced pair.
inline std::string to_string(const RationalFunction& f) {
  if (f.is_polynomial()) return to_string(f.num());
  auto wrap = [](const Polynomial& p) {
    const std::string s = to_string(p);
    const bool atomic = p.size() <= 1 ? s.find('/') == std::string::npos && s[0] != '-'
                                      : false;
    return atomic ? s : "(" + s + ")";
  };
  return wrap(f.num()) + "/" + wrap(f.den());
}

inline std::string to_string(const BivariatePolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  const auto& terms = p.terms();
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    const auto [i, j] = it->first;
    const RationalFunction& c = it->second;
    std::string mono;
    auto append = [&](const std::string& v, unsigned e) {
      if (e == 0) return;
      if (!mono.empty()) mono += "*";
      mono += e == 1 ? v : v + "^" + std::to_string(e);
    };
    append("X", i);
    append("Y", j);
    bool negative = false;
    std::string coef;
    if (c.is_constant()) {
      BigRational v = c.constant_value();
      negative = v < 0;
      if (negative) v = -v;
      if (!(v == 1 && !mono.empty())) coef = to_string(v);
    } else {
      coef = "(" + to_string(c) + ")";
    }
    if (first) out += negative ? "-" : "";
    else out += negative ? " - " : " + ";
    first = false;
    if (coef.empty()) out += mono;
    else if (mono.empty()) out += coef;
    else out += coef + "*" + mono;
  }
  return out;
}

}  // namespace ffcheck

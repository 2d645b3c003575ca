#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>

#include "ffcheck/polynomial.hpp"

namespace ffcheck {

/// Element of Q(t) kept as num/den with gcd(num, den) = 1 and den monic.
/// Zero is 0/1. Two equal functions always have identical representations.
class RationalFunction {
 public:
  RationalFunction() : den_(BigRational(1)) {}
  RationalFunction(const BigRational& c) : num_(c), den_(BigRational(1)) {}  // NOLINT
  RationalFunction(long c) : RationalFunction(BigRational(c)) {}             // NOLINT
  RationalFunction(const Polynomial& p) : num_(p), den_(BigRational(1)) {}   // NOLINT
  RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
    normalize();
  }

  static RationalFunction t() { return RationalFunction(Polynomial::variable()); }

  const Polynomial& num() const noexcept { return num_; }
  const Polynomial& den() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_constant() const noexcept { return num_.is_constant() && den_.is_constant(); }
  bool is_polynomial() const noexcept { return den_.is_constant(); }

  /// Value of a constant function.
  BigRational constant_value() const {
    if (!is_constant()) throw InvalidInput("rational function is not constant");
    return num_.coeff(0);
  }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

  RationalFunction operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
  }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return a + (-b);
  }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero() || b.is_zero()) return RationalFunction();
    // Cross cancellation keeps intermediate degrees small.
    const Polynomial g1 = poly_gcd(a.num_, b.den_);
    const Polynomial g2 = poly_gcd(b.num_, a.den_);
    RationalFunction r;
    r.num_ = a.num_.exact_div(g1) * b.num_.exact_div(g2);
    r.den_ = a.den_.exact_div(g2) * b.den_.exact_div(g1);
    r.make_monic();
    return r;
  }
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    return a * b.inverse();
  }
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
  RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

  RationalFunction inverse() const {
    if (is_zero()) throw InvalidInput("inverse of the zero rational function");
    RationalFunction r;
    r.num_ = den_;
    r.den_ = num_;
    r.make_monic();
    return r;
  }

  RationalFunction pow(long exponent) const {
    if (exponent < 0) return inverse().pow(-exponent);
    RationalFunction r;
    r.num_ = num_.pow(static_cast<unsigned>(exponent));
    r.den_ = den_.pow(static_cast<unsigned>(exponent));
    return r;
  }

  /// d/dt.
  RationalFunction derivative() const {
    if (is_polynomial()) return RationalFunction(num_.derivative().scaled(BigRational(1) / den_.leading()));
    return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
  }

  /// Value at a rational point; throws at a pole.
  BigRational evaluate(const BigRational& x) const {
    const BigRational d = den_(x);
    if (d == 0) throw InvalidInput("evaluation at a pole");
    return num_(x) / d;
  }
  bool has_pole_at(const BigRational& x) const { return den_(x) == 0; }

  /// f(g(t)).
  RationalFunction compose(const RationalFunction& g) const {
    if (num_.is_zero()) return *this;
    const std::size_t n = std::max(num_.degree(), den_.degree());
    // f(g) = (sum a_i g_n^i g_d^{n-i}) / (sum b_i g_n^i g_d^{n-i})
    auto homog = [&](const Polynomial& p) {
      Polynomial acc;
      for (std::size_t i = 0; i <= n; ++i) {
        const BigRational& c = p.coeff(i);
        if (c == 0) continue;
        acc += (g.num_.pow(static_cast<unsigned>(i)) * g.den_.pow(static_cast<unsigned>(n - i))).scaled(c);
      }
      return acc;
    };
    return RationalFunction(homog(num_), homog(den_));
  }

  /// Degree as a map of the projective line: max(deg num, deg den).
  std::size_t height() const {
    if (num_.is_zero()) return 0;
    return std::max(num_.degree(), den_.degree());
  }

 private:
  void normalize() {
    if (den_.is_zero()) throw InvalidInput("rational function with zero denominator");
    if (num_.is_zero()) {
      den_ = Polynomial(BigRational(1));
      return;
    }
    if (!den_.is_constant()) {
      const Polynomial g = poly_gcd(num_, den_);
      if (!g.is_constant()) {
        num_ = num_.exact_div(g);
        den_ = den_.exact_div(g);
      }
    }
    make_monic();
  }
  void make_monic() {
    if (num_.is_zero()) {
      den_ = Polynomial(BigRational(1));
      return;
    }
    const BigRational lc = den_.leading();
    if (lc != 1) {
      num_ = num_.scaled(BigRational(1) / lc);
      den_ = den_.scaled(BigRational(1) / lc);
    }
  }

  Polynomial num_;
  Polynomial den_;
};

inline std::size_t height(const RationalFunction& f) { return f.height(); }

}  // namespace ffcheck

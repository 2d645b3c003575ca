#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "ffcheck/error.hpp"

namespace ffcheck {

/// Dense univariate polynomial over a coefficient type K.
///
/// K must be constructible from int and provide the usual ring operators;
/// division-based members (divmod, exact_div, monic) additionally require K
/// to be a field. The coefficient vector is indexed by exponent and never
/// carries trailing zeros, so the zero polynomial is the empty vector.
template <class K>
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(K constant) {
    if (!(constant == K(0))) coeffs_.push_back(std::move(constant));
  }
  explicit UPoly(std::vector<K> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  UPoly(std::initializer_list<K> coeffs) : coeffs_(coeffs) { trim(); }

  static UPoly monomial(K c, std::size_t exponent) {
    if (c == K(0)) return UPoly();
    std::vector<K> v(exponent + 1, K(0));
    v[exponent] = std::move(c);
    return UPoly(std::move(v));
  }
  static UPoly variable() { return monomial(K(1), 1); }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }

  /// Degree of a nonzero polynomial. The zero polynomial has no degree; asking
  /// for it is an error rather than a -1 sentinel.
  std::size_t degree() const {
    if (coeffs_.empty()) throw InvalidInput("degree of the zero polynomial");
    return coeffs_.size() - 1;
  }
  /// Number of stored coefficients (0 for the zero polynomial).
  std::size_t size() const noexcept { return coeffs_.size(); }

  const K& leading() const {
    if (coeffs_.empty()) throw InvalidInput("leading coefficient of the zero polynomial");
    return coeffs_.back();
  }
  K coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : K(0); }
  const std::vector<K>& coefficients() const noexcept { return coeffs_; }

  /// Lowest exponent with a nonzero coefficient (order of vanishing at 0).
  std::size_t low_order() const {
    if (coeffs_.empty()) throw InvalidInput("order of the zero polynomial");
    std::size_t i = 0;
    while (coeffs_[i] == K(0)) ++i;
    return i;
  }

  friend bool operator==(const UPoly& a, const UPoly& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }

  UPoly operator-() const {
    UPoly r = *this;
    for (auto& c : r.coeffs_) c = K(-c);
    return r;
  }

  UPoly& operator+=(const UPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), K(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] = K(coeffs_[i] + o.coeffs_[i]);
    trim();
    return *this;
  }
  UPoly& operator-=(const UPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), K(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] = K(coeffs_[i] - o.coeffs_[i]);
    trim();
    return *this;
  }
  UPoly& operator*=(const UPoly& o) { return *this = *this * o; }

  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return UPoly();
    std::vector<K> out(a.coeffs_.size() + b.coeffs_.size() - 1, K(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == K(0)) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
        out[i + j] = K(out[i + j] + a.coeffs_[i] * b.coeffs_[j]);
    }
    return UPoly(std::move(out));
  }

  UPoly scaled(const K& s) const {
    if (s == K(0)) return UPoly();
    UPoly r = *this;
    for (auto& c : r.coeffs_) c = K(c * s);
    r.trim();
    return r;
  }

  /// Quotient and remainder; requires a field.
  std::pair<UPoly, UPoly> divmod(const UPoly& divisor) const {
    if (divisor.is_zero()) throw InvalidInput("polynomial division by zero");
    if (coeffs_.size() < divisor.coeffs_.size()) return {UPoly(), *this};
    std::vector<K> rem = coeffs_;
    const std::size_t dd = divisor.coeffs_.size() - 1;
    std::vector<K> quo(rem.size() - dd, K(0));
    const K inv_lc = K(K(1) / divisor.coeffs_.back());
    for (std::size_t k = rem.size(); k-- > dd;) {
      if (rem[k] == K(0)) continue;
      K q = K(rem[k] * inv_lc);
      for (std::size_t j = 0; j <= dd; ++j) rem[k - dd + j] = K(rem[k - dd + j] - q * divisor.coeffs_[j]);
      quo[k - dd] = std::move(q);
    }
    rem.resize(dd);
    return {UPoly(std::move(quo)), UPoly(std::move(rem))};
  }

  UPoly operator%(const UPoly& d) const { return divmod(d).second; }

  /// Quotient of an exact division; throws if the remainder is nonzero.
  UPoly exact_div(const UPoly& d) const {
    auto [q, r] = divmod(d);
    if (!r.is_zero()) throw InvalidInput("inexact polynomial division");
    return q;
  }

  bool divisible_by(const UPoly& d) const { return divmod(d).second.is_zero(); }

  UPoly monic() const {
    if (is_zero()) return *this;
    return scaled(K(K(1) / leading()));
  }

  UPoly derivative() const {
    if (coeffs_.size() <= 1) return UPoly();
    std::vector<K> d(coeffs_.size() - 1, K(0));
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = K(coeffs_[i] * K(static_cast<int>(i)));
    return UPoly(std::move(d));
  }

  template <class V>
  V evaluate(const V& x) const {
    V acc(0);
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = V(acc * x + V(coeffs_[i]));
    return acc;
  }
  K operator()(const K& x) const { return evaluate<K>(x); }

  /// p(q(t)).
  UPoly compose(const UPoly& inner) const {
    UPoly acc;
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * inner + UPoly(coeffs_[i]);
    return acc;
  }

  UPoly pow(unsigned n) const {
    UPoly result(K(1));
    UPoly base = *this;
    while (n > 0) {
      if (n & 1U) result = result * base;
      n >>= 1U;
      if (n > 0) base = base * base;
    }
    return result;
  }

  /// t^deg p(1/t) with respect to a formal degree >= deg p.
  UPoly reversed(std::size_t formal_degree) const {
    std::vector<K> v(formal_degree + 1, K(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) v[formal_degree - i] = coeffs_[i];
    return UPoly(std::move(v));
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == K(0)) coeffs_.pop_back();
  }

  std::vector<K> coeffs_;
};

}  // namespace ffcheck

#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ffcheck/linear_algebra.hpp"
#include "ffcheck/rational_function.hpp"

namespace ffcheck {

/// Univariate polynomial whose coefficients are rational functions of t.
using RFPoly = UPoly<RationalFunction>;

enum class Axis { X, Y };

/// Sparse polynomial in X, Y with coefficients in Q(t).
class BivariatePolynomial {
 public:
  using Exponent = std::pair<unsigned, unsigned>;  // (x-exponent, y-exponent)
  using Terms = std::map<Exponent, RationalFunction>;

  BivariatePolynomial() = default;
  BivariatePolynomial(const RationalFunction& c) { add_term(0, 0, c); }  // NOLINT
  BivariatePolynomial(const BigRational& c) { add_term(0, 0, RationalFunction(c)); }  // NOLINT
  BivariatePolynomial(long c) { add_term(0, 0, RationalFunction(c)); }  // NOLINT

  static BivariatePolynomial X() { return monomial(1, 0, RationalFunction(1)); }
  static BivariatePolynomial Y() { return monomial(0, 1, RationalFunction(1)); }
  static BivariatePolynomial monomial(unsigned i, unsigned j, const RationalFunction& c) {
    BivariatePolynomial p;
    p.add_term(i, j, c);
    return p;
  }

  /// Embeds a univariate polynomial over Q(t) in the given variable.
  static BivariatePolynomial from_univariate(const RFPoly& p, Axis axis) {
    BivariatePolynomial out;
    for (std::size_t k = 0; k < p.size(); ++k) {
      const auto e = static_cast<unsigned>(k);
      if (axis == Axis::X) out.add_term(e, 0, p.coeff(k));
      else out.add_term(0, e, p.coeff(k));
    }
    return out;
  }

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  void add_term(unsigned i, unsigned j, const RationalFunction& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace({i, j}, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }

  RationalFunction coeff(unsigned i, unsigned j) const {
    auto it = terms_.find({i, j});
    return it == terms_.end() ? RationalFunction() : it->second;
  }

  /// True when every coefficient is a constant (an element of Q[X, Y]).
  bool has_constant_coefficients() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& kv) { return kv.second.is_constant(); });
  }

  unsigned degree_x() const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e.first);
    return d;
  }
  unsigned degree_y() const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e.second);
    return d;
  }
  unsigned degree(Axis axis) const { return axis == Axis::X ? degree_x() : degree_y(); }
  unsigned total_degree() const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e.first + e.second);
    return d;
  }

  friend bool operator==(const BivariatePolynomial& a, const BivariatePolynomial& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const BivariatePolynomial& a, const BivariatePolynomial& b) { return !(a == b); }

  BivariatePolynomial operator-() const {
    BivariatePolynomial r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
  }
  friend BivariatePolynomial operator+(BivariatePolynomial a, const BivariatePolynomial& b) {
    for (const auto& [e, c] : b.terms_) a.add_term(e.first, e.second, c);
    return a;
  }
  friend BivariatePolynomial operator-(const BivariatePolynomial& a, const BivariatePolynomial& b) {
    return a + (-b);
  }
  friend BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b) {
    BivariatePolynomial r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
    return r;
  }
  BivariatePolynomial& operator+=(const BivariatePolynomial& o) { return *this = *this + o; }
  BivariatePolynomial& operator-=(const BivariatePolynomial& o) { return *this = *this - o; }
  BivariatePolynomial& operator*=(const BivariatePolynomial& o) { return *this = *this * o; }

  BivariatePolynomial pow(unsigned n) const {
    BivariatePolynomial r(1L);
    for (unsigned k = 0; k < n; ++k) r = r * *this;
    return r;
  }

  BivariatePolynomial partial_x() const {
    BivariatePolynomial r;
    for (const auto& [e, c] : terms_)
      if (e.first > 0) r.add_term(e.first - 1, e.second, c * RationalFunction(static_cast<long>(e.first)));
    return r;
  }
  BivariatePolynomial partial_y() const {
    BivariatePolynomial r;
    for (const auto& [e, c] : terms_)
      if (e.second > 0) r.add_term(e.first, e.second - 1, c * RationalFunction(static_cast<long>(e.second)));
    return r;
  }

  /// A(x, y) for rational functions x, y.
  RationalFunction evaluate(const RationalFunction& x, const RationalFunction& y) const {
    // Horner in X over the Y-polynomials.
    std::vector<RationalFunction> xpow{RationalFunction(1)};
    std::vector<RationalFunction> ypow{RationalFunction(1)};
    for (unsigned k = 0; k < degree_x(); ++k) xpow.push_back(xpow.back() * x);
    for (unsigned k = 0; k < degree_y(); ++k) ypow.push_back(ypow.back() * y);
    RationalFunction acc;
    for (const auto& [e, c] : terms_) acc += c * xpow[e.first] * ypow[e.second];
    return acc;
  }

  /// View as a polynomial in `axis` whose coefficients are polynomials in the
  /// other variable.
  UPoly<RFPoly> as_polynomial_in(Axis axis) const {
    std::vector<std::vector<RationalFunction>> rows(degree(axis) + 1);
    for (const auto& [e, c] : terms_) {
      const unsigned main = axis == Axis::X ? e.first : e.second;
      const unsigned other = axis == Axis::X ? e.second : e.first;
      auto& row = rows[main];
      if (row.size() <= other) row.resize(other + 1, RationalFunction());
      row[other] = c;
    }
    std::vector<RFPoly> coeffs;
    coeffs.reserve(rows.size());
    for (auto& row : rows) coeffs.emplace_back(std::move(row));
    return UPoly<RFPoly>(std::move(coeffs));
  }

  static BivariatePolynomial from_nested(const UPoly<RFPoly>& p, Axis axis) {
    BivariatePolynomial out;
    for (std::size_t m = 0; m < p.size(); ++m) {
      const RFPoly& inner = p.coefficients()[m];
      for (std::size_t o = 0; o < inner.size(); ++o) {
        const auto mm = static_cast<unsigned>(m);
        const auto oo = static_cast<unsigned>(o);
        if (axis == Axis::X) out.add_term(mm, oo, inner.coeff(o));
        else out.add_term(oo, mm, inner.coeff(o));
      }
    }
    return out;
  }

  /// Scales so that the lexicographically largest exponent (X first) has
  /// coefficient 1.
  BivariatePolynomial normalized() const {
    if (terms_.empty()) return *this;
    const RationalFunction lead = terms_.rbegin()->second;
    BivariatePolynomial r = *this;
    const RationalFunction inv = lead.inverse();
    for (auto& [e, c] : r.terms_) c = c * inv;
    return r;
  }

 private:
  Terms terms_;
};

/// Resultant with respect to one variable together with Bezout cofactors,
/// U*A + V*B = resultant.
struct ResultantWithCofactors {
  RFPoly resultant;  // polynomial in the remaining variable
  BivariatePolynomial u;
  BivariatePolynomial v;
};

namespace detail {

inline RFPoly rfpoly_exact_div(const RFPoly& a, const RFPoly& b) { return a.exact_div(b); }

inline RFPoly rfpoly_determinant(const Matrix<RFPoly>& m) {
  return bareiss_determinant(m, rfpoly_exact_div);
}

}  // namespace detail

/// Sylvester resultant of A and B with respect to `eliminate`, A's rows on
/// top. A degree-0 argument c (in the eliminated variable) follows the
/// convention Res(A, c) = c^deg A and Res(c, B) = c^deg B.
inline ResultantWithCofactors resultant_with_cofactors(const BivariatePolynomial& a,
                                                       const BivariatePolynomial& b, Axis eliminate) {
  if (a.is_zero() || b.is_zero()) throw InvalidInput("resultant of a zero polynomial");
  const Axis keep = eliminate == Axis::X ? Axis::Y : Axis::X;
  const auto pa = a.as_polynomial_in(eliminate);
  const auto pb = b.as_polynomial_in(eliminate);
  const std::size_t m = pa.degree();
  const std::size_t n = pb.degree();
  auto embed = [&](const RFPoly& c) { return BivariatePolynomial::from_univariate(c, keep); };
  if (m == 0 && n == 0) throw InvalidInput("resultant of two polynomials constant in the eliminated variable");
  if (n == 0) {
    const RFPoly& c = pb.coeff(0);
    return {c.pow(static_cast<unsigned>(m)), BivariatePolynomial(), embed(c.pow(static_cast<unsigned>(m - 1)))};
  }
  if (m == 0) {
    const RFPoly& c = pa.coeff(0);
    return {c.pow(static_cast<unsigned>(n)), embed(c.pow(static_cast<unsigned>(n - 1))), BivariatePolynomial()};
  }
  const Matrix<RFPoly> syl = sylvester_matrix(pa.coefficients(), m, pb.coefficients(), n);
  const std::size_t size = m + n;
  ResultantWithCofactors out{detail::rfpoly_determinant(syl), {}, {}};
  // Last row of the adjugate: adj[size-1][k] = (-1)^(k+size-1) * minor(k, size-1).
  const std::size_t last = size - 1;
  for (std::size_t k = 0; k < size; ++k) {
    Matrix<RFPoly> minor;
    minor.reserve(last);
    for (std::size_t i = 0; i < size; ++i) {
      if (i == k) continue;
      minor.emplace_back(syl[i].begin(), syl[i].begin() + static_cast<std::ptrdiff_t>(last));
    }
    RFPoly cof = detail::rfpoly_determinant(minor);
    if ((k + last) % 2 == 1) cof = -cof;
    if (cof.is_zero()) continue;
    // Row k of the Sylvester matrix is A*elim^(n-1-k) (k < n) or B*elim^(m-1-(k-n)).
    const bool from_a = k < n;
    const auto power = static_cast<unsigned>(from_a ? n - 1 - k : m - 1 - (k - n));
    BivariatePolynomial term = embed(cof);
    term = term * (eliminate == Axis::X ? BivariatePolynomial::monomial(power, 0, RationalFunction(1))
                                        : BivariatePolynomial::monomial(0, power, RationalFunction(1)));
    if (from_a) out.u += term;
    else out.v += term;
  }
  return out;
}

/// Strict resultant: both arguments must have positive degree in the
/// eliminated variable.
inline RFPoly bivariate_resultant(const BivariatePolynomial& a, const BivariatePolynomial& b, Axis eliminate) {
  if (a.is_zero() || b.is_zero() || a.degree(eliminate) == 0 || b.degree(eliminate) == 0)
    throw InvalidInput("resultant needs positive degree in the eliminated variable");
  return resultant_with_cofactors(a, b, eliminate).resultant;
}

/// Squarefree part of a polynomial with rational coefficients: the product of
/// its distinct irreducible factors, normalized.
inline BivariatePolynomial squarefree_part(const BivariatePolynomial& p) {
  if (p.is_zero()) throw InvalidInput("squarefree part of the zero polynomial");
  if (!p.has_constant_coefficients()) throw InvalidInput("squarefree part needs rational coefficients");
  // Work in Q(Y)[X], with Y playing the role of the function field variable.
  const auto nested = p.as_polynomial_in(Axis::X);
  std::vector<RationalFunction> coeffs;
  Polynomial content;
  for (const auto& c : nested.coefficients()) {
    Polynomial q;
    {
      std::vector<BigRational> v;
      for (const auto& rf : c.coefficients()) v.push_back(rf.constant_value());
      q = Polynomial(std::move(v));
    }
    if (!q.is_zero()) content = content.is_zero() ? q.monic() : poly_gcd(content, q);
    coeffs.emplace_back(q);
  }
  for (auto& c : coeffs) c = c / RationalFunction(content);
  RFPoly f(std::move(coeffs));
  RFPoly part = f;
  if (!f.is_constant()) {
    RFPoly a = f;
    RFPoly b = f.derivative();
    while (!b.is_zero()) {
      RFPoly r = a % b;
      a = std::move(b);
      b = r.monic();
    }
    part = f.exact_div(a.monic());
  }
  // Clear Y-denominators and Y-content of the X-part.
  Polynomial den(BigRational(1));
  for (const auto& c : part.coefficients()) den = poly_lcm(den, c.den());
  Polynomial ycontent;
  std::vector<Polynomial> polys;
  for (const auto& c : part.coefficients()) {
    Polynomial q = c.num() * den.exact_div(c.den());
    if (!q.is_zero()) ycontent = ycontent.is_zero() ? q.monic() : poly_gcd(ycontent, q);
    polys.push_back(std::move(q));
  }
  const Polynomial yrad = content.is_constant() ? Polynomial(BigRational(1)) : radical(content);
  BivariatePolynomial out;
  for (std::size_t i = 0; i < polys.size(); ++i) {
    if (polys[i].is_zero()) continue;
    const Polynomial q = polys[i].exact_div(ycontent) * yrad;
    for (std::size_t j = 0; j < q.size(); ++j)
      out.add_term(static_cast<unsigned>(i), static_cast<unsigned>(j), RationalFunction(q.coeff(j)));
  }
  return out.normalized();
}

}  // namespace ffcheck

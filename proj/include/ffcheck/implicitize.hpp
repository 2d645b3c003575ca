#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <vector>

#include "ffcheck/bivariate.hpp"

namespace ffcheck {

/// Implicit equation of the image of t -> (a(t), b(t)).
struct Implicitization {
  BivariatePolynomial equation;  // rational coefficients, lex-leading coefficient 1
  unsigned index = 1;            // degree of Q(t) over Q(a, b)
  bool index_determined = true;  // false if squarefreeness could not be certified
};

namespace detail {

/// Univariate polynomial in z obtained by X -> z, Y -> z^stride.
inline Polynomial kronecker(const BivariatePolynomial& p, unsigned stride) {
  std::vector<BigRational> v;
  for (const auto& [e, c] : p.terms()) {
    const std::size_t k = e.first + static_cast<std::size_t>(stride) * e.second;
    if (v.size() <= k) v.resize(k + 1);
    v[k] = c.constant_value();
  }
  return Polynomial(std::move(v));
}

inline BivariatePolynomial inverse_kronecker(const Polynomial& p, unsigned stride) {
  BivariatePolynomial out;
  for (std::size_t k = 0; k < p.size(); ++k)
    out.add_term(static_cast<unsigned>(k % stride), static_cast<unsigned>(k / stride),
                 RationalFunction(p.coeff(k)));
  return out;
}

inline Polynomial specialize_y(const BivariatePolynomial& p, const BigRational& y) {
  std::vector<BigRational> v(p.degree_x() + 1);
  for (const auto& [e, c] : p.terms()) v[e.first] += c.constant_value() * pow(y, e.second);
  return Polynomial(std::move(v));
}

inline Polynomial specialize_x(const BivariatePolynomial& p, const BigRational& x) {
  std::vector<BigRational> v(p.degree_y() + 1);
  for (const auto& [e, c] : p.terms()) v[e.second] += c.constant_value() * pow(x, e.first);
  return Polynomial(std::move(v));
}

/// Certifies that p (rational coefficients) is squarefree: a repeated factor
/// of positive X-degree survives in P(X, y0) when the X-degree is preserved,
/// and likewise with the roles swapped. Falls back to the exact bivariate
/// squarefree part when no good specialization is found.
inline std::optional<bool> certify_squarefree(const BivariatePolynomial& p) {
  auto check = [&](Axis axis) -> std::optional<bool> {
    const unsigned full = p.degree(axis);
    if (full == 0) return true;
    for (long k = 0; k < 16; ++k) {
      const BigRational point = make_rational(k % 2 == 0 ? k / 2 + 2 : -(k / 2) - 3, 1 + k % 3);
      const Polynomial s = axis == Axis::X ? specialize_y(p, point) : specialize_x(p, point);
      if (s.is_zero() || s.degree() != full) continue;
      if (is_squarefree(s)) return true;
    }
    return std::nullopt;
  };
  auto x = check(Axis::X);
  auto y = check(Axis::Y);
  if (x && y) return true;
  const BivariatePolynomial part = squarefree_part(p);
  return part.degree_x() == p.degree_x() && part.degree_y() == p.degree_y();
}

}  // namespace detail

/// Implicit equation P and field index of the map t -> (a, b), from the
/// eliminant R = Res_t(a_num - X a_den, b_num - Y b_den) = c P^index.
inline Implicitization implicitize(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_constant() && b.is_constant()) throw InvalidInput("implicitize: both functions constant");
  const std::size_t ha = a.height();
  const std::size_t hb = b.height();
  // deg_X R <= hb and deg_Y R <= ha; sample R on a grid and interpolate.
  std::vector<BigRational> xs(hb + 1), ys(ha + 1);
  for (std::size_t i = 0; i <= hb; ++i) xs[i] = BigRational(static_cast<long>(i));
  for (std::size_t j = 0; j <= ha; ++j) ys[j] = BigRational(static_cast<long>(j));
  std::vector<Polynomial> rows;  // rows[j] = R(X, ys[j])
  rows.reserve(ys.size());
  for (const auto& y0 : ys) {
    const Polynomial q = b.num() - b.den().scaled(y0);
    std::vector<BigRational> vals;
    vals.reserve(xs.size());
    for (const auto& x0 : xs) vals.push_back(formal_resultant(a.num() - a.den().scaled(x0), ha, q, hb));
    rows.push_back(interpolate(xs, vals));
  }
  BivariatePolynomial r;
  for (std::size_t i = 0; i <= hb; ++i) {
    std::vector<BigRational> vals;
    vals.reserve(ys.size());
    for (const auto& row : rows) vals.push_back(row.coeff(i));
    const Polynomial col = interpolate(ys, vals);
    for (std::size_t j = 0; j < col.size(); ++j)
      r.add_term(static_cast<unsigned>(i), static_cast<unsigned>(j), RationalFunction(col.coeff(j)));
  }
  if (r.is_zero()) throw InternalError("implicitize: vanishing eliminant");
  const unsigned dx = r.degree_x();
  const unsigned dy = r.degree_y();
  const unsigned stride = dx + 1;
  const Polynomial kr = detail::kronecker(r, stride).monic();
  const unsigned g = std::gcd(dx, dy);
  std::optional<Implicitization> found;
  for (unsigned e = g; e >= 1 && !found; --e) {
    if (g % e != 0) continue;
    auto root = poly_nth_root(kr, e);
    if (!root) continue;
    found = Implicitization{detail::inverse_kronecker(*root, stride).normalized(), e, true};
  }
  if (!found) throw InternalError("implicitize: eliminant is not a pure power");
  Implicitization& out = *found;
  if (static_cast<std::size_t>(out.index) * out.equation.degree_x() != hb ||
      static_cast<std::size_t>(out.index) * out.equation.degree_y() != ha)
    throw InternalError("implicitize: index inconsistent with the heights");
  const auto sf = detail::certify_squarefree(out.equation);
  if (!sf) out.index_determined = false;
  else if (!*sf) throw InternalError("implicitize: implicit equation not squarefree");
  return out;
}

}  // namespace ffcheck

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ffcheck/linear_algebra.hpp"
#include "ffcheck/modular_gcd.hpp"
#include "ffcheck/rational.hpp"
#include "ffcheck/upoly.hpp"

namespace ffcheck {

/// Univariate polynomial in t with rational coefficients.
using Polynomial = UPoly<BigRational>;

inline Polynomial t_var() { return Polynomial::variable(); }
inline Polynomial constant_poly(const BigRational& c) { return Polynomial(c); }

namespace detail {

inline IntPoly primitive_integer_part(const Polynomial& p) {
  BigInt den(1);
  for (const auto& c : p.coefficients()) den = lcm(den, c.get_den());
  IntPoly out;
  out.reserve(p.size());
  BigInt content(0);
  for (const auto& c : p.coefficients()) {
    BigInt v = c.get_num() * (den / c.get_den());
    content = gcd(content, v);
    out.push_back(std::move(v));
  }
  if (content != 0 && content != 1)
    for (auto& c : out) c /= content;
  if (!out.empty() && out.back() < 0)
    for (auto& c : out) c = -c;
  return out;
}

inline Polynomial from_integer(const IntPoly& p) {
  std::vector<BigRational> v;
  v.reserve(p.size());
  for (const auto& c : p) v.emplace_back(c);
  return Polynomial(std::move(v));
}

}  // namespace detail

/// Monic gcd by the Euclidean algorithm over Q. Kept as an independent route
/// for cross-checking the modular algorithm.
inline Polynomial poly_gcd_euclid(Polynomial a, Polynomial b) {
  if (a.is_zero() && b.is_zero()) throw InvalidInput("gcd of two zero polynomials");
  while (!b.is_zero()) {
    Polynomial r = a % b;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

/// Monic greatest common divisor. Small inputs use Euclid over Q; larger
/// ones use the multi-modular algorithm.
inline Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() && b.is_zero()) throw InvalidInput("gcd of two zero polynomials");
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return Polynomial(BigRational(1));
  if (a.degree() < 12 || b.degree() < 12) return poly_gcd_euclid(a, b);
  const auto fa = detail::primitive_integer_part(a);
  const auto fb = detail::primitive_integer_part(b);
  const Polynomial pa = detail::from_integer(fa);
  const Polynomial pb = detail::from_integer(fb);
  auto result = detail::modular_gcd(fa, fb, [&](const detail::IntPoly& cand) {
    const Polynomial c = detail::from_integer(cand);
    return pa.divisible_by(c) && pb.divisible_by(c);
  });
  if (!result) return poly_gcd_euclid(a, b);
  return detail::from_integer(*result).monic();
}

inline Polynomial poly_lcm(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial();
  return (a * b).exact_div(poly_gcd(a, b)).monic();
}

/// Sum over common roots (in an algebraic closure) of the smaller
/// multiplicity, via iterated gcds d1 = gcd(p,q), d2 = gcd(p/d1, q/d1), ...
inline std::size_t gcd_multiplicity(Polynomial p, Polynomial q) {
  if (p.is_zero() || q.is_zero()) throw InvalidInput("gcd_multiplicity of a zero polynomial");
  std::size_t total = 0;
  for (;;) {
    Polynomial d = poly_gcd(p, q);
    if (d.is_constant()) return total;
    total += d.degree();
    p = p.exact_div(d);
    q = q.exact_div(d);
  }
}

/// Sylvester matrix of two coefficient vectors with fixed formal degrees
/// (coefficient index = exponent). Rows of the first argument come first,
/// each row listing coefficients from the highest power downwards.
template <class R>
Matrix<R> sylvester_matrix(const std::vector<R>& a, std::size_t deg_a, const std::vector<R>& b,
                           std::size_t deg_b) {
  const std::size_t n = deg_a + deg_b;
  Matrix<R> m(n, std::vector<R>(n, R(0)));
  auto coef = [](const std::vector<R>& v, std::size_t i) { return i < v.size() ? v[i] : R(0); };
  for (std::size_t row = 0; row < deg_b; ++row)
    for (std::size_t k = 0; k <= deg_a; ++k) m[row][row + k] = coef(a, deg_a - k);
  for (std::size_t row = 0; row < deg_a; ++row)
    for (std::size_t k = 0; k <= deg_b; ++k) m[deg_b + row][row + k] = coef(b, deg_b - k);
  return m;
}

/// Resultant Res(p, q) = det Sylvester(p, q) with p's rows on top, so that
/// Res(p, q) = lc(p)^deg q * prod_{p(a)=0} q(a). Computed fraction-free by
/// Bareiss elimination on the integer-scaled Sylvester matrix.
inline BigRational subresultant(const Polynomial& p, const Polynomial& q) {
  if (p.is_zero() || q.is_zero()) throw InvalidInput("resultant of a zero polynomial");
  const std::size_t dp = p.degree();
  const std::size_t dq = q.degree();
  if (dp == 0 && dq == 0) return BigRational(1);
  auto scale_of = [](const Polynomial& f) {
    BigInt den(1);
    for (const auto& c : f.coefficients()) den = lcm(den, c.get_den());
    return den;
  };
  const BigInt sp = scale_of(p);
  const BigInt sq = scale_of(q);
  std::vector<BigInt> ip, iq;
  for (const auto& c : p.coefficients()) ip.push_back(c.get_num() * (sp / c.get_den()));
  for (const auto& c : q.coefficients()) iq.push_back(c.get_num() * (sq / c.get_den()));
  BigInt det = bareiss_determinant(sylvester_matrix(ip, dp, iq, dq),
                                   [](const BigInt& a, const BigInt& b) { return BigInt(a / b); });
  // Res(sp*p, sq*q) = sp^dq * sq^dp * Res(p, q)
  BigInt denom = 1;
  BigInt tmp;
  mpz_pow_ui(tmp.get_mpz_t(), sp.get_mpz_t(), dq);
  denom *= tmp;
  mpz_pow_ui(tmp.get_mpz_t(), sq.get_mpz_t(), dp);
  denom *= tmp;
  return make_rational(det, denom);
}

/// Resultant with fixed formal degrees fp >= deg p and fq >= deg q, i.e. the
/// determinant of the (fp+fq)-square Sylvester matrix even when a leading
/// entry vanishes. With fp = 0 this is p^fq.
inline BigRational formal_resultant(const Polynomial& p, std::size_t fp, const Polynomial& q,
                                    std::size_t fq) {
  if ((!p.is_zero() && p.degree() > fp) || (!q.is_zero() && q.degree() > fq))
    throw InvalidInput("formal degree below actual degree");
  if (fp + fq == 0) return BigRational(1);
  BigInt den(1);
  for (const auto& c : p.coefficients()) den = lcm(den, c.get_den());
  for (const auto& c : q.coefficients()) den = lcm(den, c.get_den());
  std::vector<BigInt> ip, iq;
  for (const auto& c : p.coefficients()) ip.push_back(c.get_num() * (den / c.get_den()));
  for (const auto& c : q.coefficients()) iq.push_back(c.get_num() * (den / c.get_den()));
  BigInt det = bareiss_determinant(sylvester_matrix(ip, fp, iq, fq),
                                   [](const BigInt& a, const BigInt& b) { return BigInt(a / b); });
  BigInt scale;
  mpz_pow_ui(scale.get_mpz_t(), den.get_mpz_t(), fp + fq);
  return make_rational(det, scale);
}

/// Newton interpolation through (xs[i], ys[i]) with distinct xs.
inline Polynomial interpolate(const std::vector<BigRational>& xs, const std::vector<BigRational>& ys) {
  if (xs.size() != ys.size()) throw InvalidInput("interpolation size mismatch");
  const std::size_t n = xs.size();
  std::vector<BigRational> c = ys;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = n - 1; i >= j; --i) {
      if (xs[i] == xs[i - j]) throw InvalidInput("interpolation nodes not distinct");
      c[i] = (c[i] - c[i - 1]) / (xs[i] - xs[i - j]);
    }
  Polynomial acc;
  for (std::size_t i = n; i-- > 0;)
    acc = acc * Polynomial{BigRational(-xs[i]), BigRational(1)} + Polynomial(c[i]);
  return acc;
}

/// Monic product of the distinct irreducible factors: p / gcd(p, p').
inline Polynomial radical(const Polynomial& p) {
  if (p.is_zero()) throw InvalidInput("radical of the zero polynomial");
  if (p.is_constant()) return Polynomial(BigRational(1));
  return p.exact_div(poly_gcd(p, p.derivative())).monic();
}

inline bool is_squarefree(const Polynomial& p) {
  if (p.is_zero()) return false;
  return poly_gcd(p, p.derivative()).is_constant();
}

/// Yun's algorithm: monic pairwise coprime squarefree factors with their
/// multiplicities, p = lc(p) * prod f_i^{m_i}. Constant p gives an empty list.
inline std::vector<std::pair<Polynomial, unsigned>> squarefree_decomposition(const Polynomial& p) {
  if (p.is_zero()) throw InvalidInput("squarefree decomposition of the zero polynomial");
  std::vector<std::pair<Polynomial, unsigned>> out;
  if (p.is_constant()) return out;
  const Polynomial a = p.monic();
  const Polynomial da = a.derivative();
  const Polynomial c = poly_gcd(a, da);
  Polynomial w = a.exact_div(c);
  Polynomial y = da.exact_div(c);
  unsigned i = 1;
  while (!w.is_constant()) {
    const Polynomial z = y - w.derivative();
    const Polynomial g = poly_gcd(w, z);
    if (!g.is_constant()) out.emplace_back(g, i);
    w = w.exact_div(g);
    y = z.exact_div(g);
    ++i;
  }
  return out;
}

/// Splits p into (part coprime to every root of f, part supported on roots of f),
/// with p = outside * inside and inside monic.
inline std::pair<Polynomial, Polynomial> split_by_support(const Polynomial& p, const Polynomial& f) {
  if (p.is_zero()) throw InvalidInput("split of the zero polynomial");
  Polynomial outside = p;
  Polynomial inside(BigRational(1));
  if (f.is_zero() || f.is_constant()) return {outside, inside};
  Polynomial g = poly_gcd(outside, f);
  while (!g.is_constant()) {
    outside = outside.exact_div(g);
    inside = inside * g;
    g = poly_gcd(outside, g);
  }
  return {outside, inside.monic()};
}

/// Exact e-th root: returns r with r^e == p when p is a perfect e-th power
/// of a polynomial with rational coefficients.
inline std::optional<Polynomial> poly_nth_root(const Polynomial& p, unsigned e) {
  if (e == 0) throw InvalidInput("zeroth root");
  if (e == 1 || p.is_zero()) return p;
  const std::size_t n = p.degree();
  if (n % e != 0) return std::nullopt;
  const std::size_t low = p.low_order();
  if (low % e != 0) return std::nullopt;
  // Leading coefficient root must be rational.
  BigRational lc_root;
  {
    const BigRational& lc = p.leading();
    if (e % 2 == 0 && lc < 0) return std::nullopt;
    BigInt num, den;
    const BigInt an = lc.get_num() < 0 ? BigInt(-lc.get_num()) : lc.get_num();
    if (mpz_root(num.get_mpz_t(), an.get_mpz_t(), e) == 0) return std::nullopt;
    if (mpz_root(den.get_mpz_t(), lc.get_den_mpz_t(), e) == 0) return std::nullopt;
    if (lc < 0) num = -num;
    lc_root = make_rational(num, den);
  }
  // u(z) = z^n p(1/z) / lc = 1 + u_1 z + ...; root series f = u^{1/e}.
  const std::size_t m = n / e;
  std::vector<BigRational> u(n + 1);
  for (std::size_t i = 0; i <= n; ++i) u[i] = p.coeff(n - i) / p.leading();
  const BigRational alpha = make_rational(1, static_cast<long>(e));
  std::vector<BigRational> f(m + 1);
  f[0] = 1;
  for (std::size_t k = 1; k <= m; ++k) {
    BigRational acc = 0;
    for (std::size_t j = 1; j <= k && j <= n; ++j)
      acc += ((alpha + 1) * static_cast<long>(j) - static_cast<long>(k)) * u[j] * f[k - j];
    f[k] = acc / static_cast<long>(k);
  }
  std::vector<BigRational> r(m + 1);
  for (std::size_t i = 0; i <= m; ++i) r[i] = f[m - i] * lc_root;
  Polynomial root(std::move(r));
  if (root.pow(e) != p) return std::nullopt;
  return root;
}

/// Human readable form, e.g. "t^3 - 2*t + 1/2".
inline std::string to_string(const Polynomial& p, const std::string& var = "t") {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t i = p.size(); i-- > 0;) {
    const BigRational& c = p.coefficients()[i];
    if (c == 0) continue;
    const bool negative = c < 0;
    const BigRational mag = negative ? BigRational(-c) : c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string mono;
    if (i == 1) mono = var;
    else if (i > 1) mono = var + "^" + std::to_string(i);
    if (i == 0) out += to_string(mag);
    else if (mag == 1) out += mono;
    else out += to_string(mag) + "*" + mono;
  }
  return out;
}

}  // namespace ffcheck

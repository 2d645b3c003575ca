#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ffcheck/function_field.hpp"
#include "ffcheck/implicitize.hpp"
#include "ffcheck/report.hpp"

namespace ffcheck {

namespace detail {

inline void require_same_places(const SUnit& a, const SUnit& b) {
  if (!(a.places == b.places)) throw InvalidInput("units certified against different place sets");
}

/// Sum over places outside S of the valuation of an S-integer f (all
/// nonnegative there): the zeros of f outside S.
inline std::size_t zeros_outside(const RationalFunction& f, const PlaceSet& s) {
  if (f.is_zero()) throw InvalidInput("zeros of the zero function");
  std::size_t n = split_by_support(f.num(), s.finite_part()).first.degree();
  if (!s.includes_infinity()) {
    const long v = valuation_at_infinity(f);
    if (v > 0) n += static_cast<std::size_t>(v);
  }
  return n;
}

}  // namespace detail

/// sum over v outside S of min(v(1 - a), v(1 - b)).
inline std::size_t gcd_sum(const SUnit& a, const SUnit& b) {
  detail::require_same_places(a, b);
  const RationalFunction one(1);
  const RationalFunction fa = one - a.value;
  const RationalFunction fb = one - b.value;
  if (fa.is_zero() || fb.is_zero()) throw InvalidInput("gcd sum with a unit equal to 1");
  const PlaceSet& s = a.places;
  const Polynomial pa = split_by_support(fa.num(), s.finite_part()).first;
  const Polynomial pb = split_by_support(fb.num(), s.finite_part()).first;
  std::size_t total = gcd_multiplicity(pa, pb);
  if (!s.includes_infinity()) {
    const long va = valuation_at_infinity(fa);
    const long vb = valuation_at_infinity(fb);
    const long m = std::min(va, vb);
    if (m > 0) total += static_cast<std::size_t>(m);
  }
  return total;
}

namespace detail {

struct Alternatives {
  std::optional<Implicitization> image;
  bool first_holds = false;
  bool first_determined = true;
};

inline Alternatives first_alternative(const SUnit& a, const SUnit& b, unsigned h, unsigned k) {
  Alternatives alt;
  alt.image = implicitize(a.value, b.value);
  const std::size_t index = alt.image->index;
  alt.first_determined = alt.image->index_determined;
  alt.first_holds = alt.first_determined && a.value.height() <= h * index && b.value.height() <= k * index;
  return alt;
}

inline void require_independent(const SUnit& a, const SUnit& b) {
  require_same_places(a, b);
  if (a.value.is_constant() && b.value.is_constant()) throw InvalidInput("both units constant");
  if (auto rel = multiplicative_dependence(a, b))
    throw InvalidInput("units are multiplicatively dependent: relation (" + std::to_string(rel->r) + ", " +
                       std::to_string(rel->s) + ", " + to_string(rel->mu) + ")");
}

inline Fields unit_inputs(const SUnit& a, const SUnit& b) {
  return {{"a", to_string(a.value)}, {"b", to_string(b.value)}, {"places", a.places.to_string()}};
}

inline void finish_alternatives(BoundReport& rep, const Alternatives& alt, bool second) {
  if (alt.first_holds) rep.branch = "height-index";
  else if (second) rep.branch = "inequality";
  else rep.branch = "none";
  if (!alt.first_determined) {
    rep.notes.push_back("field index undetermined; the inequality alone must hold");
    rep.context.push_back({"index_alternative", "undetermined"});
  }
  rep.set(alt.first_holds || second);
}

}  // namespace detail

/// Either H(a) <= h*index and H(b) <= k*index, or
/// gcd_sum <= (h+2k)/n H(b) + k/n H(a) + (n-1)/2 chi with n = hk+h+k.
inline BoundReport check_gcd_sum_alternatives(const SUnit& a, const SUnit& b, unsigned h, unsigned k) {
  if (h == 0 || k == 0) throw InvalidInput("h and k must be positive");
  detail::require_independent(a, b);
  const long n = static_cast<long>(h) * k + h + k;
  const long ha = static_cast<long>(a.value.height());
  const long hb = static_cast<long>(b.value.height());
  const long chi = a.places.euler_characteristic();
  const auto alt = detail::first_alternative(a, b, h, k);
  const long lhs = static_cast<long>(gcd_sum(a, b));
  const BigRational rhs = make_rational(static_cast<long>(h + 2 * k) * hb + static_cast<long>(k) * ha, n) +
                          make_rational((n - 1) * chi, 2);
  BoundReport rep;
  rep.check = "gcd-sum-alternatives";
  rep.inputs = detail::unit_inputs(a, b);
  rep.inputs.push_back({"h", std::to_string(h)});
  rep.inputs.push_back({"k", std::to_string(k)});
  rep.lhs = std::to_string(lhs);
  rep.rhs = to_string(rhs);
  rep.context = {{"H(a)", std::to_string(ha)},
                 {"H(b)", std::to_string(hb)},
                 {"chi", std::to_string(chi)},
                 {"index", std::to_string(alt.image->index)},
                 {"index_alternative", alt.first_holds ? "true" : "false"}};
  detail::finish_alternatives(rep, alt, BigRational(lhs) <= rhs);
  return rep;
}

/// Either H(a) <= h*index and H(b) <= k*index, or
/// H_S((1-a)/(1-b)) >= hk/n H(b) - k/n (H(a)+H(b)) - (n-1)/2 chi.
inline BoundReport check_quotient_height_alternatives(const SUnit& a, const SUnit& b, unsigned h, unsigned k) {
  if (h == 0 || k == 0) throw InvalidInput("h and k must be positive");
  detail::require_independent(a, b);
  const long n = static_cast<long>(h) * k + h + k;
  const long ha = static_cast<long>(a.value.height());
  const long hb = static_cast<long>(b.value.height());
  const long chi = a.places.euler_characteristic();
  const auto alt = detail::first_alternative(a, b, h, k);
  const RationalFunction one(1);
  const RationalFunction q = (one - a.value) / (one - b.value);
  const long lhs = static_cast<long>(height_outside(q, a.places));
  const BigRational rhs = make_rational(static_cast<long>(h * k) * hb - static_cast<long>(k) * (ha + hb), n) -
                          make_rational((n - 1) * chi, 2);
  BoundReport rep;
  rep.check = "quotient-height-alternatives";
  rep.inputs = detail::unit_inputs(a, b);
  rep.inputs.push_back({"h", std::to_string(h)});
  rep.inputs.push_back({"k", std::to_string(k)});
  rep.lhs = std::to_string(lhs);
  rep.rhs = to_string(rhs);
  rep.context = {{"H(a)", std::to_string(ha)},
                 {"H(b)", std::to_string(hb)},
                 {"chi", std::to_string(chi)},
                 {"index", std::to_string(alt.image->index)},
                 {"index_alternative", alt.first_holds ? "true" : "false"}};
  detail::finish_alternatives(rep, alt, BigRational(lhs) >= rhs);
  return rep;
}

/// Cube-root bound on the gcd sum: gcd_sum^3 <= 54 H(a) H(b) chi for
/// independent units; for a generating relation u1^r u2^s = mu the sum is 0
/// when mu != 1 and at most min(H(a)/|s|, H(b)/|r|) when mu = 1.
inline BoundReport check_gcd_sum_bound(const SUnit& a, const SUnit& b) {
  detail::require_same_places(a, b);
  if (a.value.is_constant() && b.value.is_constant()) throw InvalidInput("both units constant");
  const long ha = static_cast<long>(a.value.height());
  const long hb = static_cast<long>(b.value.height());
  const long chi = a.places.euler_characteristic();
  const long gs = static_cast<long>(gcd_sum(a, b));
  BoundReport rep;
  rep.check = "gcd-sum-bound";
  rep.inputs = detail::unit_inputs(a, b);
  rep.lhs = std::to_string(gs);
  rep.context = {{"H(a)", std::to_string(ha)}, {"H(b)", std::to_string(hb)}, {"chi", std::to_string(chi)}};
  const auto rel = multiplicative_dependence(a, b);
  if (!rel) {
    const BigInt cubed = BigInt(gs) * gs * gs;
    const BigInt product = BigInt(ha) * hb * chi;
    rep.branch = "independent";
    rep.rhs = "3*2^(1/3)*(" + std::to_string(ha) + "*" + std::to_string(hb) + "*" + std::to_string(chi) + ")^(1/3)";
    rep.cubed = CubedComparison{cubed, BigInt(54), product};
    if (product != 0) rep.context.push_back({"ratio_cubed", to_string(make_rational(cubed, product))});
    rep.set(cubed <= 54 * product);
    return rep;
  }
  rep.context.push_back({"r", std::to_string(rel->r)});
  rep.context.push_back({"s", std::to_string(rel->s)});
  rep.context.push_back({"mu", to_string(rel->mu)});
  if (rel->mu != 1) {
    rep.branch = "dependent-mu-not-1";
    rep.rhs = "0";
    rep.set(gs == 0);
    return rep;
  }
  rep.branch = "dependent-mu-1";
  const long r = std::labs(rel->r);
  const long s = std::labs(rel->s);
  std::optional<BigRational> bound;
  if (s != 0) bound = make_rational(ha, s);
  if (r != 0) {
    const BigRational other = make_rational(hb, r);
    bound = bound ? std::min(*bound, other) : other;
  }
  rep.rhs = to_string(*bound);
  rep.set(BigRational(gs) <= *bound);
  return rep;
}

/// sum over zeros of 1 - b of (multiplicity - 1) <= chi.
inline BoundReport multiple_zero_excess(const SUnit& b) {
  if (b.value.is_constant()) throw InvalidInput("multiple zero excess of a constant");
  const RationalFunction c = RationalFunction(1) - b.value;
  const Polynomial& num = c.num();
  long excess = static_cast<long>(num.degree()) - static_cast<long>(radical(num).degree());
  const long vinf = valuation_at_infinity(c);
  if (vinf > 1) excess += vinf - 1;
  const long chi = b.places.euler_characteristic();
  BoundReport rep;
  rep.check = "abc-excess";
  rep.inputs = {{"b", to_string(b.value)}, {"places", b.places.to_string()}};
  rep.lhs = std::to_string(excess);
  rep.rhs = std::to_string(chi);
  rep.branch = "excess";
  rep.set(excess <= chi);
  return rep;
}

/// For S-units theta_1..theta_m with no vanishing subsum:
/// sum over v outside S of v(theta_1 + ... + theta_m) >= H(theta_1 : ... : theta_m) - C(m,2) chi.
inline BoundReport unit_sum_lower_bound(const std::vector<SUnit>& thetas) {
  const std::size_t m = thetas.size();
  if (m < 2 || m > 12) throw InvalidInput("unit sum bound needs 2 <= m <= 12");
  for (const auto& th : thetas) detail::require_same_places(thetas.front(), th);
  for (unsigned mask = 1; mask < (1U << m); ++mask) {
    RationalFunction sum;
    for (std::size_t i = 0; i < m; ++i)
      if (mask & (1U << i)) sum += thetas[i].value;
    if (sum.is_zero()) {
      std::string subset = "{";
      for (std::size_t i = 0; i < m; ++i)
        if (mask & (1U << i)) subset += (subset.size() > 1 ? "," : "") + std::to_string(i + 1);
      throw InvalidInput("vanishing subsum over " + subset + "}");
    }
  }
  const PlaceSet& s = thetas.front().places;
  RationalFunction sum;
  std::vector<RationalFunction> values;
  for (const auto& th : thetas) {
    sum += th.value;
    values.push_back(th.value);
  }
  const long lhs = static_cast<long>(detail::zeros_outside(sum, s));
  const long hp = static_cast<long>(projective_height(values));
  const long chi = s.euler_characteristic();
  const long rhs = hp - static_cast<long>(m * (m - 1) / 2) * chi;
  BoundReport rep;
  rep.check = "unit-sum";
  for (std::size_t i = 0; i < m; ++i) rep.inputs.push_back({"theta" + std::to_string(i + 1), to_string(values[i])});
  rep.inputs.push_back({"places", s.to_string()});
  rep.lhs = std::to_string(lhs);
  rep.rhs = std::to_string(rhs);
  rep.branch = "lower-bound";
  rep.context = {{"projective_height", std::to_string(hp)}, {"chi", std::to_string(chi)}};
  rep.set(lhs >= rhs);
  return rep;
}

/// Nonzero Wronskian of the auxiliary family, or a polynomial relation
/// P(a, b) = 0 with deg_X P <= k and deg_Y P <= h.
struct WronskianCertificate {
  RationalFunction wronskian;
};
struct PolynomialRelation {
  BivariatePolynomial p;
};
using WronskianWitness = std::variant<WronskianCertificate, PolynomialRelation>;

/// Auxiliary family: a^(i-1) q for i = 1..k with q = (1-a)/(1-b), then
/// a^r b^s for r = 0..k, s = 0..h-1.
inline std::vector<RationalFunction> wronskian_family(const RationalFunction& a, const RationalFunction& b,
                                                      unsigned h, unsigned k) {
  const RationalFunction one(1);
  const RationalFunction q = (one - a) / (one - b);
  std::vector<RationalFunction> fs;
  for (unsigned i = 0; i < k; ++i) fs.push_back(a.pow(i) * q);
  for (unsigned r = 0; r <= k; ++r)
    for (unsigned s = 0; s < h; ++s) fs.push_back(a.pow(r) * b.pow(s));
  return fs;
}

/// Rational vectors c with sum c_i f_i = 0.
inline std::vector<std::vector<BigRational>> linear_relations(const std::vector<RationalFunction>& fs) {
  Polynomial common(BigRational(1));
  for (const auto& f : fs) common = poly_lcm(common, f.den());
  std::vector<Polynomial> gs;
  std::size_t rows = 1;
  for (const auto& f : fs) {
    gs.push_back(f.num() * common.exact_div(f.den()));
    rows = std::max(rows, gs.back().size());
  }
  Matrix<BigRational> m(rows, std::vector<BigRational>(fs.size()));
  for (std::size_t j = 0; j < fs.size(); ++j)
    for (std::size_t i = 0; i < rows; ++i) m[i][j] = gs[j].coeff(i);
  return nullspace(std::move(m), fs.size());
}

inline WronskianWitness wronskian_witness(const SUnit& a, const SUnit& b, unsigned h, unsigned k,
                                          unsigned cap = 24) {
  detail::require_same_places(a, b);
  if (h == 0 || k == 0) throw InvalidInput("h and k must be positive");
  if (a.value.is_constant() && b.value.is_constant()) throw InvalidInput("both units constant");
  if (b.value == RationalFunction(1)) throw InvalidInput("b = 1 leaves q undefined");
  const unsigned n = h * k + h + k;
  if (n > cap) throw ResourceLimit("wronskian of size " + std::to_string(n) + " exceeds the cap " + std::to_string(cap));
  const auto fs = wronskian_family(a.value, b.value, h, k);
  const RationalFunction w = wronskian(fs);
  if (!w.is_zero()) return WronskianCertificate{w};
  const auto rels = linear_relations(fs);
  if (rels.empty()) throw InternalError("vanishing wronskian without a linear relation");
  const auto& c = rels.front();
  // P1(X)(1 - X) + P2(X, Y)(1 - Y)
  BivariatePolynomial p1, p2;
  for (unsigned i = 0; i < k; ++i) p1.add_term(i, 0, RationalFunction(c[i]));
  std::size_t idx = k;
  for (unsigned r = 0; r <= k; ++r)
    for (unsigned s = 0; s < h; ++s) p2.add_term(r, s, RationalFunction(c[idx++]));
  const BivariatePolynomial one(1L);
  const BivariatePolynomial p =
      (p1 * (one - BivariatePolynomial::X()) + p2 * (one - BivariatePolynomial::Y())).normalized();
  if (p.is_zero() || !p.evaluate(a.value, b.value).is_zero() || p.degree_x() > k || p.degree_y() > h)
    throw InternalError("extracted relation does not vanish at (a, b)");
  return PolynomialRelation{p};
}

/// a^j q - a^j (1 - a)(1 + b + ... + b^(h-1)) = a^j b^h q with q = (1-a)/(1-b),
/// evaluated exactly. Returns both sides.
inline std::pair<RationalFunction, RationalFunction> geometric_approximation_sides(const RationalFunction& a,
                                                                                  const RationalFunction& b,
                                                                                  unsigned h, unsigned j) {
  const RationalFunction one(1);
  const RationalFunction q = (one - a) / (one - b);
  RationalFunction geometric;
  for (unsigned i = 0; i < h; ++i) geometric += b.pow(i);
  const RationalFunction aj = a.pow(j);
  return {aj * q - aj * (one - a) * geometric, aj * b.pow(h) * q};
}

/// One row of the gcd(f^n - 1, g^n - 1) scan.
struct PowerGcdRow {
  unsigned n;
  std::size_t degree;
  BigInt lhs_cubed;
  BigInt bound_product;  // H(a) H(b) chi with a = f^n, b = g^n
  bool holds;
};

/// deg gcd(f^n - 1, g^n - 1) against the cube-root bound for a = f^n,
/// b = g^n with S = zeros of f g together with infinity.
inline std::vector<PowerGcdRow> power_gcd_table(const Polynomial& f, const Polynomial& g, unsigned n_max) {
  if (f.is_constant() || g.is_constant()) throw InvalidInput("f and g must be nonconstant");
  if (multiplicative_dependence(RationalFunction(f), RationalFunction(g)))
    throw InvalidInput("f and g are multiplicatively dependent");
  const PlaceSet s({f, g}, true);
  const long chi = s.euler_characteristic();
  std::vector<PowerGcdRow> rows;
  const Polynomial one(BigRational(1));
  Polynomial fn = one;
  Polynomial gn = one;
  for (unsigned n = 1; n <= n_max; ++n) {
    fn = fn * f;
    gn = gn * g;
    const std::size_t d = poly_gcd(fn - one, gn - one).degree();
    const BigInt cubed = BigInt(static_cast<unsigned long>(d)) * d * d;
    const BigInt product = BigInt(n) * n * static_cast<unsigned long>(f.degree()) *
                           static_cast<unsigned long>(g.degree()) * chi;
    rows.push_back({n, d, cubed, product, cubed <= 54 * product});
  }
  return rows;
}

}  // namespace ffcheck

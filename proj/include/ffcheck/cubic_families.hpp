#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ffcheck/conic_complement.hpp"

namespace ffcheck {

/// A curve family t -> (x0 : x1 : x2) on the multiplicative group, avoiding
/// a plane divisor D. The witness is the defining form of D evaluated along
/// the parametrization; it must be c t^k so that it never vanishes for t != 0.
struct FamilyCertificate {
  std::string family;
  unsigned n = 0;
  PlaneMorphism morphism;
  std::string divisor_id;
  std::string form;
  Polynomial avoidance_witness;
  std::vector<std::pair<std::string, Polynomial>> component_witnesses;
  std::size_t degree = 0;
  std::size_t second_chart_degree = 0;
  long euler_char = 0;
  std::string degree_claim;
  Verdict claim_verdict = Verdict::Inconclusive;
  std::vector<std::string> notes;
};

namespace detail {

/// c t^k with c != 0.
inline bool is_monomial(const Polynomial& p) { return !p.is_zero() && p.degree() == p.low_order(); }

inline std::string monomial_string(const Polynomial& p) {
  const BigRational& c = p.leading();
  const std::size_t k = p.degree();
  if (k == 0) return to_string(c);
  const std::string power = k == 1 ? "t" : "t^" + std::to_string(k);
  return c == 1 ? power : to_string(c) + "*" + power;
}

inline Polynomial t_pow(std::size_t k) { return Polynomial::monomial(BigRational(1), k); }

/// Image degree in the chart of a second nonzero coordinate, as an
/// independent elimination.
inline std::size_t second_chart_degree(const PlaneMorphism& f) {
  std::size_t first = 3;
  for (std::size_t i = 0; i < 3; ++i)
    if (!f[i].is_zero()) {
      if (first == 3) {
        first = i;
        continue;
      }
      const PlaneMorphism rotated(f[i], f[(i + 1) % 3], f[(i + 2) % 3]);
      return image_degree(rotated);
    }
  return image_degree(f);
}

inline FamilyCertificate certify(std::string family, unsigned n, PlaneMorphism f, std::string divisor_id,
                                 std::string form, std::vector<std::pair<std::string, Polynomial>> components) {
  FamilyCertificate c{std::move(family), n, std::move(f), std::move(divisor_id), std::move(form), Polynomial(BigRational(1)),
                      std::move(components), 0, 0, 0, {}, Verdict::Inconclusive, {}};
  for (const auto& [name, w] : c.component_witnesses) {
    if (!is_monomial(w))
      throw TheoremViolation(c.family + " family: " + name + " = " + to_string(w) + " vanishes on the multiplicative group");
    c.avoidance_witness = c.avoidance_witness * w;
  }
  c.degree = image_degree(c.morphism);
  c.second_chart_degree = second_chart_degree(c.morphism);
  if (c.degree != c.second_chart_degree)
    throw InternalError(c.family + " family: image degree differs between charts");
  c.euler_char = PlaceSet::parse("t, inf").euler_characteristic();
  return c;
}

}  // namespace detail

/// D: z y^2 = x^3 (cusp), t -> (t^2n p : t^3n : p^3 + 1). The claimed degree
/// bound is deg >= 2n + deg p.
inline FamilyCertificate cusp_family(unsigned n, const Polynomial& p) {
  if (n == 0) throw InvalidInput("n must be positive");
  if (p.is_zero() || p.coeff(0) == 0) throw InvalidInput("p(0) must be nonzero");
  const Polynomial one(BigRational(1));
  const PlaneMorphism f(detail::t_pow(2 * n) * p, detail::t_pow(3 * n), p.pow(3) + one);
  const Polynomial& x = f[0];
  const Polynomial& y = f[1];
  const Polynomial& z = f[2];
  auto c = detail::certify("cusp", n, f, "cuspidal cubic", "z*y^2 - x^3 with (x, y, z) = (x0, x1, x2)",
                           {{"z*y^2 - x^3", z * y * y - x * x * x}});
  const std::size_t claim = 2 * n + p.degree();
  c.degree_claim = "degree >= " + std::to_string(claim);
  c.claim_verdict = c.degree >= claim ? Verdict::Holds : Verdict::Violated;
  if (p.is_constant())
    c.notes.push_back("constant p gives the fixed image z*y^2 = (p^3 + 1)/p^3 * x^3 of degree 3 for every n");
  return c;
}

/// D: z y^2 = x^3 + x^2 z (node), t -> (4s(s-1) : 4s(s+1) : (s-1)^3 + 8)
/// with s = t^n.
inline FamilyCertificate node_family(unsigned n) {
  if (n == 0) throw InvalidInput("n must be positive");
  const Polynomial s = detail::t_pow(n);
  const Polynomial one(BigRational(1));
  const Polynomial four(BigRational(4));
  const PlaneMorphism f(four * s * (s - one), four * s * (s + one), (s - one).pow(3) + Polynomial(BigRational(8)));
  const Polynomial& x = f[0];
  const Polynomial& y = f[1];
  const Polynomial& z = f[2];
  auto c = detail::certify("node", n, f, "nodal cubic", "z*y^2 - x^3 - x^2*z with (x, y, z) = (x0, x1, x2)",
                           {{"z*y^2 - x^3 - x^2*z", z * y * y - x * x * x - x * x * z}});
  c.degree_claim = "degree grows with n";
  c.notes.push_back("the image depends on s = t^n only, so it is the same cubic for every n");
  c.claim_verdict = Verdict::Inconclusive;
  return c;
}

/// D: conic x1^2 - x2^2 = x0^2 plus the line x0 = 0,
/// t -> (2t : t^2 - t^n + 1 : 1 - t^n - t^2), of degree n.
inline FamilyCertificate secant_conic_family(unsigned n) {
  if (n < 2) throw InvalidInput("secant family needs n >= 2");
  const Polynomial one(BigRational(1));
  const Polynomial tn = detail::t_pow(n);
  const Polynomial t2 = detail::t_pow(2);
  const PlaneMorphism f(Polynomial{BigRational(0), BigRational(2)}, t2 - tn + one, one - tn - t2);
  const Polynomial& x0 = f[0];
  const Polynomial& x1 = f[1];
  const Polynomial& x2 = f[2];
  auto c = detail::certify("secant", n, f, "conic plus secant line", "x0*(x1^2 - x2^2 - x0^2)",
                           {{"x0", x0}, {"x1^2 - x2^2 - x0^2", x1 * x1 - x2 * x2 - x0 * x0}});
  const auto [x, y] = f.affine_chart();
  if (x * x - y * y != RationalFunction(one - tn)) throw TheoremViolation("x^2 - y^2 != 1 - t^n");
  c.degree_claim = "degree = " + std::to_string(n);
  c.claim_verdict = c.degree == n ? Verdict::Holds : Verdict::Violated;
  return c;
}

/// D: x0 x1 x2 = 0, t -> (1 : t : t^n), of degree n.
inline FamilyCertificate three_lines_family(unsigned n) {
  if (n == 0) throw InvalidInput("n must be positive");
  const PlaneMorphism f(Polynomial(BigRational(1)), detail::t_pow(1), detail::t_pow(n));
  auto c = detail::certify("three-lines", n, f, "three lines", "x0*x1*x2", {{"x0", f[0]}, {"x1", f[1]}, {"x2", f[2]}});
  c.degree_claim = "degree = " + std::to_string(n);
  c.claim_verdict = c.degree == n ? Verdict::Holds : Verdict::Violated;
  return c;
}

/// D: the line at infinity, the line x = 0 and the conic (x - 1) y + 1 = 0,
/// which meet at one point of the conic; t -> (t, (t^(n+1) - 1)/(t - 1)),
/// of degree n.
inline FamilyCertificate tangent_crossing_family(unsigned n) {
  if (n == 0) throw InvalidInput("n must be positive");
  std::vector<BigRational> geometric(n + 1, BigRational(1));
  const PlaneMorphism f(Polynomial(BigRational(1)), detail::t_pow(1), Polynomial(std::move(geometric)));
  const Polynomial& x0 = f[0];
  const Polynomial& x1 = f[1];
  const Polynomial& x2 = f[2];
  auto c = detail::certify("tangent-crossing", n, f, "conic plus two lines meeting on it",
                           "x0*x1*((x1 - x0)*x2 + x0^2)",
                           {{"x0", x0}, {"x1", x1}, {"(x1 - x0)*x2 + x0^2", (x1 - x0) * x2 + x0 * x0}});
  c.degree_claim = "degree = " + std::to_string(n);
  c.claim_verdict = c.degree == n ? Verdict::Holds : Verdict::Violated;
  return c;
}

inline const std::vector<std::string>& family_names() {
  static const std::vector<std::string> names{"cusp", "node", "secant", "three-lines", "tangent-crossing"};
  return names;
}

/// Member n of a named family; the cusp family uses p = 1 + t unless given.
inline FamilyCertificate family_member(std::string_view name, unsigned n,
                                       const Polynomial& cusp_p = Polynomial{BigRational(1), BigRational(1)}) {
  if (name == "cusp") return cusp_family(n, cusp_p);
  if (name == "node") return node_family(n);
  if (name == "secant") return secant_conic_family(n);
  if (name == "three-lines") return three_lines_family(n);
  if (name == "tangent-crossing") return tangent_crossing_family(n);
  std::string known;
  for (const auto& f : family_names()) known += (known.empty() ? "" : ", ") + f;
  throw InvalidInput("unknown family '" + std::string(name) + "'; known: " + known);
}

/// Degrees of a family for n = first..n_max against a constant Euler
/// characteristic.
struct UnboundednessTable {
  std::string family;
  std::vector<FamilyCertificate> rows;
  bool strictly_increasing = true;
  bool euler_constant = true;
  Verdict verdict = Verdict::Inconclusive;
  std::vector<std::string> notes;
};

inline UnboundednessTable unboundedness_table(std::string_view family, unsigned n_max,
                                              const Polynomial& cusp_p = Polynomial{BigRational(1), BigRational(1)}) {
  if (n_max < 2) throw InvalidInput("n_max must be at least 2");
  UnboundednessTable table;
  table.family = std::string(family);
  const unsigned first = family == "secant" ? 2 : 1;
  for (unsigned n = first; n <= n_max; ++n) {
    table.rows.push_back(family_member(family, n, cusp_p));
    const auto& row = table.rows.back();
    if (table.rows.size() > 1) {
      const auto& prev = table.rows[table.rows.size() - 2];
      if (row.degree <= prev.degree) table.strictly_increasing = false;
      if (row.euler_char != prev.euler_char) table.euler_constant = false;
    }
  }
  if (table.strictly_increasing && table.euler_constant) {
    table.verdict = Verdict::Holds;
  } else {
    table.verdict = Verdict::Inconclusive;
    table.notes.push_back("degrees do not grow strictly with n for this parametrization");
  }
  return table;
}

inline std::string to_csv(const std::vector<FamilyCertificate>& rows) {
  std::string out = "family,n,degree,euler_char,witness\n";
  for (const auto& r : rows)
    out += r.family + "," + std::to_string(r.n) + "," + std::to_string(r.degree) + "," +
           std::to_string(r.euler_char) + "," + detail::monomial_string(r.avoidance_witness) + "\n";
  return out;
}

}  // namespace ffcheck

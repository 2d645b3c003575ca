#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ffcheck/conic_complement.hpp"
#include "ffcheck/cubic_families.hpp"
#include "ffcheck/gcd_bounds.hpp"

namespace ffcheck {

/// Seeded generator with a platform-independent bounded draw.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, n), by rejection.
  std::uint64_t below(std::uint64_t n) {
    if (n == 0) throw InvalidInput("empty range");
    const std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % n;
    std::uint64_t x;
    do x = engine_();
    while (x >= limit);
    return x % n;
  }
  long range(long lo, long hi) { return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1))); }
  bool coin() { return below(2) == 1; }
  template <class T>
  const T& pick(const std::vector<T>& v) { return v[below(v.size())]; }

 private:
  std::mt19937_64 engine_;
};

/// Aggregate outcome of a batch of checks; `failures` keeps the reports that
/// were not verified.
struct SuiteResult {
  std::string name;
  Fields parameters;
  std::size_t checked = 0;
  std::size_t held = 0;
  std::size_t violated = 0;
  std::size_t inconclusive = 0;
  std::vector<BoundReport> failures;
  std::vector<std::string> notes;

  void record(const BoundReport& r) {
    ++checked;
    switch (r.verdict) {
      case Verdict::Holds: ++held; break;
      case Verdict::Violated: ++violated; failures.push_back(r); break;
      case Verdict::Inconclusive: ++inconclusive; break;
    }
  }
  void record(Verdict v, BoundReport detail) {
    detail.verdict = v;
    record(detail);
  }
};

namespace detail {

/// Place set with infinity and up to `max_finite` finite points, sometimes
/// including an irreducible quadratic place.
inline PlaceSet random_places(Rng& rng, std::size_t max_finite) {
  std::vector<Polynomial> polys;
  std::vector<BigRational> used;
  std::size_t points = 0;
  const std::size_t target = 1 + rng.below(max_finite);
  if (target >= 3 && rng.below(4) == 0) {
    polys.push_back(Polynomial{BigRational(rng.range(1, 5)), BigRational(0), BigRational(1)});  // t^2 + a
    points += 2;
  }
  while (points < target) {
    const BigRational x = make_rational(rng.range(-6, 6), rng.below(4) == 0 ? 2 : 1);
    if (std::find(used.begin(), used.end(), x) != used.end()) continue;
    used.push_back(x);
    polys.push_back(Polynomial{BigRational(-x), BigRational(1)});
    ++points;
  }
  return PlaceSet(polys, true);
}

inline std::vector<Polynomial> place_factors(const PlaceSet& s) {
  std::vector<Polynomial> out;
  for (const auto& [p, mult] : squarefree_decomposition(s.finite_part())) {
    (void)mult;
    const auto roots = rational_roots(p);
    Polynomial rest = p.monic();
    for (const auto& r : roots) {
      const Polynomial lin{BigRational(-r), BigRational(1)};
      out.push_back(lin);
      rest = rest.exact_div(lin);
    }
    if (!rest.is_constant()) out.push_back(rest);
  }
  return out;
}

/// Random S-unit c * prod p_i^e_i of height <= max_height. When `anchor` is
/// given and not a zero of S, c is chosen so that the unit equals 1 there.
inline RationalFunction random_unit(Rng& rng, const std::vector<Polynomial>& factors, std::size_t max_height,
                                    const std::optional<BigRational>& anchor = std::nullopt) {
  static const std::vector<BigRational> constants{BigRational(1), BigRational(-1), BigRational(2),
                                                  BigRational(-2), make_rational(1, 2), BigRational(3)};
  for (;;) {
    RationalFunction u(rng.pick(constants));
    for (const auto& f : factors) {
      const long e = rng.range(-3, 3);
      if (e != 0) u = u * RationalFunction(f).pow(e);
    }
    if (u.height() > max_height) continue;
    if (anchor) {
      const BigRational v = u.evaluate(*anchor);
      u = u * RationalFunction(BigRational(1) / v);
    }
    return u;
  }
}

inline std::optional<BigRational> random_anchor(Rng& rng, const PlaceSet& s) {
  for (int tries = 0; tries < 20; ++tries) {
    const BigRational x = make_rational(rng.range(-9, 9), rng.range(1, 3));
    if (!s.contains_point(x)) return x;
  }
  return std::nullopt;
}

}  // namespace detail

/// Independent S-unit pairs of height <= 12 with |S| <= 6; about half are
/// forced to share a common zero of 1 - a and 1 - b.
inline SuiteResult gcd_bound_random_suite(std::uint64_t seed, std::size_t count) {
  SuiteResult out;
  out.name = "gcd-bound-random";
  out.parameters = {{"seed", std::to_string(seed)}, {"count", std::to_string(count)}};
  Rng rng(seed);
  while (out.checked < count) {
    const PlaceSet s = detail::random_places(rng, 5);
    const auto factors = detail::place_factors(s);
    const auto anchor = rng.coin() ? detail::random_anchor(rng, s) : std::nullopt;
    const SUnit a{detail::random_unit(rng, factors, 12, anchor), s};
    const SUnit b{detail::random_unit(rng, factors, 12, anchor), s};
    const RationalFunction one(1);
    if (a.value.is_constant() || b.value.is_constant() || a.value == one || b.value == one) continue;
    if (multiplicative_dependence(a, b)) continue;
    out.record(check_gcd_sum_bound(a, b));
  }
  return out;
}

/// Multiple zeros of 1 - b for random nonconstant S-units b.
inline SuiteResult abc_excess_random_suite(std::uint64_t seed, std::size_t count) {
  SuiteResult out;
  out.name = "abc-excess-random";
  out.parameters = {{"seed", std::to_string(seed)}, {"count", std::to_string(count)}};
  Rng rng(seed);
  while (out.checked < count) {
    const PlaceSet s = detail::random_places(rng, 5);
    const auto factors = detail::place_factors(s);
    const auto anchor = rng.coin() ? detail::random_anchor(rng, s) : std::nullopt;
    const RationalFunction b = detail::random_unit(rng, factors, 12, anchor);
    if (b.is_constant()) continue;
    out.record(multiple_zero_excess(SUnit{b, s}));
  }
  return out;
}

/// Sums of 2..max_terms random S-units without vanishing subsums.
inline SuiteResult unit_sum_random_suite(std::uint64_t seed, std::size_t count, std::size_t max_terms = 5) {
  if (max_terms < 2 || max_terms > 12) throw InvalidInput("max_terms must be in 2..12");
  SuiteResult out;
  out.name = "unit-sum-random";
  out.parameters = {{"seed", std::to_string(seed)}, {"count", std::to_string(count)},
                    {"max_terms", std::to_string(max_terms)}};
  Rng rng(seed);
  while (out.checked < count) {
    const PlaceSet s = detail::random_places(rng, 4);
    const auto factors = detail::place_factors(s);
    const std::size_t m = 2 + rng.below(max_terms - 1);
    std::vector<SUnit> thetas;
    for (std::size_t i = 0; i < m; ++i) thetas.push_back({detail::random_unit(rng, factors, 6), s});
    try {
      out.record(unit_sum_lower_bound(thetas));
    } catch (const InvalidInput&) {
      // vanishing subsum; draw again
    }
  }
  return out;
}

/// Random (lambda, u1, u2) over place sets containing 0: the resultant F is
/// +-(delta2 A - B), the Bezout identities hold, and the leading coefficient
/// of F vanishes exactly when u1^2 / u2 is constant.
inline SuiteResult conic_identity_random_suite(std::uint64_t seed, std::size_t count) {
  SuiteResult out;
  out.name = "conic-identities-random";
  out.parameters = {{"seed", std::to_string(seed)}, {"count", std::to_string(count)}};
  Rng rng(seed);
  static const std::vector<BigRational> lambdas{BigRational(0), BigRational(1), BigRational(-1), BigRational(3),
                                                make_rational(1, 2), make_rational(-5, 3)};
  while (out.checked < count) {
    PlaceSet s = detail::random_places(rng, 4);
    if (!s.contains_point(BigRational(0))) s = s.united(PlaceSet::parse("t"));
    const auto factors = detail::place_factors(s);
    const RationalFunction u1 = detail::random_unit(rng, factors, 8);
    RationalFunction u2 = detail::random_unit(rng, factors, 8);
    if (rng.below(5) == 0) u2 = RationalFunction(rng.pick(lambdas) + 2) * u1 * u1;
    if (u2.is_zero()) continue;
    const BigRational lambda = rng.pick(lambdas);
    const DerivationFrame frame(s, BigRational(0));
    const RationalFunction d1 = log_derivative(SUnit{u1, s}, frame).theta;
    const RationalFunction d2 = log_derivative(SUnit{u2, s}, frame).theta;
    const ConicPair ab = build_ab(lambda, d1, d2);
    BoundReport rep;
    rep.check = "conic-identities";
    rep.inputs = {{"lambda", to_string(lambda)}, {"u1", to_string(u1)}, {"u2", to_string(u2)},
                  {"places", s.to_string()}};
    if (ab.b.is_zero()) continue;
    const ConicResultants fg = build_fg(ab);
    const RationalFunction lead = fg.f.size() == 3 ? fg.f.coeff(2) : RationalFunction();
    const auto rel = multiplicative_dependence(u1, u2);
    const bool square_ratio = rel && rel->r == 2 && rel->s == -1;
    rep.lhs = to_string(lead);
    rep.rhs = square_ratio ? "0" : "nonzero";
    rep.branch = fg.sign == 1 ? "F = delta2*A - B" : "F = -(delta2*A - B)";
    rep.set(lead.is_zero() == square_ratio);
    out.record(rep);
  }
  return out;
}

/// Every fixture from the bounded solution search, the constant-u2 family
/// for c in {2, 3, -2} with u1 = c' t^k (|k| <= 4), and a seeded batch of
/// random identity checks: B-identity, divisibility, classification and the
/// image degree bound.
inline SuiteResult conic_fixtures_suite(std::uint64_t seed, std::size_t identity_count = 100) {
  SuiteResult out;
  out.name = "conic-fixtures";
  out.parameters = {{"seed", std::to_string(seed)}, {"identity_count", std::to_string(identity_count)}};
  std::vector<Solution> fixtures = search_solutions(default_solution_search());
  out.notes.push_back("search hits: " + std::to_string(fixtures.size()));
  for (const BigRational& c : {BigRational(2), BigRational(3), BigRational(-2)})
    for (const BigRational& cp : {BigRational(1), BigRational(-1), make_rational(1, 2)})
      for (long k = -4; k <= 4; ++k)
        if (k != 0) fixtures.push_back(constant_u2_solution(c, cp, k));
  for (const auto& sol : fixtures) {
    build_ab(sol);
    out.record(divisibility_check(sol));
    out.record(classify_conic_solution(sol).report);
    const RationalFunction& u1 = sol.u1.value;
    const RationalFunction& y = sol.y;
    const PlaneMorphism f(u1.den() * y.den(), u1.num() * y.den(), y.num() * u1.den());
    if (!f.is_constant()) out.record(check_image_degree_bound(f, sol.u1.places, sol.config));
  }
  const SuiteResult ids = conic_identity_random_suite(seed, identity_count);
  out.checked += ids.checked;
  out.held += ids.held;
  out.violated += ids.violated;
  out.inconclusive += ids.inconclusive;
  out.failures.insert(out.failures.end(), ids.failures.begin(), ids.failures.end());
  return out;
}

/// Certificates and unboundedness tables for all families up to n_max.
inline SuiteResult families_suite(unsigned n_max) {
  SuiteResult out;
  out.name = "families-all";
  out.parameters = {{"n_max", std::to_string(n_max)}};
  for (const auto& name : family_names()) {
    const UnboundednessTable table = unboundedness_table(name, n_max);
    for (const auto& row : table.rows) {
      BoundReport rep;
      rep.check = "family-certificate";
      rep.inputs = {{"family", row.family}, {"n", std::to_string(row.n)}};
      rep.lhs = std::to_string(row.degree);
      rep.rhs = row.degree_claim;
      rep.branch = row.form;
      rep.notes = row.notes;
      rep.context = {{"witness", detail::monomial_string(row.avoidance_witness)},
                     {"euler_char", std::to_string(row.euler_char)}};
      rep.verdict = row.claim_verdict;
      out.record(rep);
      out.record(check_image_degree_bound(row.morphism, PlaceSet::parse("t, inf")));
    }
    BoundReport growth;
    growth.check = "unboundedness";
    growth.inputs = {{"family", name}, {"n_max", std::to_string(n_max)}};
    growth.lhs = table.strictly_increasing ? "strictly increasing" : "not strictly increasing";
    growth.rhs = table.euler_constant ? "constant euler characteristic" : "varying euler characteristic";
    growth.branch = "table";
    growth.notes = table.notes;
    growth.verdict = table.verdict;
    out.record(growth);
  }
  return out;
}

/// deg gcd(f^n - 1, g^n - 1) against the cube-root bound for n <= n_max.
inline SuiteResult power_gcd_scan_suite(const Polynomial& f, const Polynomial& g, unsigned n_max) {
  SuiteResult out;
  out.name = "power-gcd-scan";
  out.parameters = {{"f", to_string(f)}, {"g", to_string(g)}, {"n_max", std::to_string(n_max)}};
  for (const auto& row : power_gcd_table(f, g, n_max)) {
    BoundReport rep;
    rep.check = "power-gcd";
    rep.inputs = {{"n", std::to_string(row.n)}};
    rep.lhs = std::to_string(row.degree);
    rep.rhs = "3*2^(1/3)*(" + row.bound_product.get_str() + ")^(1/3)";
    rep.cubed = CubedComparison{row.lhs_cubed, BigInt(54), row.bound_product};
    rep.branch = "independent";
    rep.set(row.holds);
    out.record(rep);
  }
  return out;
}

/// Coprime pair bound on random independent unit pairs.
inline SuiteResult coprime_pair_random_suite(const BivariatePolynomial& a1, const BivariatePolynomial& a2,
                                             const BigRational& epsilon, std::uint64_t seed, std::size_t count) {
  SuiteResult out;
  out.name = "coprime-pair-random";
  out.parameters = {{"A1", to_string(a1)}, {"A2", to_string(a2)}, {"epsilon", to_string(epsilon)},
                    {"seed", std::to_string(seed)}, {"count", std::to_string(count)}};
  Rng rng(seed);
  while (out.checked < count) {
    const PlaceSet s = detail::random_places(rng, 5);
    const auto factors = detail::place_factors(s);
    const auto anchor = rng.coin() ? detail::random_anchor(rng, s) : std::nullopt;
    const SUnit u1{detail::random_unit(rng, factors, 12, anchor), s};
    const SUnit u2{detail::random_unit(rng, factors, 12, anchor), s};
    if (u1.value.is_constant() || u2.value.is_constant()) continue;
    if (multiplicative_dependence(u1, u2)) continue;
    out.record(check_coprime_pair_gcd_bound(a1, a2, u1, u2, epsilon));
  }
  return out;
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"gcd-bound-random", "abc-excess-random", "unit-sum-random",
                                              "conic-fixtures",   "families-all",      "power-gcd-scan",
                                              "coprime-pair-random"};
  return names;
}

}  // namespace ffcheck

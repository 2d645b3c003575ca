// One line per acceptance criterion; exits nonzero if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "ffcheck/suites.hpp"

using namespace ffcheck;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

struct Criterion {
  int number;
  std::string name;
  double limit_seconds;
  std::function<Outcome()> body;
};

BigRational q(long n, long d = 1) { return make_rational(n, d); }

Outcome suite_clean(const SuiteResult& r, std::size_t expected_count) {
  Outcome o;
  o.ok = r.violated == 0 && r.checked >= expected_count;
  o.detail = r.name + ": checked " + std::to_string(r.checked) + ", held " + std::to_string(r.held) +
             ", violated " + std::to_string(r.violated) + ", inconclusive " + std::to_string(r.inconclusive);
  return o;
}

Outcome merge(std::vector<Outcome> parts) {
  Outcome o;
  for (const auto& p : parts) {
    o.ok = o.ok && p.ok;
    o.detail += (o.detail.empty() ? "" : "; ") + p.detail;
  }
  return o;
}

Outcome sharpness() {
  const PlaceSet s = PlaceSet::parse("t, t+1, inf");
  const SUnit a = certify_sunit(parse_rational_function("t^3"), s);
  const SUnit b = certify_sunit(parse_rational_function("-t*(t+1)"), s);
  const std::size_t gs = gcd_sum(a, b);
  const BoundReport rep = check_gcd_sum_bound(a, b);
  const long chi = s.euler_characteristic();
  const BigInt lhs3 = BigInt(static_cast<long>(gs * gs * gs));
  const BigInt hhc = BigInt(static_cast<long>(a.value.height() * b.value.height())) * chi;
  // gs^3 * 3 = 4 * H(a) H(b) chi, the ratio (4/3)^(1/3).
  const bool exact_ratio = lhs3 * 3 == hhc * 4;
  const bool cubed_ok = rep.cubed && rep.cubed->lhs_cubed == 8 && rep.cubed->constant == 54 && rep.cubed->product == 6;
  Outcome o;
  o.ok = gs == 2 && chi == 1 && exact_ratio && cubed_ok && rep.holds();
  o.detail = "gcd_sum " + std::to_string(gs) + ", cubed " + lhs3.get_str() + "*3 = 4*" + hhc.get_str() +
             ", bound " + lhs3.get_str() + " <= 54*" + hhc.get_str();
  return o;
}

Outcome conic_identities() {
  const SuiteResult ids = conic_identity_random_suite(2024, 100);
  // 2 y y' = B(u1, u2) is verified inside build_ab and throws otherwise.
  std::size_t fixtures = 0;
  for (const auto& sol : search_solutions(default_solution_search())) {
    build_ab(sol);
    ++fixtures;
  }
  Outcome o = suite_clean(ids, 100);
  o.ok = o.ok && ids.held == ids.checked && fixtures > 0;
  o.detail += "; derivative identity on " + std::to_string(fixtures) + " search fixtures";
  return o;
}

Outcome fixtures_classify() {
  std::vector<Solution> fixtures = search_solutions(default_solution_search());
  const std::size_t hits = fixtures.size();
  for (const BigRational& c : {q(2), q(3), q(-2)})
    for (const BigRational& cp : {q(1), q(-1), q(1, 2)})
      for (long k = -4; k <= 4; ++k)
        if (k != 0) fixtures.push_back(constant_u2_solution(c, cp, k));
  std::size_t divisible = 0, classified = 0;
  for (const auto& sol : fixtures) {
    if (divisibility_check(sol).holds()) ++divisible;
    if (!classify_conic_solution(sol).cases.empty()) ++classified;
  }
  Outcome o;
  o.ok = hits > 0 && divisible == fixtures.size() && classified == fixtures.size();
  o.detail = std::to_string(fixtures.size()) + " fixtures (" + std::to_string(hits) + " search hits), divisible " +
             std::to_string(divisible) + ", classified " + std::to_string(classified);
  return o;
}

Outcome family_certificates() {
  bool ok = true;
  auto t_pow = [](long c, std::size_t k) { return Polynomial::monomial(BigRational(c), k); };
  for (unsigned n = 1; n <= 5; ++n) {
    ok = ok && cusp_family(n, Polynomial{q(1), q(1)}).avoidance_witness == t_pow(1, 6 * n);
    ok = ok && node_family(n).avoidance_witness == t_pow(512, 3 * n);
  }
  for (unsigned n = 2; n <= 10; ++n) {
    const auto c = secant_conic_family(n);
    const auto [x, y] = c.morphism.affine_chart();
    ok = ok && c.degree == n && x * x - y * y == RationalFunction(Polynomial(q(1)) - t_pow(1, n));
  }
  for (unsigned n = 1; n <= 10; ++n) {
    ok = ok && three_lines_family(n).degree == n;
    const auto tc = tangent_crossing_family(n);
    ok = ok && tc.degree == n && tc.component_witnesses.back().second == t_pow(1, n + 1);
  }
  std::string growth;
  for (const char* name : {"secant", "three-lines", "tangent-crossing"}) {
    const auto table = unboundedness_table(name, 10);
    const bool grows = table.verdict == Verdict::Holds && table.rows.front().euler_char == 0;
    ok = ok && grows;
    growth += std::string(growth.empty() ? "" : ", ") + name + (grows ? " grows" : " stalls");
  }
  return {ok, "witnesses and degrees exact; " + growth + " at chi = 0"};
}

Outcome image_degree_corpus() {
  std::vector<Solution> fixtures = search_solutions(default_solution_search());
  for (const BigRational& c : {q(2), q(3), q(-2)})
    for (const BigRational& cp : {q(1), q(-1), q(1, 2)})
      for (long k = -4; k <= 4; ++k)
        if (k != 0) fixtures.push_back(constant_u2_solution(c, cp, k));
  std::size_t checks = 0, violations = 0;
  auto record = [&](const BoundReport& r) {
    ++checks;
    if (!r.holds()) ++violations;
  };
  for (const auto& sol : fixtures) {
    const RationalFunction& u1 = sol.u1.value;
    const RationalFunction& y = sol.y;
    const PlaneMorphism f(u1.den() * y.den(), u1.num() * y.den(), y.num() * u1.den());
    if (!f.is_constant()) record(check_image_degree_bound(f, sol.u1.places, sol.config));
  }
  const PlaceSet s = PlaceSet::parse("t, inf");
  for (const auto& name : family_names())
    for (unsigned n = name == "secant" ? 2 : 1; n <= 10; ++n) record(check_image_degree_bound(family_member(name, n).morphism, s));
  return {violations == 0 && checks > 0,
          std::to_string(checks) + " image-degree checks, violations " + std::to_string(violations)};
}

Outcome coprime_matches_gcd_bound() {
  Rng rng(99);
  const BivariatePolynomial a1 = parse_bivariate("X-1"), a2 = parse_bivariate("Y-1");
  std::size_t shared = 0, mismatches = 0;
  while (shared < 100) {
    const PlaceSet s = detail::random_places(rng, 5);
    const auto factors = detail::place_factors(s);
    const auto anchor = rng.coin() ? detail::random_anchor(rng, s) : std::nullopt;
    const SUnit a{detail::random_unit(rng, factors, 12, anchor), s};
    const SUnit b{detail::random_unit(rng, factors, 12, anchor), s};
    const RationalFunction one(1);
    if (a.value.is_constant() || b.value.is_constant() || a.value == one || b.value == one) continue;
    if (multiplicative_dependence(a, b)) continue;
    const BoundReport direct = check_gcd_sum_bound(a, b);
    const BoundReport pair = check_coprime_pair_gcd_bound(a1, a2, a, b, q(1, 2));
    const bool same = pair.lhs == direct.lhs && pair.parts.size() == 1 &&
                      pair.parts[0].verdict == direct.verdict && pair.parts[0].lhs == direct.lhs &&
                      pair.parts[0].rhs == direct.rhs && pair.parts[0].branch == direct.branch &&
                      pair.verdict != Verdict::Violated;
    if (!same) ++mismatches;
    ++shared;
  }
  return {mismatches == 0, std::to_string(shared) + " shared instances, mismatches " + std::to_string(mismatches)};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "sharpness example", 1, sharpness},
      {2, "gcd-sum bound on 1000 random pairs", 60, [] { return suite_clean(gcd_bound_random_suite(7, 1000), 1000); }},
      {3, "abc excess and unit sums, 500 each", 60,
       [] {
         return merge({suite_clean(abc_excess_random_suite(7, 500), 500),
                       suite_clean(unit_sum_random_suite(7, 500, 5), 500)});
       }},
      {4, "derivative and resultant identities", 30, conic_identities},
      {5, "divisibility and classification of fixtures", 120, fixtures_classify},
      {6, "family certificates", 30, family_certificates},
      {7, "image degree bound across the corpus", 60, image_degree_corpus},
      {8, "power gcd scan up to n = 200", 60,
       [] { return suite_clean(power_gcd_scan_suite(Polynomial{q(0), q(1)}, Polynomial{q(1), q(1)}, 200), 200); }},
      {9, "coprime pair (X-1, Y-1) reproduces the gcd-sum bound", 60, coprime_matches_gcd_bound},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < c.limit_seconds;
    const bool pass = o.ok && in_time;
    if (!pass) ++failed;
    std::printf("criterion %d: %s - %s (%.2fs, limit %.0fs%s): %s\n", c.number, pass ? "PASS" : "FAIL",
                c.name.c_str(), secs, c.limit_seconds, in_time ? "" : ", too slow", o.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}

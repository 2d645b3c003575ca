#include <gtest/gtest.h>

#include "test_util.hpp"

using namespace ffcheck;
using namespace testutil;

namespace {

std::string context_value(const BoundReport& r, const std::string& key) {
  for (const auto& [k, v] : r.context)
    if (k == key) return v;
  return {};
}

PlaneMorphism M(std::string_view x0, std::string_view x1, std::string_view x2) { return {P(x0), P(x1), P(x2)}; }

/// sum over squarefree layers of (multiplicity - 1) * degree.
std::size_t excess_by_layers(const Polynomial& p) {
  std::size_t total = 0;
  for (const auto& [layer, mult] : squarefree_decomposition(p)) total += (mult - 1) * layer.degree();
  return total;
}

}  // namespace

TEST(ToSolution, ConstantU2Triple) {
  const ConicConfig config(Q(4));
  const auto sol = to_solution(M("1", "t", "t+2"), S("t, inf"), config);
  EXPECT_EQ(sol.u1.value, R("t"));
  EXPECT_EQ(sol.u2.value, R("3"));
  EXPECT_EQ(sol.y, R("t+2"));
  EXPECT_FALSE(sol.change.has_value());
}

TEST(ToSolution, ImageMeetsConicOutsideS) {
  try {
    to_solution(M("1", "t", "t+3"), S("t, inf"), ConicConfig(Q(10)));
    FAIL() << "expected the image to meet the conic";
  } catch (const ImageMeetsDivisor& e) {
    EXPECT_EQ(e.place(), "t - 2");
  }
  try {
    to_solution(M("1", "t-1", "t"), S("t, inf"), ConicConfig(Q(0)));
    FAIL() << "expected the image to meet x1 = 0";
  } catch (const ImageMeetsDivisor& e) {
    EXPECT_EQ(e.place(), "t - 1");
  }
  EXPECT_THROW(ConicConfig(Q(-2)), InvalidInput);
}

TEST(MakeSolution, MovesPlacesToZeroAndInfinity) {
  // t^2 = (t - 1)^2 + (2t - 2) + 1 over {1, inf}.
  const auto sol = make_solution(Q(0), R("t-1"), R("2*t-2"), R("t"), S("t-1, inf"));
  ASSERT_TRUE(sol.change.has_value());
  EXPECT_TRUE(sol.u1.places.contains_point(BigRational(0)));
  EXPECT_TRUE(sol.u1.places.includes_infinity());
  EXPECT_EQ(sol.y * sol.y, detail::conic_rhs(Q(0), sol.u1.value, sol.u2.value));
  EXPECT_THROW(make_solution(Q(0), R("t"), R("t"), R("t"), S("t, inf")), InvalidInput);
}

TEST(BuildAB, ConstantU2) {
  const auto sol = constant_u2_solution(Q(2), Q(1), 3);
  const ConicPair ab = build_ab(sol);
  EXPECT_EQ(ab.delta1, R("3"));
  EXPECT_TRUE(ab.delta2.is_zero());
  EXPECT_EQ(ab.b, B("6*X^2+12*X"));
  EXPECT_EQ(ab.a, B("X^2+4*X+Y+1"));
  // 2 y y' = B(u1, u2) with y = t^3 + 2.
  EXPECT_EQ(ab.b.evaluate(sol.u1.value, sol.u2.value), R("6*t^3*(t^3+2)"));

  const auto flat = make_solution(Q(0), R("3"), R("-1"), R("3"), S("t, inf"));
  EXPECT_TRUE(build_ab(flat).b.is_zero());
  EXPECT_TRUE(build_fg(flat).f.is_zero());
}

TEST(BuildFG, ResultantsMatchLinearCombination) {
  for (const auto& sol : search_solutions(default_solution_search())) {
    const ConicPair ab = build_ab(sol);
    if (ab.b.is_zero()) continue;
    const ConicResultants fg = build_fg(ab);
    ASSERT_TRUE(fg.f_cofactors && fg.g_cofactors);
    const auto combo = (BivariatePolynomial(ab.delta2) * ab.a - ab.b).normalized();
    EXPECT_EQ(BivariatePolynomial::from_univariate(fg.f, Axis::X).normalized(),
              (BivariatePolynomial(RationalFunction(fg.sign)) * combo).normalized());
    for (const auto& [res, other] : {std::pair{*fg.f_cofactors, Axis::X}, std::pair{*fg.g_cofactors, Axis::Y}})
      EXPECT_EQ((res.u * ab.a + res.v * ab.b).normalized(),
                BivariatePolynomial::from_univariate(res.resultant, other).normalized());
    const auto rel = multiplicative_dependence(sol.u1, sol.u2);
    const bool quadratic_drops = fg.f.size() < 3 || fg.f.coeff(2).is_zero();
    EXPECT_EQ(quadratic_drops, rel && rel->r == 2 && rel->s == -1) << to_string(sol.u1.value) << ", "
                                                                    << to_string(sol.u2.value);
  }
}

TEST(Divisibility, ConstantU2Powers) {
  for (long n = 1; n <= 6; ++n) {
    const auto rep = divisibility_check(constant_u2_solution(Q(2), Q(1), n));
    EXPECT_TRUE(rep.holds()) << n;
    EXPECT_EQ(rep.check, "divisibility");
  }
}

TEST(Divisibility, SearchHits) {
  const auto hits = search_solutions(default_solution_search());
  ASSERT_FALSE(hits.empty());
  std::size_t checked = 0;
  for (const auto& sol : hits) {
    const ConicResultants fg = build_fg(sol);
    if (fg.f.is_zero() || fg.g.is_zero()) continue;
    EXPECT_TRUE(divisibility_check(sol).holds());
    ++checked;
  }
  EXPECT_GT(checked, 0u);
}

TEST(Classification, Examples) {
  const auto c1 = classify_conic_solution(constant_u2_solution(Q(2), Q(1), 2));
  ASSERT_TRUE(c1.relation.has_value());
  EXPECT_EQ(std::make_tuple(c1.relation->r, c1.relation->s), std::make_tuple(0L, 1L));
  EXPECT_NE(std::find(c1.cases.begin(), c1.cases.end(), "bounded-relation"), c1.cases.end());
  // chi = 0 over {0, inf}, so the height alternative never applies there.
  EXPECT_EQ(std::find(c1.cases.begin(), c1.cases.end(), "small-height"), c1.cases.end());
  EXPECT_TRUE(c1.report.holds());

  // lambda = 0, u2 = -1: u2 + 1 vanishes and y = u1.
  const auto c2 = classify_conic_solution(make_solution(Q(0), R("t^3"), R("-1"), R("t^3"), S("t, inf")));
  EXPECT_EQ(c2.cases.front(), "vanishing-subsum");
  ASSERT_EQ(c2.vanishing_subsums.size(), 1u);
  EXPECT_EQ(c2.vanishing_subsums[0], "u2 + 1");
  EXPECT_EQ(c2.report.branch.substr(0, 16), "vanishing-subsum");
}

TEST(Classification, EveryFixtureFitsAnAlternative) {
  for (const auto& sol : search_solutions(default_solution_search())) {
    const auto cls = classify_conic_solution(sol);
    EXPECT_FALSE(cls.cases.empty());
    EXPECT_EQ(context_value(cls.report, "height_constant"), "573440");
  }
}

TEST(ImageDegree, Examples) {
  EXPECT_EQ(image_degree(M("1", "t^2", "t^3")), 3u);
  EXPECT_EQ(image_degree(M("1", "t", "t")), 1u);
  const auto rep = check_image_degree_bound(M("1", "t^2", "t^3"), S("t, inf"));
  EXPECT_TRUE(rep.holds());
  EXPECT_EQ(rep.lhs, "3");
  EXPECT_EQ(rep.rhs, "1146880");
  EXPECT_EQ(context_value(rep, "H(x)+H(y)"), "5");
  EXPECT_THROW(image_degree(M("1", "2", "3")), InvalidInput);
}

TEST(ImageDegree, WithConfigurationChecksAvoidance) {
  const ConicConfig config(Q(4));
  EXPECT_TRUE(check_image_degree_bound(M("1", "t^2", "t^2+2"), S("t, inf"), config).holds());
  EXPECT_THROW(check_image_degree_bound(M("1", "t", "t+3"), S("t, inf"), ConicConfig(Q(10))), ImageMeetsDivisor);
}

TEST(MultipleZeroSum, Examples) {
  const PlaceSet s = S("t, inf");
  // 1 + t^2 + 2t = (t + 1)^2.
  EXPECT_EQ(multiple_zero_sum(B("X+Y+1"), SUnit{R("t^2"), s}, SUnit{R("2*t"), s}), 1u);
  EXPECT_EQ(multiple_zero_sum(B("X-1"), SUnit{R("t"), s}, SUnit{R("t"), s}), 0u);
  const PlaceSet s2 = S("t, t^2-3*t+3, inf");
  EXPECT_EQ(multiple_zero_sum(B("X+Y-2"), SUnit{R("t"), s2}, SUnit{R("t^2-3*t+3"), s2}), 1u);
  EXPECT_THROW(multiple_zero_sum(B("X-Y"), SUnit{R("t"), s}, SUnit{R("t"), s}), InvalidInput);
  EXPECT_THROW(multiple_zero_sum(B("(X-1)^2"), SUnit{R("t"), s}, SUnit{R("t"), s}), InvalidInput);
}

TEST(MultipleZeroSum, MatchesRootMultiplicities) {
  Rng rng(41);
  const PlaceSet s = S("t, t-1, t+2, inf");
  const auto factors = detail::place_factors(s);
  const std::vector<std::string> polys{"X+Y+1", "X-Y-3", "X*Y+X+2", "X^2+Y-1"};
  std::size_t compared = 0;
  for (int i = 0; i < 60; ++i) {
    const SUnit u1{detail::random_unit(rng, factors, 6), s}, u2{detail::random_unit(rng, factors, 6), s};
    const auto a = B(rng.pick(polys));
    const RationalFunction value = a.evaluate(u1.value, u2.value);
    if (value.is_zero()) continue;
    const Polynomial outside = split_by_support(value.num(), s.finite_part()).first;
    EXPECT_EQ(multiple_zero_sum(a, u1, u2), excess_by_layers(outside));
    ++compared;
  }
  EXPECT_GT(compared, 10u);
}

TEST(MultipleZeroBound, Branches) {
  const PlaceSet s = S("t, inf");
  const auto dep = check_multiple_zero_bound(B("X+Y+1"), SUnit{R("t^2"), s}, SUnit{R("2*t"), s}, Q(1, 2));
  EXPECT_EQ(dep.branch, "dependence");
  EXPECT_TRUE(dep.holds());

  const PlaceSet s2 = S("t, t+1, inf");
  const auto ineq = check_multiple_zero_bound(B("X+Y+3"), SUnit{R("t"), s2}, SUnit{R("t+1"), s2}, Q(1, 2));
  EXPECT_EQ(ineq.branch, "inequality");
  EXPECT_EQ(ineq.lhs, "0");
  EXPECT_TRUE(ineq.holds());

  // t + (t^2 - 3t + 3) - 2 = (t - 1)^2.
  const PlaceSet s3 = S("t, t^2-3*t+3, inf");
  const auto inc = check_multiple_zero_bound(B("X+Y-2"), SUnit{R("t"), s3}, SUnit{R("t^2-3*t+3"), s3}, Q(1, 2));
  EXPECT_EQ(inc.branch, "inconclusive-unquantified-constant");
  EXPECT_EQ(inc.verdict, Verdict::Inconclusive);
  EXPECT_THROW(check_multiple_zero_bound(B("X+Y+1"), SUnit{R("t^2"), s}, SUnit{R("2*t"), s}, Q(0)), InvalidInput);
}

TEST(CoprimePair, Examples) {
  const PlaceSet s = S("t, t+1, inf");
  const SUnit u1{R("t"), s}, u2{R("t+1"), s};
  EXPECT_THROW(check_coprime_pair_gcd_bound(B("X-1"), B("X-1"), u1, u2, Q(1, 2)), InvalidInput);
  EXPECT_THROW(check_coprime_pair_gcd_bound(B("X-1"), B("(X-1)*Y"), u1, u2, Q(1, 2)), InvalidInput);
  const auto rep = check_coprime_pair_gcd_bound(B("X-1"), B("X*Y-1"), u1, u2, Q(1, 2));
  EXPECT_FALSE(rep.violated());
  EXPECT_EQ(context_value(rep, "m"), "1");
  EXPECT_EQ(context_value(rep, "n"), "1");
}

TEST(CoprimePair, ReducesToGcdSumBound) {
  Rng rng(42);
  std::size_t compared = 0;
  while (compared < 40) {
    const PlaceSet s = detail::random_places(rng, 3);
    const auto factors = detail::place_factors(s);
    const SUnit a{detail::random_unit(rng, factors, 6), s}, b{detail::random_unit(rng, factors, 6), s};
    if (a.value.is_constant() || b.value.is_constant() || multiplicative_dependence(a, b)) continue;
    const auto pair = check_coprime_pair_gcd_bound(B("X-1"), B("Y-1"), a, b, Q(1, 2));
    const auto direct = check_gcd_sum_bound(a, b);
    EXPECT_EQ(pair.lhs, direct.lhs);
    ASSERT_EQ(pair.parts.size(), 1u);
    EXPECT_EQ(pair.parts[0].verdict, direct.verdict);
    EXPECT_EQ(pair.parts[0].lhs, direct.lhs);
    EXPECT_EQ(pair.parts[0].rhs, direct.rhs);
    EXPECT_EQ(pair.parts[0].branch, direct.branch);
    ++compared;
  }
}

TEST(ShiftedDependence, RatioConstant) {
  const PlaceSet s = S("t, t+1, inf");
  // A and B both vanish at (t, -1 - t).
  const auto rep = check_shifted_dependence(SUnit{R("t"), s}, SUnit{R("t+1"), s}, R("t"), R("-1-t"), 1, 1, B("X+Y+1"));
  EXPECT_EQ(rep.branch, "ratio-constant");
  EXPECT_EQ(rep.lhs, "-1");
  EXPECT_TRUE(rep.holds());
  EXPECT_THROW(check_shifted_dependence(SUnit{R("t"), s}, SUnit{R("t+1"), s}, R("t"), R("-1-t"), 0, 0, B("X+Y+1")),
               InvalidInput);
  EXPECT_THROW(check_shifted_dependence(SUnit{R("t"), s}, SUnit{R("t+1"), s}, R("1"), R("-2"), 1, 1, B("X+Y+1")),
               InvalidInput);
}

TEST(SplitCase, LinearY) {
  // y = 2t - 2, lambda = 4, u1 = t: u2 = y^2 - u1^2 - 4 u1 - 1 = 3t^2 - 12t + 3.
  const auto sol = make_solution(Q(4), R("t"), R("3*t^2-12*t+3"), R("2*t-2"), S("t, t^2-4*t+1, inf"));
  const auto result = split_case_check(sol);
  ASSERT_TRUE(std::holds_alternative<BoundReport>(result));
  const auto& rep = std::get<BoundReport>(result);
  EXPECT_TRUE(rep.holds());
  EXPECT_NE(rep.branch, "none");
  EXPECT_THROW(split_case_check(constant_u2_solution(Q(2), Q(1), 2)), InvalidInput);
}

TEST(FermatType, Examples) {
  // (t + 1)^2 = 1 + t^2 + 2t with x = t^2, y = 2t.
  const auto rep = fermat_type_check(2, 1, 1, B("X+Y+1"), R("t^2"), R("2*t"), R("t+1"), S("t, inf"), Q(1, 2));
  EXPECT_EQ(rep.check, "fermat-type");
  EXPECT_EQ(rep.branch, "dependence");
  EXPECT_EQ(context_value(rep, "zero_count"), "2");
  EXPECT_EQ(context_value(rep, "excess_of_value"), "1");
  EXPECT_EQ(rep.lhs, "1");
  EXPECT_THROW(fermat_type_check(2, 1, 1, B("X+Y+1"), R("t^2"), R("2*t"), R("t"), S("t, inf"), Q(1, 2)),
               InvalidInput);
  EXPECT_THROW(fermat_type_check(1, 1, 1, B("X+Y+1"), R("t^2"), R("2*t"), R("t+1"), S("t, inf"), Q(1, 2)),
               InvalidInput);
}

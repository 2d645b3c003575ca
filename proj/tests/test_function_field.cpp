#include <gtest/gtest.h>

#include "test_util.hpp"

using namespace ffcheck;
using namespace testutil;

namespace {

/// -sum over places of min valuation, enumerated over the finite places
/// dividing some numerator or denominator and infinity.
long projective_height_by_valuations(const std::vector<RationalFunction>& fs) {
  Polynomial support(BigRational(1));
  for (const auto& f : fs)
    if (!f.is_zero()) support = support * f.num() * f.den();
  long total = 0;
  for (const auto& [place, mult] : squarefree_decomposition(support)) {
    (void)mult;
    for (const auto& r : rational_roots(place)) {
      const Polynomial lin{BigRational(-r), BigRational(1)};
      std::optional<long> lo;
      for (const auto& f : fs)
        if (!f.is_zero()) lo = lo ? std::min(*lo, valuation_along(f, lin)) : valuation_along(f, lin);
      total -= *lo;
    }
  }
  std::optional<long> lo;
  for (const auto& f : fs)
    if (!f.is_zero()) lo = lo ? std::min(*lo, valuation_at_infinity(f)) : valuation_at_infinity(f);
  return total - *lo;
}

}  // namespace

TEST(Height, Examples) {
  EXPECT_EQ(R("t+1").height(), 1u);
  EXPECT_EQ(R("(t^2-1)/t").height(), 2u);
  EXPECT_EQ(R("7/3").height(), 0u);
}

TEST(Height, PowersAndDivisors) {
  Rng rng(21);
  for (int i = 0; i < 100; ++i) {
    const RationalFunction f(random_nonzero_poly(rng, 4), random_nonzero_poly(rng, 4));
    if (f.is_constant()) continue;
    EXPECT_EQ(f.pow(3).height(), 3 * f.height());
    EXPECT_EQ(static_cast<std::size_t>(divisor_of(f).positive_degree()), f.height());
  }
}

TEST(HeightOutside, Examples) {
  EXPECT_EQ(height_outside(R("1/t"), S("t, inf")), 0u);
  EXPECT_EQ(height_outside(R("1/(t-1)"), S("t, inf")), 1u);
  EXPECT_EQ(height_outside(R("t^2"), S("t")), 2u);
}

TEST(ProjectiveHeight, Examples) {
  EXPECT_EQ(projective_height({R("(t^3+1)/(t-2)"), R("1")}), 3u);
  EXPECT_EQ(projective_height({R("t"), R("t^2"), R("1")}), 2u);
  EXPECT_EQ(projective_height({R("t^2/(t+1)"), R("(t-3)/(t+1)"), R("5")}),
            projective_height({R("t^2"), R("t-3"), R("5*(t+1)")}));
  EXPECT_THROW(projective_height({RationalFunction(), RationalFunction()}), InvalidInput);
}

TEST(ProjectiveHeight, MatchesValuationSum) {
  Rng rng(22);
  const std::vector<long> roots{-2, -1, 0, 1, 3};
  for (int i = 0; i < 100; ++i) {
    std::vector<RationalFunction> fs;
    const std::size_t n = 2 + rng.below(3);
    for (std::size_t j = 0; j < n; ++j) {
      RationalFunction f(BigRational(rng.range(1, 3)));
      for (long r : roots) f = f * RationalFunction(Polynomial{BigRational(-r), BigRational(1)}).pow(rng.range(-2, 2));
      fs.push_back(f);
    }
    EXPECT_EQ(static_cast<long>(projective_height(fs)), projective_height_by_valuations(fs));
    std::vector<RationalFunction> scaled;
    const RationalFunction lambda = R("(t-7)/(t^2+1)");
    for (const auto& f : fs) scaled.push_back(f * lambda);
    EXPECT_EQ(projective_height(scaled), projective_height(fs));
  }
}

TEST(Divisor, Examples) {
  const Divisor d1 = divisor_of(R("t"));
  ASSERT_EQ(d1.finite_terms().size(), 1u);
  EXPECT_EQ(d1.finite_terms()[0].place, P("t"));
  EXPECT_EQ(d1.finite_terms()[0].multiplicity, 1);
  EXPECT_EQ(d1.infinity_multiplicity(), -1);
  const Divisor d2 = divisor_of(R("(t-1)^2/t"));
  EXPECT_EQ(d2.to_string(), "(t:-1, t - 1:+2, inf:-1)");
  EXPECT_TRUE(divisor_of(R("5")).is_zero());
  EXPECT_THROW(divisor_of(RationalFunction()), InvalidInput);
}

TEST(Divisor, Homomorphism) {
  Rng rng(23);
  for (int i = 0; i < 100; ++i) {
    const RationalFunction f(random_nonzero_poly(rng, 3), random_nonzero_poly(rng, 3));
    const RationalFunction g(random_nonzero_poly(rng, 3), random_nonzero_poly(rng, 3));
    EXPECT_EQ(divisor_of(f * g), divisor_of(f) + divisor_of(g));
    EXPECT_EQ(divisor_of(f).degree(), 0);
  }
}

TEST(EulerCharacteristic, Examples) {
  EXPECT_EQ(euler_characteristic(S("t, inf")), 0);
  EXPECT_EQ(euler_characteristic(S("t, t+1, inf")), 1);
  EXPECT_EQ(euler_characteristic(S("t^2+1, inf")), 1);
}

TEST(PlaceSet, ParseErrors) {
  EXPECT_THROW(S("t, , inf"), ParseError);
  EXPECT_THROW(S("t, 3"), ParseError);
  try {
    S("t, t+*");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 5u);
  }
}

TEST(SUnit, Certification) {
  EXPECT_NO_THROW(certify_sunit(R("t^3/(t+1)"), S("t, t+1, inf")));
  try {
    certify_sunit(R("t-2"), S("t, inf"));
    FAIL();
  } catch (const NotAnSUnit& e) {
    EXPECT_EQ(e.witness(), "t - 2");
  }
  EXPECT_NO_THROW(certify_sunit(R("5"), S("t+3")));
  EXPECT_THROW(certify_sunit(R("t"), S("t")), NotAnSUnit);
}

TEST(Dependence, Examples) {
  const auto r1 = multiplicative_dependence(R("t"), R("t^2"));
  ASSERT_TRUE(r1);
  EXPECT_EQ(std::make_tuple(r1->r, r1->s), std::make_tuple(2L, -1L));
  EXPECT_EQ(r1->mu, 1);
  const auto r2 = multiplicative_dependence(R("t"), R("2*t"));
  ASSERT_TRUE(r2);
  EXPECT_EQ(std::make_tuple(r2->r, r2->s), std::make_tuple(1L, -1L));
  EXPECT_EQ(r2->mu, make_rational(1, 2));
  const PlaceSet s = S("t, t+1, inf");
  EXPECT_FALSE(multiplicative_dependence(certify_sunit(R("t"), s), certify_sunit(R("t+1"), s)));
}

TEST(Dependence, RandomRelationsExpandToMu) {
  Rng rng(24);
  const std::vector<Polynomial> basis{P("t"), P("t+1"), P("t^2+2")};
  for (int i = 0; i < 200; ++i) {
    RationalFunction u1(BigRational(rng.range(1, 3)));
    RationalFunction u2(BigRational(-rng.range(1, 3)));
    const long p = rng.range(-3, 3), q = rng.range(-3, 3);
    for (const auto& b : basis) {
      const long e = rng.range(-2, 2);
      u1 = u1 * RationalFunction(b).pow(p * e);
      u2 = u2 * RationalFunction(b).pow(q * e);
    }
    const auto rel = multiplicative_dependence(u1, u2);
    if (!rel) {
      ADD_FAILURE() << "missed relation for " << to_string(u1) << ", " << to_string(u2);
      continue;
    }
    EXPECT_TRUE(rel->r > 0 || (rel->r == 0 && rel->s > 0));
    EXPECT_EQ(std::gcd(std::labs(rel->r), std::labs(rel->s)), 1);
    EXPECT_EQ(u1.pow(rel->r) * u2.pow(rel->s), RationalFunction(rel->mu));
    if (u1.is_constant() && u2.is_constant()) continue;
    const auto swapped = multiplicative_dependence(u2, u1);
    ASSERT_TRUE(swapped);
    EXPECT_EQ(std::labs(swapped->r), std::labs(rel->s));
    EXPECT_EQ(std::labs(swapped->s), std::labs(rel->r));
  }
}

TEST(Wronskian, Examples) {
  EXPECT_EQ(wronskian({R("1"), R("t")}), R("1"));
  EXPECT_TRUE(wronskian({R("t"), R("2*t")}).is_zero());
  EXPECT_EQ(wronskian({R("1"), R("t"), R("t^2")}), R("2"));
}

TEST(Wronskian, ZeroIffLinearRelation) {
  Rng rng(25);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 2 + rng.below(2);
    std::vector<RationalFunction> fs;
    for (std::size_t j = 0; j < n; ++j) fs.push_back(RationalFunction(random_poly(rng, 2, 2), random_nonzero_poly(rng, 1, 2)));
    if (rng.coin()) fs.back() = fs[0] * RationalFunction(BigRational(rng.range(-3, 3))) + fs[1];
    const bool dependent = !linear_relations(fs).empty();
    EXPECT_EQ(wronskian(fs).is_zero(), dependent);
  }
}

TEST(Mobius, NormalizationPreservesHeights) {
  const PlaceSet s = S("t-1, t-2, t+3");
  const MobiusMap m = normalizing_map(s);
  const PlaceSet moved = m.pull_back(s);
  EXPECT_TRUE(moved.includes_infinity());
  EXPECT_TRUE(moved.contains_point(BigRational(0)));
  EXPECT_EQ(moved.euler_characteristic(), s.euler_characteristic());
  const RationalFunction u = R("(t-1)^2*(t+3)/(t-2)^3");
  EXPECT_EQ(m.pull_back(u).height(), u.height());
  EXPECT_TRUE(is_sunit(m.pull_back(u), moved));
}

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

RationalFunction random_rf(Rng& rng) {
  return RationalFunction(random_poly(rng, 3, 4), random_nonzero_poly(rng, 2, 4));
}

}  // namespace

TEST(Frame, Construction) {
  EXPECT_EQ(dprime(R("t^3"), make_frame(S("t, inf"), Q(0))), R("3*t^3"));
  EXPECT_EQ(dprime(R("t^2"), make_frame(S("t, t-1, inf"), Q(1))), R("2*t*(t-1)"));
  EXPECT_THROW(make_frame(S("t-1, inf"), Q(0)), InvalidFrame);
  EXPECT_THROW(make_frame(S("t, t-1"), Q(0)), InvalidFrame);
}

TEST(Dprime, Examples) {
  const auto frame = make_frame(S("t, inf"), Q(0));
  EXPECT_EQ(dprime(R("t"), frame), R("t"));
  EXPECT_TRUE(dprime(R("7/2"), frame).is_zero());
  EXPECT_EQ(dprime(R("t^2"), frame), R("2*t^2"));
}

TEST(Dprime, LeibnizAndKernel) {
  Rng rng(31);
  const auto frame = make_frame(S("t+2, inf"), Q(-2));
  for (int i = 0; i < 200; ++i) {
    const RationalFunction f = random_rf(rng), g = random_rf(rng);
    EXPECT_EQ(dprime(f * g, frame), dprime(f, frame) * g + f * dprime(g, frame));
    EXPECT_EQ(dprime(f, frame).is_zero(), f.is_constant());
  }
}

TEST(LogDerivative, Examples) {
  const auto f1 = make_frame(S("t, inf"), Q(0));
  EXPECT_EQ(log_derivative(certify_sunit(R("t"), f1.places()), f1).theta, R("1"));
  const auto f2 = make_frame(S("t, t-1, inf"), Q(0));
  const auto ld = log_derivative(certify_sunit(R("t-1"), f2.places()), f2);
  EXPECT_EQ(ld.theta, R("t/(t-1)"));
  EXPECT_EQ(ld.theta.height(), 1u);
  EXPECT_TRUE(log_derivative(certify_sunit(R("5"), f1.places()), f1).theta.is_zero());
}

TEST(LogDerivative, AdditiveOnRandomUnits) {
  Rng rng(32);
  const PlaceSet s = S("t, t-1, t+3, t^2+2, inf");
  const auto frame = make_frame(s, Q(0));
  const auto factors = detail::place_factors(s);
  for (int i = 0; i < 100; ++i) {
    const RationalFunction u = detail::random_unit(rng, factors, 10);
    const RationalFunction v = detail::random_unit(rng, factors, 10);
    const auto lu = log_derivative(SUnit{u, s}, frame).theta;
    const auto lv = log_derivative(SUnit{v, s}, frame).theta;
    EXPECT_EQ(log_derivative(SUnit{u * v, s}, frame).theta, lu + lv);
    EXPECT_LE(static_cast<long>(lu.height()), s.euler_characteristic());
  }
}

TEST(DerivativeHeight, Examples) {
  const auto f1 = make_frame(S("t, inf"), Q(0));
  const auto r1 = check_derivative_height(R("t+1"), f1);
  EXPECT_TRUE(r1.holds());
  EXPECT_EQ(r1.lhs, "1");
  EXPECT_EQ(r1.rhs, "1");
  EXPECT_EQ(context_value(r1, "a_prime"), "t");

  const auto r2 = check_derivative_height(R("4"), f1);
  EXPECT_TRUE(r2.holds());
  EXPECT_EQ(r2.lhs, "0");

  const auto f3 = make_frame(S("t, t-1, inf"), Q(0));
  const auto r3 = check_derivative_height(R("(t-1)^2"), f3);
  EXPECT_TRUE(r3.holds());
  const RationalFunction ap = R("2*t*(t-1)");
  EXPECT_EQ(context_value(r3, "a_prime"), to_string(ap));
  EXPECT_GE(valuation_along(ap, P("t-1")), 1);

  EXPECT_THROW(check_derivative_height(R("1/(t-2)"), f1), InvalidInput);
}

TEST(DerivativeHeight, RandomSIntegers) {
  Rng rng(33);
  const PlaceSet s = S("t, t+1, t^2-3, inf");
  const auto frame = make_frame(s, Q(-1));
  const auto factors = detail::place_factors(s);
  for (int i = 0; i < 100; ++i) {
    const RationalFunction a = RationalFunction(random_poly(rng, 4, 4)) * detail::random_unit(rng, factors, 6);
    EXPECT_TRUE(check_derivative_height(a, frame).holds()) << to_string(a);
  }
}

TEST(PolyDerivativeImage, Examples) {
  const PlaceSet s = S("t, inf");
  const auto frame = make_frame(s, Q(0));
  const SUnit u1{R("t"), s}, u2{R("t^2"), s};
  const auto img = poly_derivative_image(B("X+Y"), u1, u2, frame);
  EXPECT_TRUE(img.identity_ok);
  EXPECT_EQ(img.b, B("X+2*Y"));
  EXPECT_EQ(img.b.evaluate(u1.value, u2.value), R("t+2*t^2"));
  EXPECT_TRUE(poly_derivative_image(B("1"), u1, u2, frame).b.is_zero());
  EXPECT_EQ(poly_derivative_image(B("X*Y"), u1, u2, frame).b, B("3*X*Y"));
}

TEST(PolyDerivativeImage, RandomIdentity) {
  Rng rng(34);
  const PlaceSet s = S("t, t-2, t^2+1, inf");
  const auto frame = make_frame(s, Q(2));
  const auto factors = detail::place_factors(s);
  const std::vector<std::string> polys{"X^2+3*X+Y+1", "X*Y-2", "X^3-Y^2+X*Y", "Y^2+X+5"};
  for (int i = 0; i < 40; ++i) {
    const SUnit u1{detail::random_unit(rng, factors, 6), s}, u2{detail::random_unit(rng, factors, 6), s};
    EXPECT_TRUE(poly_derivative_image(B(rng.pick(polys)), u1, u2, frame).identity_ok);
  }
}

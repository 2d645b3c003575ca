#include <gtest/gtest.h>

#include "test_util.hpp"

using namespace ffcheck;
using namespace testutil;

namespace {

BigRational at(const Polynomial& p, long t) { return p.evaluate(BigRational(t)); }

/// Evaluates the defining form of each divisor pointwise from the
/// coordinates, without multiplying polynomials.
using PointForm = BigRational (*)(const BigRational&, const BigRational&, const BigRational&);

void expect_witness_matches(const FamilyCertificate& c, PointForm form) {
  for (long t = -4; t <= 4; ++t) {
    const BigRational x0 = at(c.morphism[0], t), x1 = at(c.morphism[1], t), x2 = at(c.morphism[2], t);
    EXPECT_EQ(form(x0, x1, x2), at(c.avoidance_witness, t)) << c.family << " n=" << c.n << " t=" << t;
  }
}

BigRational cusp_form(const BigRational& x, const BigRational& y, const BigRational& z) { return z * y * y - x * x * x; }
BigRational node_form(const BigRational& x, const BigRational& y, const BigRational& z) {
  return z * y * y - x * x * x - x * x * z;
}
BigRational secant_form(const BigRational& x0, const BigRational& x1, const BigRational& x2) {
  return x0 * (x1 * x1 - x2 * x2 - x0 * x0);
}
BigRational three_lines_form(const BigRational& x0, const BigRational& x1, const BigRational& x2) { return x0 * x1 * x2; }
BigRational tangent_form(const BigRational& x0, const BigRational& x1, const BigRational& x2) {
  return x0 * x1 * ((x1 - x0) * x2 + x0 * x0);
}

Polynomial mono(long c, std::size_t k) { return Polynomial::monomial(BigRational(c), k); }

bool proportional(const BivariatePolynomial& a, const BivariatePolynomial& b) {
  return a.normalized() == b.normalized();
}

}  // namespace

TEST(Cusp, Witnesses) {
  for (unsigned n = 1; n <= 5; ++n) {
    const auto c = cusp_family(n, P("1+t"));
    EXPECT_EQ(c.avoidance_witness, mono(1, 6 * n));
    expect_witness_matches(c, cusp_form);
    EXPECT_EQ(c.claim_verdict, Verdict::Holds) << n;
    EXPECT_EQ(c.euler_char, 0);
  }
  const auto c3 = cusp_family(3, P("2+t^2"));
  EXPECT_EQ(c3.avoidance_witness, mono(1, 18));
  EXPECT_EQ(c3.degree_claim, "degree >= 8");
  EXPECT_GE(c3.degree, 8u);
  EXPECT_THROW(cusp_family(2, P("t")), InvalidInput);
}

TEST(Cusp, ConstantPHasFixedImage) {
  for (unsigned n = 1; n <= 4; ++n) {
    const auto c = cusp_family(n, P("1"));
    EXPECT_EQ(c.degree, 3u);
    EXPECT_EQ(c.claim_verdict, 2 * n <= 3 ? Verdict::Holds : Verdict::Violated);
    EXPECT_FALSE(c.notes.empty());
  }
}

TEST(Node, Witnesses) {
  for (unsigned n = 1; n <= 5; ++n) {
    const auto c = node_family(n);
    EXPECT_EQ(c.avoidance_witness, mono(512, 3 * n));
    expect_witness_matches(c, node_form);
    EXPECT_EQ(c.degree, 3u);
    EXPECT_EQ(c.claim_verdict, Verdict::Inconclusive);
  }
}

TEST(Secant, DegreeAndWitness) {
  for (unsigned n = 2; n <= 10; ++n) {
    const auto c = secant_conic_family(n);
    EXPECT_EQ(c.degree, n);
    EXPECT_EQ(c.claim_verdict, Verdict::Holds);
    EXPECT_EQ(c.avoidance_witness, mono(-8, n + 3));
    expect_witness_matches(c, secant_form);
    const auto [x, y] = c.morphism.affine_chart();
    EXPECT_EQ(x * x - y * y, RationalFunction(P("1")) - RationalFunction(mono(1, n)));
  }
  EXPECT_THROW(secant_conic_family(1), InvalidInput);
}

TEST(Secant, LightConeCoordinates) {
  const auto c = secant_conic_family(3);
  const auto [x, y] = c.morphism.affine_chart();
  const RationalFunction xi = x - y, eta = x + y;
  EXPECT_EQ(xi * eta, RationalFunction(1) - xi.pow(3));
  EXPECT_TRUE(proportional(implicitize(xi, eta).equation, B("X*Y+X^3-1")));
}

TEST(ThreeLines, DegreeAndEquation) {
  for (unsigned n = 1; n <= 8; ++n) {
    const auto c = three_lines_family(n);
    EXPECT_EQ(c.degree, n);
    EXPECT_EQ(c.avoidance_witness, mono(1, n + 1));
    expect_witness_matches(c, three_lines_form);
  }
  const auto c4 = three_lines_family(4);
  const auto [x, y] = c4.morphism.affine_chart();
  EXPECT_TRUE(proportional(implicitize(x, y).equation, B("Y-X^4")));
}

TEST(TangentCrossing, DegreeAndWitness) {
  for (unsigned n = 1; n <= 8; ++n) {
    const auto c = tangent_crossing_family(n);
    EXPECT_EQ(c.degree, n);
    EXPECT_EQ(c.avoidance_witness, mono(1, n + 2));
    ASSERT_EQ(c.component_witnesses.size(), 3u);
    EXPECT_EQ(c.component_witnesses[2].second, mono(1, n + 1));
    expect_witness_matches(c, tangent_form);
  }
}

TEST(FamilyMember, Dispatch) {
  for (const auto& name : family_names()) EXPECT_EQ(family_member(name, 3).family, name);
  EXPECT_THROW(family_member("conchoid", 3), InvalidInput);
}

TEST(Unboundedness, Tables) {
  const auto secant = unboundedness_table("secant", 10);
  EXPECT_EQ(secant.rows.front().n, 2u);
  EXPECT_EQ(secant.rows.size(), 9u);
  EXPECT_TRUE(secant.strictly_increasing);
  EXPECT_TRUE(secant.euler_constant);
  EXPECT_EQ(secant.verdict, Verdict::Holds);

  const auto node = unboundedness_table("node", 5);
  EXPECT_FALSE(node.strictly_increasing);
  EXPECT_EQ(node.verdict, Verdict::Inconclusive);

  for (const auto& name : {"three-lines", "tangent-crossing", "cusp"})
    EXPECT_EQ(unboundedness_table(name, 6).verdict, Verdict::Holds) << name;
  EXPECT_THROW(unboundedness_table("secant", 1), InvalidInput);
}

TEST(Unboundedness, Csv) {
  const auto table = unboundedness_table("three-lines", 3);
  EXPECT_EQ(to_csv(table.rows),
            "family,n,degree,euler_char,witness\n"
            "three-lines,1,1,0,t^2\n"
            "three-lines,2,2,0,t^3\n"
            "three-lines,3,3,0,t^4\n");
}

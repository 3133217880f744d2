#include "bsg/checks.hpp"
#include "bsg/error.hpp"
#include "bsg/coupling.hpp"
#include "bsg/random.hpp"

#include <gtest/gtest.h>

namespace bsg {
namespace {

const BSParams kBS23 = BSParams::make(2, 3);

TEST(LTheta, Examples) {
  LThetaValue a = l_theta(Word::a(), kBS23);
  EXPECT_EQ(a.coefficients.size(), 1u);
  EXPECT_EQ(a.coefficients.at(0), 1);
  EXPECT_EQ(a.c, 1);
  EXPECT_EQ(l_theta(Word::t(), kBS23).c, 0);
  LThetaValue n = l_theta(commutator(Word::a(), Word::parse("t a T")), kBS23);
  EXPECT_TRUE(n.in_kernel);
  EXPECT_EQ(n.c, 0);
}

TEST(LTheta, AdditiveOnTheKernel) {
  Rng rng(61);
  for (int i = 0; i < 100; ++i) {
    Word x = random_word(rng, 6, 3), y = random_word(rng, 6, 3);
    x *= Word::t(-x.t_exponent_sum());
    y *= Word::t(-y.t_exponent_sum());
    EXPECT_EQ(l_theta(x * y, kBS23).c, l_theta(x, kBS23).c + l_theta(y, kBS23).c);
  }
}

TEST(Beta, Examples) {
  EXPECT_EQ(beta_cocycle(0, Real(Rational(1, 5)), Real(Rational(3, 2))), 0);
  EXPECT_EQ(beta_cocycle(1, Real(Rational(1, 5)), Real(Rational(3, 2))), 1);
  EXPECT_THROW(beta_cocycle(1, Real(2), Real(Rational(3, 2))), Error);
}

TEST(Beta, CocycleLaw) {
  Real theta(Rational(3, 2));
  for (Rational x : {Rational(0), Rational(1, 5), Rational(7, 5)})
    for (int n1 = -6; n1 <= 6; ++n1)
      for (int n2 = -6; n2 <= 6; ++n2) {
        Real shifted = beta_shift(n2, Real(x), theta);
        EXPECT_EQ(beta_cocycle(n1 + n2, Real(x), theta),
                  beta_cocycle(n2, Real(x), theta) + beta_cocycle(n1, shifted, theta));
      }
}

TEST(Beta, GoldenThetaIsDecidedExactly) {
  Real golden = parse_real("golden");
  EXPECT_EQ(beta_cocycle(3, Real(Rational(1, 2)), golden), 2);  // 1/2 - 3 + 2 phi = 0.736...
}

TEST(Rotation, Examples) {
  RotationOrbit deg = rotation_model_orbit(Real(2), 1, 10);
  ASSERT_TRUE(deg.period.has_value());
  EXPECT_EQ(*deg.period, 1);
  EXPECT_TRUE(deg.degenerate);
  RotationOrbit r = rotation_model_orbit(Real(Rational(3, 2)), 6, 10);
  ASSERT_TRUE(r.period.has_value());
  EXPECT_EQ(*r.period, 12);
  EXPECT_FALSE(r.degenerate);
}

TEST(Rotation, GoldenDiscrepancy) {
  RotationOrbit g = rotation_model_orbit(parse_real("golden"), 1, 100000);
  ASSERT_TRUE(g.discrepancy.has_value());
  EXPECT_LT(*g.discrepancy, 1e-3);
}

TEST(Rotation, StarDiscrepancyOfAGrid) {
  EXPECT_DOUBLE_EQ(star_discrepancy({0.0, 0.25, 0.5, 0.75}), 0.25);
}

CouplingPoint point(Rational x, long long kappa, unsigned level = 6) {
  return {Real(x), ProfiniteInt(kBS23, level, level, Int(kappa))};
}

TEST(Coupling, IdentityFixesPoints) {
  CouplingPoint pt = point(Rational(1, 3), 17);
  EXPECT_TRUE(same_point(coupling_action(Word(), pt, Real(Rational(3, 2)), kBS23), pt));
}

TEST(Coupling, APowersMatchTheRotation) {
  Real theta(Rational(3, 2));
  CouplingPoint pt = point(Rational(1, 3), 5);
  Real start = rotation_coordinate(pt, 6);
  for (int k = 1; k <= 12; ++k) {
    Real got = rotation_coordinate(coupling_action(Word::a(k), pt, theta, kBS23), 6);
    Real expect = mod(start + Real(k) * (theta - Real(1)), Real(6));
    EXPECT_TRUE(got.same(expect)) << k << ": " << got.str() << " vs " << expect.str();
  }
}

TEST(Coupling, CommutatorElementActsTrivially) {
  Word w = commutator(Word::a(), Word::parse("t a T"));
  ASSERT_FALSE(is_identity(w, kBS23));
  Real theta(Rational(3, 2));
  for (int i = 0; i < 8; ++i)
    for (long long kappa : {0LL, 1LL, 7LL, 100LL}) {
      CouplingPoint pt = point(Rational(i, 8), kappa);
      EXPECT_TRUE(same_point(coupling_action(w, pt, theta, kBS23), pt)) << pt.str();
    }
}

TEST(Coupling, IsAnAction) {
  Rng rng(62);
  Real theta(Rational(3, 2));
  for (int i = 0; i < 60; ++i) {
    Word x = random_word(rng, 3, 2), y = random_word(rng, 3, 2);
    CouplingPoint pt = point(Rational(uniform_int(rng, 0, 9), 10), uniform_int(rng, 0, 1000), 16);
    CouplingPoint lhs = coupling_action(x * y, pt, theta, kBS23);
    CouplingPoint rhs = coupling_action(x, coupling_action(y, pt, theta, kBS23), theta, kBS23);
    EXPECT_TRUE(same_point(lhs, rhs)) << x.str() << " | " << y.str();
  }
}

TEST(Cesaro, FullSetsHaveNoGap) {
  CesaroSetup s;
  s.theta = parse_real("golden");
  s.A1 = s.A2 = {Real(0), s.theta};
  s.horizon = 200;
  CesaroReport r = cesaro_mixing_test(s);
  EXPECT_EQ(r.gap.sign(), 0);
}

TEST(Cesaro, TrivialBetaFactorsThroughTheRotation) {
  CesaroSetup s;
  s.theta = parse_real("golden");
  s.A1 = {Real(0), Real(Rational(1, 2))};
  s.A2 = {Real(Rational(1, 4)), Real(1)};
  s.B1 = {{{0, 1}}};
  s.B2 = {{{3, 0}}};
  s.horizon = 300;
  s.trivial_beta = true;
  CesaroReport r = cesaro_mixing_test(s);
  Real scale(cylinder_measure(s.B1) * cylinder_measure(s.B2));
  EXPECT_NEAR(r.gap.to_double(), (scale * r.rotation_gap).to_double(), 1e-12);
}

TEST(ComponentCounts, TwelveTwoThree) {
  ComponentTable t = component_counts(1, 12, 2, 3, 3, 1);
  EXPECT_EQ(t.counts[0][0], 1);
  EXPECT_EQ(t.counts[1][0], 2);
  EXPECT_EQ(t.counts[2][0], 4);
  EXPECT_EQ(t.counts[3][0], 4);
  EXPECT_EQ(t.counts[0][1], 3);
  EXPECT_EQ(t.counts[1][1], 6);
  EXPECT_TRUE(t.divisibility_ok);
  EXPECT_THROW(component_counts(2, 12, 2, 3, 1, 1), Error);
}

TEST(Periodicity, Examples) {
  BSParams bp = BSParams::make(4, 6);
  long long M = to_ll(ProfiniteInt::modulus(bp, 2, 2));
  EXPECT_TRUE(periodicity_check(odometer(M), to_ll(bp.d0), to_ll(bp.p0), to_ll(bp.q0), 2, 2).periodic);
  PeriodicityResult r = periodicity_check(odometer(7), 2, 2, 3, 0, 0);
  EXPECT_FALSE(r.periodic);
}

TEST(Dynamics, AllChecksReducedHorizon) {
  Rng rng(63);
  DynamicsCheckSizes sizes;
  sizes.discrepancy_steps = 20000;
  sizes.discrepancy_bound = 5e-3;
  sizes.cesaro_horizon = 2000;
  sizes.table_instances = 20;
  for (const auto& r : check_dynamics(rng, sizes)) EXPECT_TRUE(r.passed()) << r.name << ": " << r.first_failure;
}

}  // namespace
}  // namespace bsg

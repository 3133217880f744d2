#include "bsg/checks.hpp"
#include "bsg/error.hpp"
#include "bsg/profinite.hpp"
#include "bsg/random.hpp"

#include <gtest/gtest.h>

namespace bsg {
namespace {

const BSParams kBS23 = BSParams::make(2, 3);
const BSParams kBS46 = BSParams::make(4, 6);

ProfiniteInt P(const BSParams& bp, unsigned K, unsigned L, long long v) { return ProfiniteInt(bp, K, L, Int(v)); }

TEST(Profinite, Modulus) {
  EXPECT_EQ(ProfiniteInt::modulus(kBS23, 2, 1), 12);
  EXPECT_EQ(ProfiniteInt::modulus(kBS46, 1, 1), 12);
  EXPECT_EQ(ProfiniteInt::modulus(kBS46, 0, 0), 2);
}

TEST(Profinite, ParseRoundTrip) {
  ProfiniteInt x = ProfiniteInt::parse(kBS23, "7@(2,1)");
  EXPECT_EQ(x.residue(), 7);
  EXPECT_EQ(x.K(), 2u);
  EXPECT_EQ(x.L(), 1u);
  EXPECT_EQ(x.str(), "7@(2,1)");
  EXPECT_THROW(ProfiniteInt::parse(kBS23, "12@(2,1)"), Error);
  EXPECT_THROW(ProfiniteInt::parse(kBS23, "3@2,1"), Error);
}

TEST(Profinite, AdditiveIdentityAndSquare) {
  ProfiniteInt x = P(kBS23, 2, 1, 7);
  EXPECT_EQ(x + P(kBS23, 2, 1, 0), x);
  EXPECT_EQ((x * x).residue(), 1);
}

TEST(Profinite, MixedLevelsMeetAtTheMinimum) {
  ProfiniteInt s = P(kBS23, 1, 1, 3) + P(kBS23, 2, 1, 5);
  EXPECT_EQ(s.K(), 1u);
  EXPECT_EQ(s.residue(), 2);
  EXPECT_THROW(P(kBS23, 1, 1, 1) + P(kBS46, 1, 1, 1), Error);
}

TEST(Profinite, RingLawsAndCoherence) {
  Rng rng(51);
  for (const auto& bp : standard_params())
    for (int i = 0; i < 200; ++i) {
      unsigned K = static_cast<unsigned>(uniform_int(rng, 0, 3)), L = static_cast<unsigned>(uniform_int(rng, 0, 3));
      Int M = ProfiniteInt::modulus(bp, K, L);
      auto draw = [&] { return ProfiniteInt(bp, K, L, Int(uniform_int(rng, 0, to_ll(M) - 1))); };
      ProfiniteInt x = draw(), y = draw(), z = draw();
      EXPECT_EQ(x * (y + z), x * y + x * z);
      EXPECT_EQ((x - y) + y, x);
      unsigned K2 = static_cast<unsigned>(uniform_int(rng, 0, K)), L2 = static_cast<unsigned>(uniform_int(rng, 0, L));
      EXPECT_EQ((x * y).reduce(K2, L2), x.reduce(K2, L2) * y.reduce(K2, L2));
      EXPECT_EQ((x + y).reduce(K2, L2), x.reduce(K2, L2) + y.reduce(K2, L2));
    }
}

TEST(Profinite, Units) {
  EXPECT_TRUE(is_unit(P(kBS23, 2, 1, 1)));
  EXPECT_TRUE(is_unit(P(kBS23, 2, 1, 5)));
  EXPECT_FALSE(is_unit(P(kBS23, 2, 1, 4)));
  EXPECT_EQ(unit_inverse(P(kBS23, 2, 1, 5)) * P(kBS23, 2, 1, 5), P(kBS23, 2, 1, 1));
  EXPECT_THROW(unit_inverse(P(kBS23, 2, 1, 4)), Error);
  for (long long a = 0; a < 36; ++a)
    for (long long b = 0; b < 36; ++b) {
      ProfiniteInt x = P(kBS23, 2, 2, a), y = P(kBS23, 2, 2, b);
      if (is_unit(x) && is_unit(y)) EXPECT_TRUE(is_unit(x * y));
    }
}

TEST(Profinite, Sigma) {
  EXPECT_EQ(sigma_map(P(kBS23, 2, 1, 5), 0, 0), P(kBS23, 2, 1, 5));
  ProfiniteInt y = sigma_map(P(kBS46, 1, 1, 2), 1, 0);
  EXPECT_EQ(y.residue(), 4);
  ProfiniteInt back = sigma_inverse(y, 1, 0);
  EXPECT_EQ(back.residue(), 2);
  EXPECT_EQ(back.K(), 0u);
  EXPECT_THROW(sigma_map(P(kBS46, 1, 1, 3), 1, 0), Error);   // not in E_{0,0}
  EXPECT_THROW(sigma_map(P(kBS46, 1, 1, 2), 2, 0), Error);   // level budget
}

TEST(Profinite, SigmaComposes) {
  for (long long v = 0; v < 2 * 8 * 27; v += 2) {
    ProfiniteInt x = P(kBS46, 3, 3, v);
    EXPECT_EQ(sigma_map(sigma_map(x, 1, 1), 1, 0), sigma_map(x, 2, 1));
  }
}

TEST(Profinite, UnitFixingExamples) {
  EXPECT_TRUE(u0_membership(P(kBS23, 2, 1, 1)));
  EXPECT_TRUE(check_unit_fixes_level(P(kBS23, 2, 1, 1), 0, 0));
  ProfiniteInt r = P(kBS46, 1, 1, 7);
  EXPECT_TRUE(is_unit(r));
  EXPECT_TRUE(u0_membership(r));
  EXPECT_TRUE(check_unit_fixes_level(r, 0, 0));
  for (long long x = 0; x < 12; x += 2) EXPECT_EQ((r * P(kBS46, 1, 1, x)).residue(), x);
  EXPECT_THROW(u0_membership(P(kBS46, 1, 1, 4)), Error);
}

TEST(Profinite, TorsionFreeShadowByEnumeration) {
  for (const auto& bp : {kBS23, kBS46})
    for (long long m = 1; m <= 12; ++m) {
      ProfiniteInt zero = P(bp, 3, 2, 0);
      for (long long v = 0; v < to_ll(zero.modulus()); v += to_ll(bp.d0)) {
        ProfiniteInt x = P(bp, 3, 2, v);
        if ((P(bp, 3, 2, m) * x).residue() != 0) continue;
        auto [K2, L2] = torsion_free_level(x, Int(m));
        EXPECT_EQ(x.reduce(K2, L2).residue(), 0) << bp.str() << " m=" << m << " x=" << v;
      }
    }
}

TEST(Profinite, ExhaustiveSweepSmall) {
  for (const auto& r : check_profinite(standard_params(), Int(500))) EXPECT_TRUE(r.passed()) << r.name << ": " << r.first_failure;
}

}  // namespace
}  // namespace bsg

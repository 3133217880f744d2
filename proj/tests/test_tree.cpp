#include "bsg/checks.hpp"
#include "bsg/error.hpp"
#include "bsg/random.hpp"
#include "bsg/tree.hpp"

#include <gtest/gtest.h>

#include <set>

namespace bsg {
namespace {

const BSParams kBS23 = BSParams::make(2, 3);

TreeVertex V(const char* s, const BSParams& bp = kBS23) { return canonical_vertex(Word::parse(s), bp); }

TEST(Vertex, APowersGiveTheBaseVertex) { EXPECT_EQ(V("a^7"), base_vertex()); }

TEST(Vertex, CosetTestDecidesEquality) {
  // a^q t = t a^p, so a^q t, t a^p and t name the same coset; a^p t does not.
  EXPECT_EQ(V("t a^3"), V("t"));
  EXPECT_TRUE(same_coset(Word::parse("t a^3"), Word::parse("t"), kBS23));
  EXPECT_EQ(V("a^3 t"), V("t a^2"));
  EXPECT_EQ(V("a^3 t"), V("t"));
  EXPECT_NE(V("a^2 t"), V("t"));
  EXPECT_NE(V("t"), base_vertex());
  EXPECT_FALSE(same_coset(Word::parse("t"), Word(), kBS23));
}

TEST(Neighbors, BaseVertexHasDegreeFive) {
  auto nb = neighbors(base_vertex(), kBS23);
  ASSERT_EQ(nb.size(), 5u);
  int out = 0;
  std::set<TreeVertex> seen;
  for (const auto& [e, w] : nb) {
    if (e.sign > 0) ++out;
    seen.insert(w);
  }
  EXPECT_EQ(out, 3);
  EXPECT_EQ(seen.size(), 5u);
  for (const char* w : {"t", "a t", "a^2 t"}) EXPECT_TRUE(seen.count(V(w))) << w;
}

TEST(Neighbors, DegreeIsConstant) {
  Rng rng(21);
  for (const auto& bp : standard_params())
    for (int i = 0; i < 50; ++i) {
      TreeVertex v = canonical_vertex(random_word(rng, 5, 3), bp);
      EXPECT_EQ(neighbors(v, bp).size(), static_cast<std::size_t>(bp.abs_p() + bp.abs_q()));
    }
}

TEST(Geodesic, TrivialAndTwoStep) {
  EXPECT_TRUE(geodesic(base_vertex(), base_vertex(), kBS23).empty());
  auto path = geodesic(base_vertex(), V("t^2"), kBS23);
  ASSERT_EQ(path.size(), 2u);
  EXPECT_EQ(path[0].sign, 1);
  EXPECT_EQ(path[1].sign, 1);
}

TEST(Geodesic, ReversalNegatesSigns) {
  Rng rng(22);
  for (int i = 0; i < 60; ++i) {
    TreeVertex u = canonical_vertex(random_word(rng, 4, 3), kBS23);
    TreeVertex v = canonical_vertex(random_word(rng, 4, 3), kBS23);
    auto fw = geodesic(u, v, kBS23), bw = geodesic(v, u, kBS23);
    ASSERT_EQ(fw.size(), bw.size());
    for (std::size_t k = 0; k < fw.size(); ++k) EXPECT_EQ(fw[k], bw[fw.size() - 1 - k].reversed());
    for (std::size_t k = 0; k + 1 < fw.size(); ++k) {
      EXPECT_EQ(fw[k].to(), fw[k + 1].from());
      EXPECT_FALSE(fw[k].same_edge(fw[k + 1]));
    }
  }
}

TEST(Geodesic, RadiusExceeded) {
  EXPECT_THROW(geodesic(base_vertex(), V("t^5"), kBS23, 3), Error);
}

TEST(StabilizerIndex, Examples) {
  EXPECT_EQ(stabilizer_index(base_vertex(), base_vertex(), kBS23), 1);
  EXPECT_EQ(stabilizer_index(base_vertex(), V("t"), kBS23), 3);
  EXPECT_EQ(stabilizer_index(base_vertex(), V("T"), kBS23), 2);
}

TEST(StabilizerIndex, MatchesSmallestPowerOracle) {
  Rng rng(23);
  for (const auto& bp : standard_params())
    for (int i = 0; i < 25; ++i) {
      TreeVertex u = canonical_vertex(random_word(rng, 3, 2), bp);
      TreeVertex v = canonical_vertex(random_word(rng, 3, 2), bp);
      EXPECT_EQ(stabilizer_index(u, v, bp), stabilizer_index_oracle(u, v, bp, 5000)) << u.str() << " " << v.str();
    }
}

TEST(StabilizerIndex, InvariantUnderTranslation) {
  Rng rng(24);
  for (int i = 0; i < 60; ++i) {
    Word g = random_word(rng, 4, 3);
    TreeVertex u = canonical_vertex(random_word(rng, 3, 2), kBS23);
    TreeVertex v = canonical_vertex(random_word(rng, 3, 2), kBS23);
    EXPECT_EQ(stabilizer_index(u, v, kBS23), stabilizer_index(act(g, u, kBS23), act(g, v, kBS23), kBS23));
  }
}

TEST(StabilizerIndex, RadiusTwoSweep) {
  CheckResult r = check_stabilizer_indices(kBS23, 2);
  EXPECT_TRUE(r.passed()) << r.first_failure;
}

TEST(Tau, Examples) {
  EXPECT_EQ(tau(Word::parse("a"), kBS23), 0);
  EXPECT_EQ(tau(Word::parse("t a T a"), kBS23), 0);
  EXPECT_EQ(tau(Word::parse("t^3 a^-2 T"), kBS23), 2);
}

TEST(Tau, ModularValueIsRatioToTheTau) {
  Rng rng(25);
  for (int i = 0; i < 100; ++i) {
    Word w = random_word(rng, 7, 3);
    Int k = tau(w, kBS23);
    Rational expect = 1;
    for (Int j = 0; j < abs(k); ++j) expect *= kBS23.ratio();
    if (k < 0) expect = 1 / expect;
    EXPECT_EQ(modular_hom(w, kBS23), expect) << w.str();
  }
}

TEST(FixedVertex, EllipticElementsFixTheReturnedVertex) {
  Rng rng(26);
  for (int i = 0; i < 100; ++i) {
    Word w = random_word(rng, 5, 3);
    auto v = fixed_vertex(w, kBS23);
    EXPECT_EQ(v.has_value(), is_elliptic(w, kBS23));
    if (v) EXPECT_EQ(act(w, *v, kBS23), *v);
  }
}

}  // namespace
}  // namespace bsg

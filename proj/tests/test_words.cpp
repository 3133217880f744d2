#include "bsg/checks.hpp"
#include "bsg/error.hpp"
#include "bsg/random.hpp"
#include "bsg/word.hpp"

#include <gtest/gtest.h>

#include <numeric>

namespace bsg {
namespace {

const BSParams kBS23 = BSParams::make(2, 3);

Word W(const char* s) { return Word::parse(s); }

TEST(Normalize, RelatorCollapsesToAPower) {
  NormalForm nf = normalize(W("t a^2 T"), kBS23);
  EXPECT_TRUE(nf.is_a_power());
  EXPECT_EQ(nf.k0, 3);
  EXPECT_EQ(nf.str(), "a^3");
}

TEST(Normalize, EmptyWordIsIdentity) {
  NormalForm nf = normalize(Word(), kBS23);
  EXPECT_EQ(nf.k0, 0);
  EXPECT_TRUE(nf.syl.empty());
  EXPECT_TRUE(nf.is_identity());
}

TEST(Normalize, AgreesWithPinchOracleOnTwelveLetterWords) {
  Rng rng(11);
  for (int i = 0; i < 300; ++i) {
    Word w = random_word(rng, 12, 4);
    EXPECT_EQ(normalize(w, kBS23).is_identity(), is_identity_oracle(w, kBS23)) << w.str();
    EXPECT_TRUE(is_identity_oracle(normalize(w, kBS23).to_word() * w.inverse(), kBS23)) << w.str();
  }
}

TEST(Normalize, IsARetraction) {
  Rng rng(12);
  for (const auto& bp : standard_params())
    for (int i = 0; i < 200; ++i) {
      NormalForm nf = normalize(random_word(rng, 16, 5), bp);
      EXPECT_EQ(normalize(nf.to_word(), bp), nf);
      EXPECT_TRUE(is_pinch_free(nf, bp));
    }
}

TEST(Normalize, WordSyntaxRoundTrips) {
  for (const char* s : {"t a^2 T", "a^-5 t^3 A", "T a t^-2"}) {
    Word w = W(s);
    EXPECT_EQ(Word::parse(w.str()), w) << s;
  }
  EXPECT_EQ(W("A"), Word::a(-1));
  EXPECT_EQ(W("T^2"), Word::t(-2));
}

TEST(Normalize, MalformedWordsAreRejected) {
  EXPECT_THROW(W("b"), Error);
  EXPECT_THROW(W("a^"), Error);
}

TEST(IsIdentity, RelatorIsTrivial) {
  for (const auto& bp : standard_params()) {
    Word rel = Word::t() * Word::a(bp.p) * Word::t(-1) * Word::a(-bp.q);
    EXPECT_TRUE(is_identity(rel, bp)) << bp.str();
  }
}

TEST(IsIdentity, GeneratorIsNotTrivial) { EXPECT_FALSE(is_identity(Word::a(), kBS23)); }

TEST(IsIdentity, CommutatorWithConjugateIsNotTrivial) {
  EXPECT_FALSE(is_identity(commutator(Word::a(), W("t a T")), kBS23));
}

TEST(IsIdentity, WordTimesInverse) {
  Rng rng(13);
  for (int i = 0; i < 200; ++i) {
    Word w = random_word(rng, 10, 6);
    EXPECT_TRUE(is_identity(w * w.inverse(), kBS23));
  }
}

TEST(IsIdentity, TrivialWordsFromRelators) {
  Rng rng(14);
  for (const auto& bp : standard_params())
    for (int i = 0; i < 100; ++i) EXPECT_TRUE(is_identity(random_trivial_word(rng, bp, 4, 3), bp));
}

TEST(ModularHom, Examples) {
  EXPECT_EQ(modular_hom(W("a"), kBS23), 1);
  EXPECT_EQ(modular_hom(W("T a t"), kBS23), 1);
  EXPECT_EQ(modular_hom(W("t^2 a^5"), kBS23), Rational(9, 4));
}

TEST(ModularHom, IsMultiplicative) {
  Rng rng(15);
  for (const auto& bp : standard_params())
    for (int i = 0; i < 100; ++i) {
      Word x = random_word(rng, 6, 3), y = random_word(rng, 6, 3);
      EXPECT_EQ(modular_hom(x * y, bp), modular_hom(x, bp) * modular_hom(y, bp));
    }
}

TEST(Elliptic, Examples) {
  EXPECT_TRUE(is_elliptic(W("a^5"), kBS23));
  EXPECT_FALSE(is_elliptic(W("t"), kBS23));
  EXPECT_TRUE(is_elliptic(W("t a T"), kBS23));
}

TEST(Elliptic, ConjugationInvariant) {
  Rng rng(16);
  for (int i = 0; i < 150; ++i) {
    Word g = random_word(rng, 5, 3), w = random_word(rng, 5, 3);
    EXPECT_EQ(is_elliptic(g * w * g.inverse(), kBS23), is_elliptic(w, kBS23)) << g.str() << " | " << w.str();
  }
}

TEST(Elliptic, EllipticElementsHaveModularValueOne) {
  Rng rng(17);
  for (int i = 0; i < 200; ++i) {
    Word w = random_word(rng, 6, 3);
    if (is_elliptic(w, kBS23)) EXPECT_EQ(modular_hom(w, kBS23), 1) << w.str();
  }
}

TEST(ConjugationExponents, Examples) {
  auto e = conjugation_exponents(W("t"), W("a"), kBS23, 50);
  EXPECT_EQ(e.n, 2);
  EXPECT_EQ(e.m, 3);
  e = conjugation_exponents(W("a^2"), W("a"), kBS23, 50);
  EXPECT_EQ(e.n, 1);
  EXPECT_EQ(e.m, 1);
  e = conjugation_exponents(W("T"), W("a"), kBS23, 50);
  EXPECT_EQ(e.n, 3);
  EXPECT_EQ(e.m, 2);
}

TEST(ConjugationExponents, RatioIsModularValue) {
  for (const char* g : {"t", "t^2", "T a t", "t a T^2", "a t a"}) {
    auto e = conjugation_exponents(W(g), W("a"), kBS23, 200);
    EXPECT_EQ(abs(Rational(e.m, e.n)), modular_hom(W(g), kBS23)) << g;
    Word lhs = W(g) * Word::a(e.n) * W(g).inverse() * Word::a(-e.m);
    EXPECT_TRUE(is_identity_oracle(lhs, kBS23)) << g;
  }
}

TEST(ConjugationExponents, BoundExceeded) {
  EXPECT_THROW(conjugation_exponents(W("t^3"), W("a"), kBS23, 4), Error);
}

TEST(Classifier, Examples) {
  EXPECT_TRUE(classify_isomorphism(2, 3, 2, 3));
  EXPECT_TRUE(classify_isomorphism(2, 3, -3, -2));
  EXPECT_FALSE(classify_isomorphism(2, 3, 2, -3));
}

TEST(Amenable, Examples) {
  EXPECT_TRUE(is_amenable(1, 5));
  EXPECT_FALSE(is_amenable(2, 2));
  EXPECT_TRUE(is_amenable(-1, -7));
}

TEST(Classifier, HomCountsInAbelianGroupsMatchClosedForm) {
  // In Z/n the relation reads a^(q-p) = 0: n choices of t times gcd(q-p, n) choices of a.
  for (int n = 1; n <= 12; ++n)
    for (auto [p, q] : {std::pair{2, 3}, {2, -3}, {4, 6}, {-3, 5}}) {
      long long expect = static_cast<long long>(n) * std::gcd(q - p, n);
      EXPECT_EQ(count_bs_homs(FiniteGroup::cyclic(n), p, q), expect) << n << " " << p << " " << q;
    }
  EXPECT_NE(count_bs_homs(FiniteGroup::cyclic(5), 2, 3), count_bs_homs(FiniteGroup::cyclic(5), 2, -3));
  EXPECT_EQ(count_bs_homs(symmetric_group(3), 2, 3), count_bs_homs(symmetric_group(3), -3, -2));
}

TEST(Params, Reduction) {
  BSParams bp = BSParams::make(4, 6);
  EXPECT_EQ(bp.d0, 2);
  EXPECT_EQ(bp.p0, 2);
  EXPECT_EQ(bp.q0, 3);
  EXPECT_EQ(bp.ratio(), Rational(3, 2));
  EXPECT_THROW(BSParams::make(1, 3), Error);
  EXPECT_THROW(BSParams::make(5, 3), Error);
}

}  // namespace
}  // namespace bsg

#include "bsg/checks.hpp"
#include "bsg/error.hpp"
#include "bsg/cocycle.hpp"
#include "bsg/random.hpp"

#include <gtest/gtest.h>

namespace bsg {
namespace {

const BSParams kBS23 = BSParams::make(2, 3);

int arrow_between(const Groupoid& g, int s, int r) {
  for (int a : g.out_of(s))
    if (g.range(a) == r && !g.is_unit(a)) return a;
  return -1;
}

TEST(RadonNikodym, UniformMassesGiveOne) {
  Groupoid g = from_group_action({{1, 2, 0}}, uniform_masses(3));
  for (const auto& v : radon_nikodym(g).values) EXPECT_EQ(v, 1);
}

TEST(RadonNikodym, TwoPointSwap) {
  Groupoid g = from_group_action({{1, 0}}, {Rational(1, 3), Rational(2, 3)});
  Cocycle rn = radon_nikodym(g);
  EXPECT_EQ(rn.values[arrow_between(g, 0, 1)], 2);
  EXPECT_EQ(rn.values[arrow_between(g, 1, 0)], Rational(1, 2));
  EXPECT_TRUE(is_cocycle(g, rn));
}

TEST(RadonNikodym, PushforwardOfEverySingleton) {
  Rng rng(41);
  for (int i = 0; i < 20; ++i) {
    Groupoid g = random_groupoid(rng, {12, 200, false});
    Cocycle rn = radon_nikodym(g);
    EXPECT_TRUE(is_cocycle(g, rn));
    for (int a = 0; a < g.num_arrows(); ++a) EXPECT_EQ(g.mass(g.range(a)), rn.values[a] * g.mass(g.source(a)));
  }
}

TEST(LevelModel, BS23AtLevelOneOne) {
  auto m = bs_level_model(kBS23, 1, 1);
  EXPECT_EQ(m->N, 6);
  EXPECT_EQ(m->Nprime, 9);
  EXPECT_EQ(m->D, (std::vector<int>{0, 2, 4}));
  std::vector<int> R;
  for (int x : m->R) R.push_back(x - static_cast<int>(m->N));
  EXPECT_EQ(R, (std::vector<int>{0, 3, 6}));
  for (int j = 0; j < 3; ++j) EXPECT_EQ(m->phi_map[2 * j], 6 + 3 * j);
  for (int x : m->D) EXPECT_EQ(m->groupoid.mass(x), Rational(1, 15));
  EXPECT_EQ(ergodic_decomposition(m->S).components.size(), 2u);
}

TEST(LevelModel, Intertwining) {
  for (const auto& bp : standard_params()) {
    auto m = bs_level_model(bp, 2, 1);
    long long p = to_ll(bp.p), q = to_ll(bp.q);
    auto wrap = [](long long v, long long n) { return ((v % n) + n) % n; };
    for (int x : m->D) {
      int y = static_cast<int>(wrap(x + p, m->N));
      EXPECT_EQ(m->phi_map[y] - m->N, wrap(m->phi_map[x] - m->N + q, m->Nprime)) << bp.str();
    }
    EXPECT_EQ(static_cast<long long>(m->D.size()) * std::abs(p), m->N);
    EXPECT_EQ(static_cast<long long>(m->R.size()) * std::abs(q), m->Nprime);
  }
}

TEST(LevelModel, BS46HasDZeroTwo) {
  auto m = bs_level_model(BSParams::make(4, 6), 1, 1);
  EXPECT_EQ(m->N, 12);
  EXPECT_EQ(m->Nprime, 18);
  EXPECT_EQ(m->D.size(), 3u);
  EXPECT_EQ(m->R.size(), 3u);
}

TEST(LevelModel, InvalidLevel) {
  EXPECT_THROW(bs_level_model(kBS23, 0, 1), Error);
  EXPECT_THROW(bs_level_model(kBS23, 1, -1), Error);
}

TEST(LevelModel, ModularTimesLocalIndexIsTheModularValue) {
  auto m = bs_level_model(kBS23, 1, 1);
  auto fam = level_model_witnesses(*m);
  Cocycle D = modular_D(m->S, &fam), I = local_index_I(m->S, &fam);
  EXPECT_TRUE(is_cocycle(m->groupoid, D));
  EXPECT_TRUE(is_cocycle(m->groupoid, I));
  for (int x : m->D) {
    int a = m->phi_t.at[x];
    EXPECT_EQ(D.values[a], Rational(3, 2));
    EXPECT_EQ(I.values[a], 1);
    EXPECT_EQ(D.values[a] * I.values[a], modular_hom(Word::t(), kBS23));
  }
}

TEST(LevelModel, AllStandardParams) {
  for (const auto& r : check_level_models(standard_params(), {1, 2}, {0, 1, 2}))
    EXPECT_TRUE(r.passed()) << r.name << ": " << r.first_failure;
}

TEST(ModularD, ErgodicGroupActionGivesOne) {
  Groupoid g = from_group_action({{1, 2, 3, 4, 0}}, uniform_masses(5));
  for (const auto& v : modular_D(whole(g)).values) EXPECT_EQ(v, 1);
  for (const auto& v : local_index_I(whole(g)).values) EXPECT_EQ(v, 1);
}

TEST(GroupIndexRatio, Examples) {
  EXPECT_EQ(group_index_ratio(1, 1), 1);
  EXPECT_EQ(bs_group_index_ratio(Word::a(5), kBS23), 1);
  for (const auto& bp : standard_params()) EXPECT_EQ(bs_group_index_ratio(Word::t(), bp), bp.ratio()) << bp.str();
}

TEST(Cohomologous, EqualCocyclesHaveNeutralTransfer) {
  Groupoid g = from_group_action({{1, 0, 2}}, {Rational(1, 6), Rational(1, 3), Rational(1, 2)});
  Cocycle rn = radon_nikodym(g);
  auto psi = cohomologous(g, rn, rn);
  ASSERT_TRUE(psi.has_value());
  for (const auto& v : *psi) EXPECT_EQ(v, 1);
}

TEST(Cohomologous, RadonNikodymIsACoboundary) {
  Groupoid g = from_group_action({{1, 2, 0}}, {Rational(1, 6), Rational(1, 3), Rational(1, 2)});
  Cocycle one{Target::multiplicative(), std::vector<Rational>(g.num_arrows(), 1)};
  auto psi = cohomologous(g, one, radon_nikodym(g));
  ASSERT_TRUE(psi.has_value());
  EXPECT_TRUE(is_transfer(g, one, radon_nikodym(g), *psi));
}

TEST(Cohomologous, NontrivialCycleValueIsNotACoboundary) {
  EdgeGraph loop{{Rational(1)}, {{0, 0, 0}}};
  Groupoid g = from_group_action(FiniteGroup::cyclic(4), {{0}, {0}, {0}, {0}}, uniform_masses(1));
  Cocycle one{Target::cyclic(4), std::vector<Rational>(4, 0)};
  Cocycle chi{Target::cyclic(4), {}};
  for (int a = 0; a < 4; ++a) chi.values.push_back(g.arrow(a).f);
  EXPECT_FALSE(cohomologous(g, one, chi).has_value());
  Cocycle other{Target::integers(), std::vector<Rational>(4, 0)};
  EXPECT_THROW(cohomologous(g, one, other), Error);
}

TEST(CohomologyLaws, RandomizedSmall) {
  Rng rng(42);
  for (const auto& r : check_cocycle_cohomology(rng, 25)) EXPECT_TRUE(r.passed()) << r.name << ": " << r.first_failure;
}

TEST(Mackey, TrivialCocycleOnErgodicGroupoid) {
  Groupoid g = from_group_action({{1, 2, 3, 0}}, uniform_masses(4));
  MackeyRange m = mackey_range(g, {Target::cyclic(5), std::vector<Rational>(g.num_arrows(), 0)});
  EXPECT_EQ(m.num_components, 5);
  EXPECT_EQ(m.cycle_type(), (std::vector<long long>{5}));
}

TEST(Mackey, CoboundaryMatchesTrivialCocycle) {
  Groupoid g = from_group_action({{1, 2, 0}}, uniform_masses(3));
  Target tg = Target::cyclic(6);
  std::vector<Rational> pot{0, 4, 1};
  Cocycle cob{tg, {}};
  for (int a = 0; a < g.num_arrows(); ++a) cob.values.push_back(tg.op(pot[g.range(a)], tg.inv(pot[g.source(a)])));
  MackeyRange m1 = mackey_range(g, {tg, std::vector<Rational>(g.num_arrows(), 0)});
  MackeyRange m2 = mackey_range(g, cob);
  EXPECT_TRUE(isomorphic(m1, m2));
  EXPECT_TRUE(mackey_map(m1, m2, {0, 1, 2}, pot).has_value());
}

TEST(Mackey, IntegerCocycleComponentsMatchWindowCount) {
  // A 3-cycle whose loop carries t-exponent 2: the skew product has two components.
  EdgeGraph g{uniform_masses(3), {{0, 1, 0}, {1, 2, 0}, {2, 0, 0}}};
  Cocycle tau{Target::integers(), {1, 0, 1}};
  MackeyRange m = mackey_range(g, tau);
  EXPECT_EQ(m.num_components, 2);
  EXPECT_EQ(mackey_window_count(g, tau, 40, 1), 2u);
  Cocycle zero{Target::integers(), {1, 0, -1}};
  EXPECT_THROW(mackey_range(g, zero), Error);
}

TEST(Mackey, RandomizedSmall) {
  Rng rng(43);
  for (const auto& r : check_mackey(rng, kBS23, {1, 2, 3}, 15)) EXPECT_TRUE(r.passed()) << r.name << ": " << r.first_failure;
}

TEST(FlowType, ErgodicKernelHasTypeOne) {
  // One unit with loops t and a: the kernel (m = 1) is ergodic.
  EdgeGraph g{{Rational(1)}, {{0, 0, 0}, {0, 0, 1}}};
  FlowType ft = flow_type(g, {Target::multiplicative(), {Rational(3, 2), Rational(1)}}, kBS23);
  ASSERT_TRUE(ft.n.has_value());
  EXPECT_EQ(*ft.n, 1);
  EXPECT_EQ(ft.value, Rational(2, 3));
}

TEST(FlowType, ThreeCycleScaledModel) {
  // Z/3 with the shift carrying |q/p|: three kernel components permuted cyclically.
  EdgeGraph g{uniform_masses(3), {{0, 1, 0}, {1, 2, 0}, {2, 0, 0}}};
  Cocycle m{Target::multiplicative(), {kBS23.ratio(), kBS23.ratio(), kBS23.ratio()}};
  FlowType ft = flow_type(g, m, kBS23);
  ASSERT_TRUE(ft.n.has_value());
  EXPECT_EQ(*ft.n, 3);
  EXPECT_EQ(ft.value, Rational(8, 27));
}

TEST(FlowType, NonPowerValuesRejected) {
  EdgeGraph g{{Rational(1)}, {{0, 0, 0}}};
  EXPECT_THROW(flow_type(g, {Target::multiplicative(), {Rational(2)}}, kBS23), Error);
}

TEST(Type, Examples) {
  Groupoid g = from_group_action({{1, 2, 0}}, uniform_masses(3));
  EXPECT_EQ(classify_type(g).kind, TypeKind::II);
  EdgeGraph loop{{Rational(1)}, {{0, 0, 0}}};
  TypeLabel t = classify_type(loop, {Target::multiplicative(), {Rational(3, 2)}});
  EXPECT_EQ(t.kind, TypeKind::IIILambda);
  EXPECT_EQ(t.lambda, Rational(2, 3));
  EdgeGraph two{{Rational(1)}, {{0, 0, 0}, {0, 0, 1}}};
  EXPECT_EQ(classify_type(two, {Target::multiplicative(), {Rational(2), Rational(3)}}).kind, TypeKind::III1);
  // 4 and 8 generate 2^Z.
  TypeLabel pw = classify_type(two, {Target::multiplicative(), {Rational(4), Rational(8)}});
  EXPECT_EQ(pw.kind, TypeKind::IIILambda);
  EXPECT_EQ(pw.lambda, Rational(1, 2));
}

TEST(Type, AllChecks) {
  Rng rng(44);
  for (const auto& r : check_types(rng)) EXPECT_TRUE(r.passed()) << r.name << ": " << r.first_failure;
}

}  // namespace
}  // namespace bsg

#include "bsg/checks.hpp"
#include "bsg/cocycle.hpp"
#include "bsg/error.hpp"
#include "bsg/invariant.hpp"
#include "bsg/random.hpp"

#include <gtest/gtest.h>

namespace bsg {
namespace {

std::vector<std::vector<int>> mod_action(int group, int points) {
  std::vector<std::vector<int>> act(group, std::vector<int>(points));
  for (int g = 0; g < group; ++g)
    for (int x = 0; x < points; ++x) act[g][x] = (x + g) % points;
  return act;
}

int arrow_between(const Groupoid& g, int s, int r) {
  for (int a : g.out_of(s))
    if (g.range(a) == r && !g.is_unit(a)) return a;
  return -1;
}

TEST(FiniteGroup, CyclicIsAddition) {
  FiniteGroup c = FiniteGroup::cyclic(6);
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) EXPECT_EQ(c.op(a, b), (a + b) % 6);
}

TEST(GroupAction, RegularZ4Action) {
  Groupoid g = from_group_action({{1, 2, 3, 0}}, uniform_masses(4));
  EXPECT_EQ(g.num_arrows(), 16);
  EXPECT_EQ(ergodic_decomposition(g).components.size(), 1u);
  EXPECT_NO_THROW(validate_axioms(g));
  EXPECT_TRUE(g.measure_preserving());
}

TEST(GroupAction, TrivialGroup) {
  Groupoid g = from_group_action(FiniteGroup::trivial(), {{0, 1, 2}}, uniform_masses(3));
  EXPECT_EQ(g.num_arrows(), 3);
  for (int a = 0; a < 3; ++a) EXPECT_TRUE(g.is_unit(a));
}

TEST(GroupAction, Z4ThroughReductionIsNotFree) {
  Groupoid g = from_group_action(FiniteGroup::cyclic(4), mod_action(4, 2), uniform_masses(2));
  EXPECT_EQ(g.num_arrows(), 8);
  EXPECT_EQ(g.loops(0).size(), 2u);
  EXPECT_NO_THROW(validate_axioms(g));
}

TEST(GroupAction, GroupTooLarge) {
  std::vector<int> cyc(9), swap(9);
  for (int i = 0; i < 9; ++i) cyc[i] = (i + 1) % 9, swap[i] = i;
  std::swap(swap[0], swap[1]);
  EXPECT_THROW(from_group_action({cyc, swap}, uniform_masses(9), 1000), Error);
}

TEST(PartialIsos, FullCycleGivesPrincipalTransitive) {
  for (int n = 1; n <= 6; ++n) {
    std::vector<int> cyc(n);
    for (int i = 0; i < n; ++i) cyc[i] = (i + 1) % n;
    Groupoid g = from_partial_isos({{cyc}}, uniform_masses(n));
    EXPECT_EQ(g.num_arrows(), n * n);
    EXPECT_EQ(ergodic_decomposition(g).components.size(), 1u);
  }
}

TEST(PartialIsos, NoSeedsGiveUnitGroupoid) {
  Groupoid g = from_partial_isos({}, uniform_masses(4));
  EXPECT_EQ(g.num_arrows(), 4);
  EXPECT_EQ(ergodic_decomposition(g).components.size(), 4u);
}

TEST(Axioms, BrokenProductIsReported) {
  Groupoid g = from_group_action({{1, 0}}, uniform_masses(2));
  std::vector<Arrow> arrows;
  std::vector<std::string> labels;
  std::vector<std::array<int, 3>> product;
  for (int a = 0; a < g.num_arrows(); ++a) {
    arrows.push_back(g.arrow(a));
    labels.push_back(g.arrow_label(a));
    for (int b : g.into(g.source(a))) product.push_back({a, b, *g.product(a, b)});
  }
  EXPECT_NO_THROW(validate_axioms(Groupoid::from_table(g.masses(), arrows, labels, product)));
  for (auto& t : product)
    if (!g.is_unit(t[0]) && !g.is_unit(t[1])) t[2] = t[0];
  try {
    validate_axioms(Groupoid::from_table(g.masses(), arrows, labels, product));
    FAIL() << "broken table accepted";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::AxiomViolation);
  }
}

TEST(Restriction, WholeUnitSetIsIdentity) {
  Groupoid g = from_group_action({{1, 2, 0}}, uniform_masses(3));
  Restriction r = restrict(g, {0, 1, 2});
  EXPECT_EQ(r.groupoid.num_arrows(), g.num_arrows());
  EXPECT_THROW(restrict(g, {}), Error);
}

TEST(Restriction, Z4OnZ2AtOnePoint) {
  Groupoid g = from_group_action(FiniteGroup::cyclic(4), mod_action(4, 2), uniform_masses(2));
  Restriction r = restrict(g, {0});
  EXPECT_EQ(r.groupoid.num_arrows(), 2);  // the elements 0 and 2 fixing the point 0
  EXPECT_NO_THROW(validate_axioms(r.groupoid));
}

TEST(Saturation, TransitiveGroupoidSaturatesEverything) {
  Groupoid g = from_group_action({{1, 2, 3, 4, 0}}, uniform_masses(5));
  EXPECT_EQ(saturation(g, {3}), (UnitSet{0, 1, 2, 3, 4}));
}

TEST(ErgodicDecomposition, Examples) {
  EXPECT_EQ(ergodic_decomposition(from_partial_isos({}, uniform_masses(5))).components.size(), 5u);
  Groupoid g = from_group_action({{2, 3, 4, 5, 0, 1}}, uniform_masses(6));
  ErgodicDecomposition ed = ergodic_decomposition(g);
  ASSERT_EQ(ed.components.size(), 2u);
  EXPECT_EQ(ed.components[0], (UnitSet{0, 2, 4}));
  EXPECT_EQ(ed.components[1], (UnitSet{1, 3, 5}));
  EXPECT_EQ(ed.conditional(g, 3), Rational(1, 3));
}

TEST(Index, WholeGroupoidHasIndexOne) {
  Groupoid g = from_group_action({{1, 2, 0}}, uniform_masses(3));
  for (int x = 0; x < 3; ++x) {
    EXPECT_EQ(index(g, whole(g), x), 1u);
    EXPECT_EQ(local_index(g, whole(g), x), 1);
  }
}

TEST(Index, Z4OnItselfModEvenSubgroup) {
  Groupoid g = from_group_action(FiniteGroup::cyclic(4), mod_action(4, 4), uniform_masses(4));
  Subgroupoid h = from_predicate(g, [&](int a) { return g.arrow(a).f % 2 == 0; });
  ASSERT_TRUE(is_subgroupoid(h));
  for (int x = 0; x < 4; ++x) EXPECT_EQ(index(g, h, x), 2u);
}

TEST(LocalIndex, Z4OnZ2WithEvenSubgroup) {
  Groupoid g = from_group_action(FiniteGroup::cyclic(4), mod_action(4, 2), uniform_masses(2));
  Subgroupoid h = from_predicate(g, [&](int a) { return g.arrow(a).f % 2 == 0; });
  for (int x = 0; x < 2; ++x) {
    EXPECT_EQ(index(g, h, x), 2u);
    EXPECT_EQ(local_index(g, h, x), 1);
  }
}

TEST(IndexLaws, RandomizedSmall) {
  Rng rng(31);
  GroupoidCheckSizes sizes;
  sizes.instances = 60;
  for (const auto& r : check_index_laws(rng, sizes)) EXPECT_TRUE(r.passed()) << r.name << ": " << r.first_failure;
}

TEST(LocalIndexLaws, RandomizedSmall) {
  Rng rng(32);
  for (const auto& r : check_local_index(rng, 40, 15)) EXPECT_TRUE(r.passed()) << r.name << ": " << r.first_failure;
}

TEST(QN, FamilyInsideSIsNormalizing) {
  Groupoid g = from_group_action({{1, 2, 3, 0}}, uniform_masses(4));
  Subgroupoid s = generated(g, {arrow_between(g, 0, 2)});
  PartialIso phi = singleton(g, arrow_between(g, 0, 2));
  EXPECT_EQ(qn_membership(s, phi).kind, QNClass::Normalizing);
}

TEST(QN, GlobalMapOfNormalSubgroupIsNormalizing) {
  Groupoid g = from_group_action(FiniteGroup::cyclic(6), mod_action(6, 6), uniform_masses(6));
  Subgroupoid s = from_predicate(g, [&](int a) { return g.arrow(a).f % 3 == 0; });
  for (int gamma = 0; gamma < 6; ++gamma) {
    PartialIso phi{std::vector<int>(6)};
    for (int x = 0; x < 6; ++x) phi.at[x] = *g.find(x, (x + gamma) % 6, gamma);
    EXPECT_EQ(qn_membership(s, phi).kind, QNClass::Normalizing);
  }
  EXPECT_TRUE(is_normal(s));
}

TEST(QN, CompositionOfQuasiNormalizingMaps) {
  Rng rng(33);
  int tried = 0;
  for (int i = 0; i < 200 && tried < 40; ++i) {
    Groupoid g = random_groupoid(rng, {10, 200, true});
    Subgroupoid s = random_subgroupoid(rng, g, 2);
    PartialIso a = singleton(g, static_cast<int>(uniform_int(rng, 0, g.num_arrows() - 1)));
    PartialIso b = singleton(g, static_cast<int>(uniform_int(rng, 0, g.num_arrows() - 1)));
    if (qn_membership(s, a).kind == QNClass::Neither || qn_membership(s, b).kind == QNClass::Neither) continue;
    ++tried;
    EXPECT_NE(qn_membership(s, compose(g, b, a)).kind, QNClass::Neither);
  }
  EXPECT_GT(tried, 0);
}

TEST(QN, WholeGroupoidIsQuasiNormal) {
  Groupoid g = from_group_action({{1, 2, 0}, {0, 2, 1}}, uniform_masses(3));
  QuasiNormalWitness w = is_quasinormal(whole(g));
  EXPECT_TRUE(w.quasinormal);
  EXPECT_TRUE(w.normal);
}

TEST(QN, NonNormalSubgroupOfS3IsQuasiNormal) {
  Groupoid g = from_group_action({{1, 2, 0}, {1, 0, 2}}, uniform_masses(3));
  Subgroupoid s = generated(g, {arrow_between(g, 0, 1)});
  QuasiNormalWitness w = is_quasinormal(s);
  EXPECT_TRUE(w.quasinormal);
  // Every arrow is covered modulo S by the witnesses.
  for (int a = 0; a < g.num_arrows(); ++a) {
    bool covered = false;
    for (const auto& phi : w.family)
      if (phi.defined(g.source(a)))
        covered = covered || s.contains(g.compose(phi.at[g.source(a)], g.inverse(a)));
    EXPECT_TRUE(covered) << a;
  }
}

TEST(Quotient, WholeGroupoidGivesUnitsOnComponents) {
  Groupoid g = from_group_action({{2, 3, 4, 5, 0, 1}}, uniform_masses(6));
  Quotient q = quotient(whole(g));
  EXPECT_EQ(q.groupoid.num_units(), 2);
  EXPECT_EQ(q.groupoid.num_arrows(), 2);
}

TEST(Quotient, NonNormalIsRejected) {
  Groupoid g = from_group_action({{1, 2, 0}, {1, 0, 2}}, uniform_masses(3));
  Subgroupoid s = from_predicate(g, [&](int a) { return g.is_unit(a) || (g.source(a) == 2 && g.range(a) == 2); });
  if (!is_normal(s)) {
    EXPECT_THROW(quotient(s), Error);
  }
}

TEST(Quotient, LevelModelQuotientHasTwoUnitsAndOneClass) {
  auto m = bs_level_model(BSParams::make(2, 3), 1, 1);
  Quotient q = quotient(m->S);
  EXPECT_EQ(q.groupoid.num_units(), 2);
  EXPECT_EQ(q.groupoid.num_arrows(), 4);
  EXPECT_TRUE(kernel_is(q, m->S));
  EXPECT_TRUE(has_lifting_property(q, m->groupoid));
}

TEST(Quotient, RandomizedSmall) {
  Rng rng(34);
  for (const auto& r : check_quotients(rng, 30)) EXPECT_TRUE(r.passed()) << r.name << ": " << r.first_failure;
}

TEST(Quotient, HomomorphismKillingSFactorsThroughTheta) {
  Groupoid g = from_group_action(FiniteGroup::cyclic(6), mod_action(6, 6), uniform_masses(6));
  Subgroupoid s = from_predicate(g, [&](int a) { return g.arrow(a).f % 3 == 0; });
  Quotient q = quotient(s);
  // Z/6 -> Z/3 kills 3Z/6; Z/6 -> Z/2 does not.
  std::vector<int> hom(g.num_arrows()), bad(g.num_arrows());
  for (int a = 0; a < g.num_arrows(); ++a) {
    hom[a] = g.arrow(a).f % 3;
    bad[a] = g.arrow(a).f % 2;
  }
  auto via = factor_through(q, g, hom);
  ASSERT_TRUE(via.has_value());
  for (int a = 0; a < g.num_arrows(); ++a) EXPECT_EQ((*via)[q.theta[a]], hom[a]);
  EXPECT_FALSE(factor_through(q, g, bad).has_value());
}

TEST(InvariantMap, TrivialLabelsGiveConstantBaseVertex) {
  const BSParams bp = BSParams::make(2, 3);
  EdgeGraph g{uniform_masses(3), {{0, 1, 0}, {1, 2, 0}, {2, 0, 0}}};
  auto phi = find_invariant_vertex_map(g, std::vector<Word>(3), bp, 2);
  ASSERT_TRUE(phi.has_value());
  for (const auto& v : *phi) EXPECT_EQ(v, base_vertex());
}

TEST(InvariantMap, HyperbolicLoopHasNoSolution) {
  const BSParams bp = BSParams::make(2, 3);
  EdgeGraph g{uniform_masses(1), {{0, 0, 0}}};
  for (std::size_t radius : {1u, 3u, 5u}) EXPECT_FALSE(find_invariant_vertex_map(g, {Word::t()}, bp, radius));
  auto phi = find_invariant_vertex_map(g, {Word::parse("t a T")}, bp, 2);
  ASSERT_TRUE(phi.has_value());
  EXPECT_TRUE(is_invariant_map(g, {Word::parse("t a T")}, *phi, bp));
}

TEST(InvariantSet, IndexTwoSubrelation) {
  const BSParams bp = BSParams::make(2, 3);
  Groupoid g = from_partial_isos({{{1, 0}}}, uniform_masses(2));
  std::vector<Word> rho(g.num_arrows());
  int up = arrow_between(g, 0, 1), down = arrow_between(g, 1, 0);
  rho[up] = Word::t();
  rho[down] = Word::t(-1);
  ASSERT_TRUE(is_word_cocycle(g, rho, bp));
  Subgroupoid h = units_only(g);
  VertexMap psi(2, base_vertex());
  VertexSetMap big = induce_finite_invariant_set(g, h, rho, psi, bp);
  EXPECT_EQ(big[0].size(), 2u);
  EXPECT_TRUE(std::find(big[0].begin(), big[0].end(), psi[0]) != big[0].end());
  EXPECT_TRUE(is_invariant_set_map(g, rho, big, bp));

  VertexSetMap same = induce_finite_invariant_set(g, whole(g), rho, {base_vertex(), canonical_vertex(Word::t(), bp)}, bp);
  EXPECT_EQ(same[0].size(), 1u);
}

}  // namespace
}  // namespace bsg

#pragma once

#include "bsg/groupoid.hpp"
#include "bsg/presented.hpp"
#include "bsg/word.hpp"

#include <random>
#include <vector>

namespace bsg {

using Rng = std::mt19937_64;

long long uniform_int(Rng& rng, long long lo, long long hi);  // inclusive
bool coin(Rng& rng);

// letters run-length letters, exponents in [-max_exp, max_exp] \ {0}.
Word random_word(Rng& rng, int letters, int max_exp);
// A word that is trivial in BS(p,q): products of conjugated relators and cancelling pairs.
Word random_trivial_word(Rng& rng, const BSParams& params, int pieces, int max_exp);

std::vector<Rational> random_masses(Rng& rng, int n, bool uniform);
PartialBijection random_partial_bijection(Rng& rng, int n, double density);
std::vector<int> random_permutation(Rng& rng, int n);

FiniteGroup symmetric_group(int n);
// One of: trivial, Z/2, Z/3, Z/4, Z/2 x Z/2, S3.
FiniteGroup random_label_group(Rng& rng);

struct RandomGroupoidSpec {
  int max_units = 24;
  int max_arrows = 400;
  bool uniform = false;
};
// Closure of one to three random labelled partial bijections, resampled until it fits the size bounds.
Groupoid random_groupoid(Rng& rng, const RandomGroupoidSpec& spec);

struct GroupActionInstance {
  FiniteGroup group;
  std::vector<std::vector<int>> action;  // action[g][x]
  Groupoid groupoid;
};
// A permutation group on at most max_points points acting with uniform masses.
GroupActionInstance random_group_action(Rng& rng, int max_points, int max_order);

// Smallest subgroupoid containing the units and a few random arrows.
Subgroupoid random_subgroupoid(Rng& rng, const Groupoid& g, int max_gens);
// A random subgroupoid of h (generated by some of its arrows).
Subgroupoid random_subgroupoid_of(Rng& rng, const Subgroupoid& h, int max_gens);
UnitSet random_unit_subset(Rng& rng, int n);

}  // namespace bsg

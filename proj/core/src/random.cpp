#include "bsg/random.hpp"

#include "bsg/error.hpp"

#include <algorithm>
#include <numeric>

namespace bsg {

long long uniform_int(Rng& rng, long long lo, long long hi) {
  return std::uniform_int_distribution<long long>(lo, hi)(rng);
}

bool coin(Rng& rng) { return uniform_int(rng, 0, 1) == 1; }

namespace {

long long nonzero(Rng& rng, int max_exp) {
  long long e = uniform_int(rng, 1, max_exp);
  return coin(rng) ? e : -e;
}

}  // namespace

Word random_word(Rng& rng, int letters, int max_exp) {
  Word w;
  for (int i = 0; i < letters; ++i) w.push(coin(rng) ? 'a' : 't', nonzero(rng, max_exp));
  return w;
}

Word random_trivial_word(Rng& rng, const BSParams& params, int pieces, int max_exp) {
  Word rel = Word::t() * Word::a(params.p) * Word::t(-1) * Word::a(-params.q);
  Word w;
  for (int i = 0; i < pieces; ++i) {
    Word u = random_word(rng, static_cast<int>(uniform_int(rng, 0, 3)), max_exp);
    Word r = coin(rng) ? rel : rel.inverse();
    if (coin(rng)) {
      w *= u * r * u.inverse();
    } else {
      // Insert the relator in the middle of a cancelling pair.
      Word v = random_word(rng, static_cast<int>(uniform_int(rng, 1, 2)), max_exp);
      w *= u * v * r * v.inverse() * u.inverse();
    }
  }
  return w;
}

std::vector<Rational> random_masses(Rng& rng, int n, bool uniform) {
  if (uniform) return uniform_masses(n);
  std::vector<Rational> m(n);
  for (auto& v : m) v = Rational(uniform_int(rng, 1, 6), uniform_int(rng, 1, 6));
  return m;
}

PartialBijection random_partial_bijection(Rng& rng, int n, double density) {
  std::vector<int> img = random_permutation(rng, n);
  PartialBijection b{std::vector<int>(n, -1)};
  std::bernoulli_distribution keep(density);
  for (int x = 0; x < n; ++x)
    if (keep(rng)) b.map[x] = img[x];
  return b;
}

std::vector<int> random_permutation(Rng& rng, int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  for (int i = n - 1; i > 0; --i) std::swap(p[i], p[uniform_int(rng, 0, i)]);
  return p;
}

FiniteGroup symmetric_group(int n) {
  if (n <= 1) return FiniteGroup::trivial();
  std::vector<int> swap(n), cycle(n);
  std::iota(swap.begin(), swap.end(), 0);
  std::swap(swap[0], swap[1]);
  for (int i = 0; i < n; ++i) cycle[i] = (i + 1) % n;
  return FiniteGroup::from_permutations({swap, cycle});
}

FiniteGroup random_label_group(Rng& rng) {
  switch (uniform_int(rng, 0, 5)) {
    case 0: return FiniteGroup::trivial();
    case 1: return FiniteGroup::cyclic(2);
    case 2: return FiniteGroup::cyclic(3);
    case 3: return FiniteGroup::cyclic(4);
    case 4: return FiniteGroup::product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2));
    default: return symmetric_group(3);
  }
}

Groupoid random_groupoid(Rng& rng, const RandomGroupoidSpec& spec) {
  for (;;) {
    int n = static_cast<int>(uniform_int(rng, 1, spec.max_units));
    FiniteGroup labels = random_label_group(rng);
    int seeds = static_cast<int>(uniform_int(rng, 1, 3));
    std::vector<PartialBijection> bij;
    std::vector<int> seed_labels;
    std::uniform_real_distribution<double> dens(0.2, 1.0);
    for (int i = 0; i < seeds; ++i) {
      bij.push_back(random_partial_bijection(rng, n, dens(rng)));
      seed_labels.push_back(static_cast<int>(uniform_int(rng, 0, labels.size() - 1)));
    }
    try {
      Groupoid g = from_partial_isos(bij, random_masses(rng, n, spec.uniform), labels, seed_labels,
                                     static_cast<std::size_t>(spec.max_arrows));
      if (g.num_arrows() <= spec.max_arrows) return g;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::ClosureTooLarge) throw;
    }
  }
}

GroupActionInstance random_group_action(Rng& rng, int max_points, int max_order) {
  for (;;) {
    int n = static_cast<int>(uniform_int(rng, 1, max_points));
    int k = static_cast<int>(uniform_int(rng, 1, 2));
    std::vector<std::vector<int>> gens;
    for (int i = 0; i < k; ++i) gens.push_back(random_permutation(rng, n));
    try {
      FiniteGroup grp = FiniteGroup::from_permutations(gens, static_cast<std::size_t>(max_order));
      std::vector<std::vector<int>> action = grp.perms();
      Groupoid g = from_group_action(grp, action, uniform_masses(n));
      return {std::move(grp), std::move(action), std::move(g)};
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::GroupTooLarge) throw;
    }
  }
}

Subgroupoid random_subgroupoid(Rng& rng, const Groupoid& g, int max_gens) {
  int k = static_cast<int>(uniform_int(rng, 0, max_gens));
  std::vector<int> gens;
  for (int i = 0; i < k && g.num_arrows() > 0; ++i)
    gens.push_back(static_cast<int>(uniform_int(rng, 0, g.num_arrows() - 1)));
  return generated(g, gens);
}

Subgroupoid random_subgroupoid_of(Rng& rng, const Subgroupoid& h, int max_gens) {
  std::vector<int> arrows = h.arrows();
  int k = static_cast<int>(uniform_int(rng, 0, max_gens));
  std::vector<int> gens;
  for (int i = 0; i < k; ++i) gens.push_back(arrows[uniform_int(rng, 0, static_cast<long long>(arrows.size()) - 1)]);
  return generated(*h.parent, gens);
}

UnitSet random_unit_subset(Rng& rng, int n) {
  UnitSet a;
  for (int x = 0; x < n; ++x)
    if (coin(rng)) a.push_back(x);
  if (a.empty()) a.push_back(static_cast<int>(uniform_int(rng, 0, n - 1)));
  return a;
}

}  // namespace bsg

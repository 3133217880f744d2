#include "bsg/groupoid.hpp"

#include "bsg/error.hpp"

#include <boost/pending/disjoint_sets.hpp>

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace bsg {

namespace {

struct UnionFind {
  explicit UnionFind(std::size_t n) : ds(n) {
    for (std::size_t i = 0; i < n; ++i) ds.make_set(i);
  }
  std::size_t find(std::size_t i) { return ds.find_set(i); }
  void unite(std::size_t a, std::size_t b) { ds.union_set(a, b); }
  boost::disjoint_sets_with_storage<> ds;
};

std::vector<char> membership(int n, const std::vector<int>& A) {
  std::vector<char> m(n, 0);
  for (int x : A) {
    if (x < 0 || x >= n) throw Error(ErrorKind::InvalidParams, "unit out of range: " + std::to_string(x));
    m[x] = 1;
  }
  return m;
}

UnitSet normalize_set(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

// ---- FiniteGroup ----

void FiniteGroup::finish() {
  int n = size();
  inv_.assign(n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (mul_[a][b] == 0) inv_[a] = b;
  if (names_.size() != static_cast<std::size_t>(n)) {
    names_.clear();
    for (int a = 0; a < n; ++a) names_.push_back(a == 0 ? "e" : "g" + std::to_string(a));
  }
}

FiniteGroup FiniteGroup::trivial() { return cyclic(1); }

FiniteGroup FiniteGroup::cyclic(int n) {
  if (n < 1) throw Error(ErrorKind::InvalidParams, "cyclic group order must be positive");
  FiniteGroup g;
  g.mul_.assign(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) g.mul_[a][b] = (a + b) % n;
    g.names_.push_back(std::to_string(a));
  }
  g.finish();
  return g;
}

FiniteGroup FiniteGroup::product(const FiniteGroup& a, const FiniteGroup& b) {
  FiniteGroup g;
  int na = a.size(), nb = b.size();
  g.mul_.assign(na * nb, std::vector<int>(na * nb));
  for (int x = 0; x < na * nb; ++x) {
    for (int y = 0; y < na * nb; ++y)
      g.mul_[x][y] = a.op(x / nb, y / nb) * nb + b.op(x % nb, y % nb);
    g.names_.push_back("(" + a.name(x / nb) + "," + b.name(x % nb) + ")");
  }
  g.finish();
  return g;
}

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<int>> table, std::vector<std::string> names) {
  FiniteGroup g;
  int n = static_cast<int>(table.size());
  if (n == 0) throw Error(ErrorKind::InvalidParams, "empty group table");
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n) throw Error(ErrorKind::InvalidParams, "group table not square");
    for (int v : row)
      if (v < 0 || v >= n) throw Error(ErrorKind::InvalidParams, "group table entry out of range");
  }
  for (int a = 0; a < n; ++a)
    if (table[0][a] != a || table[a][0] != a)
      throw Error(ErrorKind::InvalidParams, "element 0 must be the identity");
  g.mul_ = std::move(table);
  g.names_ = std::move(names);
  g.finish();
  for (int a = 0; a < n; ++a) {
    if (g.inv_[a] < 0) throw Error(ErrorKind::InvalidParams, "group table lacks inverses");
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (g.op(g.op(a, b), c) != g.op(a, g.op(b, c)))
          throw Error(ErrorKind::InvalidParams, "group table is not associative");
  }
  return g;
}

FiniteGroup FiniteGroup::from_permutations(const std::vector<std::vector<int>>& gens, std::size_t bound) {
  std::size_t n = gens.empty() ? 0 : gens[0].size();
  for (const auto& p : gens) {
    if (p.size() != n) throw Error(ErrorKind::InvalidParams, "generators act on different point sets");
    std::vector<char> seen(n, 0);
    for (int v : p) {
      if (v < 0 || static_cast<std::size_t>(v) >= n || seen[v])
        throw Error(ErrorKind::InvalidParams, "generator is not a permutation");
      seen[v] = 1;
    }
  }
  std::vector<int> id(n);
  for (std::size_t i = 0; i < n; ++i) id[i] = static_cast<int>(i);
  std::map<std::vector<int>, int> where;
  FiniteGroup g;
  g.perms_.push_back(id);
  g.names_.push_back("e");
  where[id] = 0;
  auto compose = [&](const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> c(n);
    for (std::size_t i = 0; i < n; ++i) c[i] = a[b[i]];
    return c;
  };
  for (std::size_t i = 0; i < g.perms_.size(); ++i) {
    for (std::size_t k = 0; k < gens.size(); ++k) {
      auto c = compose(gens[k], g.perms_[i]);
      if (where.count(c)) continue;
      if (g.perms_.size() >= bound)
        throw Error(ErrorKind::GroupTooLarge, "generated group exceeds " + std::to_string(bound));
      where[c] = static_cast<int>(g.perms_.size());
      g.names_.push_back("s" + std::to_string(k) + (i == 0 ? "" : " " + g.names_[i]));
      g.perms_.push_back(std::move(c));
    }
  }
  int m = static_cast<int>(g.perms_.size());
  g.mul_.assign(m, std::vector<int>(m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) g.mul_[a][b] = where.at(compose(g.perms_[a], g.perms_[b]));
  for (const auto& p : gens) g.gen_elems_.push_back(where.at(p));
  g.finish();
  return g;
}

int FiniteGroup::pow(int a, long long n) const {
  if (n < 0) {
    a = inv(a);
    n = -n;
  }
  int out = 0;
  for (long long i = 0; i < n; ++i) out = op(out, a);
  return out;
}

int FiniteGroup::order(int a) const {
  int k = 1;
  for (int x = a; x != 0; x = op(x, a)) ++k;
  return k;
}

bool FiniteGroup::is_subgroup(const std::vector<char>& mask) const {
  if (static_cast<int>(mask.size()) != size() || !mask[0]) return false;
  for (int a = 0; a < size(); ++a) {
    if (!mask[a]) continue;
    if (!mask[inv(a)]) return false;
    for (int b = 0; b < size(); ++b)
      if (mask[b] && !mask[op(a, b)]) return false;
  }
  return true;
}

bool FiniteGroup::is_normal_subgroup(const std::vector<char>& mask) const {
  if (!is_subgroup(mask)) return false;
  for (int g = 0; g < size(); ++g)
    for (int a = 0; a < size(); ++a)
      if (mask[a] && !mask[op(op(g, a), inv(g))]) return false;
  return true;
}

// ---- Groupoid ----

std::uint64_t Groupoid::key3(std::uint64_t a, std::uint64_t b, std::uint64_t c, std::uint64_t n,
                             std::uint64_t m) {
  return (a * n + b) * m + c;
}

Groupoid::Groupoid(std::vector<Rational> masses, FiniteGroup labels, const std::vector<Arrow>& arrows)
    : masses_(std::move(masses)), labels_(std::move(labels)), arrows_(arrows) {
  std::uint64_t n = masses_.size(), m = labels_.size();
  for (std::size_t i = 0; i < arrows_.size(); ++i) {
    const Arrow& a = arrows_[i];
    if (a.s < 0 || a.r < 0 || a.s >= num_units() || a.r >= num_units() || a.f < 0 || a.f >= labels_.size())
      throw Error(ErrorKind::AxiomViolation, "arrow " + std::to_string(i) + " out of range");
    auto [it, fresh] = lookup_.emplace(key3(a.s, a.r, a.f, n, m), static_cast<int>(i));
    if (!fresh) throw Error(ErrorKind::AxiomViolation, "duplicate arrow " + std::to_string(i));
  }
  for (auto& a : arrows_) {
    auto inv = find(a.r, a.s, labels_.inv(a.f));
    if (!inv) throw Error(ErrorKind::AxiomViolation, "arrow set not closed under inverse");
    a.inv = *inv;
  }
  index();
}

Groupoid Groupoid::from_table(std::vector<Rational> masses, const std::vector<Arrow>& arrows,
                              std::vector<std::string> arrow_labels,
                              const std::vector<std::array<int, 3>>& product) {
  Groupoid g;
  g.masses_ = std::move(masses);
  g.arrows_ = arrows;
  g.table_mode_ = true;
  g.table_labels_ = std::move(arrow_labels);
  g.table_labels_.resize(arrows.size());
  std::uint64_t A = arrows.size();
  for (std::size_t i = 0; i < arrows.size(); ++i) {
    const Arrow& a = arrows[i];
    if (a.s < 0 || a.r < 0 || a.s >= g.num_units() || a.r >= g.num_units() || a.inv < 0 ||
        a.inv >= static_cast<int>(A))
      throw Error(ErrorKind::AxiomViolation, "arrow " + std::to_string(i) + " out of range");
  }
  for (const auto& t : product) {
    for (int v : t)
      if (v < 0 || v >= static_cast<int>(A)) throw Error(ErrorKind::AxiomViolation, "product entry out of range");
    if (arrows[t[0]].s != arrows[t[1]].r)
      throw Error(ErrorKind::AxiomViolation, "product entry for non-composable pair");
    g.table_[static_cast<std::uint64_t>(t[0]) * A + t[1]] = t[2];
  }
  g.index();
  return g;
}

void Groupoid::index() {
  int n = num_units();
  for (int x = 0; x < n; ++x)
    if (masses_[x] <= 0) throw Error(ErrorKind::InvalidParams, "unit masses must be positive");
  out_.assign(n, {});
  in_.assign(n, {});
  loops_.assign(n, {});
  unit_.assign(n, -1);
  for (int i = 0; i < num_arrows(); ++i) {
    const Arrow& a = arrows_[i];
    out_[a.s].push_back(i);
    in_[a.r].push_back(i);
    if (a.s == a.r) loops_[a.s].push_back(i);
  }
  for (int x = 0; x < n; ++x) {
    if (!table_mode_) {
      if (auto u = find(x, x, 0)) unit_[x] = *u;
    } else {
      for (int g : loops_[x]) {
        auto p = product(g, g);
        if (p && *p == g) unit_[x] = g;
      }
    }
    if (unit_[x] < 0) throw Error(ErrorKind::AxiomViolation, "missing unit at " + std::to_string(x));
  }
}

Rational Groupoid::total_mass() const {
  Rational s = 0;
  for (const auto& m : masses_) s += m;
  return s;
}

std::optional<int> Groupoid::find(int s, int r, int f) const {
  if (table_mode_) {
    for (int g : out_[s])
      if (arrows_[g].r == r && arrows_[g].f == f) return g;
    return std::nullopt;
  }
  auto it = lookup_.find(key3(s, r, f, masses_.size(), labels_.size()));
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> Groupoid::product(int g, int h) const {
  const Arrow& a = arrows_[g];
  const Arrow& b = arrows_[h];
  if (a.s != b.r) return std::nullopt;
  if (table_mode_) {
    auto it = table_.find(static_cast<std::uint64_t>(g) * arrows_.size() + h);
    if (it == table_.end()) return std::nullopt;
    return it->second;
  }
  return find(b.s, a.r, labels_.op(a.f, b.f));
}

int Groupoid::compose(int g, int h) const {
  auto p = product(g, h);
  if (!p)
    throw Error(ErrorKind::AxiomViolation,
                "product of " + std::to_string(g) + " and " + std::to_string(h) + " undefined");
  return *p;
}

std::string Groupoid::arrow_label(int g) const {
  if (table_mode_) return table_labels_[g];
  return labels_.name(arrows_[g].f);
}

bool Groupoid::measure_preserving() const {
  for (const auto& a : arrows_)
    if (masses_[a.s] != masses_[a.r]) return false;
  return true;
}

void validate_axioms(const Groupoid& G) {
  auto fail = [](const std::string& m) { throw Error(ErrorKind::AxiomViolation, m); };
  for (int g = 0; g < G.num_arrows(); ++g) {
    int gi = G.inverse(g);
    if (G.inverse(gi) != g) fail("inverse is not an involution at " + std::to_string(g));
    if (G.source(gi) != G.range(g) || G.range(gi) != G.source(g)) fail("inverse endpoints wrong");
    if (G.product(g, gi) != G.unit(G.range(g))) fail("g g^-1 is not a unit");
    if (G.product(gi, g) != G.unit(G.source(g))) fail("g^-1 g is not a unit");
    if (G.product(G.unit(G.range(g)), g) != g || G.product(g, G.unit(G.source(g))) != g)
      fail("unit law fails at " + std::to_string(g));
  }
  for (int g = 0; g < G.num_arrows(); ++g) {
    for (int h : G.into(G.source(g))) {
      auto gh = G.product(g, h);
      if (!gh) fail("product missing for composable pair");
      if (G.source(*gh) != G.source(h) || G.range(*gh) != G.range(g)) fail("product endpoints wrong");
      for (int k : G.into(G.source(h))) {
        auto hk = G.product(h, k);
        if (!hk) fail("product missing for composable pair");
        if (G.product(*gh, k) != G.product(g, *hk)) fail("associativity fails");
      }
    }
  }
}

std::vector<Rational> uniform_masses(int n) { return std::vector<Rational>(n, Rational(1, n)); }

Groupoid from_group_action(const FiniteGroup& group, const std::vector<std::vector<int>>& action,
                           std::vector<Rational> masses) {
  int n = static_cast<int>(masses.size());
  if (static_cast<int>(action.size()) != group.size())
    throw Error(ErrorKind::InvalidParams, "action needs one map per group element");
  for (const auto& row : action) {
    if (static_cast<int>(row.size()) != n) throw Error(ErrorKind::InvalidParams, "action map has wrong size");
    std::vector<char> seen(n, 0);
    for (int y : row) {
      if (y < 0 || y >= n || seen[y]) throw Error(ErrorKind::InvalidParams, "action map is not a bijection");
      seen[y] = 1;
    }
  }
  for (int a = 0; a < group.size(); ++a)
    for (int b = 0; b < group.size(); ++b)
      for (int x = 0; x < n; ++x)
        if (action[group.op(a, b)][x] != action[a][action[b][x]])
          throw Error(ErrorKind::InvalidParams, "action is not a homomorphism");
  std::vector<Arrow> arrows;
  for (int x = 0; x < n; ++x)
    for (int g = 0; g < group.size(); ++g) arrows.push_back({x, action[g][x], g, 0});
  return Groupoid(std::move(masses), group, arrows);
}

Groupoid from_group_action(const std::vector<std::vector<int>>& gens, std::vector<Rational> masses,
                           std::size_t bound) {
  for (const auto& p : gens)
    if (p.size() != masses.size()) throw Error(ErrorKind::InvalidParams, "generator size differs from unit count");
  std::vector<std::vector<int>> gs = gens;
  if (gs.empty()) {
    std::vector<int> id(masses.size());
    for (std::size_t i = 0; i < id.size(); ++i) id[i] = static_cast<int>(i);
    gs.push_back(id);
  }
  FiniteGroup group = FiniteGroup::from_permutations(gs, bound);
  auto action = group.perms();
  return from_group_action(group, action, std::move(masses));
}

Groupoid from_partial_isos(const std::vector<PartialBijection>& seeds, std::vector<Rational> masses,
                           const FiniteGroup& labels, const std::vector<int>& seed_labels,
                           std::size_t bound) {
  int n = static_cast<int>(masses.size());
  std::vector<int> lab = seed_labels;
  if (lab.empty()) lab.assign(seeds.size(), 0);
  if (lab.size() != seeds.size()) throw Error(ErrorKind::InvalidParams, "one label per seed required");
  std::vector<std::vector<int>> inv(seeds.size(), std::vector<int>(n, -1));
  for (std::size_t i = 0; i < seeds.size(); ++i) {
    if (static_cast<int>(seeds[i].map.size()) != n) throw Error(ErrorKind::InvalidParams, "seed has wrong size");
    if (lab[i] < 0 || lab[i] >= labels.size()) throw Error(ErrorKind::InvalidParams, "seed label out of range");
    for (int x = 0; x < n; ++x) {
      int y = seeds[i].map[x];
      if (y < 0) continue;
      if (y >= n || inv[i][y] >= 0) throw Error(ErrorKind::InvalidParams, "seed is not a partial bijection");
      inv[i][y] = x;
    }
  }
  int m = labels.size();
  std::vector<Arrow> arrows;
  std::vector<char> seen(static_cast<std::size_t>(n) * m);
  for (int x = 0; x < n; ++x) {
    std::fill(seen.begin(), seen.end(), 0);
    std::deque<std::pair<int, int>> queue{{x, 0}};
    seen[static_cast<std::size_t>(x) * m] = 1;
    while (!queue.empty()) {
      auto [y, f] = queue.front();
      queue.pop_front();
      arrows.push_back({x, y, f, 0});
      if (arrows.size() > bound)
        throw Error(ErrorKind::ClosureTooLarge, "closure exceeds " + std::to_string(bound) + " arrows");
      auto visit = [&](int z, int h) {
        auto& s = seen[static_cast<std::size_t>(z) * m + h];
        if (!s) {
          s = 1;
          queue.emplace_back(z, h);
        }
      };
      for (std::size_t i = 0; i < seeds.size(); ++i) {
        if (seeds[i].map[y] >= 0) visit(seeds[i].map[y], labels.op(lab[i], f));
        if (inv[i][y] >= 0) visit(inv[i][y], labels.op(labels.inv(lab[i]), f));
      }
    }
  }
  return Groupoid(std::move(masses), labels, arrows);
}

// ---- Subgroupoids ----

std::size_t Subgroupoid::size() const { return static_cast<std::size_t>(std::count(in.begin(), in.end(), 1)); }

std::vector<int> Subgroupoid::arrows() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < in.size(); ++i)
    if (in[i]) out.push_back(static_cast<int>(i));
  return out;
}

Subgroupoid whole(const Groupoid& g) { return {&g, std::vector<char>(g.num_arrows(), 1)}; }

Subgroupoid units_only(const Groupoid& g) {
  Subgroupoid h{&g, std::vector<char>(g.num_arrows(), 0)};
  for (int x = 0; x < g.num_units(); ++x) h.in[g.unit(x)] = 1;
  return h;
}

Subgroupoid from_predicate(const Groupoid& g, const std::function<bool(int)>& pred) {
  Subgroupoid h{&g, std::vector<char>(g.num_arrows(), 0)};
  for (int a = 0; a < g.num_arrows(); ++a) h.in[a] = pred(a) ? 1 : 0;
  return h;
}

Subgroupoid generated(const Groupoid& g, const std::vector<int>& gens) {
  Subgroupoid h = units_only(g);
  std::deque<int> work;
  auto add = [&](int a) {
    if (!h.in[a]) {
      h.in[a] = 1;
      work.push_back(a);
    }
  };
  for (int a : gens) {
    add(a);
    add(g.inverse(a));
  }
  while (!work.empty()) {
    int a = work.front();
    work.pop_front();
    std::vector<int> fresh;
    for (int b : g.out_of(g.range(a)))
      if (h.in[b]) fresh.push_back(g.compose(b, a));
    for (int b : g.into(g.source(a)))
      if (h.in[b]) fresh.push_back(g.compose(a, b));
    for (int c : fresh) {
      add(c);
      add(g.inverse(c));
    }
  }
  return h;
}

Subgroupoid intersect(const Subgroupoid& a, const Subgroupoid& b) {
  Subgroupoid h{a.parent, a.in};
  for (std::size_t i = 0; i < h.in.size(); ++i) h.in[i] = a.in[i] && b.in[i];
  return h;
}

bool is_subgroupoid(const Subgroupoid& h) {
  const Groupoid& g = *h.parent;
  for (int x = 0; x < g.num_units(); ++x)
    if (!h.in[g.unit(x)]) return false;
  for (int a = 0; a < g.num_arrows(); ++a) {
    if (!h.in[a]) continue;
    if (!h.in[g.inverse(a)]) return false;
    for (int b : g.into(g.source(a)))
      if (h.in[b] && !h.in[g.compose(a, b)]) return false;
  }
  return true;
}

bool is_contained(const Subgroupoid& h, const Subgroupoid& k) {
  for (std::size_t i = 0; i < h.in.size(); ++i)
    if (h.in[i] && !k.in[i]) return false;
  return true;
}

Subgroupoid restrict_mask(const Subgroupoid& h, const std::vector<int>& A) {
  const Groupoid& g = *h.parent;
  auto m = membership(g.num_units(), A);
  Subgroupoid out{h.parent, h.in};
  for (int a = 0; a < g.num_arrows(); ++a)
    if (!m[g.source(a)] || !m[g.range(a)]) out.in[a] = 0;
  return out;
}

Subgroupoid Restriction::carry(const Subgroupoid& h) const {
  Subgroupoid out{&groupoid, std::vector<char>(arrows.size(), 0)};
  for (std::size_t i = 0; i < arrows.size(); ++i) out.in[i] = h.in[arrows[i]];
  return out;
}

Restriction restrict(const Groupoid& g, const UnitSet& A0) {
  UnitSet A = normalize_set(A0);
  if (A.empty()) throw Error(ErrorKind::EmptySet, "restriction to an empty set");
  membership(g.num_units(), A);
  Restriction res;
  res.units = A;
  res.unit_index.assign(g.num_units(), -1);
  for (std::size_t i = 0; i < A.size(); ++i) res.unit_index[A[i]] = static_cast<int>(i);
  res.arrow_index.assign(g.num_arrows(), -1);
  for (int a = 0; a < g.num_arrows(); ++a) {
    if (res.unit_index[g.source(a)] >= 0 && res.unit_index[g.range(a)] >= 0) {
      res.arrow_index[a] = static_cast<int>(res.arrows.size());
      res.arrows.push_back(a);
    }
  }
  std::vector<Rational> masses;
  for (int x : A) masses.push_back(g.mass(x));
  std::vector<Arrow> arrows;
  for (int a : res.arrows) {
    Arrow b = g.arrow(a);
    b.s = res.unit_index[b.s];
    b.r = res.unit_index[b.r];
    b.inv = res.arrow_index[b.inv];
    arrows.push_back(b);
  }
  if (!g.table_mode()) {
    res.groupoid = Groupoid(std::move(masses), g.label_group(), arrows);
    return res;
  }
  std::vector<std::string> labels;
  std::vector<std::array<int, 3>> product;
  for (int a : res.arrows) {
    labels.push_back(g.arrow_label(a));
    for (int b : g.into(g.source(a))) {
      if (res.arrow_index[b] < 0) continue;
      product.push_back({res.arrow_index[a], res.arrow_index[b], res.arrow_index[g.compose(a, b)]});
    }
  }
  res.groupoid = Groupoid::from_table(std::move(masses), arrows, std::move(labels), product);
  return res;
}

UnitSet saturation(const Subgroupoid& h, const UnitSet& A) {
  const Groupoid& g = *h.parent;
  membership(g.num_units(), A);
  std::vector<int> out;
  for (int x : A)
    for (int a : g.out_of(x))
      if (h.in[a]) out.push_back(g.range(a));
  return normalize_set(std::move(out));
}

UnitSet saturation(const Groupoid& g, const UnitSet& A) { return saturation(whole(g), A); }

ErgodicDecomposition ergodic_decomposition(const Subgroupoid& h) {
  const Groupoid& g = *h.parent;
  int n = g.num_units();
  UnionFind uf(n);
  for (int a = 0; a < g.num_arrows(); ++a)
    if (h.in[a]) uf.unite(g.source(a), g.range(a));
  ErgodicDecomposition ed;
  ed.component_of.assign(n, -1);
  std::vector<int> root_to_comp(n, -1);
  for (int x = 0; x < n; ++x) {
    int r = static_cast<int>(uf.find(x));
    if (root_to_comp[r] < 0) {
      root_to_comp[r] = static_cast<int>(ed.components.size());
      ed.components.emplace_back();
      ed.component_mass.emplace_back(0);
    }
    int c = root_to_comp[r];
    ed.component_of[x] = c;
    ed.components[c].push_back(x);
    ed.component_mass[c] += g.mass(x);
  }
  return ed;
}

ErgodicDecomposition ergodic_decomposition(const Groupoid& g) { return ergodic_decomposition(whole(g)); }

// ---- Index ----

namespace {

std::vector<int> class_reps(const Subgroupoid& k, const Subgroupoid& h, int x,
                            const std::vector<char>* target) {
  const Groupoid& g = *k.parent;
  std::vector<int> reps;
  std::set<int> marked;
  for (int a : g.out_of(x)) {
    if (!k.in[a] || (target && !(*target)[g.range(a)]) || marked.count(a)) continue;
    reps.push_back(a);
    for (int b : g.out_of(g.range(a)))
      if (h.in[b]) marked.insert(g.compose(b, a));
  }
  return reps;
}

}  // namespace

std::vector<int> coset_representatives(const Subgroupoid& k, const Subgroupoid& h, int x) {
  return class_reps(k, h, x, nullptr);
}

std::size_t index(const Subgroupoid& k, const Subgroupoid& h, int x) {
  return class_reps(k, h, x, nullptr).size();
}

std::size_t index(const Groupoid& g, const Subgroupoid& h, int x) { return index(whole(g), h, x); }

Rational local_index(const Subgroupoid& k, const Subgroupoid& h, int x) {
  const Groupoid& g = *k.parent;
  auto Y = membership(g.num_units(), saturation(h, {x}));
  return Rational(static_cast<long long>(class_reps(k, h, x, &Y).size()));
}

Rational local_index(const Groupoid& g, const Subgroupoid& h, int x) { return local_index(whole(g), h, x); }

// ---- Partial isomorphisms ----

UnitSet PartialIso::domain() const {
  UnitSet d;
  for (std::size_t x = 0; x < at.size(); ++x)
    if (at[x] >= 0) d.push_back(static_cast<int>(x));
  return d;
}

UnitSet PartialIso::range(const Groupoid& g) const {
  UnitSet r;
  for (int a : at)
    if (a >= 0) r.push_back(g.range(a));
  return normalize_set(std::move(r));
}

PartialIso singleton(const Groupoid& g, int arrow) {
  PartialIso p{std::vector<int>(g.num_units(), -1)};
  p.at[g.source(arrow)] = arrow;
  return p;
}

PartialIso identity_on(const Groupoid& g, const UnitSet& A) {
  PartialIso p{std::vector<int>(g.num_units(), -1)};
  for (int x : A) p.at[x] = g.unit(x);
  return p;
}

void validate(const Groupoid& g, const PartialIso& phi) {
  if (static_cast<int>(phi.at.size()) != g.num_units())
    throw Error(ErrorKind::NotInFullGroup, "partial isomorphism has wrong size");
  std::vector<char> hit(g.num_units(), 0);
  for (int x = 0; x < g.num_units(); ++x) {
    int a = phi.at[x];
    if (a < 0) continue;
    if (a >= g.num_arrows() || g.source(a) != x)
      throw Error(ErrorKind::NotInFullGroup, "arrow at " + std::to_string(x) + " does not start there");
    if (hit[g.range(a)]) throw Error(ErrorKind::NotInFullGroup, "r∘φ is not injective");
    hit[g.range(a)] = 1;
  }
}

PartialIso compose(const Groupoid& g, const PartialIso& psi, const PartialIso& phi) {
  PartialIso out{std::vector<int>(g.num_units(), -1)};
  for (int x = 0; x < g.num_units(); ++x) {
    if (phi.at[x] < 0) continue;
    int y = g.range(phi.at[x]);
    if (psi.at[y] >= 0) out.at[x] = g.compose(psi.at[y], phi.at[x]);
  }
  return out;
}

PartialIso inverse(const Groupoid& g, const PartialIso& phi) {
  PartialIso out{std::vector<int>(g.num_units(), -1)};
  for (int a : phi.at)
    if (a >= 0) out.at[g.range(a)] = g.inverse(a);
  return out;
}

int conjugate(const Groupoid& g, const PartialIso& phi, int a) {
  int pr = phi.at[g.range(a)], ps = phi.at[g.source(a)];
  if (pr < 0 || ps < 0) throw Error(ErrorKind::InvalidParams, "arrow not inside the domain");
  return g.compose(g.compose(pr, a), g.inverse(ps));
}

Subgroupoid conjugate(const Subgroupoid& s, const PartialIso& phi) {
  const Groupoid& g = *s.parent;
  Subgroupoid out{s.parent, std::vector<char>(g.num_arrows(), 0)};
  for (int a = 0; a < g.num_arrows(); ++a)
    if (s.in[a] && phi.at[g.source(a)] >= 0 && phi.at[g.range(a)] >= 0) out.in[conjugate(g, phi, a)] = 1;
  return out;
}

const char* qn_class_name(QNClass c) {
  switch (c) {
    case QNClass::Normalizing: return "Normalizing";
    case QNClass::QuasiNormalizing: return "QuasiNormalizing";
    case QNClass::Neither: return "Neither";
  }
  return "Neither";
}

QNReport qn_membership(const Subgroupoid& s, const PartialIso& phi) {
  const Groupoid& g = *s.parent;
  validate(g, phi);
  UnitSet R = phi.range(g);
  Subgroupoid sr = restrict_mask(s, R);
  Subgroupoid sphi = conjugate(s, phi);
  Subgroupoid both = intersect(sr, sphi);
  QNReport rep;
  // Every index is a count of finitely many arrows, so the quasi-normalizing condition always holds.
  rep.kind = sr == sphi ? QNClass::Normalizing : QNClass::QuasiNormalizing;
  for (int x : R) rep.indices.push_back({static_cast<std::size_t>(x), index(sr, both, x), index(sphi, both, x)});
  return rep;
}

bool is_normal(const Subgroupoid& s) {
  const Groupoid& g = *s.parent;
  for (int a = 0; a < g.num_arrows(); ++a) {
    int x = g.source(a), y = g.range(a);
    std::set<int> conj, target;
    for (int k : g.loops(x))
      if (s.in[k]) conj.insert(g.compose(g.compose(a, k), g.inverse(a)));
    for (int k : g.loops(y))
      if (s.in[k]) target.insert(k);
    if (conj != target) return false;
  }
  return true;
}

QuasiNormalWitness is_quasinormal(const Subgroupoid& s) {
  const Groupoid& g = *s.parent;
  QuasiNormalWitness w;
  Subgroupoid all = whole(g);
  w.normal = true;
  for (int x = 0; x < g.num_units(); ++x) {
    for (int a : coset_representatives(all, s, x)) {
      PartialIso phi = singleton(g, a);
      if (qn_membership(s, phi).kind != QNClass::Normalizing) w.normal = false;
      w.family.push_back(std::move(phi));
    }
  }
  w.quasinormal = true;
  return w;
}

// ---- Quotient ----

Quotient quotient(const Subgroupoid& s) {
  const Groupoid& g = *s.parent;
  if (!is_subgroupoid(s)) throw Error(ErrorKind::NotNormal, "S is not a subgroupoid");
  if (!is_normal(s)) throw Error(ErrorKind::NotNormal, "isotropy of S is not preserved by conjugation");
  ErgodicDecomposition ed = ergodic_decomposition(s);
  int n = g.num_units();

  // S-arrow from each unit to the root of its component.
  std::vector<int> to_root(n, -1);
  for (const auto& comp : ed.components) {
    int root = comp.front();
    to_root[root] = g.unit(root);
    std::deque<int> queue{root};
    while (!queue.empty()) {
      int y = queue.front();
      queue.pop_front();
      for (int a : g.out_of(y)) {
        if (!s.in[a] || to_root[g.range(a)] >= 0) continue;
        to_root[g.range(a)] = g.compose(to_root[y], g.inverse(a));
        queue.push_back(g.range(a));
      }
    }
  }
  auto connector = [&](int from, int to) { return g.compose(g.inverse(to_root[to]), to_root[from]); };

  UnionFind uf(g.num_arrows());
  for (int a = 0; a < g.num_arrows(); ++a) {
    for (int k : g.out_of(g.range(a)))
      if (s.in[k]) uf.unite(a, g.compose(k, a));
    for (int k : g.into(g.source(a)))
      if (s.in[k]) uf.unite(a, g.compose(a, k));
  }
  Quotient q;
  q.theta.assign(g.num_arrows(), -1);
  std::vector<int> cls_of_root(g.num_arrows(), -1);
  std::vector<int> rep;
  for (int a = 0; a < g.num_arrows(); ++a) {
    int r = static_cast<int>(uf.find(a));
    if (cls_of_root[r] < 0) {
      cls_of_root[r] = static_cast<int>(rep.size());
      rep.push_back(a);
    }
    q.theta[a] = cls_of_root[r];
  }
  q.unit_map = ed.component_of;
  int m = static_cast<int>(rep.size());
  std::vector<Arrow> arrows(m);
  std::vector<std::string> labels(m);
  for (int c = 0; c < m; ++c) {
    int a = rep[c];
    arrows[c] = {ed.component_of[g.source(a)], ed.component_of[g.range(a)], 0, q.theta[g.inverse(a)]};
    labels[c] = "[" + g.arrow_label(a) + "]";
  }
  std::vector<std::array<int, 3>> product;
  for (int c1 = 0; c1 < m; ++c1) {
    for (int c2 = 0; c2 < m; ++c2) {
      if (arrows[c1].s != arrows[c2].r) continue;
      int a = rep[c1], b = rep[c2];
      int value = -1;
      for (int k : g.out_of(g.range(b))) {
        if (!s.in[k] || g.range(k) != g.source(a)) continue;
        int v = q.theta[g.compose(a, g.compose(k, b))];
        if (value >= 0 && v != value) throw Error(ErrorKind::NotNormal, "quotient product is not well defined");
        value = v;
      }
      if (value < 0) value = q.theta[g.compose(a, g.compose(connector(g.range(b), g.source(a)), b))];
      product.push_back({c1, c2, value});
    }
  }
  std::vector<Rational> masses = ed.component_mass;
  q.groupoid = Groupoid::from_table(std::move(masses), arrows, std::move(labels), product);
  for (int a = 0; a < g.num_arrows(); ++a)
    for (int b : g.into(g.source(a)))
      if (q.groupoid.product(q.theta[a], q.theta[b]) != q.theta[g.compose(a, b)])
        throw Error(ErrorKind::NotNormal, "θ is not a homomorphism");
  return q;
}

bool kernel_is(const Quotient& q, const Subgroupoid& s) {
  for (std::size_t a = 0; a < q.theta.size(); ++a)
    if (q.groupoid.is_unit(q.theta[a]) != static_cast<bool>(s.in[a])) return false;
  return true;
}

bool has_lifting_property(const Quotient& q, const Groupoid& g) {
  for (int c = 0; c < q.groupoid.num_arrows(); ++c) {
    for (int x = 0; x < g.num_units(); ++x) {
      if (q.unit_map[x] != q.groupoid.source(c)) continue;
      bool found = false;
      for (int a : g.out_of(x)) found = found || q.theta[a] == c;
      if (!found) return false;
    }
  }
  return true;
}

std::optional<std::vector<int>> factor_through(const Quotient& q, const Groupoid& g, const std::vector<int>& hom) {
  std::vector<int> out(q.groupoid.num_arrows(), -1);
  std::vector<char> set(q.groupoid.num_arrows(), 0);
  for (int a = 0; a < g.num_arrows(); ++a) {
    int c = q.theta[a];
    if (!set[c]) {
      out[c] = hom[a];
      set[c] = 1;
    } else if (out[c] != hom[a]) {
      return std::nullopt;
    }
  }
  return out;
}

}  // namespace bsg

#include "bsg/cocycle.hpp"

#include "bsg/error.hpp"
#include "bsg/tree.hpp"

#include <boost/pending/disjoint_sets.hpp>

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <set>
#include <numeric>

namespace bsg {

// ---- Targets ----

Rational Target::neutral() const { return kind == TargetKind::PositiveRational ? Rational(1) : Rational(0); }

Rational Target::op(const Rational& a, const Rational& b) const {
  switch (kind) {
    case TargetKind::PositiveRational: return a * b;
    case TargetKind::Integer: return a + b;
    case TargetKind::Cyclic: return Rational(mod_floor(num(a + b), modulus));
  }
  return a;
}

Rational Target::inv(const Rational& a) const {
  switch (kind) {
    case TargetKind::PositiveRational: return Rational(1) / a;
    case TargetKind::Integer: return -a;
    case TargetKind::Cyclic: return Rational(mod_floor(-num(a), modulus));
  }
  return a;
}

bool Target::valid(const Rational& a) const {
  switch (kind) {
    case TargetKind::PositiveRational: return a > 0;
    case TargetKind::Integer: return den(a) == 1;
    case TargetKind::Cyclic: return den(a) == 1 && a >= 0 && a < modulus;
  }
  return false;
}

std::string Target::str() const {
  switch (kind) {
    case TargetKind::PositiveRational: return "Q+";
    case TargetKind::Integer: return "Z";
    case TargetKind::Cyclic: return "Z/" + std::to_string(modulus);
  }
  return "?";
}

// ---- Basic cocycles ----

bool is_cocycle(const Groupoid& g, const Cocycle& c) {
  if (static_cast<int>(c.values.size()) != g.num_arrows()) return false;
  for (const auto& v : c.values)
    if (!c.target.valid(v)) return false;
  for (int a = 0; a < g.num_arrows(); ++a)
    for (int b : g.into(g.source(a)))
      if (c.values[g.compose(a, b)] != c.target.op(c.values[a], c.values[b])) return false;
  return true;
}

Cocycle radon_nikodym(const Groupoid& g) {
  Cocycle c{Target::multiplicative(), {}};
  for (int a = 0; a < g.num_arrows(); ++a) c.values.push_back(g.mass(g.range(a)) / g.mass(g.source(a)));
  return c;
}

Cocycle radon_nikodym(const EdgeGraph& g) {
  Cocycle c{Target::multiplicative(), {}};
  for (const auto& e : g.edges) c.values.push_back(g.masses[e.r] / g.masses[e.s]);
  return c;
}

bool is_transfer(const Groupoid& g, const Cocycle& c1, const Cocycle& c2, const std::vector<Rational>& psi) {
  const Target& t = c1.target;
  for (int a = 0; a < g.num_arrows(); ++a) {
    Rational v = t.op(t.op(psi[g.range(a)], c1.values[a]), t.inv(psi[g.source(a)]));
    if (v != c2.values[a]) return false;
  }
  return true;
}

std::optional<std::vector<Rational>> cohomologous(const Groupoid& g, const Cocycle& c1, const Cocycle& c2) {
  if (!(c1.target == c2.target)) throw Error(ErrorKind::TargetMismatch, c1.target.str() + " vs " + c2.target.str());
  const Target& t = c1.target;
  int n = g.num_units();
  std::vector<Rational> psi(n);
  std::vector<char> seen(n, 0);
  for (int root = 0; root < n; ++root) {
    if (seen[root]) continue;
    seen[root] = 1;
    psi[root] = t.neutral();
    std::deque<int> queue{root};
    while (!queue.empty()) {
      int x = queue.front();
      queue.pop_front();
      for (int a : g.out_of(x)) {
        int y = g.range(a);
        if (seen[y]) continue;
        seen[y] = 1;
        psi[y] = t.op(t.op(c2.values[a], psi[x]), t.inv(c1.values[a]));
        queue.push_back(y);
      }
    }
  }
  if (!is_transfer(g, c1, c2, psi)) return std::nullopt;
  return psi;
}

// ---- 𝔇 and 𝔌 ----

namespace {

struct PhiData {
  UnitSet D, R;
  Subgroupoid SD, SR, Sminus, Splus;
  ErgodicDecomposition edm, edp;
};

PhiData phi_data(const Subgroupoid& s, const PartialIso& phi) {
  const Groupoid& g = *s.parent;
  validate(g, phi);
  PhiData d;
  d.D = phi.domain();
  d.R = phi.range(g);
  d.SD = restrict_mask(s, d.D);
  d.SR = restrict_mask(s, d.R);
  d.Sminus = intersect(d.SD, conjugate(d.SR, inverse(g, phi)));
  d.Splus = intersect(d.SR, conjugate(d.SD, phi));
  d.edm = ergodic_decomposition(d.Sminus);
  d.edp = ergodic_decomposition(d.Splus);
  return d;
}

Rational d_value(const Subgroupoid& s, const ErgodicDecomposition& ed, const PartialIso& phi, const PhiData& d,
                 int x) {
  const Groupoid& g = *s.parent;
  const UnitSet& C = d.edm.components[d.edm.component_of[x]];
  int ux = g.range(phi.at[x]);
  UnitSet image;
  for (int y : C) image.push_back(g.range(phi.at[y]));
  std::sort(image.begin(), image.end());
  if (image != d.edp.components[d.edp.component_of[ux]])
    throw Error(ErrorKind::AxiomViolation, "U_phi does not carry S- components onto S+ components");
  const Rational& src_total = ed.component_mass[ed.component_of[x]];
  const Rational& dst_total = ed.component_mass[ed.component_of[ux]];
  std::optional<Rational> value;
  for (int y : C) {
    // Pushed-forward conditional mass at U(y) against the conditional mass of the target component.
    Rational lhs = g.mass(y) / src_total;
    Rational rhs = g.mass(g.range(phi.at[y])) / dst_total;
    Rational v = lhs / rhs;
    if (value && *value != v)
      throw Error(ErrorKind::AxiomViolation, "pushforward scalar varies across an S- component");
    value = v;
  }
  return *value;
}

Rational i_value(const PartialIso& phi, const PhiData& d, const Groupoid& g, int x) {
  int ux = g.range(phi.at[x]);
  return local_index(d.SR, d.Splus, ux) / local_index(d.SD, d.Sminus, x);
}

void require_measure_preserving(const Groupoid& g) {
  if (!g.measure_preserving()) throw Error(ErrorKind::NotMeasurePreserving, "G does not preserve the measure");
}

void require_in_domain(const PartialIso& phi, int x) {
  if (x < 0 || x >= static_cast<int>(phi.at.size()) || !phi.defined(x))
    throw Error(ErrorKind::InvalidParams, "point outside the domain of phi");
}

template <class F>
Cocycle extend(const Subgroupoid& s, const std::vector<PartialIso>* family, F&& value_at) {
  const Groupoid& g = *s.parent;
  std::vector<PartialIso> own;
  if (!family) {
    own = is_quasinormal(s).family;
    family = &own;
  }
  // value[i][x] for the i-th family member at x.
  std::vector<std::vector<std::optional<Rational>>> vals(family->size());
  for (std::size_t i = 0; i < family->size(); ++i) {
    const PartialIso& phi = (*family)[i];
    PhiData d = phi_data(s, phi);
    vals[i].resize(g.num_units());
    for (int x : d.D) vals[i][x] = value_at(phi, d, x);
  }
  Cocycle c{Target::multiplicative(), std::vector<Rational>(g.num_arrows())};
  for (int a = 0; a < g.num_arrows(); ++a) {
    int x = g.source(a);
    std::optional<Rational> v;
    for (std::size_t i = 0; i < family->size(); ++i) {
      int b = (*family)[i].at[x];
      if (b < 0) continue;
      auto k = g.product(b, g.inverse(a));
      if (!k || !s.contains(*k)) continue;
      if (v && *v != *vals[i][x])
        throw Error(ErrorKind::AxiomViolation, "value depends on the covering map at arrow " + std::to_string(a));
      v = vals[i][x];
    }
    if (!v) throw Error(ErrorKind::NotQuasiNormal, "family does not cover arrow " + std::to_string(a));
    c.values[a] = *v;
  }
  return c;
}

}  // namespace

Rational modular_D_at(const Subgroupoid& s, const PartialIso& phi, int x) {
  require_measure_preserving(*s.parent);
  require_in_domain(phi, x);
  PhiData d = phi_data(s, phi);
  return d_value(s, ergodic_decomposition(s), phi, d, x);
}

Rational local_index_I_at(const Subgroupoid& s, const PartialIso& phi, int x) {
  require_in_domain(phi, x);
  PhiData d = phi_data(s, phi);
  return i_value(phi, d, *s.parent, x);
}

Cocycle modular_D(const Subgroupoid& s, const std::vector<PartialIso>* family) {
  require_measure_preserving(*s.parent);
  ErgodicDecomposition ed = ergodic_decomposition(s);
  return extend(s, family, [&](const PartialIso& phi, const PhiData& d, int x) {
    return d_value(s, ed, phi, d, x);
  });
}

Cocycle local_index_I(const Subgroupoid& s, const std::vector<PartialIso>* family) {
  require_measure_preserving(*s.parent);
  return extend(s, family, [&](const PartialIso& phi, const PhiData& d, int x) {
    return i_value(phi, d, *s.parent, x);
  });
}

Rational group_index_ratio(const Int& plus_index, const Int& minus_index) {
  if (plus_index <= 0 || minus_index <= 0) throw Error(ErrorKind::InvalidParams, "indices must be positive");
  return Rational(plus_index, minus_index);
}

Rational bs_group_index_ratio(const Word& gamma, const BSParams& params) {
  TreeVertex v0 = base_vertex();
  Int plus = stabilizer_index(v0, act(gamma, v0, params), params, std::numeric_limits<std::size_t>::max());
  Int minus =
      stabilizer_index(v0, act(gamma.inverse(), v0, params), params, std::numeric_limits<std::size_t>::max());
  return group_index_ratio(plus, minus);
}

// ---- BS level model ----

std::unique_ptr<BSLevelModel> bs_level_model(const BSParams& params, long long k, long long l, long long max_units) {
  if (k < 1 || l < 0) throw Error(ErrorKind::InvalidLevel, "level needs k >= 1 and l >= 0");
  Int ap0 = abs(params.p0), aq0 = abs(params.q0);
  Int N = params.d0 * ipow(ap0, static_cast<unsigned>(k)) * ipow(aq0, static_cast<unsigned>(l));
  Int Np = params.d0 * ipow(ap0, static_cast<unsigned>(k - 1)) * ipow(aq0, static_cast<unsigned>(l + 1));
  if (N + Np > max_units)
    throw Error(ErrorKind::BoundExceeded, "model has " + Int(N + Np).str() + " units, limit " + std::to_string(max_units));
  auto m = std::make_unique<BSLevelModel>();
  m->params = params;
  m->k = k;
  m->l = l;
  m->N = to_ll(N);
  m->Nprime = to_ll(Np);
  int n0 = static_cast<int>(m->N), n1 = static_cast<int>(m->Nprime);
  int total = n0 + n1;
  long long ap = to_ll(params.abs_p()), aq = to_ll(params.abs_q());
  if (n0 % ap != 0 || n1 % aq != 0 || n0 / ap != n1 / aq)
    throw Error(ErrorKind::InvalidLevel, "|D| and |R| disagree");
  m->phi_map.assign(n0, -1);
  std::vector<char> hit(n1, 0);
  long long p = to_ll(params.p), q = to_ll(params.q);
  for (long long j = 0; j < n0 / ap; ++j) {
    int x = static_cast<int>(to_ll(mod_floor(Int(p * j), N)));
    int y = static_cast<int>(to_ll(mod_floor(Int(q * j), Np)));
    if (m->phi_map[x] >= 0 && m->phi_map[x] != n0 + y) throw Error(ErrorKind::InvalidLevel, "t-map is not well defined");
    if (m->phi_map[x] < 0 && hit[y]) throw Error(ErrorKind::InvalidLevel, "t-map is not injective");
    m->phi_map[x] = n0 + y;
    hit[y] = 1;
  }
  for (int x = 0; x < n0; ++x) {
    if (m->phi_map[x] < 0) continue;
    m->D.push_back(x);
    int xp = static_cast<int>(to_ll(mod_floor(Int(x + p), N)));
    long long expect = to_ll(mod_floor(Int(m->phi_map[x] - n0 + q), Np));
    if (m->phi_map[xp] - n0 != expect) throw Error(ErrorKind::InvalidLevel, "t-map does not intertwine rotations");
  }
  for (int x : m->D) m->R.push_back(m->phi_map[x]);
  std::sort(m->R.begin(), m->R.end());
  if (static_cast<long long>(m->D.size()) != n0 / ap) throw Error(ErrorKind::InvalidLevel, "domain size mismatch");

  std::vector<PartialBijection> seeds(3, PartialBijection{std::vector<int>(total, -1)});
  for (int x = 0; x < n0; ++x) seeds[0].map[x] = (x + 1) % n0;
  for (int x = 0; x < n1; ++x) seeds[1].map[n0 + x] = n0 + (x + 1) % n1;
  for (int x : m->D) seeds[2].map[x] = m->phi_map[x];
  m->groupoid = from_partial_isos(seeds, uniform_masses(total));
  const Groupoid& g = m->groupoid;
  m->S = from_predicate(g, [&](int a) { return m->level_of(g.source(a)) == m->level_of(g.range(a)); });
  m->phi_t = PartialIso{std::vector<int>(total, -1)};
  for (int x : m->D) m->phi_t.at[x] = *g.find(x, m->phi_map[x], 0);
  return m;
}

std::vector<PartialIso> level_model_witnesses(const BSLevelModel& m) {
  const Groupoid& g = m.groupoid;
  std::vector<PartialIso> out;
  UnitSet all(g.num_units());
  std::iota(all.begin(), all.end(), 0);
  out.push_back(identity_on(g, all));
  long long ap = to_ll(m.params.abs_p());
  std::vector<PartialIso> forward;
  for (long long i = 0; i < ap; ++i) {
    PartialIso psi{std::vector<int>(g.num_units(), -1)};
    for (int x = 0; x < m.N; ++x) {
      int y = static_cast<int>((x + i) % m.N);
      if (m.phi_map[y] >= 0) psi.at[x] = *g.find(x, m.phi_map[y], 0);
    }
    forward.push_back(psi);
  }
  for (const auto& psi : forward) out.push_back(psi);
  std::vector<int> back(g.num_units(), -1);
  for (int x : m.D) back[m.phi_map[x]] = x;
  long long aq = to_ll(m.params.abs_q());
  for (long long j = 0; j < aq; ++j) {
    PartialIso chi{std::vector<int>(g.num_units(), -1)};
    for (int y = 0; y < m.Nprime; ++y) {
      int z = static_cast<int>(m.N + (y + j) % m.Nprime);
      if (back[z] >= 0) chi.at[m.N + y] = *g.find(static_cast<int>(m.N + y), back[z], 0);
    }
    out.push_back(chi);
  }
  return out;
}

// ---- Mackey ranges ----

namespace {

struct UnionFind {
  explicit UnionFind(std::size_t n) : ds(n) {
    for (std::size_t i = 0; i < n; ++i) ds.make_set(i);
  }
  std::size_t find(std::size_t i) { return ds.find_set(i); }
  void unite(std::size_t a, std::size_t b) { ds.union_set(a, b); }
  boost::disjoint_sets_with_storage<> ds;
};

long long as_ll(const Rational& v) {
  if (den(v) != 1) throw Error(ErrorKind::TargetMismatch, "non-integer cocycle value " + to_string(v));
  return to_ll(num(v));
}

}  // namespace

int MackeyRange::component(int x, const Int& h) const {
  if (target.kind == TargetKind::Cyclic) {
    long long n = target.modulus;
    return table[static_cast<std::size_t>(x) * n + static_cast<std::size_t>(to_ll(mod_floor(h, n)))];
  }
  return unit_base[x] + static_cast<int>(to_ll(mod_floor(h - potential[x], period[x])));
}

std::vector<long long> MackeyRange::cycle_type() const {
  std::vector<long long> out;
  std::vector<char> seen(num_components, 0);
  for (int c = 0; c < num_components; ++c) {
    if (seen[c]) continue;
    long long len = 0;
    for (int d = c; !seen[d]; d = shift[d]) {
      seen[d] = 1;
      ++len;
    }
    out.push_back(len);
  }
  std::sort(out.begin(), out.end());
  return out;
}

MackeyRange mackey_range(const EdgeGraph& g, const Cocycle& tau) {
  if (static_cast<int>(tau.values.size()) != g.num_edges())
    throw Error(ErrorKind::InvalidParams, "one cocycle value per edge required");
  MackeyRange m;
  m.target = tau.target;
  int n = g.num_units();
  if (tau.target.kind == TargetKind::Cyclic) {
    long long H = tau.target.modulus;
    UnionFind uf(static_cast<std::size_t>(n) * H);
    for (int e = 0; e < g.num_edges(); ++e) {
      long long t = as_ll(tau.values[e]);
      for (long long h = 0; h < H; ++h)
        uf.unite(static_cast<std::size_t>(g.edges[e].s) * H + h,
                 static_cast<std::size_t>(g.edges[e].r) * H + ((t + h) % H + H) % H);
    }
    std::map<std::size_t, int> ids;
    m.table.resize(static_cast<std::size_t>(n) * H);
    for (std::size_t i = 0; i < m.table.size(); ++i) {
      auto [it, fresh] = ids.emplace(uf.find(i), static_cast<int>(ids.size()));
      m.table[i] = it->second;
    }
    m.num_components = static_cast<int>(ids.size());
    m.shift.assign(m.num_components, -1);
    for (int x = 0; x < n; ++x)
      for (long long h = 0; h < H; ++h) m.shift[m.component(x, h)] = m.component(x, h - 1);
    return m;
  }
  if (tau.target.kind != TargetKind::Integer)
    throw Error(ErrorKind::TargetMismatch, "Mackey ranges need an integer or cyclic target");
  SpanningForest f = spanning_forest(g);
  m.potential.assign(n, 0);
  for (int x : f.order) {
    int e = f.parent_edge[x];
    if (e < 0) continue;
    const Edge& ed = g.edges[e];
    if (ed.r == x)
      m.potential[x] = m.potential[ed.s] + num(tau.values[e]);
    else
      m.potential[x] = m.potential[ed.r] - num(tau.values[e]);
  }
  std::vector<Int> comp_period(f.num_components(), 0);
  for (int e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edges[e];
    Int defect = num(tau.values[e]) + m.potential[ed.s] - m.potential[ed.r];
    int c = f.component_of[ed.s];
    comp_period[c] = gcd(comp_period[c], defect);
  }
  std::vector<int> base(f.num_components());
  int total = 0;
  for (int c = 0; c < f.num_components(); ++c) {
    if (comp_period[c] == 0)
      throw Error(ErrorKind::InfiniteComponents,
                  "cycle values vanish on the component of unit " + std::to_string(f.root[c]));
    base[c] = total;
    total += static_cast<int>(to_ll(comp_period[c]));
  }
  m.num_components = total;
  m.unit_base.resize(n);
  m.period.resize(n);
  for (int x = 0; x < n; ++x) {
    m.unit_base[x] = base[f.component_of[x]];
    m.period[x] = comp_period[f.component_of[x]];
  }
  m.shift.resize(total);
  for (int c = 0; c < f.num_components(); ++c) {
    int d = static_cast<int>(to_ll(comp_period[c]));
    for (int j = 0; j < d; ++j) m.shift[base[c] + j] = base[c] + (j + d - 1) % d;
  }
  return m;
}

MackeyRange mackey_range(const Groupoid& g, const Cocycle& tau) {
  return mackey_range(EdgeGraph::from_groupoid(g), tau);
}

std::size_t mackey_window_count(const EdgeGraph& g, const Cocycle& tau, long long B, long long slab) {
  int n = g.num_units();
  long long W = 2 * B + 1;
  UnionFind uf(static_cast<std::size_t>(n) * W);
  auto id = [&](int x, long long h) { return static_cast<std::size_t>(x) * W + (h + B); };
  for (int e = 0; e < g.num_edges(); ++e) {
    long long t = as_ll(tau.values[e]);
    for (long long h = -B; h <= B; ++h) {
      long long h2 = h + t;
      if (h2 < -B || h2 > B) continue;
      uf.unite(id(g.edges[e].s, h), id(g.edges[e].r, h2));
    }
  }
  std::set<std::size_t> roots;
  for (int x = 0; x < n; ++x)
    for (long long h = 0; h < slab && h <= B; ++h) roots.insert(uf.find(id(x, h)));
  return roots.size();
}

bool isomorphic(const MackeyRange& a, const MackeyRange& b) {
  return a.target == b.target && a.cycle_type() == b.cycle_type();
}

std::optional<std::vector<int>> mackey_map(const MackeyRange& from, const MackeyRange& to,
                                           const std::vector<int>& unit_map, const std::vector<Rational>& shift) {
  if (!(from.target == to.target)) throw Error(ErrorKind::TargetMismatch, "Mackey ranges over different groups");
  std::vector<int> out(from.num_components, -1);
  auto record = [&](int c, int d) {
    if (out[c] >= 0 && out[c] != d) return false;
    out[c] = d;
    return true;
  };
  for (std::size_t x = 0; x < unit_map.size(); ++x) {
    int y = unit_map[x];
    if (y < 0) continue;
    Int s = num(shift[x]);
    Int span;
    if (from.target.kind == TargetKind::Cyclic) {
      span = from.target.modulus;
    } else {
      Int a = from.period[x], b = to.period[y];
      span = a / gcd(a, b) * b;
    }
    for (Int h = 0; h < span; ++h)
      if (!record(from.component(static_cast<int>(x), h), to.component(y, h + s))) return std::nullopt;
  }
  std::vector<char> hit(to.num_components, 0);
  for (int c = 0; c < from.num_components; ++c) {
    if (out[c] < 0 || hit[out[c]]) return std::nullopt;
    hit[out[c]] = 1;
  }
  if (std::find(hit.begin(), hit.end(), 0) != hit.end()) return std::nullopt;
  for (int c = 0; c < from.num_components; ++c)
    if (out[from.shift[c]] != to.shift[out[c]]) return std::nullopt;
  return out;
}

RestrictedGraph restrict_graph(const EdgeGraph& g, const Cocycle& tau, const UnitSet& A, int max_len) {
  int n = g.num_units();
  std::vector<int> idx(n, -1);
  RestrictedGraph out;
  out.tau.target = tau.target;
  for (int x : A) {
    if (x < 0 || x >= n) throw Error(ErrorKind::InvalidParams, "unit out of range");
    if (idx[x] >= 0) continue;
    idx[x] = static_cast<int>(out.units.size());
    out.units.push_back(x);
    out.graph.masses.push_back(g.masses[x]);
  }
  if (out.units.empty()) throw Error(ErrorKind::EmptySet, "restriction to an empty set");
  std::vector<std::vector<std::pair<int, int>>> moves(n);  // (edge, direction)
  for (int e = 0; e < g.num_edges(); ++e) {
    moves[g.edges[e].s].emplace_back(e, 1);
    moves[g.edges[e].r].emplace_back(e, -1);
  }
  const Target& t = tau.target;
  struct Frame {
    int x;
    int len;
    int last_edge;
    Rational value;
  };
  for (int a : out.units) {
    std::vector<Frame> stack{{a, 0, -1, t.neutral()}};
    while (!stack.empty()) {
      Frame f = stack.back();
      stack.pop_back();
      if (f.len >= max_len) continue;
      for (auto [e, dir] : moves[f.x]) {
        if (e == f.last_edge) continue;
        int y = dir > 0 ? g.edges[e].r : g.edges[e].s;
        Rational v = t.op(dir > 0 ? tau.values[e] : t.inv(tau.values[e]), f.value);
        if (idx[y] >= 0) {
          if (dir > 0 || f.len > 0) {
            out.graph.edges.push_back({idx[a], idx[y], -1});
            out.tau.values.push_back(v);
          }
        } else {
          stack.push_back({y, f.len + 1, e, v});
        }
      }
    }
  }
  return out;
}

// ---- Flow types ----

Cocycle log_cocycle(const Cocycle& m, const BSParams& params) {
  Rational ratio = params.ratio();
  Cocycle out{Target::integers(), {}};
  for (const auto& v : m.values) {
    if (v <= 0) throw Error(ErrorKind::NotPowerValued, "nonpositive value " + to_string(v));
    if (v == 1) {
      out.values.emplace_back(0);
      continue;
    }
    if (ratio == 1) throw Error(ErrorKind::NotPowerValued, to_string(v) + " is not a power of 1");
    Rational base = v > 1 ? ratio : Rational(1) / ratio;
    Rational w = 1;
    long long c = 0;
    while (w < v && v > 1) {
      w *= base;
      ++c;
    }
    while (w > v && v < 1) {
      w *= base;
      ++c;
    }
    if (w != v) throw Error(ErrorKind::NotPowerValued, to_string(v) + " is not a power of " + to_string(ratio));
    out.values.emplace_back(v > 1 ? c : -c);
  }
  return out;
}

std::string FlowType::str() const {
  if (n) return "|p/q|^" + std::to_string(*n) + " = " + to_string(value);
  std::string s = "orbits";
  for (auto c : cycle_lengths) s += " " + std::to_string(c);
  return s;
}

FlowType flow_type(const EdgeGraph& g, const Cocycle& m, const BSParams& params) {
  Cocycle c = log_cocycle(m, params);
  MackeyRange r = mackey_range(g, c);
  FlowType out;
  out.cycle_lengths = r.cycle_type();
  if (out.cycle_lengths.size() == 1) {
    out.n = out.cycle_lengths[0];
    out.value = rpow(Rational(1) / params.ratio(), *out.n);
  }
  return out;
}

// ---- Type classification ----

std::vector<Rational> cycle_values(const EdgeGraph& g, const Cocycle& rn) {
  SpanningForest f = spanning_forest(g);
  std::vector<Rational> psi(g.num_units(), 1);
  for (int x : f.order) {
    int e = f.parent_edge[x];
    if (e < 0) continue;
    const Edge& ed = g.edges[e];
    if (ed.r == x)
      psi[x] = rn.values[e] * psi[ed.s];
    else
      psi[x] = psi[ed.r] / rn.values[e];
  }
  std::vector<Rational> out;
  for (int e = 0; e < g.num_edges(); ++e) {
    if (f.tree_edge[e]) continue;
    const Edge& ed = g.edges[e];
    out.push_back(rn.values[e] * psi[ed.s] / psi[ed.r]);
  }
  return out;
}

std::string TypeLabel::name() const {
  switch (kind) {
    case TypeKind::II: return "II";
    case TypeKind::IIILambda: return "III_lambda(" + to_string(lambda) + ")";
    case TypeKind::III1: return "III_1";
    case TypeKind::III0Flag: return "III_0 (not representable at finite scale)";
  }
  return "?";
}

TypeLabel classify_type(const EdgeGraph& g, const Cocycle& rn) {
  std::vector<Rational> values;
  for (const auto& v : cycle_values(g, rn))
    if (v != 1) values.push_back(v);
  TypeLabel out;
  if (values.empty()) return out;
  std::map<Int, std::size_t> primes;
  std::vector<std::map<Int, long long>> vecs;
  for (const auto& v : values) {
    std::map<Int, long long> e;
    for (auto [p, k] : factorize(num(v))) e[p] += k;
    for (auto [p, k] : factorize(den(v))) e[p] -= k;
    for (auto& [p, k] : e) primes.emplace(p, 0);
    vecs.push_back(std::move(e));
  }
  std::size_t col = 0;
  for (auto& [p, i] : primes) i = col++;
  std::vector<std::vector<Rational>> rows;
  for (const auto& e : vecs) {
    std::vector<Rational> row(primes.size(), 0);
    for (auto [p, k] : e) row[primes[p]] = k;
    rows.push_back(std::move(row));
  }
  // Rank over Q by elimination.
  std::size_t rank = 0;
  auto work = rows;
  for (std::size_t c = 0; c < primes.size() && rank < work.size(); ++c) {
    std::size_t piv = rank;
    while (piv < work.size() && work[piv][c] == 0) ++piv;
    if (piv == work.size()) continue;
    std::swap(work[piv], work[rank]);
    for (std::size_t r = 0; r < work.size(); ++r) {
      if (r == rank || work[r][c] == 0) continue;
      Rational f = work[r][c] / work[rank][c];
      for (std::size_t k = 0; k < primes.size(); ++k) work[r][k] -= f * work[rank][k];
    }
    ++rank;
  }
  if (rank >= 2) {
    out.kind = TypeKind::III1;
    return out;
  }
  // Rank one: every vector is an integer multiple of a primitive vector.
  std::vector<Int> first;
  for (const auto& x : rows[0]) first.push_back(num(x));
  Int g0 = 0;
  for (const auto& x : first) g0 = gcd(g0, x);
  std::vector<Int> prim;
  for (const auto& x : first) prim.push_back(x / g0);
  std::size_t lead = 0;
  while (prim[lead] == 0) ++lead;
  Int mult = 0;
  for (const auto& row : rows) mult = gcd(mult, num(row[lead]) / prim[lead]);
  Rational lambda = 1;
  for (auto& [p, i] : primes) {
    Int e = prim[i] * mult;
    lambda *= rpow(Rational(p), to_ll(e));
  }
  if (lambda > 1) lambda = Rational(1) / lambda;
  out.kind = TypeKind::IIILambda;
  out.lambda = lambda;
  return out;
}

TypeLabel classify_type(const Groupoid& g) {
  EdgeGraph eg = EdgeGraph::from_groupoid(g);
  return classify_type(eg, radon_nikodym(eg));
}

}  // namespace bsg

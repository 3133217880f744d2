#include "bsg/invariant.hpp"

#include "bsg/error.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace bsg {

namespace {

std::vector<TreeVertex> ball(const TreeVertex& center, std::size_t radius, const BSParams& params) {
  std::vector<TreeVertex> out{center};
  std::set<std::string> seen{center.str()};
  std::size_t frontier_start = 0;
  for (std::size_t r = 0; r < radius; ++r) {
    std::size_t end = out.size();
    for (std::size_t i = frontier_start; i < end; ++i) {
      for (auto& [e, v] : neighbors(out[i], params)) {
        if (seen.insert(v.str()).second) out.push_back(v);
      }
    }
    frontier_start = end;
  }
  return out;
}

std::vector<TreeVertex> sorted_set(std::vector<TreeVertex> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

bool is_word_cocycle(const Groupoid& g, const std::vector<Word>& rho, const BSParams& params) {
  if (static_cast<int>(rho.size()) != g.num_arrows()) return false;
  for (int a = 0; a < g.num_arrows(); ++a)
    for (int b : g.into(g.source(a)))
      if (!equal_elements(rho[g.compose(a, b)], rho[a] * rho[b], params)) return false;
  return true;
}

bool is_invariant_map(const EdgeGraph& g, const std::vector<Word>& rho, const VertexMap& phi,
                      const BSParams& params) {
  for (int e = 0; e < g.num_edges(); ++e)
    if (!(act(rho[e], phi[g.edges[e].s], params) == phi[g.edges[e].r])) return false;
  return true;
}

std::optional<VertexMap> find_invariant_vertex_map(const EdgeGraph& g, const std::vector<Word>& rho,
                                                   const BSParams& params, std::size_t radius) {
  if (static_cast<int>(rho.size()) != g.num_edges()) throw Error(ErrorKind::InvalidParams, "one word per edge required");
  SpanningForest f = spanning_forest(g);
  int n = g.num_units();
  std::vector<Word> w(n);
  for (int x : f.order) {
    int e = f.parent_edge[x];
    if (e < 0) continue;
    const Edge& ed = g.edges[e];
    w[x] = ed.r == x ? rho[e] * w[ed.s] : rho[e].inverse() * w[ed.r];
  }
  std::vector<std::vector<Word>> cycles(f.num_components());
  for (int e = 0; e < g.num_edges(); ++e) {
    if (f.tree_edge[e]) continue;
    const Edge& ed = g.edges[e];
    Word c = w[ed.r].inverse() * rho[e] * w[ed.s];
    if (!is_identity(c, params)) cycles[f.component_of[ed.s]].push_back(std::move(c));
  }
  std::vector<TreeVertex> around_base = ball(base_vertex(), radius, params);
  VertexMap phi(n);
  for (int c = 0; c < f.num_components(); ++c) {
    std::vector<TreeVertex> candidates = around_base;
    bool hopeless = false;
    for (const auto& cw : cycles[c]) {
      auto fv = fixed_vertex(cw, params);
      if (!fv) {
        hopeless = true;
        break;
      }
      candidates.push_back(*fv);
    }
    if (hopeless) return std::nullopt;
    std::optional<TreeVertex> root_value;
    for (const auto& v : candidates) {
      bool ok = true;
      for (const auto& cw : cycles[c]) {
        if (!(act(cw, v, params) == v)) {
          ok = false;
          break;
        }
      }
      if (ok) {
        root_value = v;
        break;
      }
    }
    if (!root_value) return std::nullopt;
    for (int x = 0; x < n; ++x)
      if (f.component_of[x] == c) phi[x] = act(w[x], *root_value, params);
  }
  return phi;
}

std::optional<VertexMap> find_invariant_vertex_map(const Subgroupoid& s, const std::vector<Word>& rho,
                                                   const BSParams& params, std::size_t radius) {
  const Groupoid& g = *s.parent;
  if (static_cast<int>(rho.size()) != g.num_arrows()) throw Error(ErrorKind::InvalidParams, "one word per arrow required");
  for (int a = 0; a < g.num_arrows(); ++a) {
    if (!s.contains(a)) continue;
    for (int b : g.into(g.source(a)))
      if (s.contains(b) && !equal_elements(rho[g.compose(a, b)], rho[a] * rho[b], params))
        throw Error(ErrorKind::NotACocycle, "rho is not multiplicative on S");
  }
  EdgeGraph eg;
  eg.masses = g.masses();
  std::vector<Word> labels;
  for (int a = 0; a < g.num_arrows(); ++a) {
    if (!s.contains(a)) continue;
    eg.edges.push_back({g.source(a), g.range(a), -1});
    labels.push_back(rho[a]);
  }
  return find_invariant_vertex_map(eg, labels, params, radius);
}

VertexSetMap induce_finite_invariant_set(const Groupoid& g, const Subgroupoid& h, const std::vector<Word>& rho,
                                         const VertexMap& psi, const BSParams& params) {
  Subgroupoid all = whole(g);
  std::optional<std::size_t> N;
  VertexSetMap out(g.num_units());
  for (int x = 0; x < g.num_units(); ++x) {
    auto reps = coset_representatives(all, h, x);
    if (N && *N != reps.size())
      throw Error(ErrorKind::IndexNotConstant,
                  "index " + std::to_string(reps.size()) + " at unit " + std::to_string(x) + " differs from " +
                      std::to_string(*N));
    N = reps.size();
    std::vector<TreeVertex> vs;
    for (int a : reps) vs.push_back(act(rho[a].inverse(), psi[g.range(a)], params));
    out[x] = sorted_set(std::move(vs));
  }
  return out;
}

bool is_invariant_set_map(const Groupoid& g, const std::vector<Word>& rho, const VertexSetMap& psi,
                          const BSParams& params) {
  for (int a = 0; a < g.num_arrows(); ++a) {
    std::vector<TreeVertex> moved;
    for (const auto& v : psi[g.source(a)]) moved.push_back(act(rho[a], v, params));
    if (sorted_set(std::move(moved)) != psi[g.range(a)]) return false;
  }
  return true;
}

}  // namespace bsg

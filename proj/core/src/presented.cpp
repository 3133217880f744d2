#include "bsg/presented.hpp"

#include "bsg/error.hpp"

#include <algorithm>
#include <deque>

namespace bsg {

EdgeGraph EdgeGraph::from_groupoid(const Groupoid& g) {
  EdgeGraph out;
  out.masses = g.masses();
  for (int a = 0; a < g.num_arrows(); ++a) out.edges.push_back({g.source(a), g.range(a), -1});
  return out;
}

EdgeGraph EdgeGraph::from_generators(std::vector<Rational> masses, const std::vector<PartialBijection>& gens) {
  EdgeGraph out;
  out.masses = std::move(masses);
  int n = out.num_units();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (static_cast<int>(gens[i].map.size()) != n) throw Error(ErrorKind::InvalidParams, "generator has wrong size");
    for (int x = 0; x < n; ++x) {
      int y = gens[i].map[x];
      if (y < 0) continue;
      if (y >= n) throw Error(ErrorKind::InvalidParams, "generator image out of range");
      out.edges.push_back({x, y, static_cast<int>(i)});
    }
  }
  return out;
}

SpanningForest spanning_forest(const EdgeGraph& g) {
  int n = g.num_units();
  std::vector<std::vector<int>> incident(n);
  for (int e = 0; e < g.num_edges(); ++e) {
    incident[g.edges[e].s].push_back(e);
    if (g.edges[e].r != g.edges[e].s) incident[g.edges[e].r].push_back(e);
  }
  SpanningForest f;
  f.component_of.assign(n, -1);
  f.parent_edge.assign(n, -1);
  f.tree_edge.assign(g.num_edges(), 0);
  for (int x0 = 0; x0 < n; ++x0) {
    if (f.component_of[x0] >= 0) continue;
    int c = f.num_components();
    f.root.push_back(x0);
    f.component_of[x0] = c;
    std::deque<int> queue{x0};
    while (!queue.empty()) {
      int x = queue.front();
      queue.pop_front();
      f.order.push_back(x);
      for (int e : incident[x]) {
        int y = g.edges[e].s == x ? g.edges[e].r : g.edges[e].s;
        if (f.component_of[y] >= 0) continue;
        f.component_of[y] = c;
        f.parent_edge[y] = e;
        f.tree_edge[e] = 1;
        queue.push_back(y);
      }
    }
  }
  return f;
}

std::vector<std::pair<int, int>> tree_path(const EdgeGraph& g, const SpanningForest& f, int x) {
  std::vector<std::pair<int, int>> path;
  while (f.parent_edge[x] >= 0) {
    int e = f.parent_edge[x];
    if (g.edges[e].r == x) {
      path.emplace_back(e, 1);
      x = g.edges[e].s;
    } else {
      path.emplace_back(e, -1);
      x = g.edges[e].r;
    }
  }
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace bsg

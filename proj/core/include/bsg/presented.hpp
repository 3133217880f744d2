#pragma once

#include "bsg/groupoid.hpp"

#include <string>
#include <vector>

namespace bsg {

// A groupoid given by generating edges between units. Cocycles on it are assigned edge by edge,
// which lets cycle values be nontrivial even though the unit set is finite.
struct Edge {
  int s = 0, r = 0;
  int gen = -1;  // generator index when built from partial bijections
};

struct EdgeGraph {
  std::vector<Rational> masses;
  std::vector<Edge> edges;

  int num_units() const { return static_cast<int>(masses.size()); }
  int num_edges() const { return static_cast<int>(edges.size()); }

  // Every arrow of the mask (all arrows by default) becomes an edge with the same index.
  static EdgeGraph from_groupoid(const Groupoid& g);
  // One edge x -> gens[i](x) for each generator i and each x in its domain.
  static EdgeGraph from_generators(std::vector<Rational> masses, const std::vector<PartialBijection>& gens);
};

// Spanning forest of the undirected graph underlying an edge graph.
struct SpanningForest {
  std::vector<int> component_of;
  std::vector<int> root;         // per component
  std::vector<int> parent_edge;  // per unit, -1 at roots
  std::vector<int> order;        // units in BFS order
  std::vector<char> tree_edge;   // per edge
  int num_components() const { return static_cast<int>(root.size()); }
};

SpanningForest spanning_forest(const EdgeGraph& g);

// Edge path from the root of x's component to x: (edge, +1 forward / -1 backward) pairs in order.
std::vector<std::pair<int, int>> tree_path(const EdgeGraph& g, const SpanningForest& f, int x);

}  // namespace bsg

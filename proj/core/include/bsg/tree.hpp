#pragma once

#include "bsg/word.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace bsg {

inline constexpr std::size_t kDefaultRadius = 32;

// Vertex γ<a>, represented by the normal form of γ with its trailing a-power removed.
struct TreeVertex {
  NormalForm rep;

  std::size_t depth() const { return rep.syl.size(); }
  std::string str() const { return rep.str(); }
  bool operator==(const TreeVertex& o) const { return rep == o.rep; }
  bool operator<(const TreeVertex& o) const { return rep < o.rep; }
};

// Positively oriented edge γ<a^q> from γ<a> to γt<a>; sign records the traversal direction.
struct TreeEdge {
  NormalForm rep;  // trailing exponent reduced into [0,|q|)
  TreeVertex origin, terminal;
  int sign = 1;

  TreeEdge reversed() const {
    TreeEdge e = *this;
    e.sign = -sign;
    return e;
  }
  const TreeVertex& from() const { return sign > 0 ? origin : terminal; }
  const TreeVertex& to() const { return sign > 0 ? terminal : origin; }
  bool same_edge(const TreeEdge& o) const { return rep == o.rep; }
  bool operator==(const TreeEdge& o) const { return rep == o.rep && sign == o.sign; }
};

TreeVertex base_vertex();
TreeVertex canonical_vertex(const Word& w, const BSParams& params);
TreeVertex act(const Word& g, const TreeVertex& v, const BSParams& params);
// The positively oriented edge γ<a^q>.
TreeEdge canonical_edge(const Word& g, const BSParams& params);

// Coset test through the word problem: γ1^-1 γ2 is a power of a.
bool same_coset(const Word& g1, const Word& g2, const BSParams& params);

std::vector<std::pair<TreeEdge, TreeVertex>> neighbors(const TreeVertex& v, const BSParams& params);

std::vector<TreeEdge> geodesic(const TreeVertex& u, const TreeVertex& v, const BSParams& params,
                               std::size_t radius = kDefaultRadius);
std::vector<TreeVertex> geodesic_vertices(const TreeVertex& u, const TreeVertex& v,
                                          const BSParams& params,
                                          std::size_t radius = kDefaultRadius);
std::size_t distance(const TreeVertex& u, const TreeVertex& v);

// d0 |p0|^-m |q0|^M from the partial sums of edge signs along [u,v]; 1 when u = v.
Int stabilizer_index(const TreeVertex& u, const TreeVertex& v, const BSParams& params,
                     std::size_t radius = kDefaultRadius);
// Smallest k >= 1 with a_u^k in Γ_v, by pinch reduction. Throws BoundExceeded.
Int stabilizer_index_oracle(const TreeVertex& u, const TreeVertex& v, const BSParams& params,
                            long long bound);

Int tau(const Word& w, const BSParams& params);

// A vertex fixed by g, if any (midpoint of [v0, g v0]).
std::optional<TreeVertex> fixed_vertex(const Word& g, const BSParams& params);

}  // namespace bsg

#pragma once

#include "bsg/groupoid.hpp"
#include "bsg/presented.hpp"
#include "bsg/tree.hpp"

#include <optional>
#include <vector>

namespace bsg {

using VertexMap = std::vector<TreeVertex>;
using VertexSetMap = std::vector<std::vector<TreeVertex>>;

// rho(g h) = rho(g) rho(h) on every composable pair, decided by the word problem.
bool is_word_cocycle(const Groupoid& g, const std::vector<Word>& rho, const BSParams& params);

bool is_invariant_map(const EdgeGraph& g, const std::vector<Word>& rho, const VertexMap& phi,
                      const BSParams& params);

// phi with rho(e) phi(s e) = phi(r e) on every edge. Per component the tree path words pin phi down
// from its value at the root, which is searched in the ball of the given radius around v0.
std::optional<VertexMap> find_invariant_vertex_map(const EdgeGraph& g, const std::vector<Word>& rho,
                                                   const BSParams& params, std::size_t radius);
// Same for the arrows of S; rho is indexed by arrows of the parent. Throws NotACocycle.
std::optional<VertexMap> find_invariant_vertex_map(const Subgroupoid& s, const std::vector<Word>& rho,
                                                   const BSParams& params, std::size_t radius);

// Psi(x) = { rho(phi_i(x))^-1 psi(r phi_i(x)) } over the lowest-id coset representatives of
// s^-1(x) mod H. Throws IndexNotConstant.
VertexSetMap induce_finite_invariant_set(const Groupoid& g, const Subgroupoid& h, const std::vector<Word>& rho,
                                         const VertexMap& psi, const BSParams& params);
bool is_invariant_set_map(const Groupoid& g, const std::vector<Word>& rho, const VertexSetMap& psi,
                          const BSParams& params);

}  // namespace bsg

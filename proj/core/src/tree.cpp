#include "bsg/tree.hpp"

#include "bsg/error.hpp"

#include <algorithm>
#include <limits>

namespace bsg {

namespace {

// Exponent preceding the i-th t-letter of a normal form.
const Int& pre_exponent(const NormalForm& nf, std::size_t i) { return i == 0 ? nf.k0 : nf.syl[i - 1].k; }

// Vertex reached after the first j syllables.
TreeVertex prefix_vertex(const NormalForm& nf, std::size_t j) {
  TreeVertex v;
  v.rep.k0 = nf.k0;
  v.rep.syl.assign(nf.syl.begin(), nf.syl.begin() + static_cast<std::ptrdiff_t>(j));
  v.rep.trailing() = 0;
  return v;
}

// Edge between prefix j and prefix j+1, traversed away from the base vertex.
TreeEdge down_edge(const NormalForm& nf, std::size_t j) {
  TreeVertex parent = prefix_vertex(nf, j);
  TreeVertex child = prefix_vertex(nf, j + 1);
  TreeEdge e;
  if (nf.syl[j].e == 1) {
    e.rep = parent.rep;
    e.rep.trailing() = pre_exponent(nf, j);
    e.origin = parent;
    e.terminal = child;
    e.sign = 1;
  } else {
    e.rep = child.rep;
    e.origin = child;
    e.terminal = parent;
    e.sign = -1;
  }
  return e;
}

std::size_t common_prefix(const NormalForm& u, const NormalForm& v) {
  std::size_t c = 0;
  std::size_t n = std::min(u.syl.size(), v.syl.size());
  while (c < n && u.syl[c].e == v.syl[c].e && pre_exponent(u, c) == pre_exponent(v, c)) ++c;
  return c;
}

}  // namespace

TreeVertex base_vertex() { return TreeVertex{}; }

TreeVertex canonical_vertex(const Word& w, const BSParams& params) {
  TreeVertex v{normalize(w, params)};
  v.rep.trailing() = 0;
  return v;
}

TreeVertex act(const Word& g, const TreeVertex& v, const BSParams& params) {
  return canonical_vertex(g * v.rep.to_word(), params);
}

TreeEdge canonical_edge(const Word& g, const BSParams& params) {
  TreeEdge e;
  e.rep = normalize(g, params);
  e.rep.trailing() = mod_floor(e.rep.trailing(), params.q);
  Word gw = e.rep.to_word();
  e.origin = canonical_vertex(gw, params);
  e.terminal = canonical_vertex(gw * Word::t(), params);
  e.sign = 1;
  return e;
}

bool same_coset(const Word& g1, const Word& g2, const BSParams& params) {
  return normalize(g1.inverse() * g2, params).is_a_power();
}

std::vector<std::pair<TreeEdge, TreeVertex>> neighbors(const TreeVertex& v, const BSParams& params) {
  std::vector<std::pair<TreeEdge, TreeVertex>> out;
  Word g = v.rep.to_word();
  for (Int i = 0; i < params.abs_q(); ++i) {
    TreeEdge e = canonical_edge(g * Word::a(i), params);
    TreeVertex w = e.terminal;
    out.emplace_back(std::move(e), std::move(w));
  }
  for (Int i = 0; i < params.abs_p(); ++i) {
    TreeEdge e = canonical_edge(g * Word::a(i) * Word::t(-1), params);
    e.sign = -1;
    TreeVertex w = e.origin;
    out.emplace_back(std::move(e), std::move(w));
  }
  return out;
}

std::size_t distance(const TreeVertex& u, const TreeVertex& v) {
  std::size_t c = common_prefix(u.rep, v.rep);
  return u.depth() + v.depth() - 2 * c;
}

std::vector<TreeEdge> geodesic(const TreeVertex& u, const TreeVertex& v, const BSParams&,
                               std::size_t radius) {
  std::size_t c = common_prefix(u.rep, v.rep);
  std::size_t d = u.depth() + v.depth() - 2 * c;
  if (d > radius)
    throw Error(ErrorKind::RadiusExceeded,
                "distance " + std::to_string(d) + " exceeds radius " + std::to_string(radius));
  std::vector<TreeEdge> path;
  path.reserve(d);
  for (std::size_t j = u.depth(); j-- > c;) path.push_back(down_edge(u.rep, j).reversed());
  for (std::size_t j = c; j < v.depth(); ++j) path.push_back(down_edge(v.rep, j));
  return path;
}

std::vector<TreeVertex> geodesic_vertices(const TreeVertex& u, const TreeVertex& v,
                                          const BSParams& params, std::size_t radius) {
  std::vector<TreeVertex> out{u};
  for (const auto& e : geodesic(u, v, params, radius)) out.push_back(e.to());
  return out;
}

Int stabilizer_index(const TreeVertex& u, const TreeVertex& v, const BSParams& params,
                     std::size_t radius) {
  if (u == v) return 1;
  long long s = 0, hi = 0, lo = 0;
  for (const auto& e : geodesic(u, v, params, radius)) {
    s += e.sign;
    hi = std::max(hi, s);
    lo = std::min(lo, s);
  }
  return params.d0 * ipow(abs(params.p0), static_cast<unsigned>(-lo)) *
         ipow(abs(params.q0), static_cast<unsigned>(hi));
}

Int stabilizer_index_oracle(const TreeVertex& u, const TreeVertex& v, const BSParams& params,
                            long long bound) {
  Word ru = u.rep.to_word();
  Word rv = v.rep.to_word();
  Word left = rv.inverse() * ru;
  Word right = ru.inverse() * rv;
  for (long long k = 1; k <= bound; ++k) {
    // Britton: a pinch-free word lies in <a> iff it has no t-letters.
    Word w = pinch_reduce(left * Word::a(k) * right, params);
    if (w.letters().size() <= 1 && (w.empty() || w.letters()[0].gen == 'a')) return k;
  }
  throw Error(ErrorKind::BoundExceeded, "no k <= " + std::to_string(bound));
}

Int tau(const Word& w, const BSParams&) { return w.t_exponent_sum(); }

std::optional<TreeVertex> fixed_vertex(const Word& g, const BSParams& params) {
  TreeVertex v0 = base_vertex();
  TreeVertex gv = act(g, v0, params);
  auto verts = geodesic_vertices(v0, gv, params, std::numeric_limits<std::size_t>::max());
  std::size_t d = verts.size() - 1;
  if (d == 0) return v0;
  if (d % 2 == 1) return std::nullopt;
  const TreeVertex& mid = verts[d / 2];
  if (act(g, mid, params) == mid) return mid;
  return std::nullopt;
}

}  // namespace bsg

#pragma once

#include "bsg/groupoid.hpp"
#include "bsg/presented.hpp"
#include "bsg/word.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace bsg {

enum class TargetKind { PositiveRational, Integer, Cyclic };

struct Target {
  TargetKind kind = TargetKind::PositiveRational;
  long long modulus = 0;  // Cyclic only

  static Target multiplicative() { return {TargetKind::PositiveRational, 0}; }
  static Target integers() { return {TargetKind::Integer, 0}; }
  static Target cyclic(long long n) { return {TargetKind::Cyclic, n}; }
  Rational neutral() const;
  Rational op(const Rational& a, const Rational& b) const;
  Rational inv(const Rational& a) const;
  bool valid(const Rational& a) const;
  std::string str() const;
  bool operator==(const Target& o) const { return kind == o.kind && modulus == o.modulus; }
};

// Values indexed by arrow (on a Groupoid) or by edge (on an EdgeGraph).
struct Cocycle {
  Target target;
  std::vector<Rational> values;
};

bool is_cocycle(const Groupoid& g, const Cocycle& c);
Cocycle radon_nikodym(const Groupoid& g);
// Radon-Nikodym values mu(r)/mu(s) on the edges of a graph.
Cocycle radon_nikodym(const EdgeGraph& g);

// ψ with c2(g) = ψ(r g) c1(g) ψ(s g)^-1, neutral at the root of each component. Throws TargetMismatch.
std::optional<std::vector<Rational>> cohomologous(const Groupoid& g, const Cocycle& c1, const Cocycle& c2);
bool is_transfer(const Groupoid& g, const Cocycle& c1, const Cocycle& c2, const std::vector<Rational>& psi);

// The scalar in the pushforward identity for phi at x in its domain.
Rational modular_D_at(const Subgroupoid& s, const PartialIso& phi, int x);
// [[(S)_R : S+]]_{r} [[(S)_D : S-]]_{x}^-1 for phi at x.
Rational local_index_I_at(const Subgroupoid& s, const PartialIso& phi, int x);

// Extended to every arrow through a covering family (default: the witnesses of is_quasinormal).
// Throws NotMeasurePreserving, NotQuasiNormal, or AxiomViolation if two covering maps disagree.
Cocycle modular_D(const Subgroupoid& s, const std::vector<PartialIso>* family = nullptr);
Cocycle local_index_I(const Subgroupoid& s, const std::vector<PartialIso>* family = nullptr);

Rational group_index_ratio(const Int& plus_index, const Int& minus_index);
// [E : E ∩ γEγ^-1][E : E ∩ γ^-1Eγ]^-1 for E = <a>, from stabilizer indices on the tree.
Rational bs_group_index_ratio(const Word& gamma, const BSParams& params);

struct BSLevelModel {
  BSParams params;
  long long k = 1, l = 0;
  long long N = 0, Nprime = 0;
  Groupoid groupoid;
  Subgroupoid S;
  std::vector<int> D, R;  // units; level 1 is offset by N
  PartialIso phi_t;
  std::vector<int> phi_map;  // phi_map[x] for x in D, as a unit of level 1

  int level_of(int x) const { return x < N ? 0 : 1; }
};

// Throws InvalidLevel for k < 1 or l < 0, BoundExceeded if the model is too large.
// The returned model owns its groupoid; keep it in place (S points into it).
std::unique_ptr<BSLevelModel> bs_level_model(const BSParams& params, long long k, long long l,
                                             long long max_units = 4000);
// Identity, phi_t precomposed with level-0 rotations, and phi_t^-1 precomposed with level-1 rotations.
std::vector<PartialIso> level_model_witnesses(const BSLevelModel& m);

// ---- Mackey ranges ----

struct MackeyRange {
  Target target;
  int num_components = 0;
  std::vector<int> shift;  // action of the generator 1: component of (x,h) -> component of (x,h-1)
  // ℤ/n: component of (x,h) is table[x*n+h]. ℤ: per unit, base component, potential, period.
  std::vector<int> table;
  std::vector<int> unit_base;
  std::vector<Int> potential;
  std::vector<Int> period;

  int component(int x, const Int& h) const;
  std::vector<long long> cycle_type() const;  // sorted cycle lengths of shift
};

// Skew product on units x H. For ℤ targets each unit component must carry a nonzero cycle
// value, else InfiniteComponents.
MackeyRange mackey_range(const EdgeGraph& g, const Cocycle& tau);
MackeyRange mackey_range(const Groupoid& g, const Cocycle& tau);
// Independent count for ℤ targets: distinct components of the skew product truncated to
// units x [-B,B] that meet the slab units x [0,slab). Agrees with num_components once B is large.
std::size_t mackey_window_count(const EdgeGraph& g, const Cocycle& tau, long long B, long long slab);

bool isomorphic(const MackeyRange& a, const MackeyRange& b);
// Component map induced by (x,h) -> (unit_map[x], h + shift[x]); nullopt unless it is a
// well-defined equivariant bijection.
std::optional<std::vector<int>> mackey_map(const MackeyRange& from, const MackeyRange& to,
                                           const std::vector<int>& unit_map, const std::vector<Rational>& shift);

// Excursion graph on A: one edge per path from A back to A through X \ A, up to max_len steps.
struct RestrictedGraph {
  EdgeGraph graph;
  Cocycle tau;
  std::vector<int> units;  // new -> old
};
RestrictedGraph restrict_graph(const EdgeGraph& g, const Cocycle& tau, const UnitSet& A, int max_len);

struct FlowType {
  std::vector<long long> cycle_lengths;  // per orbit of the ℤ-action on Mackey components
  std::optional<long long> n;            // set when there is a single cycle
  Rational value;                        // |p/q|^n when n is set
  std::string str() const;
};

// m must take values in |q/p|^ℤ; throws NotPowerValued otherwise.
FlowType flow_type(const EdgeGraph& g, const Cocycle& m, const BSParams& params);
Cocycle log_cocycle(const Cocycle& m, const BSParams& params);

enum class TypeKind { II, IIILambda, III1, III0Flag };

struct TypeLabel {
  TypeKind kind = TypeKind::II;
  Rational lambda = 0;
  std::string name() const;
  bool operator==(const TypeLabel& o) const { return kind == o.kind && lambda == o.lambda; }
};

// From the group of Radon-Nikodym values around cycles.
TypeLabel classify_type(const EdgeGraph& g, const Cocycle& rn);
TypeLabel classify_type(const Groupoid& g);
// Values of rn around the fundamental cycles of a spanning forest.
std::vector<Rational> cycle_values(const EdgeGraph& g, const Cocycle& rn);

}  // namespace bsg

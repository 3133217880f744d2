#pragma once

#include "bsg/numeric.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace bsg {

inline constexpr std::size_t kDefaultGroupBound = 1024;
inline constexpr std::size_t kDefaultClosureBound = 200000;

// Finite group by multiplication table; element 0 is the identity.
class FiniteGroup {
 public:
  static FiniteGroup trivial();
  static FiniteGroup cyclic(int n);
  static FiniteGroup product(const FiniteGroup& a, const FiniteGroup& b);
  // Closure of permutations of {0..n-1}; (gh)(x) = g(h(x)). Throws GroupTooLarge.
  static FiniteGroup from_permutations(const std::vector<std::vector<int>>& gens,
                                       std::size_t bound = kDefaultGroupBound);
  static FiniteGroup from_table(std::vector<std::vector<int>> table, std::vector<std::string> names = {});

  int size() const { return static_cast<int>(mul_.size()); }
  int op(int a, int b) const { return mul_[a][b]; }
  int inv(int a) const { return inv_[a]; }
  int pow(int a, long long n) const;
  int order(int a) const;
  const std::string& name(int a) const { return names_[a]; }
  // Permutation realising each element; empty unless built from permutations.
  const std::vector<std::vector<int>>& perms() const { return perms_; }
  // Element of the generated group for each generator, when built from permutations.
  const std::vector<int>& generator_elements() const { return gen_elems_; }
  bool is_subgroup(const std::vector<char>& mask) const;
  bool is_normal_subgroup(const std::vector<char>& mask) const;

 private:
  void finish();
  std::vector<std::vector<int>> mul_;
  std::vector<int> inv_;
  std::vector<std::string> names_;
  std::vector<std::vector<int>> perms_;
  std::vector<int> gen_elems_;
};

struct Arrow {
  int s = 0, r = 0;
  int f = 0;    // label-group element (label mode) or 0
  int inv = 0;  // inverse arrow id
};

// A partial bijection of {0..n-1}: map[x] is the image or -1.
struct PartialBijection {
  std::vector<int> map;
};

// Finite discrete measured groupoid. Arrows are (s, r, f) with f in a finite label group and
// product (s_h, r_g, f_g f_h); groupoids read from JSON carry an explicit product table instead.
class Groupoid {
 public:
  Groupoid() = default;
  // Label mode. Arrows must be closed under inverse and composition (checked by validate_axioms).
  Groupoid(std::vector<Rational> masses, FiniteGroup labels, const std::vector<Arrow>& arrows);
  // Table mode. product entries are (g, h, gh) for every composable pair with s(g) = r(h).
  static Groupoid from_table(std::vector<Rational> masses, const std::vector<Arrow>& arrows,
                             std::vector<std::string> arrow_labels,
                             const std::vector<std::array<int, 3>>& product);

  int num_units() const { return static_cast<int>(masses_.size()); }
  int num_arrows() const { return static_cast<int>(arrows_.size()); }
  const Arrow& arrow(int g) const { return arrows_[g]; }
  int source(int g) const { return arrows_[g].s; }
  int range(int g) const { return arrows_[g].r; }
  int inverse(int g) const { return arrows_[g].inv; }
  int unit(int x) const { return unit_[x]; }
  bool is_unit(int g) const { return unit_[arrows_[g].s] == g; }
  const Rational& mass(int x) const { return masses_[x]; }
  const std::vector<Rational>& masses() const { return masses_; }
  Rational total_mass() const;
  // g·h, defined when s(g) = r(h).
  std::optional<int> product(int g, int h) const;
  int compose(int g, int h) const;  // throws AxiomViolation when undefined
  std::optional<int> find(int s, int r, int f) const;
  const std::vector<int>& out_of(int x) const { return out_[x]; }  // arrows with source x
  const std::vector<int>& into(int x) const { return in_[x]; }     // arrows with range x
  const std::vector<int>& loops(int x) const { return loops_[x]; }
  bool table_mode() const { return table_mode_; }
  const FiniteGroup& label_group() const { return labels_; }
  std::string arrow_label(int g) const;
  bool measure_preserving() const;

 private:
  void index();
  static std::uint64_t key3(std::uint64_t a, std::uint64_t b, std::uint64_t c, std::uint64_t n,
                            std::uint64_t m);

  std::vector<Rational> masses_;
  FiniteGroup labels_ = FiniteGroup::trivial();
  std::vector<Arrow> arrows_;
  std::vector<int> unit_;
  std::vector<std::vector<int>> out_, in_, loops_;
  std::unordered_map<std::uint64_t, int> lookup_;
  bool table_mode_ = false;
  std::vector<std::string> table_labels_;
  std::unordered_map<std::uint64_t, int> table_;
};

// Exhaustive check of units, inverses, closure and associativity. Throws AxiomViolation.
void validate_axioms(const Groupoid& g);

// Γ ⋉ X from an abstract group with action[γ][x].
Groupoid from_group_action(const FiniteGroup& group, const std::vector<std::vector<int>>& action,
                           std::vector<Rational> masses);
// Γ ⋉ X for the permutation group generated by gens.
Groupoid from_group_action(const std::vector<std::vector<int>>& gens, std::vector<Rational> masses,
                           std::size_t bound = kDefaultGroupBound);
// Closure of the seeds over (point, label) states. With the trivial label group the result is the
// principal groupoid of the generated equivalence relation. Throws ClosureTooLarge.
Groupoid from_partial_isos(const std::vector<PartialBijection>& seeds, std::vector<Rational> masses,
                           const FiniteGroup& labels = FiniteGroup::trivial(),
                           const std::vector<int>& seed_labels = {},
                           std::size_t bound = kDefaultClosureBound);
std::vector<Rational> uniform_masses(int n);

struct Subgroupoid {
  const Groupoid* parent = nullptr;
  std::vector<char> in;

  bool contains(int g) const { return in[g] != 0; }
  std::size_t size() const;
  std::vector<int> arrows() const;
  bool operator==(const Subgroupoid& o) const { return parent == o.parent && in == o.in; }
};

Subgroupoid whole(const Groupoid& g);
Subgroupoid units_only(const Groupoid& g);
Subgroupoid from_predicate(const Groupoid& g, const std::function<bool(int)>& pred);
// Smallest subgroupoid containing the units and the given arrows.
Subgroupoid generated(const Groupoid& g, const std::vector<int>& gens);
Subgroupoid intersect(const Subgroupoid& a, const Subgroupoid& b);
bool is_subgroupoid(const Subgroupoid& h);
bool is_contained(const Subgroupoid& h, const Subgroupoid& k);
// (H)_A: arrows of H with both endpoints in A.
Subgroupoid restrict_mask(const Subgroupoid& h, const std::vector<int>& A);

using UnitSet = std::vector<int>;  // sorted, distinct

struct Restriction {
  Groupoid groupoid;
  std::vector<int> units;        // new -> old
  std::vector<int> unit_index;   // old -> new or -1
  std::vector<int> arrows;       // new -> old
  std::vector<int> arrow_index;  // old -> new or -1

  // Transport a subgroupoid of the parent to the restriction.
  Subgroupoid carry(const Subgroupoid& h) const;
};

Restriction restrict(const Groupoid& g, const UnitSet& A);
UnitSet saturation(const Subgroupoid& h, const UnitSet& A);
UnitSet saturation(const Groupoid& g, const UnitSet& A);

struct ErgodicDecomposition {
  std::vector<int> component_of;
  std::vector<UnitSet> components;
  std::vector<Rational> component_mass;

  Rational conditional(const Groupoid& g, int x) const {
    return g.mass(x) / component_mass[component_of[x]];
  }
};

ErgodicDecomposition ergodic_decomposition(const Subgroupoid& h);
ErgodicDecomposition ergodic_decomposition(const Groupoid& g);

// Classes of s^-1(x) ∩ K under left multiplication by H, for H ≤ K.
std::size_t index(const Subgroupoid& k, const Subgroupoid& h, int x);
std::size_t index(const Groupoid& g, const Subgroupoid& h, int x);
// Same count with K cut down to arrows ending in the H-orbit of x.
Rational local_index(const Subgroupoid& k, const Subgroupoid& h, int x);
Rational local_index(const Groupoid& g, const Subgroupoid& h, int x);
// Lowest-id arrow of each class of s^-1(x) ∩ K mod H.
std::vector<int> coset_representatives(const Subgroupoid& k, const Subgroupoid& h, int x);

// Element of [[G]]: at[x] is the arrow chosen at x, or -1 off the domain.
struct PartialIso {
  std::vector<int> at;

  bool defined(int x) const { return at[x] >= 0; }
  UnitSet domain() const;
  UnitSet range(const Groupoid& g) const;
};

PartialIso singleton(const Groupoid& g, int arrow);
PartialIso identity_on(const Groupoid& g, const UnitSet& A);
void validate(const Groupoid& g, const PartialIso& phi);  // throws NotInFullGroup
PartialIso compose(const Groupoid& g, const PartialIso& psi, const PartialIso& phi);  // psi • phi
PartialIso inverse(const Groupoid& g, const PartialIso& phi);
// U_phi(a) = phi(r a) a phi(s a)^-1 for a with both endpoints in the domain.
int conjugate(const Groupoid& g, const PartialIso& phi, int a);
// S^phi = U_phi((S)_D).
Subgroupoid conjugate(const Subgroupoid& s, const PartialIso& phi);

enum class QNClass { Normalizing, QuasiNormalizing, Neither };
const char* qn_class_name(QNClass c);

struct QNReport {
  QNClass kind;
  // Per x in R_phi: [(S)_R : (S)_R ∩ S^phi]_x and [S^phi : (S)_R ∩ S^phi]_x.
  std::vector<std::array<std::size_t, 3>> indices;
};

QNReport qn_membership(const Subgroupoid& s, const PartialIso& phi);

struct QuasiNormalWitness {
  bool quasinormal = false;
  bool normal = false;
  std::vector<PartialIso> family;  // covers G modulo S
};

QuasiNormalWitness is_quasinormal(const Subgroupoid& s);
bool is_normal(const Subgroupoid& s);

struct Quotient {
  Groupoid groupoid;
  std::vector<int> theta;     // arrow of G -> arrow of Q
  std::vector<int> unit_map;  // unit of G -> unit of Q
};

// Q on the S-components with arrows the double classes S g S. Throws NotNormal.
Quotient quotient(const Subgroupoid& s);
bool kernel_is(const Quotient& q, const Subgroupoid& s);
bool has_lifting_property(const Quotient& q, const Groupoid& g);
// Factor a homomorphism killing S, given by its value on each arrow of G, through θ; nullopt if it
// does not descend.
std::optional<std::vector<int>> factor_through(const Quotient& q, const Groupoid& g,
                                               const std::vector<int>& hom);

}  // namespace bsg

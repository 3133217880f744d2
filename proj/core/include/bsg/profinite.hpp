#pragma once

#include "bsg/word.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace bsg {

// Residue modulo M = d0 |p0|^K |q0|^L, the (K,L) truncation of the inverse limit of E/E_{k,l}.
class ProfiniteInt {
 public:
  ProfiniteInt(const BSParams& params, unsigned K, unsigned L, const Int& value);

  static Int modulus(const BSParams& params, unsigned K, unsigned L);
  // "residue@(K,L)"; throws ParseError.
  static ProfiniteInt parse(const BSParams& params, std::string_view text);

  const BSParams& params() const { return params_; }
  unsigned K() const { return K_; }
  unsigned L() const { return L_; }
  const Int& residue() const { return residue_; }
  const Int& modulus() const { return modulus_; }
  std::string str() const;

  // Coherent reduction to a lower level; throws InvalidLevel if K2 > K or L2 > L.
  ProfiniteInt reduce(unsigned K2, unsigned L2) const;
  // Membership in the closure of d0 p0^k q0^l ℤ, at this truncation.
  bool in_level(unsigned k, unsigned l) const;

  bool operator==(const ProfiniteInt& o) const;
  // Same parameters and level as this, new value.
  ProfiniteInt with(const Int& value) const;

 private:
  struct Raw {};
  ProfiniteInt(Raw, const ProfiniteInt& like, const Int& value);

  BSParams params_;
  unsigned K_, L_;
  Int modulus_;
  Int residue_;
};

// Results live at the componentwise minimum level. Throw ParamMismatch.
ProfiniteInt operator+(const ProfiniteInt& x, const ProfiniteInt& y);
ProfiniteInt operator-(const ProfiniteInt& x, const ProfiniteInt& y);
ProfiniteInt operator*(const ProfiniteInt& x, const ProfiniteInt& y);
ProfiniteInt operator-(const ProfiniteInt& x);

// Unit at every level: gcd(residue, d0 p0 q0) = 1.
bool is_unit(const ProfiniteInt& x);
// Exact inverse at x's level; throws NotAUnit.
ProfiniteInt unit_inverse(const ProfiniteInt& x);

// x -> p0^k q0^l x, from E_{0,0} into E_{k,l} at the same modulus. Only the reduction of x to
// (K-k, L-l) survives. Throws LevelBudgetExceeded if k > K or l > L, InvalidLevel if x is not in E_{0,0}.
ProfiniteInt sigma_map(const ProfiniteInt& x, unsigned k, unsigned l);
// Exact division by p0^k q0^l; the result sits at level (K-k, L-l). Throws LevelBudgetExceeded,
// InvalidLevel if y is not in E_{k,l}.
ProfiniteInt sigma_inverse(const ProfiniteInt& y, unsigned k, unsigned l);

// r x = x for every x in E_{k,l}, i.e. d0 p0^k q0^l (r - 1) = 0. Throws NotAUnit.
bool check_unit_fixes_level(const ProfiniteInt& r, unsigned k, unsigned l);
// d0 (r - 1) = 0. Throws NotAUnit.
bool u0_membership(const ProfiniteInt& r);

// Smallest e with gcd(m, p^inf) dividing p^e. Equals the ordinary valuation when p is prime; for
// composite p the floor version is too weak to bound torsion (p = 4, m = 2).
unsigned level_valuation(const Int& m, const Int& p);
// Level at which m x = 0 forces x = 0 for x in E_{0,0}: (K - e_p, L - e_q), clamped at 0.
std::pair<unsigned, unsigned> torsion_free_level(const ProfiniteInt& x, const Int& m);

}  // namespace bsg

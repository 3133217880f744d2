#pragma once

#include "bsg/profinite.hpp"
#include "bsg/real.hpp"
#include "bsg/word.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace bsg {

using ThetaValue = Real;

// L-coordinate of pi_theta(w) in L ⋊ Aut(T): sum over a-letters a^k of k theta (q/p)^tau, tau the
// t-exponent to the left of the letter.
struct LThetaValue {
  std::map<long long, Int> coefficients;  // tau -> sum of k
  Rational c;                              // value / theta
  bool in_kernel = false;                  // m(w) = 1
  Real value(const ThetaValue& theta) const { return Real(c) * theta; }
};
LThetaValue l_theta(const Word& w, const BSParams& params);

// The unique m with x - n + theta m in [0, |theta|), for x in [0, |theta|).
// Throws InvalidParams for x outside, PrecisionError if an interval theta cannot decide.
Int beta_cocycle(const Int& n, const Real& x, const ThetaValue& theta);
// a^n x = x - n + theta beta(n, x).
Real beta_shift(const Int& n, const Real& x, const ThetaValue& theta);

struct RotationOrbit {
  Real rotation;                 // (theta - 1) on R / N Z
  std::optional<Int> period;     // rational theta
  bool degenerate = false;       // rotation by a multiple of N
  std::optional<double> discrepancy;  // irrational theta: star discrepancy of the first steps points
  long long steps = 0;
};
// Rational theta = u/v: the orbit of 0 on the grid (1/v)Z / NZ is walked when N v <= walk_limit.
RotationOrbit rotation_model_orbit(const ThetaValue& theta, long long N, long long steps,
                                   long long walk_limit = 10'000'000);
double star_discrepancy(std::vector<double> points);

// A point of [0,1) x K, K the truncated inverse limit carried by kappa's level.
struct CouplingPoint {
  Real x;
  ProfiniteInt kappa;
  std::string str() const;
};
bool same_point(const CouplingPoint& u, const CouplingPoint& v);

// pi_theta(w) acting on the left, followed by right multiplication by pi_1(a^-j) to return x to [0,1).
// t divides kappa by p, trading one p0-level for one q0-level; t^-1 the reverse.
// Throws LevelBudgetExceeded, PrecisionError.
CouplingPoint coupling_action(const Word& w, const CouplingPoint& pt, const ThetaValue& theta,
                              const BSParams& params);
// (x - kappa) mod N on R / N Z; a acts on it by rotation by theta - 1. N must divide kappa's modulus.
Real rotation_coordinate(const CouplingPoint& pt, long long N);

// Cylinder in the 2^n-periodic Bernoulli(1/2) shift: coordinate -> bit.
struct Cylinder {
  std::vector<std::pair<long long, int>> bits;
};
Rational cylinder_measure(const Cylinder& b);
// mu(B1 ∩ S^-m B2) on the cyclic shift of the given number of coordinates.
Rational cylinder_overlap(const Cylinder& b1, const Cylinder& b2, long long m, long long coordinates);

struct CesaroSetup {
  ThetaValue theta;
  std::pair<Real, Real> A1, A2;  // [lo, hi) inside [0, |theta|)
  Cylinder B1, B2;
  long long coordinates = 1 << 16;
  long long horizon = 1000;
  bool trivial_beta = false;  // b = a x id instead of the beta-twisted shift
};

struct CesaroReport {
  Real average;         // (1/n) sum_k nu(b^k(A1 x B1) ∩ (A2 x B2)), k = 1..n
  Real target;          // nu(A1 x B1) nu(A2 x B2)
  Real gap;             // |average - target|
  Real rotation_average;  // same with the B's dropped
  Real rotation_gap;
  long long dependent_steps = 0;  // k where the B-overlap is not yet independent
  Real error_bound;     // dependent_steps / n + mu(B1) mu(B2) rotation_gap, an upper bound for gap
  std::vector<double> series;  // running averages
};
CesaroReport cesaro_mixing_test(const CesaroSetup& setup);

// |W_{k,l}|: orbits of r^k s^l c Z on Z/n, by orbit enumeration. Throws NotErgodic unless gcd(c, n) = 1.
struct ComponentTable {
  long long n = 0, c = 0, r = 0, s = 0;
  std::vector<std::vector<long long>> counts;  // [k][l]
  bool divisibility_ok = false;                // W_{k+1,l}/W_{k,l} | r and W_{k,l+1}/W_{k,l} | s
};
long long orbit_count(long long step, long long n);
ComponentTable component_counts(long long c, long long n, long long r, long long s, int kmax, int lmax);

// A finite Z-model is a permutation. True iff for every k <= kmax, l <= lmax an equivariant map onto
// Z/(d m^k n^l) exists; the map is built by labelling orbits and checked.
struct PeriodicityResult {
  bool periodic = false;
  std::optional<std::pair<int, int>> failure;
};
PeriodicityResult periodicity_check(const std::vector<int>& perm, long long d, long long m, long long n,
                                    int kmax, int lmax);
std::vector<int> odometer(long long modulus);

}  // namespace bsg

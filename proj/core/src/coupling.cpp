#include "bsg/coupling.hpp"

#include "bsg/error.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>

namespace bsg {

LThetaValue l_theta(const Word& w, const BSParams& params) {
  LThetaValue out;
  long long tau = 0;
  for (const auto& l : w.letters()) {
    if (l.gen == 't') {
      tau += to_ll(l.exp);
    } else {
      Int& c = out.coefficients[tau];
      c += l.exp;
      if (c == 0) out.coefficients.erase(tau);
    }
  }
  Rational ratio(params.q, params.p);
  out.c = 0;
  for (auto& [t, k] : out.coefficients) out.c += Rational(k) * rpow(ratio, t);
  out.in_kernel = tau == 0;
  return out;
}

Int beta_cocycle(const Int& n, const Real& x, const ThetaValue& theta) {
  int s = theta.sign();
  if (s == 0) throw Error(ErrorKind::InvalidParams, "theta must be nonzero");
  Real width = s > 0 ? theta : -theta;
  if (x.sign() < 0 || !(x < width)) throw Error(ErrorKind::InvalidParams, "x = " + x.str() + " outside [0, |theta|)");
  Real y = (Real(Rational(n)) - x) / theta;
  Int m = s > 0 ? Int(-(-y).floor()) : y.floor();
  if (!theta.is_interval() && !x.is_interval()) {
    Real z = x - Real(Rational(n)) + theta * Real(Rational(m));
    if (z.sign() < 0 || !(z < width)) throw std::logic_error("beta_cocycle: membership check failed");
  }
  return m;
}

Real beta_shift(const Int& n, const Real& x, const ThetaValue& theta) {
  return x - Real(Rational(n)) + theta * Real(Rational(beta_cocycle(n, x, theta)));
}

double star_discrepancy(std::vector<double> points) {
  std::sort(points.begin(), points.end());
  double n = static_cast<double>(points.size()), d = 0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    d = std::max(d, static_cast<double>(i + 1) / n - points[i]);
    d = std::max(d, points[i] - static_cast<double>(i) / n);
  }
  return d;
}

RotationOrbit rotation_model_orbit(const ThetaValue& theta, long long N, long long steps, long long walk_limit) {
  if (N < 1) throw Error(ErrorKind::InvalidParams, "N must be positive");
  if (steps < 1) throw Error(ErrorKind::InvalidParams, "steps must be positive");
  RotationOrbit out;
  out.steps = steps;
  out.rotation = theta - Real(1);
  if (theta.is_rational()) {
    Rational th = theta.rational();
    Int u = num(th), v = den(th), grid = Int(N) * v;
    Int step = mod_floor(Int(u - v), grid);
    out.degenerate = step == 0;
    if (grid <= walk_limit) {
      Int pos = step, count = 1;
      while (pos != 0) {
        pos = mod_floor(Int(pos + step), grid);
        ++count;
      }
      out.period = count;
    } else {
      out.period = grid / gcd(step == 0 ? grid : step, grid);
    }
    return out;
  }
  Real r = mod(out.rotation / Real(N), Real(1)), y = Real(0), one = Real(1);
  std::vector<double> pts;
  pts.reserve(static_cast<std::size_t>(steps));
  for (long long k = 0; k < steps; ++k) {
    pts.push_back(y.to_double());
    y = y + r;
    if (y >= one) y = y - one;
  }
  out.discrepancy = star_discrepancy(std::move(pts));
  return out;
}

std::string CouplingPoint::str() const { return "(" + x.str() + ", " + kappa.str() + ")"; }

bool same_point(const CouplingPoint& u, const CouplingPoint& v) {
  unsigned K = std::min(u.kappa.K(), v.kappa.K()), L = std::min(u.kappa.L(), v.kappa.L());
  return u.x.same(v.x) && u.kappa.reduce(K, L) == v.kappa.reduce(K, L);
}

namespace {

void reduce_x(Real& x, Int& kappa) {
  Int j = x.floor();
  x = x - Real(Rational(j));
  kappa -= j;
}

// One application of t (dir = 1) or t^-1 (dir = -1).
CouplingPoint t_step(const CouplingPoint& pt, int dir, const BSParams& b) {
  const Int& div = dir > 0 ? b.p : b.q;
  const Int& mul = dir > 0 ? b.q : b.p;
  Int P = abs(b.p0), Q = abs(b.q0);
  unsigned K = pt.kappa.K(), L = pt.kappa.L();
  if (dir > 0 && P > 1 && K == 0) throw Error(ErrorKind::LevelBudgetExceeded, "t needs a p0-level at " + pt.str());
  if (dir < 0 && Q > 1 && L == 0) throw Error(ErrorKind::LevelBudgetExceeded, "t^-1 needs a q0-level at " + pt.str());
  unsigned K2 = K, L2 = L;
  if (dir > 0) {
    if (P > 1) --K2;
    if (Q > 1) ++L2;
  } else {
    if (P > 1) ++K2;
    if (Q > 1) --L2;
  }
  // kappa = div * kappa' + r; right multiplication by a^-r makes kappa divisible.
  Int r = pt.kappa.residue() % abs(div);
  Int quotient = (pt.kappa.residue() - r) / div;
  Real x = Real(Rational(mul, div)) * (pt.x - Real(Rational(r)));
  Int kappa = mul * quotient;
  reduce_x(x, kappa);
  return {x, ProfiniteInt(b, K2, L2, kappa)};
}

}  // namespace

CouplingPoint coupling_action(const Word& w, const CouplingPoint& pt, const ThetaValue& theta,
                              const BSParams& params) {
  if (!(pt.kappa.params() == params)) throw Error(ErrorKind::ParamMismatch, "kappa carries other parameters");
  CouplingPoint cur = pt;
  const auto& letters = w.letters();
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    if (it->gen == 'a') {
      Real x = cur.x + Real(Rational(it->exp)) * theta;
      Int kappa = cur.kappa.residue() + it->exp;
      reduce_x(x, kappa);
      cur = {x, ProfiniteInt(params, cur.kappa.K(), cur.kappa.L(), kappa)};
    } else {
      int dir = it->exp > 0 ? 1 : -1;
      for (Int i = 0; i < abs(it->exp); ++i) cur = t_step(cur, dir, params);
    }
  }
  return cur;
}

Real rotation_coordinate(const CouplingPoint& pt, long long N) {
  if (N < 1 || pt.kappa.modulus() % N != 0)
    throw Error(ErrorKind::InvalidParams, "N must divide the modulus of kappa");
  return mod(pt.x - Real(Rational(pt.kappa.residue())), Real(N));
}

namespace {

// Positions mod coordinates -> bit, or nullopt on a conflict.
std::optional<std::map<long long, int>> merge_bits(const std::map<long long, int>& base, const Cylinder& c,
                                                   long long shift, long long coordinates) {
  std::map<long long, int> out = base;
  for (auto [i, v] : c.bits) {
    long long pos = ((i + shift) % coordinates + coordinates) % coordinates;
    auto [it, fresh] = out.emplace(pos, v);
    if (!fresh && it->second != v) return std::nullopt;
  }
  return out;
}

Rational dyadic(std::size_t n) { return Rational(1, Int(1) << static_cast<unsigned>(n)); }

}  // namespace

Rational cylinder_measure(const Cylinder& b) {
  auto m = merge_bits({}, b, 0, std::numeric_limits<long long>::max());
  return m ? dyadic(m->size()) : Rational(0);
}

Rational cylinder_overlap(const Cylinder& b1, const Cylinder& b2, long long m, long long coordinates) {
  if (coordinates < 1) throw Error(ErrorKind::InvalidParams, "coordinates must be positive");
  auto first = merge_bits({}, b1, 0, coordinates);
  if (!first) return 0;
  auto both = merge_bits(*first, b2, m, coordinates);
  return both ? dyadic(both->size()) : Rational(0);
}

CesaroReport cesaro_mixing_test(const CesaroSetup& s) {
  const Real& theta = s.theta;
  int sg = theta.sign();
  if (sg == 0) throw Error(ErrorKind::InvalidParams, "theta must be nonzero");
  if (s.horizon < 1) throw Error(ErrorKind::InvalidParams, "horizon must be positive");
  Real T = sg > 0 ? theta : -theta, zero = Real(0);
  for (const auto* A : {&s.A1, &s.A2})
    if (A->first.sign() < 0 || A->second > T || A->second < A->first)
      throw Error(ErrorKind::InvalidParams, "A sets must be intervals inside [0, |theta|)");
  Rational mu1 = cylinder_measure(s.B1), mu2 = cylinder_measure(s.B2), mu12 = mu1 * mu2;
  Real lam1 = (s.A1.second - s.A1.first) / T, lam2 = (s.A2.second - s.A2.first) / T;
  auto length = [&](const Real& lo, const Real& hi) { return lo < hi ? hi - lo : zero; };
  auto as_int = [](const Real& v) { return (v + Real(Rational(1, 2))).floor(); };

  CesaroReport rep;
  Real sum = zero, rot_sum = zero;
  rep.series.reserve(static_cast<std::size_t>(s.horizon));
  for (long long k = 1; k <= s.horizon; ++k) {
    Real K(k);
    Real c = mod(K, T);
    // a^k is x -> x - c on [c, T) and x -> x - c + T on [0, c).
    Real len1 = length(max(max(s.A1.first, c), s.A2.first + c), min(min(s.A1.second, T), s.A2.second + c));
    Real len2 = length(max(max(s.A1.first, zero), s.A2.first + c - T), min(min(s.A1.second, c), s.A2.second + c - T));
    Int m1 = s.trivial_beta ? Int(0) : as_int((K - c) / theta);
    Int m2 = s.trivial_beta ? Int(0) : as_int((K - c + T) / theta);
    Rational ov1 = cylinder_overlap(s.B1, s.B2, to_ll(m1), s.coordinates);
    Rational ov2 = cylinder_overlap(s.B1, s.B2, to_ll(m2), s.coordinates);
    if ((len1.sign() > 0 && ov1 != mu12) || (len2.sign() > 0 && ov2 != mu12)) ++rep.dependent_steps;
    sum = sum + (len1 * Real(ov1) + len2 * Real(ov2)) / T;
    rot_sum = rot_sum + (len1 + len2) / T;
    rep.series.push_back(sum.to_double() / static_cast<double>(k));
  }
  Real n(s.horizon);
  rep.average = sum / n;
  rep.target = lam1 * Real(mu1) * lam2 * Real(mu2);
  Real d = rep.average - rep.target;
  rep.gap = d.sign() < 0 ? -d : d;
  rep.rotation_average = rot_sum / n;
  Real rd = rep.rotation_average - lam1 * lam2;
  rep.rotation_gap = rd.sign() < 0 ? -rd : rd;
  rep.error_bound = Real(Rational(rep.dependent_steps, s.horizon)) + Real(mu12) * rep.rotation_gap;
  return rep;
}

long long orbit_count(long long step, long long n) {
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  long long st = ((step % n) + n) % n, count = 0;
  for (long long x0 = 0; x0 < n; ++x0) {
    if (seen[x0]) continue;
    ++count;
    for (long long x = x0; !seen[x]; x = (x + st) % n) seen[x] = 1;
  }
  return count;
}

ComponentTable component_counts(long long c, long long n, long long r, long long s, int kmax, int lmax) {
  if (n < 1 || r < 1 || s < 1 || kmax < 0 || lmax < 0) throw Error(ErrorKind::InvalidParams, "bad table parameters");
  if (gcd(Int(c), Int(n)) != 1)
    throw Error(ErrorKind::NotErgodic, "+" + std::to_string(c) + " on Z/" + std::to_string(n) + " is not ergodic");
  ComponentTable t{n, c, r, s, {}, true};
  t.counts.assign(kmax + 1, std::vector<long long>(lmax + 1));
  for (int k = 0; k <= kmax; ++k)
    for (int l = 0; l <= lmax; ++l) {
      Int step = mod_floor(Int(ipow(r, k) * ipow(s, l) * c), Int(n));
      t.counts[k][l] = orbit_count(static_cast<long long>(step), n);
    }
  auto divides = [](long long small, long long big, long long bound) {
    return big % small == 0 && bound % (big / small) == 0;
  };
  for (int k = 0; k <= kmax; ++k)
    for (int l = 0; l <= lmax; ++l) {
      if (k < kmax && !divides(t.counts[k][l], t.counts[k + 1][l], r)) t.divisibility_ok = false;
      if (l < lmax && !divides(t.counts[k][l], t.counts[k][l + 1], s)) t.divisibility_ok = false;
    }
  return t;
}

PeriodicityResult periodicity_check(const std::vector<int>& perm, long long d, long long m, long long n, int kmax,
                                    int lmax) {
  int size = static_cast<int>(perm.size());
  std::vector<char> hit(size, 0);
  for (int x : perm) {
    if (x < 0 || x >= size || hit[x]) throw Error(ErrorKind::InvalidParams, "model is not a permutation");
    hit[x] = 1;
  }
  PeriodicityResult res;
  for (int k = 0; k <= kmax; ++k)
    for (int l = 0; l <= lmax; ++l) {
      Int Nbig = Int(d) * ipow(m, k) * ipow(n, l);
      bool ok = size > 0 && Nbig <= size;
      if (ok) {
        long long N = static_cast<long long>(Nbig);
        std::vector<long long> label(size, -1);
        for (int x0 = 0; x0 < size && ok; ++x0) {
          if (label[x0] >= 0) continue;
          long long i = 0;
          for (int x = x0; label[x] < 0; x = perm[x]) label[x] = i++ % N;
        }
        for (int x = 0; x < size && ok; ++x) ok = label[perm[x]] == (label[x] + 1) % N;
      }
      if (!ok) {
        res.failure = std::make_pair(k, l);
        return res;
      }
    }
  res.periodic = true;
  return res;
}

std::vector<int> odometer(long long modulus) {
  std::vector<int> p(static_cast<std::size_t>(modulus));
  for (long long x = 0; x < modulus; ++x) p[x] = static_cast<int>((x + 1) % modulus);
  return p;
}

}  // namespace bsg

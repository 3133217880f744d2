#include "bsg/profinite.hpp"

#include "bsg/error.hpp"

#include <regex>

namespace bsg {

namespace {

void require_same(const ProfiniteInt& x, const ProfiniteInt& y) {
  if (!(x.params() == y.params()))
    throw Error(ErrorKind::ParamMismatch, x.params().str() + " vs " + y.params().str());
}

void require_unit(const ProfiniteInt& r) {
  if (!is_unit(r)) throw Error(ErrorKind::NotAUnit, r.str() + " is not a unit");
}

Int sigma_factor(const BSParams& b, unsigned k, unsigned l) { return ipow(b.p0, k) * ipow(b.q0, l); }

}  // namespace

ProfiniteInt::ProfiniteInt(const BSParams& params, unsigned K, unsigned L, const Int& value)
    : params_(params), K_(K), L_(L), modulus_(modulus(params, K, L)), residue_(mod_floor(value, modulus_)) {}

ProfiniteInt::ProfiniteInt(Raw, const ProfiniteInt& like, const Int& value)
    : params_(like.params_), K_(like.K_), L_(like.L_), modulus_(like.modulus_), residue_(mod_floor(value, modulus_)) {}

ProfiniteInt ProfiniteInt::with(const Int& value) const { return ProfiniteInt(Raw{}, *this, value); }

Int ProfiniteInt::modulus(const BSParams& b, unsigned K, unsigned L) {
  return abs(b.d0) * ipow(abs(b.p0), K) * ipow(abs(b.q0), L);
}

ProfiniteInt ProfiniteInt::parse(const BSParams& params, std::string_view text) {
  static const std::regex re(R"(\s*(-?\d+)\s*@\s*\(\s*(\d+)\s*,\s*(\d+)\s*\)\s*)");
  std::cmatch m;
  if (!std::regex_match(text.begin(), text.end(), m, re))
    throw Error(ErrorKind::ParseError, "expected residue@(K,L): " + std::string(text));
  unsigned long K = std::stoul(m[2].str()), L = std::stoul(m[3].str());
  if (K > 4096 || L > 4096) throw Error(ErrorKind::ParseError, "level too large");
  Int v = parse_int(m[1].str());
  ProfiniteInt out(params, static_cast<unsigned>(K), static_cast<unsigned>(L), v);
  if (out.residue_ != v) throw Error(ErrorKind::ParseError, "residue outside [0, M): " + std::string(text));
  return out;
}

std::string ProfiniteInt::str() const {
  return residue_.str() + "@(" + std::to_string(K_) + "," + std::to_string(L_) + ")";
}

ProfiniteInt ProfiniteInt::reduce(unsigned K2, unsigned L2) const {
  if (K2 > K_ || L2 > L_) throw Error(ErrorKind::InvalidLevel, "cannot raise the level of " + str());
  return ProfiniteInt(params_, K2, L2, residue_);
}

bool ProfiniteInt::in_level(unsigned k, unsigned l) const {
  Int g = mod_floor(Int(abs(params_.d0) * sigma_factor(params_, k, l)), modulus());
  // Multiples of g mod M are the multiples of gcd(g, M).
  return residue_ % gcd(g, modulus()) == 0;
}

bool ProfiniteInt::operator==(const ProfiniteInt& o) const {
  return params_ == o.params_ && K_ == o.K_ && L_ == o.L_ && residue_ == o.residue_;
}

ProfiniteInt operator+(const ProfiniteInt& x, const ProfiniteInt& y) {
  require_same(x, y);
  if (x.K() == y.K() && x.L() == y.L()) return x.with(x.residue() + y.residue());
  return ProfiniteInt(x.params(), std::min(x.K(), y.K()), std::min(x.L(), y.L()), x.residue() + y.residue());
}

ProfiniteInt operator-(const ProfiniteInt& x, const ProfiniteInt& y) {
  require_same(x, y);
  if (x.K() == y.K() && x.L() == y.L()) return x.with(x.residue() - y.residue());
  return ProfiniteInt(x.params(), std::min(x.K(), y.K()), std::min(x.L(), y.L()), x.residue() - y.residue());
}

ProfiniteInt operator*(const ProfiniteInt& x, const ProfiniteInt& y) {
  require_same(x, y);
  if (x.K() == y.K() && x.L() == y.L()) return x.with(x.residue() * y.residue());
  return ProfiniteInt(x.params(), std::min(x.K(), y.K()), std::min(x.L(), y.L()), x.residue() * y.residue());
}

ProfiniteInt operator-(const ProfiniteInt& x) { return x.with(-x.residue()); }

bool is_unit(const ProfiniteInt& x) {
  const BSParams& b = x.params();
  return gcd(x.residue(), Int(b.d0 * b.p0 * b.q0)) == 1;
}

ProfiniteInt unit_inverse(const ProfiniteInt& x) {
  require_unit(x);
  Int M = x.modulus();
  // Extended Euclid on (residue, M).
  Int r0 = M, r1 = x.residue(), s0 = 0, s1 = 1;
  while (r1 != 0) {
    Int q = r0 / r1;
    Int r2 = r0 - q * r1;
    r0 = r1;
    r1 = r2;
    Int s2 = s0 - q * s1;
    s0 = s1;
    s1 = s2;
  }
  return ProfiniteInt(x.params(), x.K(), x.L(), s0);
}

ProfiniteInt sigma_map(const ProfiniteInt& x, unsigned k, unsigned l) {
  if (k > x.K() || l > x.L())
    throw Error(ErrorKind::LevelBudgetExceeded, "sigma_{" + std::to_string(k) + "," + std::to_string(l) +
                                                    "} needs level at least that of " + x.str());
  if (!x.in_level(0, 0)) throw Error(ErrorKind::InvalidLevel, x.str() + " is not in E_{0,0}");
  return x.with(x.residue() * sigma_factor(x.params(), k, l));
}

ProfiniteInt sigma_inverse(const ProfiniteInt& y, unsigned k, unsigned l) {
  if (k > y.K() || l > y.L())
    throw Error(ErrorKind::LevelBudgetExceeded, "sigma_{" + std::to_string(k) + "," + std::to_string(l) +
                                                    "}^-1 needs level at least that of " + y.str());
  if (!y.in_level(k, l)) throw Error(ErrorKind::InvalidLevel, y.str() + " is not in the image of sigma");
  // |f| divides M, and in_level gives d0 |f| | residue, so the division is exact mod M / |f|.
  Int f = sigma_factor(y.params(), k, l);
  Int quotient = y.residue() / abs(f);
  if (f < 0) quotient = -quotient;
  return ProfiniteInt(y.params(), y.K() - k, y.L() - l, quotient);
}

bool check_unit_fixes_level(const ProfiniteInt& r, unsigned k, unsigned l) {
  require_unit(r);
  const BSParams& b = r.params();
  return mod_floor(Int(b.d0 * sigma_factor(b, k, l) * (r.residue() - 1)), r.modulus()) == 0;
}

bool u0_membership(const ProfiniteInt& r) {
  require_unit(r);
  return mod_floor(Int(r.params().d0 * (r.residue() - 1)), r.modulus()) == 0;
}

unsigned level_valuation(const Int& m, const Int& p) {
  if (m == 0) throw Error(ErrorKind::InvalidParams, "valuation of 0");
  Int ap = abs(p);
  if (ap == 1) return 0;
  Int rest = abs(m), part = 1;
  for (Int g = gcd(rest, ap); g > 1; g = gcd(rest, ap)) {
    part *= g;
    rest /= g;
  }
  unsigned e = 0;
  for (Int pe = 1; pe % part != 0; pe *= ap) ++e;
  return e;
}

std::pair<unsigned, unsigned> torsion_free_level(const ProfiniteInt& x, const Int& m) {
  unsigned ep = level_valuation(m, x.params().p0), eq = level_valuation(m, x.params().q0);
  return {x.K() > ep ? x.K() - ep : 0, x.L() > eq ? x.L() - eq : 0};
}

}  // namespace bsg

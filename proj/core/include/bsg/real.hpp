#pragma once

#include "bsg/numeric.hpp"

#include <string>
#include <string_view>

namespace bsg {

// Either an exact element a + b sqrt(D) of a real quadratic field (b = 0 for rationals), or a
// closed rational interval. Exact and interval values never mix unless the exact one is rational;
// any comparison an interval cannot settle throws PrecisionError.
class Real {
 public:
  Real() = default;
  Real(const Rational& r) : a_(r) {}                 // NOLINT
  Real(long long v) : a_(v) {}                       // NOLINT
  static Real quadratic(const Rational& a, const Rational& b, const Int& D);
  static Real interval(const Rational& lo, const Rational& hi);

  bool is_interval() const { return interval_; }
  bool is_rational() const { return !interval_ && b_ == 0; }
  const Rational& rational() const;  // throws PrecisionError unless is_rational()
  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Int& D() const { return D_; }
  const Rational& lo() const { return a_; }
  const Rational& hi() const { return hi_; }

  int sign() const;
  Int floor() const;
  double to_double() const;
  // Rational enclosure of width at most eps.
  std::pair<Rational, Rational> enclose(const Rational& eps) const;
  std::string str() const;

  friend Real operator+(const Real& x, const Real& y);
  friend Real operator-(const Real& x, const Real& y);
  friend Real operator*(const Real& x, const Real& y);
  friend Real operator/(const Real& x, const Real& y);
  Real operator-() const;

  friend bool operator<(const Real& x, const Real& y) { return (x - y).sign() < 0; }
  friend bool operator<=(const Real& x, const Real& y) { return (x - y).sign() <= 0; }
  friend bool operator>(const Real& x, const Real& y) { return (x - y).sign() > 0; }
  friend bool operator>=(const Real& x, const Real& y) { return (x - y).sign() >= 0; }
  // Exact equality; an interval equals only a degenerate interval with the same point.
  bool same(const Real& o) const;

 private:
  bool interval_ = false;
  Rational a_ = 0, b_ = 0;  // exact: a + b sqrt(D); interval: a_ is lo
  Int D_ = 0;
  Rational hi_ = 0;
};

Real min(const Real& x, const Real& y);
Real max(const Real& x, const Real& y);

// x - floor(x / m) m for m > 0.
Real mod(const Real& x, const Real& m);

// Accepts a rational ("3/2"), "golden", "sqrt(D)", "a+b*sqrt(D)" with rational a, b, or "[lo,hi]".
Real parse_real(std::string_view text);

}  // namespace bsg

#include "bsg/real.hpp"

#include "bsg/error.hpp"

#include <algorithm>
#include <cmath>
#include <regex>

namespace bsg {

namespace {

int rsign(const Rational& r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); }

Int isqrt(const Int& n) { return boost::multiprecision::sqrt(n); }

// Squarefree part of D and the square factor: D = s^2 * D'.
std::pair<Int, Int> squarefree(const Int& D) {
  Int core = 1, s = 1;
  for (auto& [prime, e] : factorize(D)) {
    s *= ipow(prime, static_cast<unsigned>(e / 2));
    if (e % 2) core *= prime;
  }
  return {core, s};
}

Real as_interval(const Real& x, const Real& other) {
  if (x.is_interval()) return x;
  if (x.is_rational()) return Real::interval(x.a(), x.a());
  Rational w = other.is_interval() ? other.hi() - other.lo() : Rational(0);
  Rational eps = w > 0 ? w / 1024 : Rational(1, Int(1) << 128);
  auto [lo, hi] = x.enclose(eps);
  return Real::interval(lo, hi);
}

void check_field(const Real& x, const Real& y) {
  if (x.b() != 0 && y.b() != 0 && x.D() != y.D())
    throw Error(ErrorKind::InvalidParams, "mixing sqrt(" + x.D().str() + ") and sqrt(" + y.D().str() + ")");
}

Int field_of(const Real& x, const Real& y) { return x.b() != 0 ? x.D() : y.D(); }

}  // namespace

Real Real::quadratic(const Rational& a, const Rational& b, const Int& D) {
  if (D < 0) throw Error(ErrorKind::InvalidParams, "negative radicand");
  Real r;
  r.a_ = a;
  if (b == 0 || D == 0) return r;
  auto [core, s] = squarefree(D);
  if (core == 1) {
    r.a_ += b * s;
    return r;
  }
  r.b_ = b * s;
  r.D_ = core;
  return r;
}

Real Real::interval(const Rational& lo, const Rational& hi) {
  if (lo > hi) throw Error(ErrorKind::InvalidParams, "empty interval");
  Real r;
  r.interval_ = true;
  r.a_ = lo;
  r.hi_ = hi;
  return r;
}

const Rational& Real::rational() const {
  if (!is_rational()) throw Error(ErrorKind::PrecisionError, str() + " is not rational");
  return a_;
}

int Real::sign() const {
  if (interval_) {
    if (a_ > 0) return 1;
    if (hi_ < 0) return -1;
    if (a_ == 0 && hi_ == 0) return 0;
    throw Error(ErrorKind::PrecisionError, "sign of " + str() + " undecided");
  }
  int sa = rsign(a_), sb = rsign(b_);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  return a_ * a_ > b_ * b_ * D_ ? sa : sb;
}

Int Real::floor() const {
  if (interval_) {
    Int l = bsg::floor(a_), h = bsg::floor(hi_);
    if (l != h) throw Error(ErrorKind::PrecisionError, "floor of " + str() + " undecided");
    return l;
  }
  if (b_ == 0) return bsg::floor(a_);
  Rational sq = b_ * b_ * D_;
  Int n = num(sq), d = den(sq);
  Rational approx = a_ + Rational(rsign(b_) * isqrt(n * d), d);
  Int f = bsg::floor(approx);
  while ((*this - Real(Rational(f + 1))).sign() >= 0) ++f;
  while ((*this - Real(Rational(f))).sign() < 0) --f;
  return f;
}

double Real::to_double() const {
  if (interval_) return ((a_ + hi_) / 2).convert_to<double>();
  double v = a_.convert_to<double>();
  if (b_ != 0) v += b_.convert_to<double>() * std::sqrt(D_.convert_to<double>());
  return v;
}

std::pair<Rational, Rational> Real::enclose(const Rational& eps) const {
  if (interval_) return {a_, hi_};
  if (b_ == 0) return {a_, a_};
  // sqrt(D) in [t/s, (t+1)/s] with |b|/s <= eps.
  Int s = 1;
  while (abs(b_) / Rational(s) > eps) s <<= 1;
  Int t = isqrt(D_ * s * s);
  Rational r0(t, s), r1(t + 1, s);
  Rational u = a_ + b_ * r0, v = a_ + b_ * r1;
  return u < v ? std::make_pair(u, v) : std::make_pair(v, u);
}

std::string Real::str() const {
  if (interval_) return "[" + to_string(a_) + "," + to_string(hi_) + "]";
  if (b_ == 0) return to_string(a_);
  std::string out;
  if (a_ != 0) out = to_string(a_) + (b_ > 0 ? "+" : "");
  if (b_ == -1)
    out += "-";
  else if (b_ != 1)
    out += to_string(b_) + "*";
  return out + "sqrt(" + D_.str() + ")";
}

Real operator+(const Real& x, const Real& y) {
  if (x.is_interval() || y.is_interval()) {
    Real u = as_interval(x, y), v = as_interval(y, x);
    return Real::interval(u.lo() + v.lo(), u.hi() + v.hi());
  }
  check_field(x, y);
  return Real::quadratic(x.a() + y.a(), x.b() + y.b(), field_of(x, y));
}

Real Real::operator-() const {
  if (interval_) return interval(-hi_, -a_);
  Real r = *this;
  r.a_ = -a_;
  r.b_ = -b_;
  return r;
}

Real operator-(const Real& x, const Real& y) { return x + (-y); }

Real operator*(const Real& x, const Real& y) {
  if (x.is_interval() || y.is_interval()) {
    Real u = as_interval(x, y), v = as_interval(y, x);
    Rational c[4] = {u.lo() * v.lo(), u.lo() * v.hi(), u.hi() * v.lo(), u.hi() * v.hi()};
    return Real::interval(*std::min_element(c, c + 4), *std::max_element(c, c + 4));
  }
  check_field(x, y);
  Int D = field_of(x, y);
  return Real::quadratic(x.a() * y.a() + x.b() * y.b() * D, x.a() * y.b() + x.b() * y.a(), D);
}

Real operator/(const Real& x, const Real& y) {
  if (x.is_interval() || y.is_interval()) {
    Real v = as_interval(y, x);
    if (v.lo() <= 0 && v.hi() >= 0) throw Error(ErrorKind::PrecisionError, "division by " + v.str());
    return x * Real::interval(1 / v.hi(), 1 / v.lo());
  }
  if (y.sign() == 0) throw Error(ErrorKind::InvalidParams, "division by zero");
  check_field(x, y);
  Rational norm = y.a() * y.a() - y.b() * y.b() * y.D();
  return x * Real::quadratic(y.a() / norm, -y.b() / norm, y.D());
}

bool Real::same(const Real& o) const {
  return interval_ == o.interval_ && a_ == o.a_ && b_ == o.b_ && hi_ == o.hi_ && (b_ == 0 || D_ == o.D_);
}

Real min(const Real& x, const Real& y) { return x <= y ? x : y; }
Real max(const Real& x, const Real& y) { return x >= y ? x : y; }

Real mod(const Real& x, const Real& m) { return x - Real(Rational((x / m).floor())) * m; }

Real parse_real(std::string_view text) {
  std::string s(text);
  static const std::regex rat(R"(\s*(-?\d+(?:/\d+)?)\s*)");
  static const std::regex iv(R"(\s*\[\s*(-?\d+(?:/\d+)?)\s*,\s*(-?\d+(?:/\d+)?)\s*\]\s*)");
  static const std::regex quad(
      R"(\s*(?:(-?\d+(?:/\d+)?)\s*([+-])|([+-]))?\s*(?:(\d+(?:/\d+)?)\s*\*\s*)?sqrt\(\s*(\d+)\s*\)\s*)");
  std::smatch m;
  if (s == "golden" || s == "phi") return Real::quadratic(Rational(1, 2), Rational(1, 2), 5);
  if (std::regex_match(s, m, rat)) return Real(parse_rational(m[1].str()));
  if (std::regex_match(s, m, iv)) return Real::interval(parse_rational(m[1].str()), parse_rational(m[2].str()));
  if (std::regex_match(s, m, quad)) {
    Rational a = m[1].matched ? parse_rational(m[1].str()) : Rational(0);
    std::string sg = m[2].matched ? m[2].str() : (m[3].matched ? m[3].str() : "+");
    Rational b = m[4].matched ? parse_rational(m[4].str()) : Rational(1);
    if (sg == "-") b = -b;
    return Real::quadratic(a, b, parse_int(m[5].str()));
  }
  throw Error(ErrorKind::ParseError, "cannot parse real '" + s + "'");
}

}  // namespace bsg

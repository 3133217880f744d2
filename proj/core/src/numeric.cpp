#include "bsg/numeric.hpp"

#include "bsg/error.hpp"

#include <cctype>
#include <limits>

namespace bsg {

namespace mp = boost::multiprecision;

const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvalidParams: return "InvalidParams";
    case ErrorKind::BoundExceeded: return "BoundExceeded";
    case ErrorKind::RadiusExceeded: return "RadiusExceeded";
    case ErrorKind::GroupTooLarge: return "GroupTooLarge";
    case ErrorKind::ClosureTooLarge: return "ClosureTooLarge";
    case ErrorKind::EmptySet: return "EmptySet";
    case ErrorKind::NotInFullGroup: return "NotInFullGroup";
    case ErrorKind::NotNormal: return "NotNormal";
    case ErrorKind::NotACocycle: return "NotACocycle";
    case ErrorKind::IndexNotConstant: return "IndexNotConstant";
    case ErrorKind::NotQuasiNormal: return "NotQuasiNormal";
    case ErrorKind::NotMeasurePreserving: return "NotMeasurePreserving";
    case ErrorKind::TargetMismatch: return "TargetMismatch";
    case ErrorKind::InvalidLevel: return "InvalidLevel";
    case ErrorKind::InfiniteComponents: return "InfiniteComponents";
    case ErrorKind::NotPowerValued: return "NotPowerValued";
    case ErrorKind::ParamMismatch: return "ParamMismatch";
    case ErrorKind::LevelBudgetExceeded: return "LevelBudgetExceeded";
    case ErrorKind::NotAUnit: return "NotAUnit";
    case ErrorKind::PrecisionError: return "PrecisionError";
    case ErrorKind::NotErgodic: return "NotErgodic";
    case ErrorKind::AxiomViolation: return "AxiomViolation";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}

Int num(const Rational& r) { return mp::numerator(r); }
Int den(const Rational& r) { return mp::denominator(r); }

Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  Int r = a - q * b;
  if (r != 0 && ((r < 0) != (b < 0))) q -= 1;
  return q;
}

Int mod_floor(const Int& a, const Int& b) {
  Int m = abs(b);
  Int r = a % m;
  if (r < 0) r += m;
  return r;
}

Int gcd(Int a, Int b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Int ipow(const Int& base, unsigned exp) { return mp::pow(base, exp); }

Rational rpow(const Rational& base, long long exp) {
  Rational out = 1;
  Rational b = exp >= 0 ? base : Rational(1) / base;
  unsigned long long e = exp >= 0 ? exp : -exp;
  while (e) {
    if (e & 1) out *= b;
    b *= b;
    e >>= 1;
  }
  return out;
}

Int abs(const Int& a) { return a < 0 ? Int(-a) : a; }
Rational abs(const Rational& a) { return a < 0 ? Rational(-a) : a; }

Int floor(const Rational& r) { return floor_div(num(r), den(r)); }
Int ceil(const Rational& r) { return -floor_div(-num(r), den(r)); }

std::string to_string(const Int& v) { return v.str(); }

std::string to_string(const Rational& v) {
  if (den(v) == 1) return num(v).str();
  return num(v).str() + "/" + den(v).str();
}

Int parse_int(std::string_view s) {
  std::size_t i = 0;
  bool neg = false;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
    neg = s[i] == '-';
    ++i;
  }
  if (i == s.size()) throw Error(ErrorKind::ParseError, "empty integer '" + std::string(s) + "'");
  Int v = 0;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw Error(ErrorKind::ParseError, "bad integer '" + std::string(s) + "'");
    v = v * 10 + (s[i] - '0');
  }
  return neg ? Int(-v) : v;
}

Rational parse_rational(std::string_view s) {
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(s));
  Int n = parse_int(s.substr(0, slash));
  Int d = parse_int(s.substr(slash + 1));
  if (d == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + std::string(s) + "'");
  return Rational(n, d);
}

long long to_ll(const Int& v) {
  if (v > Int(std::numeric_limits<long long>::max()) || v < Int(std::numeric_limits<long long>::min()))
    throw Error(ErrorKind::BoundExceeded, "integer does not fit in 64 bits: " + v.str());
  return static_cast<long long>(v);
}

unsigned valuation(Int n, const Int& m) {
  Int am = abs(m);
  if (n == 0 || am < 2) return 0;
  unsigned e = 0;
  while (n % am == 0) {
    n /= am;
    ++e;
  }
  return e;
}

std::vector<std::pair<Int, int>> factorize(Int n) {
  std::vector<std::pair<Int, int>> out;
  if (n < 0) n = -n;
  for (Int p = 2; p * p <= n; ++p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

}  // namespace bsg

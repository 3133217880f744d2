#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace bsg {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

Int num(const Rational& r);
Int den(const Rational& r);

// Floor division and the matching nonnegative remainder for a nonzero divisor.
Int floor_div(const Int& a, const Int& b);
Int mod_floor(const Int& a, const Int& b);

Int gcd(Int a, Int b);
Int ipow(const Int& base, unsigned exp);
Rational rpow(const Rational& base, long long exp);
Int abs(const Int& a);
Rational abs(const Rational& a);

Int floor(const Rational& r);
Int ceil(const Rational& r);

std::string to_string(const Int& v);
std::string to_string(const Rational& v);

// Accepts "a", "-a", "a/b". Throws bsg::Error(ParseError) otherwise.
Rational parse_rational(std::string_view s);
Int parse_int(std::string_view s);

long long to_ll(const Int& v);

// Largest e with m^e dividing n; n != 0 and |m| >= 2.
unsigned valuation(Int n, const Int& m);

// Prime factorisation of a positive integer by trial division.
std::vector<std::pair<Int, int>> factorize(Int n);

}  // namespace bsg

#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

namespace zigzag {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

Int factorial(int n);
Int binomial(const Int& n, int k);
Rat rat_pow(const Rat& base, int exponent); // pre: exponent >= 0

/// "p/q" for q != 1, plain "p" otherwise.  Canonical (gcd-reduced, q > 0).
std::string format_rat(const Rat& r);

/// 15 significant digits, shortest form ("%.15g").
std::string format_decimal(double x);
std::string format_decimal(const Rat& r);

/// Accepts "p/q" or a bare integer.  Throws std::invalid_argument on junk
/// or zero denominator.
Rat parse_rat(const std::string& text);

double to_double(const Rat& r);

} // namespace zigzag

#include "zigzag/rational.hpp"

#include <cstdio>
#include <stdexcept>

namespace zigzag {

Int factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    Int f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

Int binomial(const Int& n, int k) {
    if (k < 0) return 0;
    Int num = 1, den = 1;
    for (int i = 0; i < k; ++i) {
        num *= n - i;
        den *= i + 1;
    }
    Int q = num / den; // exact: product of k consecutive integers is divisible by k!
    return q;
}

Rat rat_pow(const Rat& base, int exponent) {
    if (exponent < 0) throw std::invalid_argument("rat_pow: negative exponent");
    Rat out = 1;
    for (int i = 0; i < exponent; ++i) out *= base;
    return out;
}

std::string format_rat(const Rat& r) {
    const Int num = boost::multiprecision::numerator(r);
    const Int den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

std::string format_decimal(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.15g", x);
    return buf;
}

std::string format_decimal(const Rat& r) { return format_decimal(to_double(r)); }

Rat parse_rat(const std::string& text) {
    const auto bad = [&] { return std::invalid_argument("bad rational: '" + text + "'"); };
    if (text.empty()) throw bad();
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(text));
        const Int num(text.substr(0, slash));
        const Int den(text.substr(slash + 1));
        if (den == 0) throw bad();
        return Rat(num, den);
    } catch (const std::runtime_error&) { // cpp_int rejects malformed digits
        throw bad();
    }
}

double to_double(const Rat& r) { return r.convert_to<double>(); }

} // namespace zigzag

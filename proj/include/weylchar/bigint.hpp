#ifndef WEYLCHAR_BIGINT_HPP
#define WEYLCHAR_BIGINT_HPP

#include <cstdint>
#include <limits>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace weylchar {

/// Unbounded signed integer used for every coefficient in the library.
using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number (normalized numerator / positive denominator).
using Rational = boost::multiprecision::cpp_rational;

inline bool fits_int64(const BigInt& v) {
    return v >= std::numeric_limits<std::int64_t>::min() &&
           v <= std::numeric_limits<std::int64_t>::max();
}

inline std::string to_string(const BigInt& v) { return v.str(); }

inline BigInt numerator_of(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt denominator_of(const Rational& q) { return boost::multiprecision::denominator(q); }

inline BigInt gcd(const BigInt& a, const BigInt& b) { return boost::multiprecision::gcd(a, b); }
inline BigInt lcm(const BigInt& a, const BigInt& b) { return boost::multiprecision::lcm(a, b); }

inline BigInt factorial(int n) {
    BigInt f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

inline BigInt binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    BigInt b = 1;
    for (int i = 1; i <= k; ++i) {
        b *= n - k + i;
        b /= i;
    }
    return b;
}

}  // namespace weylchar

#endif  // WEYLCHAR_BIGINT_HPP

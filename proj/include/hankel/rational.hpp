#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace hankel {

// Arbitrary-precision integers and rationals. cpp_rational keeps values
// reduced to lowest terms with a positive denominator, which is exactly the
// invariant the exact layer relies on.
using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline BigInt rat_num(const BigRational& q) { return boost::multiprecision::numerator(q); }
inline BigInt rat_den(const BigRational& q) { return boost::multiprecision::denominator(q); }

inline BigRational make_rational(long long num, long long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return BigRational(BigInt(num), BigInt(den));
}

inline double to_double(const BigRational& q) { return q.template convert_to<double>(); }

/// Exact conversion: every finite double is a dyadic rational.
inline BigRational rational_from_double(double x) {
    if (!std::isfinite(x)) throw std::invalid_argument("non-finite double has no rational value");
    if (x == 0.0) return BigRational(0);
    int exp = 0;
    double mant = std::frexp(x, &exp);  // x = mant * 2^exp, |mant| in [0.5, 1)
    // 53 doublings make the mantissa integral.
    std::int64_t m = static_cast<std::int64_t>(std::ldexp(mant, 53));
    exp -= 53;
    BigRational r(m);
    if (exp > 0)
        r *= BigRational(BigInt(1) << exp);
    else if (exp < 0)
        r /= BigRational(BigInt(1) << (-exp));
    return r;
}

/// "p" or "p/q" rendering; exact results are serialized through this form.
inline std::string rational_to_string(const BigRational& q) {
    std::string s = rat_num(q).str();
    if (rat_den(q) != 1) s += "/" + rat_den(q).str();
    return s;
}

inline BigInt int_lcm(const BigInt& a, const BigInt& b) {
    if (a == 0 || b == 0) return 0;
    return boost::multiprecision::abs(a / boost::multiprecision::gcd(a, b) * b);
}

/// Largest double that is <= q (exact when q is dyadic).
inline double round_down_to_double(const BigRational& q) {
    double d = to_double(q);
    while (rational_from_double(d) > q) d = std::nextafter(d, -HUGE_VAL);
    return d;
}

/// Smallest double that is >= q.
inline double round_up_to_double(const BigRational& q) {
    double d = to_double(q);
    while (rational_from_double(d) < q) d = std::nextafter(d, HUGE_VAL);
    return d;
}

}  // namespace hankel

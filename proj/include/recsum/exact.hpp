#pragma once

// Exact arithmetic substrate: arbitrary-precision integers, exact rationals,
// and the binomial coefficient with the vanishing convention used throughout
// this library. Everything downstream (polynomials, matrices, sequences)
// builds on these two value types.

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>

namespace recsum {

// Arbitrary-precision signed integer. No overflow, canonical zero.
using ExactInt = boost::multiprecision::cpp_int;

// Exact fraction, always stored reduced with positive denominator, so
// equality is structural. Backed by cpp_rational which canonicalizes on
// every operation.
using Rational = boost::multiprecision::cpp_rational;

inline ExactInt numerator(const Rational& q) {
    return boost::multiprecision::numerator(q);
}

inline ExactInt denominator(const Rational& q) {
    return boost::multiprecision::denominator(q);
}

inline double to_double(const ExactInt& z) { return z.convert_to<double>(); }
inline double to_double(const Rational& q) { return q.convert_to<double>(); }

// num/den as a Rational, accepting any sign of denominator. The underlying
// two-component constructor insists on a positive denominator; this wrapper
// folds the sign into the numerator and rejects only den == 0.
inline Rational make_rational(ExactInt num, ExactInt den) {
    if (den == 0) throw std::domain_error("make_rational: zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rational(num, den);
}

// C(n, k) with C(n, k) = 0 whenever k < 0 or k > n. A negative upper index
// is a caller bug rather than a boundary case and is rejected.
//
// Computed by the multiplicative formula; the running product is C(n-k+i, i)
// after step i, so every division is exact.
inline ExactInt binomial(long long n, long long k) {
    if (n < 0) throw std::domain_error("binomial: negative upper index");
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    ExactInt r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

} // namespace recsum

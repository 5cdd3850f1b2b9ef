#pragma once

// Second-order linear recurrences x_{t+1} = a*x_t + b*x_{t-1}, generic over
// the coefficient ring: exact integers, exact rationals, doubles, and
// polynomials all work with the same code. Alongside the generic engine live
// the classical integer sequences (Fibonacci, Lucas) and a few identities
// about their sums that the rest of the library leans on.
//
// Indexing convention, used consistently everywhere: terms are x_0, x_1, ...
// and the prefix sum S_n = x_0 + ... + x_{n-1} adds the first n terms, so
// S_0 = 0 and S_1 = x_0.

#include "exact.hpp"
#include "polynomial.hpp"

#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace recsum {

template <class R>
struct Recurrence {
    R a, b;    // x_{t+1} = a*x_t + b*x_{t-1}
    R x0, x1;  // initial terms
};

// x_n by forward iteration. O(n) ring operations.
template <class R>
R term(const Recurrence<R>& rec, long long n) {
    if (n < 0) throw std::domain_error("term: negative index");
    if (n == 0) return rec.x0;
    R prev = rec.x0, cur = rec.x1;
    for (long long t = 1; t < n; ++t) {
        R next = rec.a * cur + rec.b * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

// S_n = x_0 + ... + x_{n-1}; S_0 = 0.
template <class R>
R prefix_sum(const Recurrence<R>& rec, long long n) {
    if (n < 0) throw std::domain_error("prefix_sum: negative length");
    R sum{};
    if (n == 0) return sum;
    sum = rec.x0;
    R prev = rec.x0, cur = rec.x1;
    for (long long t = 1; t < n; ++t) {
        sum += cur;
        R next = rec.a * cur + rec.b * prev;
        prev = cur;
        cur = next;
    }
    return sum;
}

// The first `count` terms x_0 .. x_{count-1}.
template <class R>
std::vector<R> terms(const Recurrence<R>& rec, long long count) {
    if (count < 0) throw std::domain_error("terms: negative count");
    std::vector<R> out;
    out.reserve(static_cast<std::size_t>(count));
    if (count >= 1) out.push_back(rec.x0);
    if (count >= 2) out.push_back(rec.x1);
    for (std::size_t t = 2; t < static_cast<std::size_t>(count); ++t)
        out.push_back(rec.a * out[t - 1] + rec.b * out[t - 2]);
    return out;
}

// Fibonacci numbers F_0 = 0, F_1 = 1, extended one step left: F_{-1} = 1.
// Indices below -1 are rejected.
inline ExactInt fib_number(long long n) {
    if (n < -1) throw std::domain_error("fib_number: index below -1");
    if (n == -1) return 1;
    ExactInt prev = 0, cur = 1;
    if (n == 0) return prev;
    for (long long t = 1; t < n; ++t) {
        ExactInt next = cur + prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

// Lucas numbers L_0 = 2, L_1 = 1.
inline ExactInt lucas_number(long long n) {
    if (n < 0) throw std::domain_error("lucas_number: negative index");
    ExactInt prev = 2, cur = 1;
    if (n == 0) return prev;
    for (long long t = 1; t < n; ++t) {
        ExactInt next = cur + prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

// F_{p+q} + (-1)^q F_{p-q} == F_p * L_q, for p >= q >= 0.
inline bool check_pq_identity(long long p, long long q) {
    if (q < 0 || p < q)
        throw std::domain_error("check_pq_identity: requires p >= q >= 0");
    ExactInt lhs = fib_number(p + q);
    ExactInt corr = fib_number(p - q);
    if (q % 2 != 0) corr = -corr;
    return lhs + corr == fib_number(p) * lucas_number(q);
}

// For n == 2 (mod 4): sum_{k=0}^{n-1} F_{k+r} equals both F_{n+r+1} - F_{r+1}
// and L_{n/2} * F_{r+n/2+1}. Returns true iff both equalities hold.
inline bool shifted_sum_identity(long long r, long long n) {
    if (r < 0) throw std::domain_error("shifted_sum_identity: negative shift");
    if (n < 2 || n % 4 != 2)
        throw std::domain_error("shifted_sum_identity: n must be 2 mod 4");
    ExactInt sum = 0;
    for (long long k = 0; k < n; ++k) sum += fib_number(k + r);
    const bool telescoped = (sum == fib_number(n + r + 1) - fib_number(r + 1));
    const bool factored = (sum == lucas_number(n / 2) * fib_number(r + n / 2 + 1));
    return telescoped && factored;
}

namespace detail {

// Truncated product of dense series (coefficients ascending), keeping the
// first n coefficients.
template <class R>
std::vector<R> mul_trunc(const std::vector<R>& u, const std::vector<R>& v, std::size_t n) {
    std::vector<R> out(n, R{});
    for (std::size_t i = 0; i < u.size() && i < n; ++i)
        for (std::size_t j = 0; j < v.size() && i + j < n; ++j)
            out[i + j] += u[i] * v[j];
    return out;
}

} // namespace detail

// First N power-series coefficients of G(z) = z / (1 - (a z - z^2)),
// computed by accumulating the geometric series sum_l (a z - z^2)^l with
// truncated convolutions and then shifting by one. Coefficient n equals the
// term u_n of the fundamental solution of x_{t+1} = a x_t - x_{t-1} with
// u_0 = 0, u_1 = 1, which gives an independent route to those values.
template <class R>
std::vector<R> gf_coefficients(const R& a, int n_coeffs) {
    if (n_coeffs < 0) throw std::domain_error("gf_coefficients: negative count");
    const std::size_t n = static_cast<std::size_t>(n_coeffs);
    std::vector<R> out(n, R{});
    if (n <= 1) return out;

    const std::size_t inner = n - 1; // coefficients of the unshifted series
    std::vector<R> g{R{}, a, R(0) - R(1)};
    std::vector<R> acc(inner, R{});
    acc[0] = R(1);
    std::vector<R> pw{R(1)};
    // (a z - z^2)^l has lowest degree l, so terms beyond l = inner-1 vanish
    // under truncation.
    for (std::size_t l = 1; l < inner; ++l) {
        pw = detail::mul_trunc(pw, g, inner);
        for (std::size_t i = 0; i < inner; ++i) acc[i] += pw[i];
    }
    for (std::size_t i = 0; i < inner; ++i) out[i + 1] = acc[i];
    return out;
}

// A term of the two-parameter family written on the basis of its initial
// values: x_n = coeff_x0(a) * x_0 + coeff_x1(a) * x_1, with the recurrence
// coefficients themselves polynomials in the indeterminate.
struct SymbolicPair {
    UniPoly coeff_x0, coeff_x1;
};

inline SymbolicPair symbolic_term(const UniPoly& a, const UniPoly& b, long long n) {
    return {term(Recurrence<UniPoly>{a, b, UniPoly(1), UniPoly(0)}, n),
            term(Recurrence<UniPoly>{a, b, UniPoly(0), UniPoly(1)}, n)};
}

inline SymbolicPair symbolic_prefix_sum(const UniPoly& a, const UniPoly& b, long long n) {
    return {prefix_sum(Recurrence<UniPoly>{a, b, UniPoly(1), UniPoly(0)}, n),
            prefix_sum(Recurrence<UniPoly>{a, b, UniPoly(0), UniPoly(1)}, n)};
}

// Constants for closed-form (Binet-style) expressions: the golden pair
// phi1 > phi2 with phi1 + phi2 = 1, phi1 * phi2 = -1, and the roots r1, r2
// of r^2 = a r + b (complex when the discriminant is negative).
struct ClosedFormConstants {
    double phi1, phi2;
    std::complex<double> r1, r2;
};

inline ClosedFormConstants closed_form_constants(double a, double b) {
    ClosedFormConstants c{};
    const double s5 = std::sqrt(5.0);
    c.phi1 = (1.0 + s5) / 2.0;
    c.phi2 = (1.0 - s5) / 2.0;
    const std::complex<double> disc(a * a + 4.0 * b, 0.0);
    const std::complex<double> root = std::sqrt(disc);
    c.r1 = (std::complex<double>(a, 0.0) + root) / 2.0;
    c.r2 = (std::complex<double>(a, 0.0) - root) / 2.0;
    return c;
}

} // namespace recsum

#pragma once

// Sum-proportionality identities: statements of the form
//
//   S_n = A * x_m,   S_n = x_0 + ... + x_{n-1},
//
// holding for EVERY choice of initial values (x_0, x_1) of the recurrence
// x_{t+1} = a x_t + b x_{t-1}. Since both S_n and x_m are linear in the
// initial pair, such an identity is proved (or refuted) exactly by checking
// the two basis runs (x_0, x_1) = (1, 0) and (0, 1).
//
// This header provides the known closed-form identity families, an explicit
// binomial formula for the factor A, floating-point counterparts for the
// irrational-coefficient cases, and an exhaustive exact search that
// rediscovers identities from scratch.

#include "exact.hpp"
#include "families.hpp"
#include "polynomial.hpp"
#include "sequences.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace recsum {

template <class R>
struct ProportionalityIdentity {
    R a, b;       // recurrence coefficients
    int n;        // number of summed terms
    long long m;  // index of the distinguished term
    R A;          // proportionality factor: S_n = A * x_m
};

// Exact certification on the two basis runs; by bilinearity this settles the
// identity for all initial values over the ring.
template <class R>
bool verify_identity(const R& a, const R& b, int n, long long m, const R& A) {
    if (n < 0 || m < 0) throw std::domain_error("verify_identity: negative index");
    const Recurrence<R> e{a, b, R(1), R(0)};
    const Recurrence<R> f{a, b, R(0), R(1)};
    return prefix_sum(e, n) == A * term(e, m) && prefix_sum(f, n) == A * term(f, m);
}

// Floating-point check of S_n = A * x_m for one concrete initial pair,
// with |S_n - A x_m| <= rel * max(1, |S_n|).
inline bool verify_identity_float(double a, double b, double x0, double x1, int n,
                                  long long m, double A, double rel = 1e-8) {
    if (n < 0 || m < 0) throw std::domain_error("verify_identity_float: negative index");
    const Recurrence<double> run{a, b, x0, x1};
    const double s = prefix_sum(run, n);
    const double target = A * term(run, m);
    return std::abs(s - target) <= rel * std::max(1.0, std::abs(s));
}

// a = 1, b = 1 (Fibonacci rule), n == 2 (mod 4):
//   S_n = L_{n/2} * x_{n/2+1}.
// Smallest instance n = 2: S_2 = x_2 with A = L_1 = 1.
inline ProportionalityIdentity<ExactInt> fibo_identity(int n) {
    if (n < 2 || n % 4 != 2)
        throw std::domain_error("fibo_identity: n must be 2 mod 4");
    return {ExactInt(1), ExactInt(1), n, n / 2 + 1, lucas_number(n / 2)};
}

// a = -1, b = 1, n == 2 (mod 4) and n >= 6:
//   S_n = L_{n/2} * x_{n/2-2}.
// (n = 2 would point at x_{-1}, so it is outside the family.)
inline ProportionalityIdentity<ExactInt> neg_fibo_identity(int n) {
    if (n < 6 || n % 4 != 2)
        throw std::domain_error("neg_fibo_identity: n must be 2 mod 4 and at least 6");
    return {ExactInt(-1), ExactInt(1), n, n / 2 - 2, lucas_number(n / 2)};
}

// b = -1, any a, odd n:
//   S_n = (u_{m+1} + u_m) * x_m,  m = (n-1)/2,
// where u is the fundamental sequence u_0 = 0, u_1 = 1 under the same rule.
// Works over any ring; with a = UniPoly::variable() the factor A comes out
// as the polynomial U~_{m+1} + U~_m.
template <class R>
ProportionalityIdentity<R> cheb_identity(int n, const R& a) {
    if (n < 1 || n % 2 == 0)
        throw std::domain_error("cheb_identity: n must be odd and positive");
    const long long m = (n - 1) / 2;
    const R minus_one = R(0) - R(1);
    const Recurrence<R> u{a, minus_one, R(0), R(1)};
    return {a, minus_one, n, m, term(u, m + 1) + term(u, m)};
}

// The same factor A for odd n, straight from its binomial expansion:
//   A = sum_{k} (-1)^k [ C((n-3)/2-k, k) a^{(n-3)/2-2k}
//                      + C((n-1)/2-k, k) a^{(n-1)/2-2k} ].
// Terms whose upper binomial index is negative vanish (relevant at n = 1).
inline UniPoly cheb_identity_explicit_A(int n) {
    if (n < 1 || n % 2 == 0)
        throw std::domain_error("cheb_identity_explicit_A: n must be odd and positive");
    UniPoly a_poly;
    for (long long k = 0; 4 * k <= n - 1; ++k) {
        const long long sign = (k % 2 == 0) ? 1 : -1;
        for (const long long half : {(n - 3) / 2, (n - 1) / 2}) {
            const long long upper = half - k;
            if (upper < 0) continue;
            const ExactInt c = binomial(upper, k);
            if (c == 0) continue;
            a_poly += UniPoly::monomial(static_cast<std::size_t>(upper - k),
                                        Rational(sign * c));
        }
    }
    return a_poly;
}

// b = 1 with an algebraic coefficient a = rho - 1/rho, where rho is the
// dominant root of r^{p+1} - r^p - r - 1 for odd p. For even n with
// n + p - 1 == 0 (mod 4) and n >= p - 1:
//
//   S_n = A * x_m,  m = (n+p-1)/2,
//
// and A can be written three ways, all returned for cross-checking:
//   A_usum     = u_{(n-p+1)/2} + u_{(n+p-1)/2}         (u_0 = 0, u_1 = 1)
//   A_product  = v_{(p-1)/2} u_{n/2}  (n == 0 mod 4)
//                u_{(p-1)/2} v_{n/2}  (n == 2 mod 4)   (v_0 = 2, v_1 = a)
//   A_polyform = the same products via the Fibonacci/Lucas polynomial
//                families evaluated at a.
struct FibPolyIdentity {
    int p, n;
    long long m;
    double rho, a;
    double A_usum, A_product, A_polyform;
};

inline FibPolyIdentity fibpoly_identity(int p, int n, double rho) {
    if (p < 1 || p % 2 == 0)
        throw std::domain_error("fibpoly_identity: p must be odd and positive");
    if (n < 2 || n % 2 != 0)
        throw std::domain_error("fibpoly_identity: n must be even and positive");
    if ((n + p - 1) % 4 != 0)
        throw std::domain_error("fibpoly_identity: requires n + p - 1 == 0 (mod 4)");
    if (n < p - 1)
        throw std::domain_error("fibpoly_identity: requires n >= p - 1");
    if (std::abs(rho) < 1e-9 || std::abs(rho * rho + 1.0) < 1e-9)
        throw std::domain_error("fibpoly_identity: rho too close to a degenerate root");

    FibPolyIdentity out{};
    out.p = p;
    out.n = n;
    out.m = (n + p - 1) / 2;
    out.rho = rho;
    out.a = rho - 1.0 / rho;

    const Recurrence<double> u{out.a, 1.0, 0.0, 1.0};
    const Recurrence<double> v{out.a, 1.0, 2.0, out.a};
    out.A_usum = term(u, (n - p + 1) / 2) + term(u, (n + p - 1) / 2);

    const int half_p = (p - 1) / 2;
    if (n % 4 == 0) {
        out.A_product = term(v, half_p) * term(u, n / 2);
        out.A_polyform = family_by_recurrence(PolyKind::LucasPoly, half_p).eval(out.a) *
                         family_by_recurrence(PolyKind::FibPoly, n / 2).eval(out.a);
    } else {
        out.A_product = term(u, half_p) * term(v, n / 2);
        out.A_polyform = family_by_recurrence(PolyKind::FibPoly, half_p).eval(out.a) *
                         family_by_recurrence(PolyKind::LucasPoly, n / 2).eval(out.a);
    }
    return out;
}

// One candidate found by the search: S_n = A * x_m. When both basis runs
// have x_m = 0 (so S_n must vanish as well), any A works and the hit is
// flagged unconstrained with A reported as 0.
struct DiscoveryHit {
    long long m;
    Rational A;
    bool unconstrained;
};

struct DiscoveryReport {
    Rational a, b;
    int n;
    long long m_max;
    bool exact;  // always true: the search runs in exact rational arithmetic
    std::vector<DiscoveryHit> hits;
};

// Exhaustive scan over m = 0..m_max for proportionality of S_n to x_m,
// valid for all initial values. Writing e and f for the basis runs
// (1, 0) and (0, 1): if e_m != 0, the only candidate is A = S_e / e_m and
// the hit stands iff S_f == A * f_m; symmetrically via f_m when e_m == 0;
// if both vanish, the identity requires S_e == S_f == 0. Hits are reported
// in increasing m.
inline DiscoveryReport discover(const Rational& a, const Rational& b, int n,
                                long long m_max) {
    if (n < 1) throw std::domain_error("discover: n must be positive");
    if (m_max < 0) throw std::domain_error("discover: m_max must be nonnegative");

    const Recurrence<Rational> e{a, b, Rational(1), Rational(0)};
    const Recurrence<Rational> f{a, b, Rational(0), Rational(1)};
    const Rational se = prefix_sum(e, n);
    const Rational sf = prefix_sum(f, n);
    const std::vector<Rational> et = terms(e, m_max + 1);
    const std::vector<Rational> ft = terms(f, m_max + 1);

    DiscoveryReport report{a, b, n, m_max, true, {}};
    for (long long m = 0; m <= m_max; ++m) {
        const Rational& em = et[static_cast<std::size_t>(m)];
        const Rational& fm = ft[static_cast<std::size_t>(m)];
        if (em != 0) {
            const Rational cand = se / em;
            if (sf == cand * fm) report.hits.push_back({m, cand, false});
        } else if (fm != 0) {
            const Rational cand = sf / fm;
            if (se == cand * em) report.hits.push_back({m, cand, false});
        } else if (se == 0 && sf == 0) {
            report.hits.push_back({m, Rational(0), true});
        }
    }
    return report;
}

// Closed trigonometric/hyperbolic forms for the b = -1 factor
// A = u_{(n+1)/2} + u_{(n-1)/2} at odd n, split by the size of a:
//
//   |a| < 2:  A =  sin(n t/2) / sin(t/2),   t = acos(a/2)
//    a > 2:   A = sinh(n t/2) / sinh(t/2),  t = acosh(a/2)
//    a < -2:  A = (-1)^{(n-1)/2} cosh(n t/2) / cosh(t/2),  t = acosh(-a/2)
//
// |a| = 2 sits on the boundary (the ratio degenerates) and is rejected.
// Returns true iff the closed form matches the recurrence within rel.
inline bool trig_A_check(double a, int n, double rel = 1e-9) {
    if (n < 1 || n % 2 == 0)
        throw std::domain_error("trig_A_check: n must be odd and positive");
    if (a == 2.0 || a == -2.0)
        throw std::domain_error("trig_A_check: |a| = 2 is degenerate");

    const Recurrence<double> u{a, -1.0, 0.0, 1.0};
    const double reference = term(u, (n + 1) / 2) + term(u, (n - 1) / 2);

    double closed;
    if (std::abs(a) < 2.0) {
        const double t = std::acos(a / 2.0);
        closed = std::sin(n * t / 2.0) / std::sin(t / 2.0);
    } else if (a > 2.0) {
        const double t = std::acosh(a / 2.0);
        closed = std::sinh(n * t / 2.0) / std::sinh(t / 2.0);
    } else {
        const double t = std::acosh(-a / 2.0);
        closed = std::cosh(n * t / 2.0) / std::cosh(t / 2.0);
        if (((n - 1) / 2) % 2 != 0) closed = -closed;
    }
    return std::abs(closed - reference) <=
           rel * std::max(1.0, std::max(std::abs(closed), std::abs(reference)));
}

// Hyperbolic form of the b = +1 factor, t = asinh(a/2):
//   A = 2 sinh(n t/2) cosh((p-1) t/2) / cosh(t),
// compared against A_usum from the recurrence. Same admissibility as
// fibpoly_identity.
inline bool sinh_A_check(double a, int p, int n, double rel = 1e-8) {
    if (p < 1 || p % 2 == 0)
        throw std::domain_error("sinh_A_check: p must be odd and positive");
    if (n < 2 || n % 2 != 0 || (n + p - 1) % 4 != 0 || n < p - 1)
        throw std::domain_error("sinh_A_check: inadmissible (p, n)");

    const Recurrence<double> u{a, 1.0, 0.0, 1.0};
    const double reference = term(u, (n - p + 1) / 2) + term(u, (n + p - 1) / 2);
    const double t = std::asinh(a / 2.0);
    const double closed =
        2.0 * std::sinh(n * t / 2.0) * std::cosh((p - 1) * t / 2.0) / std::cosh(t);
    return std::abs(closed - reference) <=
           rel * std::max(1.0, std::max(std::abs(closed), std::abs(reference)));
}

} // namespace recsum

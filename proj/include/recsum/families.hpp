#pragma once

// The four classical polynomial families tied to second-order recurrences:
//
//   ChebTildeT  T~_0 = 2, T~_1 = x,  P_{n+2} = x P_{n+1} - P_n
//   ChebTildeU  U~_0 = 0, U~_1 = 1,  P_{n+2} = x P_{n+1} - P_n
//   FibPoly     F_0  = 0, F_1  = 1,  P_{n+2} = x P_{n+1} + P_n
//   LucasPoly   L_0  = 2, L_1  = x,  P_{n+2} = x P_{n+1} + P_n
//
// T~ and U~ are the monic-recurrence rescalings of the Chebyshev polynomials
// (T~_n(2cos t) = 2cos nt, U~_n(2cos t) = sin nt / sin t); F and L are the
// Fibonacci and Lucas polynomials. The two pairs are exchanged by the
// substitution x -> ix, which on coefficients is an alternating sign flip.

#include "exact.hpp"
#include "polynomial.hpp"
#include "sequences.hpp"

#include <algorithm>
#include <stdexcept>

namespace recsum {

enum class PolyKind { ChebTildeT, ChebTildeU, FibPoly, LucasPoly };

// n-th member of the family by running its defining recurrence.
inline UniPoly family_by_recurrence(PolyKind kind, int n) {
    if (n < 0) throw std::domain_error("family_by_recurrence: negative index");
    const UniPoly x = UniPoly::variable();
    UniPoly p0, p1, b;
    switch (kind) {
        case PolyKind::ChebTildeT: p0 = UniPoly(2); p1 = x; b = UniPoly(-1); break;
        case PolyKind::ChebTildeU: p0 = UniPoly(0); p1 = UniPoly(1); b = UniPoly(-1); break;
        case PolyKind::FibPoly:    p0 = UniPoly(0); p1 = UniPoly(1); b = UniPoly(1); break;
        case PolyKind::LucasPoly:  p0 = UniPoly(2); p1 = x; b = UniPoly(1); break;
        default: throw std::invalid_argument("family_by_recurrence: unknown kind");
    }
    return term(Recurrence<UniPoly>{x, b, p0, p1}, n);
}

// n-th member from its explicit binomial expansion:
//
//   U~_n = sum_k (-1)^k C(n-k-1, k) x^{n-1-2k}
//   F_n  = sum_k        C(n-k-1, k) x^{n-1-2k}
//   L_n  = sum_k  n/(n-k) C(n-k, k) x^{n-2k}      (L_0 = 2)
//
// ChebTildeT has no expansion of this shape and is rejected with
// std::invalid_argument. The Lucas prefactor n/(n-k) always clears to an
// integer; a non-integer coefficient would mean the formula was transcribed
// wrong, so it is a hard logic_error, not a value to propagate.
inline UniPoly family_explicit(PolyKind kind, int n) {
    if (n < 0) throw std::domain_error("family_explicit: negative index");
    switch (kind) {
        case PolyKind::ChebTildeT:
            throw std::invalid_argument(
                "family_explicit: ChebTildeT has no single-sum binomial expansion");
        case PolyKind::ChebTildeU:
        case PolyKind::FibPoly: {
            const bool alternating = (kind == PolyKind::ChebTildeU);
            UniPoly p;
            for (long long k = 0; 2 * k <= n - 1; ++k) {
                ExactInt c = binomial(n - k - 1, k);
                if (alternating && k % 2 != 0) c = -c;
                p += UniPoly::monomial(static_cast<std::size_t>(n - 1 - 2 * k), Rational(c));
            }
            return p;
        }
        case PolyKind::LucasPoly: {
            if (n == 0) return UniPoly(2);
            UniPoly p;
            for (long long k = 0; 2 * k <= n; ++k) {
                Rational c = Rational(n, n - k) * Rational(binomial(n - k, k));
                if (denominator(c) != 1)
                    throw std::logic_error("family_explicit: Lucas coefficient not integral");
                p += UniPoly::monomial(static_cast<std::size_t>(n - 2 * k), c);
            }
            return p;
        }
        default: throw std::invalid_argument("family_explicit: unknown kind");
    }
}

// Coefficientwise statement of the substitution x -> ix: it carries L_n to
// i^n T~_n and F_n to i^{n-1} U~_n. Concretely, coefficients at degrees of
// the opposite parity vanish, and at degree n-2k (resp. n-1-2k) the T~ and L
// (resp. U~ and F) coefficients differ by exactly (-1)^k. True for every n.
inline bool cheb_fib_coeff_relation(int n) {
    if (n < 0) throw std::domain_error("cheb_fib_coeff_relation: negative index");
    const UniPoly t = family_by_recurrence(PolyKind::ChebTildeT, n);
    const UniPoly l = family_by_recurrence(PolyKind::LucasPoly, n);
    const UniPoly u = family_by_recurrence(PolyKind::ChebTildeU, n);
    const UniPoly f = family_by_recurrence(PolyKind::FibPoly, n);

    const auto related = [](const UniPoly& alt, const UniPoly& plain, int top) {
        const int bound = std::max(alt.degree(), plain.degree());
        if (bound > top) return false;
        for (int i = 0; i <= bound; ++i) {
            const long long gap = top - i;
            if (gap % 2 != 0) {
                if (alt[static_cast<std::size_t>(i)] != 0 ||
                    plain[static_cast<std::size_t>(i)] != 0)
                    return false;
                continue;
            }
            Rational expect = plain[static_cast<std::size_t>(i)];
            if ((gap / 2) % 2 != 0) expect = -expect;
            if (alt[static_cast<std::size_t>(i)] != expect) return false;
        }
        return true;
    };
    return related(t, l, n) && related(u, f, n == 0 ? 0 : n - 1);
}

// For odd n and m = (n-1)/2, the factor A = U~_{m+1}(a) + U~_m(a) makes both
// sums proportional at once:
//
//   sum_{k=0}^{n-1} T~_k(a) = A * T~_m(a)   and
//   sum_{k=0}^{n-1} U~_k(a) = A * U~_m(a).
//
// Checked exactly over the given ring; with a = UniPoly::variable() this is
// a symbolic verification, with a rational point a numeric-exact one.
template <class R>
bool cheb_sum_identity(int n, const R& a) {
    if (n < 1 || n % 2 == 0)
        throw std::domain_error("cheb_sum_identity: n must be odd and positive");
    const long long m = (n - 1) / 2;
    const UniPoly a_poly =
        family_explicit(PolyKind::ChebTildeU, static_cast<int>(m + 1)) +
        family_explicit(PolyKind::ChebTildeU, static_cast<int>(m));
    const R big_a = a_poly.eval(a);
    const R minus_one = R(0) - R(1);

    const Recurrence<R> t_run{a, minus_one, R(2), a};
    const Recurrence<R> u_run{a, minus_one, R(0), R(1)};
    return prefix_sum(t_run, n) == big_a * term(t_run, m) &&
           prefix_sum(u_run, n) == big_a * term(u_run, m);
}

// F_{s+t} + F_{s-t} factors through the families when s and t share parity:
// it equals L_t * F_s for s, t even and F_t * L_s for s, t odd. Verified as
// an exact polynomial identity.
inline bool fib_lucas_shift_identity(int s, int t) {
    if (t < 0 || s < t)
        throw std::domain_error("fib_lucas_shift_identity: requires s >= t >= 0");
    if ((s - t) % 2 != 0)
        throw std::domain_error("fib_lucas_shift_identity: s and t must share parity");
    const UniPoly lhs = family_by_recurrence(PolyKind::FibPoly, s + t) +
                        family_by_recurrence(PolyKind::FibPoly, s - t);
    const UniPoly rhs =
        (s % 2 == 0)
            ? family_by_recurrence(PolyKind::LucasPoly, t) * family_by_recurrence(PolyKind::FibPoly, s)
            : family_by_recurrence(PolyKind::FibPoly, t) * family_by_recurrence(PolyKind::LucasPoly, s);
    return lhs == rhs;
}

} // namespace recsum

#pragma once

// The algebraic side of the b = 1 identity family. For odd p, the
// characteristic equation
//
//   f_p(r) = r^{p+1} - r^p - r - 1 = 0
//
// has exactly one root rho > 1, and the recurrence coefficient of interest
// is a = rho - 1/rho. This header locates rho numerically, and builds the
// minimal polynomial of a over Q two independent ways: from closed-form
// binomial coefficients, and by solving the exact triangular linear systems
// the ansatz produces. The two constructions agreeing coefficient-for-
// coefficient is one of the stronger internal consistency checks in the
// library.

#include "exact.hpp"
#include "matrix.hpp"
#include "polynomial.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace recsum {

// f_p(r) = r^{p+1} - r^p - r - 1, arranged as r^p (r - 1) - (r + 1) to keep
// the evaluation well conditioned near the root.
inline double rho_poly(int p, double r) {
    return std::pow(r, p) * (r - 1.0) - (r + 1.0);
}

struct RootResult {
    int p;
    double rho;       // the unique root in (1, 2.5)
    double a;         // rho - 1/rho
    double residual;  // |f_p(rho)|
};

// Locate rho by bisection on (1, 2.5), where f_p changes sign for every odd
// p >= 1, then polish with a few Newton steps. Iterations are capped; the
// bracket failing to straddle a sign change is an internal error, not a
// domain error, since it cannot happen for valid p.
inline RootResult find_rho(int p) {
    if (p < 1 || p % 2 == 0)
        throw std::domain_error("find_rho: p must be odd and positive");

    double lo = 1.0, hi = 2.5;
    double flo = rho_poly(p, lo);
    if (!(flo < 0.0) || !(rho_poly(p, hi) > 0.0))
        throw std::runtime_error("find_rho: bracket lost its sign change");

    double mid = lo;
    for (int it = 0; it < 120; ++it) {
        mid = 0.5 * (lo + hi);
        const double fm = rho_poly(p, mid);
        if (fm == 0.0) break;
        if ((fm < 0.0) == (flo < 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }

    // Newton polish: f'(r) = (p+1) r^p - p r^{p-1} - 1.
    double r = mid;
    for (int it = 0; it < 5; ++it) {
        const double fr = rho_poly(p, r);
        const double dr = (p + 1) * std::pow(r, p) - p * std::pow(r, p - 1) - 1.0;
        if (dr == 0.0) break;
        const double next = r - fr / dr;
        if (!(next > 1.0 && next < 2.5)) break;
        r = next;
    }
    if (std::abs(rho_poly(p, r)) > std::abs(rho_poly(p, mid))) r = mid;

    return {p, r, r - 1.0 / r, std::abs(rho_poly(p, r))};
}

// For p = 5 the value a = rho - 1/rho satisfies a^3 - a^2 + 3a - 2 = 0, and
// Cardano's formula gives it in radicals:
//   a = (cbrt(116 + 12 sqrt(321)) - cbrt(-116 + 12 sqrt(321))) / 6 + 1/3.
inline double cardano_a() {
    const double s = 12.0 * std::sqrt(321.0);
    return (std::cbrt(116.0 + s) - std::cbrt(-116.0 + s)) / 6.0 + 1.0 / 3.0;
}

// Odd p >= 3 splits into two shapes: p = 4q + 1 ("plus") and p = 4q - 1
// ("minus"), with different system sizes and minimal-polynomial degrees
// (2q + 1 and 2q - 1 respectively).
enum class MinPolyCase { Plus, Minus };

struct MinPoly {
    int p, q;
    MinPolyCase kind;
    UniPoly poly;  // monic, in the variable a
};

namespace detail {

inline void minpoly_validate(int p) {
    if (p % 2 == 0) throw std::domain_error("minimal polynomial: p must be odd");
    if (p < 3)
        throw std::domain_error(
            "minimal polynomial: p = 1 gives a rational a with trivial linear data");
}

inline Rational integral_coeff(const Rational& c) {
    if (denominator(c) != 1)
        throw std::logic_error("minimal polynomial: closed-form coefficient not integral");
    return c;
}

// Remainder of p modulo a monic divisor, by leading-term elimination.
inline UniPoly poly_rem_monic_impl(UniPoly p, const UniPoly& divisor) {
    if (divisor.is_zero() || divisor[static_cast<std::size_t>(divisor.degree())] != 1)
        throw std::invalid_argument("poly_rem_monic: divisor must be monic");
    const int d = divisor.degree();
    while (p.degree() >= d && d > 0) {
        const int k = p.degree();
        const Rational lead = p[static_cast<std::size_t>(k)];
        p -= UniPoly::monomial(static_cast<std::size_t>(k - d), lead) * divisor;
    }
    return d == 0 ? UniPoly() : p;
}

} // namespace detail

// Remainder of p modulo a monic divisor.
inline UniPoly poly_rem_monic(const UniPoly& p, const UniPoly& divisor) {
    return detail::poly_rem_monic_impl(p, divisor);
}

// Minimal polynomial of a over Q directly from the closed-form coefficients,
// P(a) = a^d - sum_i alpha_i a^i:
//
//   plus  (p = 4q+1, d = 2q+1):
//     alpha_{2i}   =  (2q  / (q+i))   C(q+i,   2i),    i = 0..q  (gives 1 at i = q)
//     alpha_{2i+1} = -((2q+1)/(q+i+1)) C(q+i+1, 2i+1), i = 0..q-1
//   minus (p = 4q-1, d = 2q-1):
//     alpha_{2i}   =  C(q+i-1, 2i),    i = 0..q-1
//     alpha_{2i-1} = -C(q+i-1, 2i-1),  i = 1..q-1
//
// The plus-case prefactors always clear to integers; anything else is a
// transcription bug and raises logic_error.
inline MinPoly minpoly_closed(int p) {
    detail::minpoly_validate(p);
    if (p % 4 == 1) {
        const int q = (p - 1) / 4;
        const int d = 2 * q + 1;
        std::vector<Rational> coeffs(static_cast<std::size_t>(d) + 1);
        coeffs[static_cast<std::size_t>(d)] = 1;
        for (int i = 0; i <= q; ++i) {
            const Rational alpha = detail::integral_coeff(
                Rational(2 * q, q + i) * Rational(binomial(q + i, 2 * i)));
            coeffs[static_cast<std::size_t>(2 * i)] -= alpha;
        }
        for (int i = 0; i < q; ++i) {
            const Rational alpha = detail::integral_coeff(
                Rational(2 * q + 1, q + i + 1) * Rational(binomial(q + i + 1, 2 * i + 1)));
            coeffs[static_cast<std::size_t>(2 * i + 1)] += alpha;
        }
        return {p, q, MinPolyCase::Plus, UniPoly(std::move(coeffs))};
    }
    const int q = (p + 1) / 4;
    const int d = 2 * q - 1;
    std::vector<Rational> coeffs(static_cast<std::size_t>(d) + 1);
    coeffs[static_cast<std::size_t>(d)] = 1;
    for (int i = 0; i < q; ++i)
        coeffs[static_cast<std::size_t>(2 * i)] -= Rational(binomial(q + i - 1, 2 * i));
    for (int i = 1; i < q; ++i)
        coeffs[static_cast<std::size_t>(2 * i - 1)] += Rational(binomial(q + i - 1, 2 * i - 1));
    return {p, q, MinPolyCase::Minus, UniPoly(std::move(coeffs))};
}

// The exact triangular systems whose solutions are the alpha coefficients:
// t1 * (even alphas) = b1 and t2 * (odd alphas) = b2. In the minus case the
// odd system is one size smaller and is empty when q = 1.
struct MinPolySystem {
    int q;
    MinPolyCase kind;
    ExactMatrix t1, t2;  // upper triangular
    ExactMatrix b1, b2;  // column vectors
};

inline MinPolySystem build_system(int p) {
    detail::minpoly_validate(p);
    if (p % 4 == 1) {
        const int q = (p - 1) / 4;
        const std::size_t sq = static_cast<std::size_t>(q);
        MinPolySystem s{q, MinPolyCase::Plus, ExactMatrix(sq, sq), ExactMatrix(sq, sq),
                        ExactMatrix(sq, 1), ExactMatrix(sq, 1)};
        for (int i = 0; i < q; ++i) {
            for (int j = 0; j < q; ++j) {
                const int sgn = (j % 2 == 0) ? 1 : -1;
                s.t1.at(i, j) = Rational(sgn * binomial(2 * j, j - i));
                s.t2.at(i, j) = Rational(sgn * binomial(2 * j + 1, j - i));
            }
            const int sb1 = ((q + 1) % 2 == 0) ? 1 : -1;
            const int sb2 = (q % 2 == 0) ? 1 : -1;
            s.b1.at(i, 0) = Rational(sb1 * binomial(2 * q, q - i));
            s.b2.at(i, 0) = Rational(sb2 * binomial(2 * q + 1, q - i));
        }
        return s;
    }
    const int q = (p + 1) / 4;
    const std::size_t sq = static_cast<std::size_t>(q);
    const std::size_t sq1 = sq - 1;
    MinPolySystem s{q, MinPolyCase::Minus, ExactMatrix(sq, sq), ExactMatrix(sq1, sq1),
                    ExactMatrix(sq, 1), ExactMatrix(sq1, 1)};
    const int sb1 = ((q - 1) % 2 == 0) ? 1 : -1;
    const int sb2 = (q % 2 == 0) ? 1 : -1;
    for (int i = 0; i < q; ++i) {
        for (int j = 0; j < q; ++j) {
            const int sgn = (j % 2 == 0) ? 1 : -1;
            s.t1.at(i, j) = Rational(sgn * binomial(2 * j, j - i));
        }
        s.b1.at(i, 0) = sb1;
    }
    // Odd system indices run 1..q-1 in the natural labeling; stored 0-based.
    for (int i = 1; i < q; ++i) {
        for (int j = 1; j < q; ++j) {
            const int sgn = (j % 2 == 0) ? 1 : -1;
            s.t2.at(i - 1, j - 1) = Rational(sgn * binomial(2 * j - 1, j - i));
        }
        s.b2.at(i - 1, 0) = Rational(sb2 * (binomial(2 * q - 1, q - i) - 1));
    }
    return s;
}

// Minimal polynomial by actually solving the exact systems, with the top
// even coefficient pinned by the ansatz (alpha_{2q} = 1 in the plus case).
// Independent of minpoly_closed except for sharing the system construction.
inline MinPoly minpoly_oracle(int p) {
    const MinPolySystem s = build_system(p);
    const ExactMatrix even = solve_linear(s.t1, s.b1);
    const bool have_odd = s.t2.rows() > 0;
    const ExactMatrix odd = have_odd ? solve_linear(s.t2, s.b2) : ExactMatrix();

    if (s.kind == MinPolyCase::Plus) {
        const int q = s.q;
        const int d = 2 * q + 1;
        std::vector<Rational> coeffs(static_cast<std::size_t>(d) + 1);
        coeffs[static_cast<std::size_t>(d)] = 1;
        coeffs[static_cast<std::size_t>(2 * q)] = -1;  // alpha_{2q} = 1, pinned
        for (int i = 0; i < q; ++i) {
            coeffs[static_cast<std::size_t>(2 * i)] = -even.at(i, 0);
            coeffs[static_cast<std::size_t>(2 * i + 1)] = -odd.at(i, 0);
        }
        return {p, q, MinPolyCase::Plus, UniPoly(std::move(coeffs))};
    }
    const int q = s.q;
    const int d = 2 * q - 1;
    std::vector<Rational> coeffs(static_cast<std::size_t>(d) + 1);
    coeffs[static_cast<std::size_t>(d)] = 1;
    for (int i = 0; i < q; ++i)
        coeffs[static_cast<std::size_t>(2 * i)] -= even.at(i, 0);
    for (int i = 1; i < q; ++i)
        coeffs[static_cast<std::size_t>(2 * i - 1)] -= odd.at(i - 1, 0);
    return {p, q, MinPolyCase::Minus, UniPoly(std::move(coeffs))};
}

enum class TKind { T1, T2 };

// Closed-form inverses of the two triangular system matrices:
//   (T1^{-1})_{ij} = (-1)^j (2j / (i+j))     C(i+j,   2i)   (entry (0,0) = 1)
//   (T2^{-1})_{ij} = (-1)^j ((2j+1)/(i+j+1)) C(i+j+1, 2i+1)
// for 0 <= i, j <= q-1. Multiplying by the corresponding matrix from
// build_system must give the identity exactly.
inline ExactMatrix t_inverse_closed(int q, TKind kind) {
    if (q < 1) throw std::domain_error("t_inverse_closed: q must be positive");
    const std::size_t sq = static_cast<std::size_t>(q);
    ExactMatrix inv(sq, sq);
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j) {
            Rational v;
            if (kind == TKind::T1)
                v = (i == 0 && j == 0)
                        ? Rational(1)
                        : Rational(2 * j, i + j) * Rational(binomial(i + j, 2 * i));
            else
                v = Rational(2 * j + 1, i + j + 1) *
                    Rational(binomial(i + j + 1, 2 * i + 1));
            if (j % 2 != 0) v = -v;
            inv.at(i, j) = v;
        }
    return inv;
}

// sum_{k=0}^{m} (-1)^k (k+l-1)!/(k+l-m)! C(m,k) vanishes whenever
// l >= m >= 1; the factorial quotient is the product of the m-1 consecutive
// integers k+l-m+1, ..., k+l-1. This is the combinatorial fact that makes
// the triangular systems consistent.
inline ExactInt lemma_sum(long long l, long long m) {
    if (m < 1 || l < m) throw std::domain_error("lemma_sum: requires l >= m >= 1");
    ExactInt total = 0;
    for (long long k = 0; k <= m; ++k) {
        ExactInt prod = 1;
        for (long long j = k + l - m + 1; j <= k + l - 1; ++j) prod *= j;
        if (k % 2 != 0) prod = -prod;
        total += prod * binomial(m, k);
    }
    return total;
}

// a^k reduced modulo the p = 5 cubic a^3 - a^2 + 3a - 2, as a polynomial of
// degree at most 2. Used to spot-check arithmetic in the number field Q(a).
inline UniPoly power_reduce(int k) {
    if (k < 0) throw std::domain_error("power_reduce: negative exponent");
    return poly_rem_monic(UniPoly::monomial(static_cast<std::size_t>(k), Rational(1)),
                          minpoly_closed(5).poly);
}

// Sign-change scan of f_p over [-3, 3] on a uniform grid, each bracket
// refined by bisection. For every odd p this finds exactly two real roots:
// -1/rho and rho itself.
inline std::vector<double> root_count_scan(int p, int grid_points = 3072) {
    if (p < 1 || p % 2 == 0)
        throw std::domain_error("root_count_scan: p must be odd and positive");
    if (grid_points < 2) throw std::domain_error("root_count_scan: grid too coarse");

    std::vector<double> roots;
    const double lo = -3.0, hi = 3.0;
    const double step = (hi - lo) / grid_points;
    double x0 = lo, f0 = rho_poly(p, x0);
    for (int i = 1; i <= grid_points; ++i) {
        const double x1 = lo + i * step;
        const double f1 = rho_poly(p, x1);
        if (f0 == 0.0) roots.push_back(x0);
        else if ((f0 < 0.0) != (f1 < 0.0)) {
            double a = x0, b = x1, fa = f0;
            for (int it = 0; it < 100; ++it) {
                const double m = 0.5 * (a + b);
                const double fm = rho_poly(p, m);
                if (fm == 0.0) { a = b = m; break; }
                if ((fm < 0.0) == (fa < 0.0)) { a = m; fa = fm; }
                else b = m;
            }
            roots.push_back(0.5 * (a + b));
        }
        x0 = x1;
        f0 = f1;
    }
    if (f0 == 0.0) roots.push_back(x0);
    return roots;
}

} // namespace recsum

#pragma once

// Dense univariate polynomials with exact rational coefficients.
//
// Coefficients are stored ascending by degree and kept trimmed: the leading
// coefficient is nonzero unless the polynomial is zero, in which case the
// vector is empty. Equality is therefore structural. Evaluation is Horner's
// scheme and is generic over the point type, so the same polynomial can be
// evaluated exactly, in floating point, or composed with another polynomial.

#include "exact.hpp"

#include <cstddef>
#include <sstream>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace recsum {

class UniPoly {
public:
    UniPoly() = default;

    UniPoly(long long c) : coeffs_{Rational(c)} { trim(); }
    UniPoly(const Rational& c) : coeffs_{c} { trim(); }

    explicit UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    // The indeterminate x.
    static UniPoly variable() {
        return UniPoly(std::vector<Rational>{Rational(0), Rational(1)});
    }

    static UniPoly monomial(std::size_t deg, const Rational& c) {
        std::vector<Rational> v(deg + 1);
        v[deg] = c;
        return UniPoly(std::move(v));
    }

    bool is_zero() const { return coeffs_.empty(); }

    // Degree of the zero polynomial is reported as -1.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    // Coefficient of x^i; zero beyond the degree.
    const Rational& operator[](std::size_t i) const {
        static const Rational zero(0);
        return i < coeffs_.size() ? coeffs_[i] : zero;
    }

    const std::vector<Rational>& coefficients() const { return coeffs_; }

    friend bool operator==(const UniPoly& p, const UniPoly& q) {
        return p.coeffs_ == q.coeffs_;
    }
    friend bool operator!=(const UniPoly& p, const UniPoly& q) { return !(p == q); }

    UniPoly& operator+=(const UniPoly& o) {
        if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        trim();
        return *this;
    }

    UniPoly& operator-=(const UniPoly& o) {
        if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        trim();
        return *this;
    }

    friend UniPoly operator+(UniPoly p, const UniPoly& q) { return p += q; }
    friend UniPoly operator-(UniPoly p, const UniPoly& q) { return p -= q; }

    UniPoly operator-() const {
        UniPoly r(*this);
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    friend UniPoly operator*(const UniPoly& p, const UniPoly& q) {
        if (p.is_zero() || q.is_zero()) return UniPoly();
        std::vector<Rational> out(p.coeffs_.size() + q.coeffs_.size() - 1);
        for (std::size_t i = 0; i < p.coeffs_.size(); ++i) {
            if (p.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < q.coeffs_.size(); ++j)
                out[i + j] += p.coeffs_[i] * q.coeffs_[j];
        }
        return UniPoly(std::move(out));
    }

    UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }

    UniPoly& operator*=(const Rational& s) {
        for (auto& c : coeffs_) c *= s;
        trim();
        return *this;
    }

    friend UniPoly operator*(UniPoly p, const Rational& s) { return p *= s; }
    friend UniPoly operator*(const Rational& s, UniPoly p) { return p *= s; }

    // Horner evaluation at a point of type T. Supported point types:
    // Rational (exact), double (numeric), UniPoly (composition).
    template <class T>
    T eval(const T& x) const {
        T acc{};
        for (std::size_t i = coeffs_.size(); i-- > 0;)
            acc = acc * x + coeff_as<T>(coeffs_[i]);
        return acc;
    }

    // Rendered with descending powers, e.g. "a^3 + a^2 - 2a - 1".
    // Non-integer coefficients are parenthesized: "(3/2)a^2".
    std::string str(const std::string& var = "x") const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = coeffs_.size(); i-- > 0;) {
            const Rational& c = coeffs_[i];
            if (c == 0) continue;
            const bool neg = c < 0;
            if (first) {
                if (neg) os << '-';
                first = false;
            } else {
                os << (neg ? " - " : " + ");
            }
            Rational mag = neg ? Rational(-c) : c;
            const bool unit = (mag == 1 && i > 0);
            if (!unit) {
                if (denominator(mag) == 1) os << numerator(mag);
                else os << '(' << mag << ')';
            }
            if (i > 0) {
                os << var;
                if (i > 1) os << '^' << i;
            }
        }
        return os.str();
    }

private:
    std::vector<Rational> coeffs_;

    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    template <class T>
    static T coeff_as(const Rational& c) {
        if constexpr (std::is_same_v<T, Rational>) return c;
        else if constexpr (std::is_same_v<T, double>) return to_double(c);
        else if constexpr (std::is_same_v<T, UniPoly>) return UniPoly(c);
        else static_assert(!sizeof(T), "UniPoly::eval: unsupported point type");
    }
};

} // namespace recsum

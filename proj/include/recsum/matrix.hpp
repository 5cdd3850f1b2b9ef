#pragma once

// Small dense matrices over exact rationals, plus Gaussian elimination with
// exact pivoting. Sized for the triangular systems that arise downstream
// (a dozen rows or so), not for numerical linear algebra.

#include "exact.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace recsum {

// Thrown by solve_linear when elimination hits a structurally singular
// system. Distinct from the std::invalid_argument used for shape errors so
// callers can tell "you passed nonsense" from "this system has no unique
// solution".
struct SingularMatrix : std::domain_error {
    using std::domain_error::domain_error;
};

class ExactMatrix {
public:
    ExactMatrix() : rows_(0), cols_(0) {}
    ExactMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}

    static ExactMatrix identity(std::size_t n) {
        ExactMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t i, std::size_t j) {
        check_index(i, j);
        return a_[i * cols_ + j];
    }
    const Rational& at(std::size_t i, std::size_t j) const {
        check_index(i, j);
        return a_[i * cols_ + j];
    }

    friend bool operator==(const ExactMatrix& x, const ExactMatrix& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
    }
    friend bool operator!=(const ExactMatrix& x, const ExactMatrix& y) { return !(x == y); }

    friend ExactMatrix operator*(const ExactMatrix& x, const ExactMatrix& y) {
        if (x.cols_ != y.rows_)
            throw std::invalid_argument("matrix product: inner dimensions disagree");
        ExactMatrix out(x.rows_, y.cols_);
        for (std::size_t i = 0; i < x.rows_; ++i)
            for (std::size_t k = 0; k < x.cols_; ++k) {
                const Rational& xik = x.at(i, k);
                if (xik == 0) continue;
                for (std::size_t j = 0; j < y.cols_; ++j)
                    out.at(i, j) += xik * y.at(k, j);
            }
        return out;
    }

private:
    std::size_t rows_, cols_;
    std::vector<Rational> a_;

    void check_index(std::size_t i, std::size_t j) const {
        if (i >= rows_ || j >= cols_)
            throw std::out_of_range("matrix index out of range");
    }
};

// Solve M * x = rhs exactly, where rhs may have several columns. M must be
// square and rhs conformable (std::invalid_argument otherwise); a singular M
// raises SingularMatrix. Plain Gauss-Jordan with the first nonzero pivot in
// each column -- over rationals any nonzero pivot is as good as any other.
inline ExactMatrix solve_linear(ExactMatrix m, ExactMatrix rhs) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("solve_linear: coefficient matrix must be square");
    if (rhs.rows() != m.rows())
        throw std::invalid_argument("solve_linear: right-hand side has wrong row count");

    const std::size_t n = m.rows();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m.at(pivot, col) == 0) ++pivot;
        if (pivot == n)
            throw SingularMatrix("solve_linear: singular system (no pivot in column " +
                                 std::to_string(col) + ")");
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m.at(pivot, j), m.at(col, j));
            for (std::size_t j = 0; j < rhs.cols(); ++j)
                std::swap(rhs.at(pivot, j), rhs.at(col, j));
        }
        const Rational inv = Rational(1) / m.at(col, col);
        for (std::size_t j = 0; j < n; ++j) m.at(col, j) *= inv;
        for (std::size_t j = 0; j < rhs.cols(); ++j) rhs.at(col, j) *= inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col) continue;
            const Rational f = m.at(r, col);
            if (f == 0) continue;
            for (std::size_t j = 0; j < n; ++j) m.at(r, j) -= f * m.at(col, j);
            for (std::size_t j = 0; j < rhs.cols(); ++j) rhs.at(r, j) -= f * rhs.at(col, j);
        }
    }
    return rhs;
}

} // namespace recsum

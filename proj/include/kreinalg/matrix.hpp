#pragma once

// Dense complex matrices, row-major, with the handful of operations the rest
// of the library needs. Column vectors are n-by-1 matrices throughout.
//
// Inner product convention, shared by every header: (x,y) = sum_i x_i * conj(y_i),
// linear in the first slot and conjugate-linear in the second.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "kreinalg/errors.hpp"

namespace krein {

using cplx = std::complex<double>;

inline bool is_finite(cplx z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

class Matrix {
  public:
    Matrix() = default;

    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols, cplx{0.0, 0.0}) {}

    Matrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries)
        : rows_(rows), cols_(cols), e_(std::move(entries)) {
        if (e_.size() != rows_ * cols_)
            throw DimensionMismatch("entry count does not match shape");
        require_finite();
    }

    static Matrix from_rows(std::initializer_list<std::initializer_list<cplx>> rows) {
        const std::size_t r = rows.size();
        const std::size_t c = r == 0 ? 0 : rows.begin()->size();
        std::vector<cplx> e;
        e.reserve(r * c);
        for (const auto& row : rows) {
            if (row.size() != c)
                throw DimensionMismatch("ragged row list");
            e.insert(e.end(), row.begin(), row.end());
        }
        return Matrix(r, c, std::move(e));
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    static Matrix diagonal(const std::vector<cplx>& d) {
        Matrix m(d.size(), d.size());
        for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
        return m;
    }

    static Matrix diagonal_real(const std::vector<double>& d) {
        Matrix m(d.size(), d.size());
        for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
        return m;
    }

    static Matrix column(std::initializer_list<cplx> v) {
        return Matrix(v.size(), 1, std::vector<cplx>(v));
    }

    static Matrix column(std::vector<cplx> v) {
        const std::size_t n = v.size();
        return Matrix(n, 1, std::move(v));
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t size() const { return e_.size(); }
    bool is_square() const { return rows_ == cols_; }
    bool empty() const { return e_.empty(); }

    cplx& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    cplx operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    // Linear (row-major) access; for column vectors this is plain indexing.
    cplx& operator[](std::size_t k) { return e_[k]; }
    cplx operator[](std::size_t k) const { return e_[k]; }

    const std::vector<cplx>& entries() const { return e_; }

    Matrix col(std::size_t j) const {
        Matrix v(rows_, 1);
        for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
        return v;
    }

    void set_col(std::size_t j, const Matrix& v) {
        if (v.rows() != rows_ || v.cols() != 1)
            throw DimensionMismatch("column assignment shape");
        for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
    }

    // Columns [j0, j0+count) as a new matrix.
    Matrix cols_slice(std::size_t j0, std::size_t count) const {
        Matrix m(rows_, count);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < count; ++j) m(i, j) = (*this)(i, j0 + j);
        return m;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Matrix conjugate() const {
        Matrix c = *this;
        for (auto& z : c.e_) z = std::conj(z);
        return c;
    }

    Matrix adjoint() const { return transpose().conjugate(); }

    double frobenius() const {
        double s = 0.0;
        for (const auto& z : e_) s += std::norm(z);
        return std::sqrt(s);
    }

    double max_abs() const {
        double m = 0.0;
        for (const auto& z : e_) m = std::max(m, std::abs(z));
        return m;
    }

    cplx trace() const {
        cplx t{0.0, 0.0};
        for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
        return t;
    }

    void require_finite() const {
        for (const auto& z : e_)
            if (!is_finite(z)) throw NonFiniteEntry("matrix entry is NaN or Inf");
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        check_same_shape(a, b);
        Matrix r = a;
        for (std::size_t k = 0; k < r.e_.size(); ++k) r.e_[k] += b.e_[k];
        return r;
    }

    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        check_same_shape(a, b);
        Matrix r = a;
        for (std::size_t k = 0; k < r.e_.size(); ++k) r.e_[k] -= b.e_[k];
        return r;
    }

    friend Matrix operator-(const Matrix& a) {
        Matrix r = a;
        for (auto& z : r.e_) z = -z;
        return r;
    }

    friend Matrix operator*(cplx s, const Matrix& a) {
        Matrix r = a;
        for (auto& z : r.e_) z *= s;
        return r;
    }

    friend Matrix operator*(const Matrix& a, cplx s) { return s * a; }
    friend Matrix operator*(double s, const Matrix& a) { return cplx{s, 0.0} * a; }
    friend Matrix operator*(const Matrix& a, double s) { return cplx{s, 0.0} * a; }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_)
            throw DimensionMismatch("matrix product shapes " + shape_str(a) + " * " + shape_str(b));
        Matrix r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const cplx aik = a(i, k);
                if (aik == cplx{0.0, 0.0}) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
            }
        return r;
    }

  private:
    static void check_same_shape(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw DimensionMismatch("shape mismatch " + shape_str(a) + " vs " + shape_str(b));
    }

    static std::string shape_str(const Matrix& m) {
        return std::to_string(m.rows_) + "x" + std::to_string(m.cols_);
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cplx> e_;
};

// (u,v) with u, v column vectors: linear in u, conjugate in v.
inline cplx dot(const Matrix& u, const Matrix& v) {
    if (u.cols() != 1 || v.cols() != 1 || u.rows() != v.rows())
        throw DimensionMismatch("dot expects equal-length column vectors");
    cplx s{0.0, 0.0};
    for (std::size_t i = 0; i < u.rows(); ++i) s += u[i] * std::conj(v[i]);
    return s;
}

inline double norm(const Matrix& u) { return std::sqrt(std::abs(dot(u, u).real())); }

inline Matrix normalized(const Matrix& u) {
    const double n = norm(u);
    if (n == 0.0) throw Error("cannot normalize the zero vector");
    return (1.0 / n) * u;
}

inline double hermiticity_residual(const Matrix& m) { return (m - m.adjoint()).frobenius(); }

inline bool is_hermitian(const Matrix& m, double tol = 1e-10) {
    if (!m.is_square()) return false;
    return hermiticity_residual(m) <= tol * std::max(1e-300, m.frobenius());
}

}  // namespace krein

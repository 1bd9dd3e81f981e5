#pragma once

// LU factorization with partial pivoting for small dense complex systems,
// plus a Frobenius-norm condition estimate. Near-zero pivots are replaced by
// a tiny value instead of aborting so that inverse iteration can drive the
// factorization of a nearly singular shift; callers that need an honest
// invertibility verdict gate on the condition estimate.

#include <cmath>
#include <cstddef>
#include <limits>
#include <vector>

#include "kreinalg/matrix.hpp"

namespace krein {

struct LuFactors {
    Matrix lu;                      // packed L (unit diagonal) and U
    std::vector<std::size_t> perm;  // row permutation applied to the input
    bool pivot_patched = false;     // some pivot fell below the patch threshold
};

inline LuFactors lu_decompose(const Matrix& a) {
    if (!a.is_square()) throw DimensionMismatch("lu_decompose expects a square matrix");
    const std::size_t n = a.rows();
    LuFactors f{a, std::vector<std::size_t>(n), false};
    for (std::size_t i = 0; i < n; ++i) f.perm[i] = i;

    const double patch = std::max(1e-300, a.max_abs() * n * std::numeric_limits<double>::epsilon());
    Matrix& m = f.lu;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        double best = std::abs(m(k, k));
        for (std::size_t i = k + 1; i < n; ++i) {
            const double cand = std::abs(m(i, k));
            if (cand > best) {
                best = cand;
                piv = i;
            }
        }
        if (piv != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(piv, j));
            std::swap(f.perm[k], f.perm[piv]);
        }
        if (std::abs(m(k, k)) < patch) {
            m(k, k) = patch;
            f.pivot_patched = true;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            const cplx l = m(i, k) / m(k, k);
            m(i, k) = l;
            for (std::size_t j = k + 1; j < n; ++j) m(i, j) -= l * m(k, j);
        }
    }
    return f;
}

inline Matrix lu_solve(const LuFactors& f, const Matrix& rhs) {
    const std::size_t n = f.lu.rows();
    if (rhs.rows() != n) throw DimensionMismatch("lu_solve right-hand side rows");
    Matrix x(n, rhs.cols());
    for (std::size_t c = 0; c < rhs.cols(); ++c) {
        std::vector<cplx> y(n);
        for (std::size_t i = 0; i < n; ++i) {
            cplx s = rhs(f.perm[i], c);
            for (std::size_t j = 0; j < i; ++j) s -= f.lu(i, j) * y[j];
            y[i] = s;
        }
        for (std::size_t ii = n; ii-- > 0;) {
            cplx s = y[ii];
            for (std::size_t j = ii + 1; j < n; ++j) s -= f.lu(ii, j) * x(j, c);
            x(ii, c) = s / f.lu(ii, ii);
        }
    }
    return x;
}

struct SolveResult {
    Matrix x;
    double condition;  // ||A||_F * ||A^-1||_F; huge or inf when A is (near) singular
};

inline double condition_from_factors(const Matrix& a, const LuFactors& f) {
    const Matrix inv = lu_solve(f, Matrix::identity(a.rows()));
    double inv_norm_sq = 0.0;
    for (std::size_t i = 0; i < inv.rows(); ++i)
        for (std::size_t j = 0; j < inv.cols(); ++j) inv_norm_sq += std::norm(inv(i, j));
    if (!std::isfinite(inv_norm_sq)) return std::numeric_limits<double>::infinity();
    return a.frobenius() * std::sqrt(inv_norm_sq);
}

inline SolveResult solve_system(const Matrix& a, const Matrix& rhs) {
    const LuFactors f = lu_decompose(a);
    double cond = condition_from_factors(a, f);
    if (f.pivot_patched) cond = std::numeric_limits<double>::infinity();
    return SolveResult{lu_solve(f, rhs), cond};
}

inline Matrix inverse(const Matrix& a) {
    return lu_solve(lu_decompose(a), Matrix::identity(a.rows()));
}

}  // namespace krein

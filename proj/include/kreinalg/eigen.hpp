#pragma once

// Hermitian eigendecomposition by cyclic complex Jacobi rotations, and a
// null-space routine built on top of it.
//
// Each rotation zeroes one off-diagonal pair (p,q). Writing A(p,q) = a e^{i phi},
// the phase matrix P = diag(1, e^{-i phi}) makes the 2x2 block real with
// positive off-diagonal a, and the classic real rotation angle then solves
// t^2 + 2 t (A(q,q)-A(p,p))/(2a) - 1 = 0 for the smaller root. The combined
// unitary acting on columns (p,q) is
//   U(p,p)=c, U(p,q)=s, U(q,p)=-s e^{-i phi}, U(q,q)=c e^{-i phi}.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numeric>
#include <vector>

#include "kreinalg/matrix.hpp"

namespace krein {

struct EigenDecomposition {
    std::vector<double> values;  // sorted descending
    Matrix vectors;              // columns are orthonormal eigenvectors
};

namespace detail {

inline double off_diagonal_norm(const Matrix& a) {
    double s = 0.0;
    const std::size_t n = a.rows();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) s += std::norm(a(i, j));
    return std::sqrt(2.0 * s);
}

}  // namespace detail

inline EigenDecomposition hermitian_eigen(const Matrix& m) {
    if (!m.is_square()) throw DimensionMismatch("hermitian_eigen expects a square matrix");
    const double scale = m.frobenius();
    if (hermiticity_residual(m) > 1e-10 * std::max(scale, 1e-300))
        throw NotHermitian("hermiticity residual exceeds 1e-10 of the Frobenius norm");

    const std::size_t n = m.rows();
    Matrix a = m;
    Matrix v = Matrix::identity(n);
    const double stop = 1e-13 * scale;
    const std::size_t max_sweeps = 100;

    bool converged = detail::off_diagonal_norm(a) <= stop;
    for (std::size_t sweep = 0; sweep < max_sweeps && !converged; ++sweep) {
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const cplx apq = a(p, q);
                const double mag = std::abs(apq);
                if (mag < 1e-300) continue;
                const cplx e = std::conj(apq) / mag;  // e^{-i phi}
                const double theta = (a(q, q).real() - a(p, p).real()) / (2.0 * mag);
                const double t =
                    (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::hypot(1.0, theta));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                for (std::size_t i = 0; i < n; ++i) {  // A <- A U
                    const cplx aip = a(i, p), aiq = a(i, q);
                    a(i, p) = c * aip - s * (e * aiq);
                    a(i, q) = s * aip + c * (e * aiq);
                }
                const cplx ec = std::conj(e);
                for (std::size_t j = 0; j < n; ++j) {  // A <- U^H A
                    const cplx apj = a(p, j), aqj = a(q, j);
                    a(p, j) = c * apj - s * (ec * aqj);
                    a(q, j) = s * apj + c * (ec * aqj);
                }
                for (std::size_t i = 0; i < n; ++i) {  // V <- V U
                    const cplx vip = v(i, p), viq = v(i, q);
                    v(i, p) = c * vip - s * (e * viq);
                    v(i, q) = s * vip + c * (e * viq);
                }
            }
        }
        converged = detail::off_diagonal_norm(a) <= stop;
    }
    if (!converged) throw NoConvergence("Jacobi sweeps exceeded the cap of 100");

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        return a(i, i).real() > a(j, j).real();
    });

    EigenDecomposition d;
    d.values.resize(n);
    d.vectors = Matrix(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        d.values[k] = a(order[k], order[k]).real();
        d.vectors.set_col(k, v.col(order[k]));
    }
    return d;
}

// Orthonormal basis of {v : ||M v|| <= tol ||M||_F}, via the spectral
// decomposition of M^H M (kernel <=> singular value^2 below tol^2 scale^2).
inline Matrix null_space(const Matrix& m, double tol) {
    if (!m.is_square()) throw DimensionMismatch("null_space expects a square matrix");
    if (!(tol > 0.0)) throw Error("null_space needs tol > 0");
    const std::size_t n = m.rows();
    const Matrix g = m.adjoint() * m;
    const EigenDecomposition d = hermitian_eigen(g);
    // trace(M^H M) = ||M||_F^2. Zero eigenvalues of the Gram matrix carry
    // O(eps)*scale rounding noise, so the cutoff cannot drop below that floor
    // even when tol^2 does.
    const double thresh =
        std::max(tol * tol, 64.0 * std::numeric_limits<double>::epsilon()) * g.trace().real();

    std::size_t first = n;
    while (first > 0 && d.values[first - 1] <= thresh) --first;
    return d.vectors.cols_slice(first, n - first);
}

}  // namespace krein

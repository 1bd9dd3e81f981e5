#pragma once

// Operator algebra relative to a fundamental symmetry J living in majorant
// (euclidean) coordinates: Krein adjoints A+ = J A^H J, J-self-adjointness
// and J-skewness tests (JA hermitian resp. anti-hermitian), commutators,
// expectation values (JA phi, phi), and the seeded random generators used by
// the sweep harness.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "kreinalg/matrix.hpp"
#include "kreinalg/random.hpp"

namespace krein {

inline void validate_symmetry(const Matrix& j, double tol = 1e-10) {
    if (!j.is_square()) throw InvalidSymmetry("symmetry must be square");
    const double scale = std::max(j.frobenius(), 1e-300);
    if (hermiticity_residual(j) > tol * scale)
        throw InvalidSymmetry("symmetry is not hermitian");
    if ((j * j - Matrix::identity(j.rows())).frobenius() > tol * scale * scale)
        throw InvalidSymmetry("symmetry squared is not the identity");
}

struct KreinOperator {
    Matrix matrix;
    Matrix symmetry;

    KreinOperator(Matrix a, Matrix j) : matrix(std::move(a)), symmetry(std::move(j)) {
        validate_symmetry(symmetry);
        if (!matrix.is_square() || matrix.rows() != symmetry.rows())
            throw DimensionMismatch("operator and symmetry dimensions differ");
    }
};

inline Matrix krein_adjoint(const Matrix& a, const Matrix& j) {
    validate_symmetry(j);
    if (!a.is_square() || a.rows() != j.rows())
        throw DimensionMismatch("krein_adjoint dimensions differ");
    return j * a.adjoint() * j;
}

inline bool is_j_selfadjoint(const Matrix& a, const Matrix& j, double tol = 1e-10) {
    if (!a.is_square() || a.rows() != j.rows())
        throw DimensionMismatch("is_j_selfadjoint dimensions differ");
    return hermiticity_residual(j * a) <= tol * std::max(a.frobenius(), 1e-300);
}

inline bool is_j_skew(const Matrix& a, const Matrix& j, double tol = 1e-10) {
    if (!a.is_square() || a.rows() != j.rows())
        throw DimensionMismatch("is_j_skew dimensions differ");
    const Matrix ja = j * a;
    return (ja + ja.adjoint()).frobenius() <= tol * std::max(a.frobenius(), 1e-300);
}

inline Matrix commutator(const Matrix& a, const Matrix& b) {
    if (!a.is_square() || a.rows() != b.rows() || !b.is_square())
        throw DimensionMismatch("commutator expects square matrices of equal size");
    return a * b - b * a;
}

inline Matrix anticommutator(const Matrix& a, const Matrix& b) {
    if (!a.is_square() || a.rows() != b.rows() || !b.is_square())
        throw DimensionMismatch("anticommutator expects square matrices of equal size");
    return a * b + b * a;
}

inline void require_normalized(const Matrix& phi, double tol = 1e-10) {
    if (phi.cols() != 1) throw DimensionMismatch("state must be a column vector");
    if (std::abs(dot(phi, phi).real() - 1.0) > tol)
        throw NotNormalized("(phi,phi) differs from 1 beyond 1e-10");
}

struct Expectation {
    cplx value;
    bool real_valued;  // true when A is J-self-adjoint, in which case value.imag() == 0
};

inline Expectation expectation(const Matrix& a, const Matrix& j, const Matrix& phi) {
    require_normalized(phi);
    if (a.rows() != phi.rows() || j.rows() != phi.rows())
        throw DimensionMismatch("expectation dimensions differ");
    const cplx raw = dot(j * (a * phi), phi);
    if (is_j_selfadjoint(a, j)) {
        // (JA phi, phi) is real for hermitian JA; anything visible is a bug.
        if (std::abs(raw.imag()) > 1e-10 * std::max(1.0, a.frobenius() * j.frobenius()))
            throw NotJSelfAdjoint("expectation of a J-self-adjoint operator came out complex");
        return Expectation{cplx{raw.real(), 0.0}, true};
    }
    return Expectation{raw, false};
}

// A = J H with H hermitian; JA = H is then hermitian, i.e. A is J-self-adjoint.
inline Matrix random_j_selfadjoint(const RandomSpec& spec, const Matrix& j) {
    validate_symmetry(j);
    if (j.rows() != spec.dim) throw DimensionMismatch("symmetry does not match spec.dim");
    return j * random_hermitian(spec);
}

// J = U diag(+-1) U^H from a seeded unitary and a seeded sign pattern.
inline Matrix random_symmetry(const RandomSpec& spec) {
    spec.validate();
    SplitMix64 g(spec.seed);
    const Matrix u = random_unitary(g, spec.dim);
    std::vector<double> signs(spec.dim);
    for (auto& s : signs) s = (g.next() & 1ull) ? 1.0 : -1.0;
    Matrix m(spec.dim, spec.dim);
    for (std::size_t i = 0; i < spec.dim; ++i)
        for (std::size_t jj = 0; jj < spec.dim; ++jj) {
            cplx acc{0.0, 0.0};
            for (std::size_t k = 0; k < spec.dim; ++k)
                acc += signs[k] * u(i, k) * std::conj(u(jj, k));
            m(i, jj) = acc;
        }
    return m;
}

}  // namespace krein

#pragma once

// Canonical decomposition H+ [+] H- of a non-degenerate Gram form:
// orthoprojectors P+/P-, the fundamental symmetry J = P+ - P-, and the
// Hilbert majorant (u,v) = [P+u,P+v] - [P-u,P-v] = [Ju,v].
//
// decompose_spectral uses the euclidean-orthogonal eigenprojectors of B;
// decompose_from_basis builds the (generally oblique) projectors of a
// user-chosen positive/negative basis pair, where J is no longer hermitian
// in euclidean coordinates but BJ always is.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "kreinalg/eigen.hpp"
#include "kreinalg/form.hpp"
#include "kreinalg/matrix.hpp"
#include "kreinalg/random.hpp"
#include "kreinalg/solve.hpp"

namespace krein {

struct CanonicalDecomposition {
    GramForm gram;
    Matrix p_plus;
    Matrix p_minus;
    Matrix j;
    Matrix basis_pos;  // columns span H+
    Matrix basis_neg;  // columns span H-

    std::size_t n_plus() const { return basis_pos.cols(); }
    std::size_t n_minus() const { return basis_neg.cols(); }
};

inline CanonicalDecomposition decompose_spectral(const GramForm& q, double tol = 1e-10) {
    const EigenDecomposition d = hermitian_eigen(q.gram);
    const std::size_t n = q.dim();
    const double scale = std::max(q.gram.frobenius(), 1e-300);
    for (double lam : d.values)
        if (std::abs(lam) <= tol * scale)
            throw DegenerateForm("Gram matrix has a kernel; no Krein structure exists");

    std::size_t n_pos = 0;
    while (n_pos < n && d.values[n_pos] > 0.0) ++n_pos;

    Matrix p_plus(n, n);
    Matrix p_minus(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        const Matrix v = d.vectors.col(k);
        Matrix& target = (k < n_pos) ? p_plus : p_minus;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t jj = 0; jj < n; ++jj) target(i, jj) += v[i] * std::conj(v[jj]);
    }

    return CanonicalDecomposition{q, p_plus, p_minus, p_plus - p_minus,
                                  d.vectors.cols_slice(0, n_pos),
                                  d.vectors.cols_slice(n_pos, n - n_pos)};
}

inline CanonicalDecomposition decompose_from_basis(const GramForm& q, const Matrix& basis_pos,
                                                   const Matrix& basis_neg, double tol = 1e-9) {
    const std::size_t n = q.dim();
    if (basis_pos.rows() != n || basis_neg.rows() != n)
        throw InvalidBasis("basis rows must match the form dimension");
    if (basis_pos.cols() + basis_neg.cols() != n)
        throw InvalidBasis("basis pair does not have n columns in total");

    for (std::size_t k = 0; k < basis_pos.cols(); ++k)
        if (classify(q, basis_pos.col(k), tol) != VectorClass::Positive)
            throw InvalidBasis("a basis_pos column does not classify Positive");
    for (std::size_t k = 0; k < basis_neg.cols(); ++k)
        if (classify(q, basis_neg.col(k), tol) != VectorClass::Negative)
            throw InvalidBasis("a basis_neg column does not classify Negative");
    for (std::size_t i = 0; i < basis_pos.cols(); ++i)
        for (std::size_t jj = 0; jj < basis_neg.cols(); ++jj)
            if (!q_orthogonal(q, basis_pos.col(i), basis_neg.col(jj), tol))
                throw InvalidBasis("basis pair is not form-orthogonal");

    Matrix s(n, n);
    for (std::size_t k = 0; k < basis_pos.cols(); ++k) s.set_col(k, basis_pos.col(k));
    for (std::size_t k = 0; k < basis_neg.cols(); ++k)
        s.set_col(basis_pos.cols() + k, basis_neg.col(k));

    // P+ = S E+ S^-1 with E+ selecting the positive block; P- as the exact
    // complement so that P+ + P- = I holds to the last bit.
    const LuFactors f = lu_decompose(s);
    if (f.pivot_patched || condition_from_factors(s, f) > 1e12)
        throw InvalidBasis("concatenated basis is numerically dependent (condition > 1e12)");
    const Matrix s_inv = lu_solve(f, Matrix::identity(n));

    Matrix e_plus(n, n);
    for (std::size_t k = 0; k < basis_pos.cols(); ++k) e_plus(k, k) = 1.0;
    const Matrix p_plus = s * e_plus * s_inv;
    const Matrix p_minus = Matrix::identity(n) - p_plus;

    return CanonicalDecomposition{q, p_plus, p_minus, p_plus - p_minus, basis_pos, basis_neg};
}

inline cplx majorant_inner(const CanonicalDecomposition& d, const Matrix& u, const Matrix& v) {
    const Matrix up = d.p_plus * u, vp = d.p_plus * v;
    const Matrix um = d.p_minus * u, vm = d.p_minus * v;
    return form_eval(d.gram, up, vp) - form_eval(d.gram, um, vm);
}

struct MajorantMetric {
    CanonicalDecomposition decomposition;

    cplx inner(const Matrix& u, const Matrix& v) const {
        return majorant_inner(decomposition, u, v);
    }
    double norm(const Matrix& u) const {
        return std::sqrt(std::max(0.0, inner(u, u).real()));
    }
};

struct AxiomCheck {
    std::string name;
    std::string metric;  // "euclidean", "majorant", or "indefinite"
    double residual;
    double tol;
    bool pass;
    bool required;  // euclidean hermiticity of J is informational only
};

struct SymmetryAxiomReport {
    std::vector<AxiomCheck> checks;
    bool all_required_pass = true;

    const AxiomCheck* find(const std::string& name) const {
        for (const auto& c : checks)
            if (c.name == name) return &c;
        return nullptr;
    }
};

inline SymmetryAxiomReport verify_symmetry_axioms(const CanonicalDecomposition& d,
                                                  std::uint64_t seed = 0x5EEDull) {
    SymmetryAxiomReport r;
    const std::size_t n = d.gram.dim();
    const Matrix& b = d.gram.gram;
    const double bscale = std::max(b.frobenius(), 1e-300);
    auto push = [&](std::string name, std::string metric, double residual, double tol,
                    bool required) {
        const bool pass = residual <= tol;
        if (required && !pass) r.all_required_pass = false;
        r.checks.push_back(
            {std::move(name), std::move(metric), residual, tol, pass, required});
    };

    const Matrix id = Matrix::identity(n);
    push("j_squared_identity", "euclidean", (d.j * d.j - id).frobenius(), 1e-10, true);
    push("projector_complement", "euclidean", (d.p_plus + d.p_minus - id).frobenius(), 1e-10,
         true);
    push("projector_idempotent_plus", "euclidean", (d.p_plus * d.p_plus - d.p_plus).frobenius(),
         1e-10, true);
    push("projector_idempotent_minus", "euclidean",
         (d.p_minus * d.p_minus - d.p_minus).frobenius(), 1e-10, true);
    push("projector_cross_zero", "euclidean",
         (d.p_plus * d.p_minus).frobenius() + (d.p_minus * d.p_plus).frobenius(), 1e-10, true);
    push("bj_hermitian", "euclidean", hermiticity_residual(b * d.j), 1e-10 * bscale, true);
    push("bp_plus_hermitian", "euclidean", hermiticity_residual(b * d.p_plus), 1e-10 * bscale,
         true);
    push("bp_minus_hermitian", "euclidean", hermiticity_residual(b * d.p_minus), 1e-10 * bscale,
         true);
    push("j_euclidean_hermitian", "euclidean", hermiticity_residual(d.j),
         1e-10 * std::max(d.j.frobenius(), 1e-300), false);

    const MajorantMetric maj{d};
    SplitMix64 g(seed);
    double min_self = std::numeric_limits<double>::infinity();
    double max_self_imag = 0.0;
    double max_iso = 0.0, max_bsym = 0.0, max_msym = 0.0;
    std::vector<Matrix> samples;
    for (std::size_t k = 0; k < n; ++k) samples.push_back(id.col(k));
    for (int k = 0; k < 64; ++k) samples.push_back(random_unit_vector(g, n));
    for (const auto& u : samples) {
        const cplx self = maj.inner(u, u);
        min_self = std::min(min_self, self.real());
        max_self_imag = std::max(max_self_imag, std::abs(self.imag()));
        max_iso = std::max(max_iso, std::abs(maj.norm(d.j * u) - maj.norm(u)));
    }
    for (int k = 0; k < 64; ++k) {
        const Matrix u = random_unit_vector(g, n), v = random_unit_vector(g, n);
        max_bsym = std::max(
            max_bsym, std::abs(form_eval(d.gram, d.j * u, v) - form_eval(d.gram, u, d.j * v)));
        max_msym = std::max(max_msym, std::abs(maj.inner(d.j * u, v) - maj.inner(u, d.j * v)));
    }
    const double jscale = std::max(1.0, d.j.frobenius());
    push("majorant_positive", "majorant",
         min_self > 0.0 ? 0.0 : std::max(1e-300, -min_self), 0.0, true);
    push("majorant_self_real", "majorant", max_self_imag, 1e-12 * bscale * jscale, true);
    push("j_majorant_isometry", "majorant", max_iso, 1e-10 * jscale * jscale, true);
    push("b_symmetry", "indefinite", max_bsym, 1e-10 * bscale * jscale, true);
    push("majorant_j_symmetry", "majorant", max_msym, 1e-10 * bscale * jscale * jscale, true);
    return r;
}

}  // namespace krein

#pragma once

// Indefinite generalized eigenproblem A x = lambda B x for hermitian A, B of
// dimension <= 8. When A and B share a kernel vector the pencil is degenerate
// (every complex number is an eigenvalue); otherwise, with B invertible, the
// spectrum of C = B^-1 A is found through the Faddeev-LeVerrier
// characteristic polynomial and Durand-Kerner root iteration, and
// eigenvectors through shifted inverse iteration. Each eigenvector is
// classified by the sign of [x,x] = (Bx,x).

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "kreinalg/eigen.hpp"
#include "kreinalg/form.hpp"
#include "kreinalg/matrix.hpp"
#include "kreinalg/random.hpp"
#include "kreinalg/solve.hpp"

namespace krein {

struct GeneralizedEigenPair {
    cplx lambda;
    Matrix vector;  // euclidean unit column
    VectorClass sign_class;
};

struct GenEigReport {
    std::vector<GeneralizedEigenPair> pairs;
    bool degenerate = false;
    std::string note;
};

// Monic characteristic polynomial of C: returns {1, c1, ..., cn} with
// det(lambda I - C) = lambda^n + c1 lambda^{n-1} + ... + cn.
inline std::vector<cplx> characteristic_polynomial(const Matrix& c) {
    if (!c.is_square()) throw DimensionMismatch("characteristic_polynomial needs a square matrix");
    const std::size_t n = c.rows();
    std::vector<cplx> coeffs{cplx{1.0, 0.0}};
    Matrix m(n, n);  // running M_k of the Faddeev-LeVerrier recurrence
    for (std::size_t k = 1; k <= n; ++k) {
        Matrix shifted = m;
        if (k > 1)
            for (std::size_t i = 0; i < n; ++i) shifted(i, i) += coeffs.back();
        m = (k == 1) ? c : c * shifted;
        coeffs.push_back(-m.trace() / static_cast<double>(k));
    }
    return coeffs;
}

// All roots of a monic polynomial given as {1, c1, ..., cn}. Initial guesses
// sit on a circle of radius 1 + max|c_k| with a fixed angular offset;
// 500 simultaneous-iteration steps, convergence at 1e-13 relative step size.
inline std::vector<cplx> durand_kerner(const std::vector<cplx>& coeffs) {
    if (coeffs.empty() || coeffs.front() != cplx{1.0, 0.0})
        throw Error("durand_kerner expects a monic coefficient list");
    const std::size_t n = coeffs.size() - 1;
    if (n == 0) return {};
    if (n == 1) return {-coeffs[1]};

    double radius = 0.0;
    for (std::size_t k = 1; k < coeffs.size(); ++k) radius = std::max(radius, std::abs(coeffs[k]));
    radius += 1.0;

    std::vector<cplx> z(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double ang = 2.0 * M_PI * static_cast<double>(k) / static_cast<double>(n) + 0.4;
        z[k] = radius * cplx{std::cos(ang), std::sin(ang)};
    }

    auto eval = [&](cplx x) {
        cplx p = coeffs[0];
        for (std::size_t k = 1; k < coeffs.size(); ++k) p = p * x + coeffs[k];
        return p;
    };

    for (int iter = 0; iter < 500; ++iter) {
        double max_step = 0.0, max_z = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            cplx denom{1.0, 0.0};
            for (std::size_t l = 0; l < n; ++l) {
                if (l == k) continue;
                cplx diff = z[k] - z[l];
                if (std::abs(diff) < 1e-300) diff = cplx{1e-30, 0.0};
                denom *= diff;
            }
            const cplx step = eval(z[k]) / denom;
            z[k] -= step;
            max_step = std::max(max_step, std::abs(step));
            max_z = std::max(max_z, std::abs(z[k]));
        }
        if (max_step <= 1e-13 * std::max(1.0, max_z)) break;
    }
    return z;
}

namespace detail {

struct RootCluster {
    cplx center;
    std::size_t multiplicity;
};

inline std::vector<RootCluster> merge_roots(std::vector<cplx> roots) {
    double max_abs = 0.0;
    for (cplx r : roots) max_abs = std::max(max_abs, std::abs(r));
    const double merge = 1e-7 * (1.0 + max_abs);

    std::sort(roots.begin(), roots.end(), [](cplx a, cplx b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });

    std::vector<RootCluster> clusters;
    for (cplx r : roots) {
        bool placed = false;
        for (auto& cl : clusters) {
            if (std::abs(r - cl.center) <= merge) {
                const double w = static_cast<double>(cl.multiplicity);
                cl.center = (w * cl.center + r) / (w + 1.0);
                ++cl.multiplicity;
                placed = true;
                break;
            }
        }
        if (!placed) clusters.push_back({r, 1});
    }
    std::sort(clusters.begin(), clusters.end(), [](const RootCluster& a, const RootCluster& b) {
        if (a.center.real() != b.center.real()) return a.center.real() > b.center.real();
        return a.center.imag() > b.center.imag();
    });
    return clusters;
}

// One inverse-iteration run against C - (lambda + delta) I, orthogonalized
// against vectors already accepted for the same cluster.
inline Matrix inverse_iteration(const Matrix& c, cplx lambda, std::uint64_t seed,
                                const std::vector<Matrix>& accepted) {
    const std::size_t n = c.rows();
    const double scale = 1.0 + std::abs(lambda);
    Matrix shifted = c;
    const cplx shift = lambda + cplx{1e-11 * scale, 0.0};
    for (std::size_t i = 0; i < n; ++i) shifted(i, i) -= shift;
    const LuFactors f = lu_decompose(shifted);

    SplitMix64 g(seed);
    Matrix x = random_matrix(g, n, 1);
    auto project_out = [&](Matrix& v) {
        for (const auto& u : accepted) v = v - dot(v, u) * u;
    };
    project_out(x);
    if (norm(x) < 1e-12) return Matrix(n, 1);  // caller treats zero vector as failure
    x = normalized(x);
    for (int it = 0; it < 4; ++it) {
        x = lu_solve(f, x);
        const double big = x.max_abs();
        if (!(big > 0.0) || !std::isfinite(big)) return Matrix(n, 1);
        x = (1.0 / big) * x;
        project_out(x);
        const double nn = norm(x);
        if (nn < 1e-12) return Matrix(n, 1);
        x = (1.0 / nn) * x;
    }
    return x;
}

}  // namespace detail

inline GenEigReport solve_pencil(const Matrix& a, const Matrix& b, double tol = 1e-10) {
    if (!a.is_square() || !b.is_square() || a.rows() != b.rows())
        throw DimensionMismatch("pencil matrices must be square and of equal size");
    if (a.rows() > 8)
        throw DimensionTooLarge("characteristic-polynomial method is limited to dim <= 8");
    if (hermiticity_residual(a) > tol * std::max(a.frobenius(), 1e-300))
        throw NotHermitian("pencil matrix A is not hermitian at tolerance");
    if (hermiticity_residual(b) > tol * std::max(b.frobenius(), 1e-300))
        throw NotHermitian("pencil matrix B is not hermitian at tolerance");

    GenEigReport report;
    const std::size_t n = a.rows();

    // ker A and ker B intersect exactly where A^H A + B^H B annihilates.
    const Matrix common = null_space(a.adjoint() * a + b.adjoint() * b, tol);
    if (common.cols() > 0) {
        report.degenerate = true;
        report.note = "common kernel of dimension " + std::to_string(common.cols()) +
                      "; every complex number is an eigenvalue";
        return report;
    }

    const SolveResult sol = solve_system(b, a);
    if (!(sol.condition <= 1e12))
        throw SingularBWithoutDegeneracy(
            "B is numerically singular while ker A and ker B are disjoint");
    const Matrix c = sol.x;  // B^-1 A

    const std::vector<cplx> coeffs = characteristic_polynomial(c);
    const auto clusters = detail::merge_roots(durand_kerner(coeffs));

    const Matrix bh = 0.5 * (b + b.adjoint());
    const GramForm q(bh);
    const double residual_scale = a.frobenius();
    std::vector<std::string> remarks;

    std::size_t cluster_index = 0;
    for (const auto& cl : clusters) {
        std::vector<Matrix> accepted;
        for (std::size_t copy = 0; copy < cl.multiplicity; ++copy) {
            Matrix vec(n, 1);
            bool ok = false;
            for (std::uint64_t attempt = 0; attempt < 3 && !ok; ++attempt) {
                const std::uint64_t seed =
                    derive_seed(0xC0FFEEull, cluster_index * 16 + copy * 4 + attempt);
                vec = detail::inverse_iteration(c, cl.center, seed, accepted);
                if (norm(vec) < 0.5) continue;
                const double res = (a * vec - cl.center * (b * vec)).frobenius();
                ok = res <= 1e-8 * (residual_scale + std::abs(cl.center) * b.frobenius());
            }
            if (!ok) {
                remarks.push_back("eigenvalue near (" + std::to_string(cl.center.real()) + "," +
                                  std::to_string(cl.center.imag()) + ") appears defective: found " +
                                  std::to_string(accepted.size()) + " of " +
                                  std::to_string(cl.multiplicity) + " vectors");
                break;
            }
            accepted.push_back(vec);
            report.pairs.push_back({cl.center, vec, classify(q, vec)});
        }
        ++cluster_index;
    }

    for (std::size_t k = 0; k < remarks.size(); ++k) {
        if (k > 0) report.note += "; ";
        report.note += remarks[k];
    }
    return report;
}

struct QOrthogonalityEntry {
    std::size_t i;
    std::size_t j;
    bool applicable;  // |lambda_i - conj(lambda_j)| > tol * scale
    double residual;  // |(B x_i, x_j)|
};

struct QOrthogonalityTable {
    std::vector<QOrthogonalityEntry> entries;
    bool all_applicable_pass = true;
};

inline QOrthogonalityTable verify_q_orthogonality(const GenEigReport& report, const Matrix& b,
                                                  double tol = 1e-8) {
    if (report.degenerate)
        throw DegenerateReport("Q-orthogonality is undefined for a degenerate pencil");
    QOrthogonalityTable table;
    double max_abs = 0.0;
    for (const auto& p : report.pairs) max_abs = std::max(max_abs, std::abs(p.lambda));
    const double gap_scale = 1.0 + max_abs;
    const double bound = tol * std::max(b.frobenius(), 1e-300);

    for (std::size_t i = 0; i < report.pairs.size(); ++i)
        for (std::size_t j = i + 1; j < report.pairs.size(); ++j) {
            const bool applicable =
                std::abs(report.pairs[i].lambda - std::conj(report.pairs[j].lambda)) >
                tol * gap_scale;
            const double res =
                std::abs(dot(b * report.pairs[i].vector, report.pairs[j].vector));
            if (applicable && res > bound) table.all_applicable_pass = false;
            table.entries.push_back({i, j, applicable, res});
        }
    return table;
}

inline bool reality_check(const Matrix& a, const Matrix& b, const GenEigReport& report,
                          double tol = 1e-10) {
    (void)b;
    const EigenDecomposition d = hermitian_eigen(a);
    if (d.values.empty() || d.values.back() <= tol * std::max(a.frobenius(), 1e-300))
        throw NotPositiveDefinite("reality_check requires positive definite A");
    double max_abs = 0.0;
    for (const auto& p : report.pairs) max_abs = std::max(max_abs, std::abs(p.lambda));
    for (const auto& p : report.pairs)
        if (std::abs(p.lambda.imag()) > 1e-8 * (1.0 + max_abs)) return false;
    return true;
}

}  // namespace krein

// A short tour: canonical decomposition of an indefinite Gram matrix, the
// fundamental symmetry it induces, and one uncertainty relation evaluated on
// a two-dimensional Krein space.

#include <cstdio>

#include "kreinalg/decomposition.hpp"
#include "kreinalg/sweep.hpp"
#include "kreinalg/uncertainty.hpp"

using namespace krein;

static void print_matrix(const char* name, const Matrix& m) {
    std::printf("%s =\n", name);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        std::printf("  [");
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const cplx z = m(i, j);
            if (z.imag() == 0.0)
                std::printf(" %8.4f", z.real());
            else
                std::printf(" %8.4f%+.4fi", z.real(), z.imag());
        }
        std::printf(" ]\n");
    }
}

int main() {
    // An indefinite form on C^2: [u,v] = (Bu, v) with eigenvalues 3 and -1.
    const GramForm q{Matrix::from_rows({{1.0, 2.0}, {2.0, 1.0}})};
    const CanonicalDecomposition d = decompose_spectral(q);
    std::printf("signature: (%zu, %zu)\n", d.n_plus(), d.n_minus());
    print_matrix("J", d.j);

    const Matrix u = Matrix::column({1.0, 0.0});
    const Matrix v = Matrix::column({0.0, 1.0});
    std::printf("[u,u] = %.4f   [v,v] = %.4f   (u,u)_J = %.4f\n",
                form_eval(q, u, u).real(), form_eval(q, v, v).real(),
                majorant_inner(d, u, u).real());

    // A pair with [A,B] = 2i J on the Krein space C^2 with J = diag(1,-1).
    const Matrix j = Matrix::diagonal_real({1.0, -1.0});
    const Matrix a = Matrix::from_rows({{0.0, 1.0}, {-1.0, 0.0}});
    const Matrix b(2, 2, {cplx{0, 0}, cplx{0, 1}, cplx{0, 1}, cplx{0, 0}});
    const StateVector phi{Matrix::column({0.8, 0.6})};
    const CommutatorSpec spec{cplx{0.0, 2.0}, 0.0, CommutatorForm::aJ};
    const UncertaintyReport rep = verify_relation(RelationId::AJ_Thm72, a, b, j, phi, spec);
    std::printf("sigma_J(A) sigma_J(B) = %.6f >= (|a|/2)|(J phi,phi)| = %.6f  [%s]\n", rep.lhs,
                rep.rhs, to_string(rep.status).c_str());

    // Deformed-commutator bound, iterated to its fixed point.
    const auto orbit = gup_series(1.0, 1e-3, 1.0, 6);
    std::printf("gup series: ");
    for (double s : orbit) std::printf("%.9f ", s);
    std::printf("\n");
    return 0;
}

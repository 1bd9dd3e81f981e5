#include <catch_amalgamated.hpp>

#include "helpers.hpp"
#include "kreinalg/matrix.hpp"
#include "kreinalg/random.hpp"
#include "kreinalg/solve.hpp"

using namespace krein;
using testutil::require_entrywise;

TEST_CASE("matrix construction validates shape and finiteness") {
    REQUIRE_THROWS_AS(Matrix(2, 2, std::vector<cplx>{1.0, 2.0, 3.0}), DimensionMismatch);
    REQUIRE_THROWS_AS(Matrix(1, 2, std::vector<cplx>{1.0, cplx{std::nan(""), 0.0}}),
                      NonFiniteEntry);
    REQUIRE_THROWS_AS(Matrix(1, 1, std::vector<cplx>{cplx{0.0, INFINITY}}), NonFiniteEntry);
    REQUIRE_THROWS_AS(Matrix::from_rows({{1.0, 2.0}, {3.0}}), DimensionMismatch);

    const Matrix m = Matrix::from_rows({{1.0, 2.0}, {3.0, 4.0}});
    REQUIRE(m(0, 1) == cplx{2.0, 0.0});
    REQUIRE(m(1, 0) == cplx{3.0, 0.0});
    REQUIRE(Matrix::identity(3).trace() == cplx{3.0, 0.0});
    REQUIRE(Matrix::diagonal_real({1.0, -1.0})(1, 1) == cplx{-1.0, 0.0});
}

TEST_CASE("arithmetic, product, and adjoint") {
    const Matrix a = Matrix::from_rows({{1.0, 2.0}, {3.0, 4.0}});
    const Matrix b = Matrix::from_rows({{0.0, 1.0}, {1.0, 0.0}});
    require_entrywise(a + b, Matrix::from_rows({{1.0, 3.0}, {4.0, 4.0}}), 0.0);
    require_entrywise(a - a, Matrix(2, 2), 0.0);
    require_entrywise(2.0 * a, a + a, 0.0);
    require_entrywise(a * b, Matrix::from_rows({{2.0, 1.0}, {4.0, 3.0}}), 0.0);
    REQUIRE_THROWS_AS(a * Matrix(3, 3), DimensionMismatch);
    REQUIRE_THROWS_AS(a + Matrix(3, 2), DimensionMismatch);

    const Matrix c = Matrix::from_rows({{cplx{1.0, 2.0}, cplx{0.0, -1.0}}});
    const Matrix ch = c.adjoint();
    REQUIRE(ch.rows() == 2);
    REQUIRE(ch(0, 0) == cplx{1.0, -2.0});
    REQUIRE(ch(1, 0) == cplx{0.0, 1.0});

    SplitMix64 g(11);
    const Matrix x = random_matrix(g, 3, 4);
    const Matrix y = random_matrix(g, 4, 2);
    REQUIRE(testutil::entry_gap((x * y).adjoint(), y.adjoint() * x.adjoint()) <= 1e-14);
}

TEST_CASE("frobenius norm and max_abs") {
    const Matrix m = Matrix::from_rows({{3.0, 0.0}, {0.0, 4.0}});
    REQUIRE(m.frobenius() == Catch::Approx(5.0));
    REQUIRE(m.max_abs() == Catch::Approx(4.0));
}

TEST_CASE("dot is linear in the first slot and conjugate in the second") {
    const Matrix u = Matrix::column({cplx{1.0, 1.0}, cplx{0.0, 2.0}});
    const Matrix v = Matrix::column({cplx{2.0, 0.0}, cplx{1.0, -1.0}});
    const cplx alpha{0.5, 1.5};
    REQUIRE(std::abs(dot(alpha * u, v) - alpha * dot(u, v)) <= 1e-14);
    REQUIRE(std::abs(dot(u, alpha * v) - std::conj(alpha) * dot(u, v)) <= 1e-14);
    REQUIRE(std::abs(dot(u, v) - std::conj(dot(v, u))) <= 1e-14);
    REQUIRE(norm(u) == Catch::Approx(std::sqrt(6.0)));
    REQUIRE_THROWS_AS(normalized(Matrix(3, 1)), Error);
    REQUIRE(norm(normalized(u)) == Catch::Approx(1.0));
}

TEST_CASE("hermiticity residual and predicate") {
    REQUIRE(is_hermitian(Matrix::from_rows({{1.0, cplx{0.0, 2.0}}, {cplx{0.0, -2.0}, 3.0}})));
    REQUIRE_FALSE(is_hermitian(Matrix::from_rows({{0.0, 1.0}, {-1.0, 0.0}})));
    REQUIRE_FALSE(is_hermitian(Matrix(2, 3)));
    REQUIRE(hermiticity_residual(Matrix::identity(4)) == 0.0);
}

TEST_CASE("linear solves reproduce known inverses") {
    const Matrix a = Matrix::from_rows({{2.0, 1.0}, {1.0, 3.0}});
    const Matrix inv = inverse(a);
    require_entrywise(a * inv, Matrix::identity(2), 1e-14);

    SplitMix64 g(99);
    for (int trial = 0; trial < 50; ++trial) {
        const Matrix m = random_matrix(g, 5, 5) + 3.0 * Matrix::identity(5);
        const Matrix rhs = random_matrix(g, 5, 2);
        const SolveResult s = solve_system(m, rhs);
        REQUIRE((m * s.x - rhs).frobenius() <= 1e-10 * (1.0 + rhs.frobenius()));
        REQUIRE(s.condition < 1e6);
    }
}

TEST_CASE("splitmix stream is deterministic and uniform() stays in range") {
    SplitMix64 g1(123456), g2(123456);
    for (int k = 0; k < 100; ++k) {
        const double a = g1.uniform(), b = g2.uniform();
        REQUIRE(a == b);
        REQUIRE(a >= 0.0);
        REQUIRE(a < 1.0);
    }
    REQUIRE(derive_seed(1, 2) == derive_seed(1, 2));
    REQUIRE(derive_seed(1, 2) != derive_seed(1, 3));
}

TEST_CASE("random unit vectors and unitaries have the advertised structure") {
    SplitMix64 g(2024);
    for (std::size_t n : {2, 5, 9}) {
        const Matrix v = random_unit_vector(g, n);
        REQUIRE(norm(v) == Catch::Approx(1.0).margin(1e-12));
        const Matrix u = random_unitary(g, n);
        REQUIRE(testutil::entry_gap(u.adjoint() * u, Matrix::identity(n)) <= 1e-12);
    }
}

#include <catch_amalgamated.hpp>

#include "helpers.hpp"
#include "kreinalg/eigen.hpp"
#include "kreinalg/random.hpp"

using namespace krein;

TEST_CASE("two by two indefinite fixture") {
    const Matrix b = Matrix::from_rows({{1.0, 2.0}, {2.0, 1.0}});
    const EigenDecomposition d = hermitian_eigen(b);
    REQUIRE(d.values.size() == 2);
    REQUIRE(d.values[0] == Catch::Approx(3.0).margin(1e-12));
    REQUIRE(d.values[1] == Catch::Approx(-1.0).margin(1e-12));
    // Eigenvectors are (1,1)/sqrt(2) and (1,-1)/sqrt(2) up to phase.
    const Matrix f2 = normalized(Matrix::column({1.0, 1.0}));
    const Matrix f1 = normalized(Matrix::column({1.0, -1.0}));
    REQUIRE(std::abs(dot(d.vectors.col(0), f2)) == Catch::Approx(1.0).margin(1e-12));
    REQUIRE(std::abs(dot(d.vectors.col(1), f1)) == Catch::Approx(1.0).margin(1e-12));
}

TEST_CASE("identity eigenvalues") {
    const EigenDecomposition d = hermitian_eigen(Matrix::identity(3));
    for (double v : d.values) REQUIRE(v == Catch::Approx(1.0).margin(1e-14));
}

TEST_CASE("random two by two matches the quadratic formula") {
    SplitMix64 g(7);
    for (int trial = 0; trial < 100; ++trial) {
        Matrix m(2, 2);
        m(0, 0) = g.symmetric();
        m(1, 1) = g.symmetric();
        const cplx off = g.complex_symmetric();
        m(0, 1) = off;
        m(1, 0) = std::conj(off);
        const auto [hi, lo] = testutil::eig2_closed_form(m);
        const EigenDecomposition d = hermitian_eigen(m);
        REQUIRE(d.values[0] == Catch::Approx(hi).margin(1e-10));
        REQUIRE(d.values[1] == Catch::Approx(lo).margin(1e-10));
    }
}

TEST_CASE("reconstruction and orthonormality at several sizes") {
    for (std::size_t n : {3, 8, 16}) {
        for (int trial = 0; trial < 10; ++trial) {
            const Matrix m =
                random_hermitian({derive_seed(31337, n * 100 + trial), n, 2.0});
            const EigenDecomposition d = hermitian_eigen(m);
            REQUIRE(testutil::entry_gap(d.vectors.adjoint() * d.vectors, Matrix::identity(n)) <=
                    1e-10);
            Matrix lambda(n, n);
            for (std::size_t i = 0; i < n; ++i) lambda(i, i) = d.values[i];
            REQUIRE((m * d.vectors - d.vectors * lambda).frobenius() <=
                    1e-10 * std::max(1.0, m.frobenius()));
            for (std::size_t i = 0; i + 1 < n; ++i) REQUIRE(d.values[i] >= d.values[i + 1]);
        }
    }
}

TEST_CASE("spectrum is invariant under unitary conjugation") {
    SplitMix64 g(555);
    for (int trial = 0; trial < 20; ++trial) {
        const Matrix m = random_hermitian({derive_seed(555, trial), 6, 1.0});
        const Matrix u = random_unitary(g, 6);
        const EigenDecomposition d1 = hermitian_eigen(m);
        const EigenDecomposition d2 = hermitian_eigen(u.adjoint() * m * u);
        for (std::size_t i = 0; i < 6; ++i)
            REQUIRE(d1.values[i] == Catch::Approx(d2.values[i]).margin(1e-9));
    }
}

TEST_CASE("non-hermitian input is rejected") {
    REQUIRE_THROWS_AS(hermitian_eigen(Matrix::from_rows({{0.0, 1.0}, {-1.0, 0.0}})),
                      NotHermitian);
    REQUIRE_THROWS_AS(hermitian_eigen(Matrix(2, 3)), DimensionMismatch);
}

TEST_CASE("null space of singular diagonal forms") {
    const Matrix k = null_space(Matrix::diagonal_real({1.0, -1.0, 0.0}), 1e-10);
    REQUIRE(k.cols() == 1);
    REQUIRE(std::abs(k(2, 0)) == Catch::Approx(1.0).margin(1e-12));
    REQUIRE(std::abs(k(0, 0)) <= 1e-12);
    REQUIRE(std::abs(k(1, 0)) <= 1e-12);

    REQUIRE(null_space(Matrix::diagonal_real({1.0, 2.0}), 1e-10).cols() == 0);
}

TEST_CASE("null space of a random rank-one outer product") {
    SplitMix64 g(321);
    for (int trial = 0; trial < 20; ++trial) {
        const Matrix u = random_unit_vector(g, 3);
        const Matrix v = random_unit_vector(g, 3);
        const Matrix m = u * v.adjoint();
        const Matrix k = null_space(m, 1e-10);
        REQUIRE(k.cols() == 2);
        for (std::size_t j = 0; j < k.cols(); ++j) {
            const Matrix w = k.col(j);
            REQUIRE((m * w).frobenius() <= 1e-10 * m.frobenius());
            REQUIRE(std::abs(dot(w, v)) <= 1e-9);
        }
        REQUIRE(testutil::entry_gap(k.adjoint() * k, Matrix::identity(2)) <= 1e-10);
    }
}

TEST_CASE("null space dimension matches a planted kernel") {
    SplitMix64 g(808);
    const Matrix q = random_unitary(g, 5);
    const Matrix m = q * Matrix::diagonal_real({2.0, -1.0, 0.0, 0.5, 0.0}) * q.adjoint();
    const Matrix k = null_space(m, 1e-10);
    REQUIRE(k.cols() == 2);
    for (std::size_t j = 0; j < 2; ++j)
        REQUIRE((m * k.col(j)).frobenius() <= 1e-10 * m.frobenius());
}

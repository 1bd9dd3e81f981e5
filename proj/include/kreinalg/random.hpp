#pragma once

// Seeded, platform-stable random generation: splitmix64 streams mapped to
// uniform [-1,1] doubles. Every consumer derives its own stream from a seed
// and a salt, so parallel sweeps stay order-independent and reruns with the
// same seed are byte-identical.

#include <cstdint>
#include <cstddef>
#include <vector>

#include "kreinalg/errors.hpp"
#include "kreinalg/matrix.hpp"

namespace krein {

struct RandomSpec {
    std::uint64_t seed = 0;
    std::size_t dim = 2;
    double scale = 1.0;

    void validate() const {
        if (dim < 1) throw Error("RandomSpec.dim must be >= 1");
        if (!(scale > 0.0)) throw Error("RandomSpec.scale must be > 0");
    }
};

class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }  // [0,1)
    double symmetric() { return 2.0 * uniform() - 1.0; }                        // [-1,1)
    cplx complex_symmetric() {
        const double re = symmetric();
        const double im = symmetric();
        return cplx{re, im};
    }

  private:
    std::uint64_t state_;
};

inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t salt) {
    return SplitMix64(base ^ (0xA0761D6478BD642FULL * (salt + 1))).next();
}

inline Matrix random_matrix(SplitMix64& g, std::size_t rows, std::size_t cols) {
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = g.complex_symmetric();
    return m;
}

inline Matrix random_real_matrix(SplitMix64& g, std::size_t rows, std::size_t cols) {
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = g.symmetric();
    return m;
}

inline Matrix random_unit_vector(SplitMix64& g, std::size_t n) {
    for (int attempt = 0; attempt < 64; ++attempt) {
        Matrix v = random_matrix(g, n, 1);
        if (norm(v) > 1e-8) return normalized(v);
    }
    throw Error("random_unit_vector failed to draw a nonzero vector");
}

// H = (M + M^H)/2 * scale with M drawn entrywise uniform on [-1,1]^2.
inline Matrix random_hermitian(const RandomSpec& spec) {
    spec.validate();
    SplitMix64 g(spec.seed);
    const Matrix m = random_matrix(g, spec.dim, spec.dim);
    return spec.scale * 0.5 * (m + m.adjoint());
}

// Unitary factor of a seeded random matrix via modified Gram-Schmidt with one
// re-orthogonalization pass.
inline Matrix random_unitary(SplitMix64& g, std::size_t n) {
    Matrix q = random_matrix(g, n, n);
    for (std::size_t j = 0; j < n; ++j) {
        Matrix col = q.col(j);
        for (int pass = 0; pass < 2; ++pass)
            for (std::size_t k = 0; k < j; ++k) {
                const Matrix prev = q.col(k);
                col = col - dot(col, prev) * prev;
            }
        if (norm(col) < 1e-10) {  // vanishingly unlikely; fall back to a basis vector
            col = Matrix(n, 1);
            col[j] = 1.0;
            for (int pass = 0; pass < 2; ++pass)
                for (std::size_t k = 0; k < j; ++k) {
                    const Matrix prev = q.col(k);
                    col = col - dot(col, prev) * prev;
                }
        }
        q.set_col(j, normalized(col));
    }
    return q;
}

}  // namespace krein

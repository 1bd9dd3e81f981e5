#pragma once

#include <catch_amalgamated.hpp>

#include "kreinalg/matrix.hpp"
#include "kreinalg/random.hpp"

namespace testutil {

using krein::cplx;
using krein::Matrix;

inline double entry_gap(const Matrix& a, const Matrix& b) { return (a - b).max_abs(); }

inline void require_entrywise(const Matrix& got, const Matrix& want, double tol) {
    REQUIRE(got.rows() == want.rows());
    REQUIRE(got.cols() == want.cols());
    REQUIRE(entry_gap(got, want) <= tol);
}

// Independent 2x2 hermitian eigenvalues by the quadratic formula.
inline std::pair<double, double> eig2_closed_form(const Matrix& m) {
    const double t = m.trace().real();
    const double det = (m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0)).real();
    const double disc = std::sqrt(std::max(0.0, t * t - 4.0 * det));
    return {(t + disc) / 2.0, (t - disc) / 2.0};
}

}  // namespace testutil

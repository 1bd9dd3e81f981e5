#pragma once

// Gaussian wave packet f(x) = int e^{-alpha (k-k0)^2} e^{ikx} dk: e-folding
// width product (exactly 4 in closed form, independent of alpha), Simpson
// quadrature of |f(x)|^2 against the closed form (pi/alpha) e^{-x^2/(2 alpha)},
// and a discretized Robertson check with X = diag(x_j), P = -i D on a
// periodic grid. hbar = 1 throughout. The widths are e-folding widths, not
// standard deviations; dx = 2 sigma_x * sqrt(2) in the statistical convention.

#include <cmath>
#include <cstddef>
#include <vector>

#include "kreinalg/matrix.hpp"
#include "kreinalg/uncertainty.hpp"

namespace krein {

struct WavePacketParams {
    double alpha;
    double k0;

    WavePacketParams(double alpha_, double k0_) : alpha(alpha_), k0(k0_) {
        if (!(alpha > 0.0) || !std::isfinite(alpha))
            throw InvalidAlpha("packet sharpness alpha must be positive and finite");
        if (!std::isfinite(k0)) throw InvalidAlpha("carrier wave number must be finite");
    }
};

struct Grid {
    double x_min;
    double x_max;
    std::size_t n;

    Grid(double x_min_, double x_max_, std::size_t n_) : x_min(x_min_), x_max(x_max_), n(n_) {
        if (!std::isfinite(x_min) || !std::isfinite(x_max) || x_min >= x_max)
            throw InvalidGrid("grid needs finite x_min < x_max");
        if (n < 8) throw InvalidGrid("grid needs at least 8 points");
    }
};

struct GaussianWidths {
    double dx;
    double dk;
    double product;
};

inline GaussianWidths gaussian_widths(const WavePacketParams& p) {
    const double s = std::sqrt(2.0 * p.alpha);
    // The product telescopes to 4 independently of alpha; pinned in closed
    // form rather than recomputed so it is exact in floating point.
    return {2.0 * s, 2.0 / s, 4.0};
}

// Periodic grid: x_j = x_min + j h with h = (x_max - x_min)/n, j = 0..n-1;
// x_max is identified with x_min.
inline std::vector<double> grid_points(const Grid& g) {
    const double h = (g.x_max - g.x_min) / static_cast<double>(g.n);
    std::vector<double> xs(g.n);
    for (std::size_t j = 0; j < g.n; ++j) xs[j] = g.x_min + h * static_cast<double>(j);
    return xs;
}

// f(x) by composite Simpson over k in [k0 - 8/sqrt(alpha), k0 + 8/sqrt(alpha)]
// with the given (even) number of subintervals. The integrand is below
// e^{-64} at the cut, so truncation is far beneath the quadrature tolerance.
inline cplx packet_amplitude(const WavePacketParams& p, double x, std::size_t subintervals) {
    if (subintervals < 2 || subintervals % 2 != 0)
        throw InputError("Simpson rule needs an even subinterval count >= 2");
    const double half_width = 8.0 / std::sqrt(p.alpha);
    const double k_lo = p.k0 - half_width;
    const double h = 2.0 * half_width / static_cast<double>(subintervals);

    auto integrand = [&](double k) {
        const double u = k - p.k0;
        const double g = std::exp(-p.alpha * u * u);
        return g * cplx{std::cos(k * x), std::sin(k * x)};
    };

    cplx acc = integrand(k_lo) + integrand(k_lo + 2.0 * half_width);
    for (std::size_t j = 1; j < subintervals; ++j) {
        const double w = (j % 2 == 1) ? 4.0 : 2.0;
        acc += w * integrand(k_lo + h * static_cast<double>(j));
    }
    return (h / 3.0) * acc;
}

struct PacketSample {
    double x;
    double f2_numeric;
    double f2_closed;
};

// |f|^2 on the grid, Simpson with 4n subintervals, next to the closed form
// (pi/alpha) e^{-x^2/(2 alpha)}. The grid must cover six e-folding widths on
// each side so the packet is fully contained.
inline std::vector<PacketSample> sampled_packet(const Grid& g, const WavePacketParams& p) {
    const double reach = 6.0 * std::sqrt(2.0 * p.alpha);
    if (g.x_min > -reach || g.x_max < reach)
        throw GridTooNarrow("grid must extend to +-6 sqrt(2 alpha)");
    const std::size_t subintervals = 4 * g.n;
    std::vector<PacketSample> out;
    out.reserve(g.n);
    for (double x : grid_points(g)) {
        const double f2n = std::norm(packet_amplitude(p, x, subintervals));
        const double f2c = (M_PI / p.alpha) * std::exp(-x * x / (2.0 * p.alpha));
        out.push_back({x, f2n, f2c});
    }
    return out;
}

inline Matrix position_operator(const Grid& g) {
    return Matrix::diagonal_real(grid_points(g));
}

// P = -i D with D the periodic central-difference matrix; D is real
// antisymmetric, so P is hermitian to the last bit.
inline Matrix momentum_operator(const Grid& g) {
    const double h = (g.x_max - g.x_min) / static_cast<double>(g.n);
    const std::size_t n = g.n;
    Matrix p(n, n);
    const double w = 1.0 / (2.0 * h);
    for (std::size_t j = 0; j < n; ++j) {
        const std::size_t next = (j + 1) % n;
        const std::size_t prev = (j + n - 1) % n;
        p(j, next) += cplx{0.0, -w};
        p(j, prev) += cplx{0.0, w};
    }
    return p;
}

// Robertson bound for the discretized pair (X, P) on the sampled Gaussian
// state, with the explicit matrix commutator on the right side (no i I
// assumption; the wrap rows carry large entries the localized state never
// sees).
inline UncertaintyReport discrete_robertson_check(const Grid& g, const WavePacketParams& p) {
    const std::vector<double> xs = grid_points(g);
    Matrix phi(g.n, 1);
    const double amp = std::sqrt(M_PI / p.alpha);
    for (std::size_t j = 0; j < g.n; ++j) {
        const double env = amp * std::exp(-xs[j] * xs[j] / (4.0 * p.alpha));
        phi(j, 0) = env * cplx{std::cos(p.k0 * xs[j]), std::sin(p.k0 * xs[j])};
    }
    phi = normalized(phi);
    const StateVector state{phi};
    return verify_relation(RelationId::RobertsonHilbert, position_operator(g),
                           momentum_operator(g), Matrix::identity(g.n), state);
}

}  // namespace krein

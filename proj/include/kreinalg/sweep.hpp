#pragma once

// Randomized property sweeps over the uncertainty relations. Each trial draws
// a fresh (J, A, B, phi) instance for the requested relation, evaluates it,
// and lands in one CSV row; the exit code reflects the worst outcome. Trials
// are seeded as (seed XOR trial index), so any subset can be reproduced.
//
// The aJ relations get instances satisfying their hypothesis exactly (to
// rounding): 2x2 blocks with [A_k, B_k] = a J_k conjugated by one random
// unitary. That forces an even dimension; in odd dimension the commutator
// trace obstruction (tr[A,B] = 0, tr J != 0) only admits a = 0. The deformed
// commutator [A,B] = a(I + beta B^2) has no finite-dimensional realization
// with a != 0 at all (same trace argument, since tr(B^2) >= 0 for the
// operators in scope), so the GUP relations are not sweepable; use `check`
// with explicit matrices instead.

#include <cstdint>
#include <cstdio>
#include <cstring>
#include <ostream>
#include <vector>

#include "kreinalg/operators.hpp"
#include "kreinalg/random.hpp"
#include "kreinalg/uncertainty.hpp"

namespace krein {

struct SweepConfig {
    RelationId relation = RelationId::SchrodingerKrein;
    std::size_t dim = 4;
    std::size_t trials = 100;
    std::uint64_t seed = 0;
    double tol = kPassTol;
    double a_im = 2.0;  // commutator constant a = i * a_im for the aJ relations
    double beta = 0.0;

    void validate() const {
        if (trials < 1) throw InputError("sweep needs at least one trial");
        if (dim < 2 || dim > 32) throw InputError("sweep dimension must lie in [2, 32]");
        if (!(tol >= 0.0)) throw InputError("sweep tolerance must be nonnegative");
        const bool aj = relation == RelationId::AJ_Thm72 || relation == RelationId::AJ_Thm73 ||
                        relation == RelationId::AJ_Thm74;
        if (aj && dim % 2 != 0)
            throw InputError(
                "the aJ commutator hypothesis has no exact instances in odd dimension "
                "(trace obstruction); pick an even dimension");
        if (aj && a_im == 0.0)
            throw InputError("the aJ relations need a nonzero --a-im");
        if (relation == RelationId::GUP_Krein || relation == RelationId::GUP_Hilbert)
            throw InputError(
                "the deformed commutator hypothesis has no finite-dimensional instances "
                "with a != 0; the GUP relations are not sweepable, use `check`");
    }
};

struct SweepRow {
    std::size_t trial;
    UncertaintyReport report;
};

struct SweepOutcome {
    std::vector<SweepRow> rows;
    int exit_code = 0;  // 0 all pass, 1 inequality violation, 2 hypothesis violation
};

namespace detail {

struct TrialInstance {
    Matrix a;
    Matrix b;
    Matrix j;
    Matrix phi;
    std::optional<CommutatorSpec> spec;
};

// Place a 2x2 block at rows/cols (2k, 2k+1).
inline void put_block(Matrix& m, std::size_t k, cplx m00, cplx m01, cplx m10, cplx m11) {
    m(2 * k, 2 * k) = m00;
    m(2 * k, 2 * k + 1) = m01;
    m(2 * k + 1, 2 * k) = m10;
    m(2 * k + 1, 2 * k + 1) = m11;
}

inline TrialInstance draw_trial(const SweepConfig& c, std::uint64_t trial_seed) {
    TrialInstance t;
    const std::size_t d = c.dim;
    switch (c.relation) {
        case RelationId::SchrodingerKrein: {
            t.j = random_symmetry({derive_seed(trial_seed, 1), d, 1.0});
            t.a = random_j_selfadjoint({derive_seed(trial_seed, 2), d, 1.0}, t.j);
            t.b = random_j_selfadjoint({derive_seed(trial_seed, 3), d, 1.0}, t.j);
            break;
        }
        case RelationId::AJ_Thm72:
        case RelationId::AJ_Thm73:
        case RelationId::AJ_Thm74: {
            const bool hermitian_pair = c.relation == RelationId::AJ_Thm74;
            SplitMix64 g(derive_seed(trial_seed, 1));
            Matrix a0(d, d), b0(d, d), j0(d, d);
            for (std::size_t k = 0; k < d / 2; ++k) {
                const double mag = 0.5 + g.uniform();
                const double s = (g.next() & 1) ? mag : -mag;
                const double w = (c.a_im / 2.0) / s;
                if (hermitian_pair) {
                    // s*sigma_x and w*sigma_y: [A_k, B_k] = 2 i s w diag(1,-1)
                    put_block(a0, k, 0.0, s, s, 0.0);
                    put_block(b0, k, 0.0, cplx{0.0, -w}, cplx{0.0, w}, 0.0);
                } else {
                    // J-selfadjoint pair for J_k = diag(1,-1), same commutator
                    put_block(a0, k, 0.0, s, -s, 0.0);
                    put_block(b0, k, 0.0, cplx{0.0, w}, cplx{0.0, w}, 0.0);
                }
                put_block(j0, k, 1.0, 0.0, 0.0, -1.0);
            }
            SplitMix64 gu(derive_seed(trial_seed, 2));
            const Matrix u = random_unitary(gu, d);
            const Matrix uh = u.adjoint();
            t.a = u * a0 * uh;
            t.b = u * b0 * uh;
            t.j = u * j0 * uh;
            t.spec = CommutatorSpec{cplx{0.0, c.a_im}, 0.0, CommutatorForm::aJ};
            break;
        }
        case RelationId::RobertsonHilbert:
        case RelationId::SchrodingerHilbert: {
            t.j = Matrix::identity(d);
            t.a = random_hermitian({derive_seed(trial_seed, 2), d, 1.0});
            t.b = random_hermitian({derive_seed(trial_seed, 3), d, 1.0});
            break;
        }
        case RelationId::GUP_Krein:
        case RelationId::GUP_Hilbert:
            throw InputError("GUP relations are not sweepable");
    }
    SplitMix64 gphi(derive_seed(trial_seed, 4));
    t.phi = random_unit_vector(gphi, d);
    return t;
}

}  // namespace detail

inline SweepOutcome run_sweep(const SweepConfig& c) {
    c.validate();
    SweepOutcome out;
    out.rows.reserve(c.trials);
    bool any_fail = false, any_hypothesis = false;
    for (std::size_t trial = 0; trial < c.trials; ++trial) {
        const detail::TrialInstance t = detail::draw_trial(c, c.seed ^ trial);
        const UncertaintyReport rep =
            verify_relation(c.relation, t.a, t.b, t.j, StateVector{t.phi}, t.spec);
        if (rep.status == RelationStatus::FailHypothesis) {
            any_hypothesis = true;
        } else if (rep.margin < -c.tol * (1.0 + std::abs(rep.rhs))) {
            any_fail = true;
        }
        out.rows.push_back({trial, rep});
    }
    out.exit_code = any_fail ? 1 : (any_hypothesis ? 2 : 0);
    return out;
}

// CSV: '#' config comment, header, one row per trial; '.' decimal point,
// 17 significant digits, LF line endings. Byte-identical across re-runs with
// the same config.
inline void write_sweep_csv(std::ostream& os, const SweepConfig& c,
                            const std::vector<SweepRow>& rows) {
    char buf[512];
    std::snprintf(buf, sizeof(buf),
                  "# relation=%s dim=%zu trials=%zu seed=%llu tol=%.17g a_im=%.17g beta=%.17g\n",
                  to_string(c.relation).c_str(), c.dim, c.trials,
                  static_cast<unsigned long long>(c.seed), c.tol, c.a_im, c.beta);
    os << buf;
    os << "trial,lhs,rhs,margin,hypothesis_residual,jphi_phi\n";
    for (const auto& row : rows) {
        std::snprintf(buf, sizeof(buf), "%zu,%.17g,%.17g,%.17g,%.17g,%.17g\n", row.trial,
                      row.report.lhs, row.report.rhs, row.report.margin,
                      row.report.hypothesis_residual, row.report.jphi_phi);
        os << buf;
    }
}

}  // namespace krein

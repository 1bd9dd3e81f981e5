#pragma once

// J-standard deviations and the uncertainty relations built from them. Every
// relation is evaluated as lhs >= rhs with an explicit margin; conditional
// relations carry a hypothesis residual and report FailHypothesis instead of
// a pass/fail verdict when the premise is not met by the inputs.

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "kreinalg/matrix.hpp"
#include "kreinalg/operators.hpp"

namespace krein {

enum class RelationId {
    SchrodingerKrein,
    AJ_Thm72,
    AJ_Thm73,
    AJ_Thm74,
    GUP_Krein,
    GUP_Hilbert,
    RobertsonHilbert,
    SchrodingerHilbert,
};

inline std::string to_string(RelationId id) {
    switch (id) {
        case RelationId::SchrodingerKrein: return "schrodinger-krein";
        case RelationId::AJ_Thm72: return "aj-thm72";
        case RelationId::AJ_Thm73: return "aj-thm73";
        case RelationId::AJ_Thm74: return "aj-thm74";
        case RelationId::GUP_Krein: return "gup-krein";
        case RelationId::GUP_Hilbert: return "gup-hilbert";
        case RelationId::RobertsonHilbert: return "robertson-hilbert";
        case RelationId::SchrodingerHilbert: return "schrodinger-hilbert";
    }
    throw Error("unknown relation id");
}

inline RelationId relation_from_string(const std::string& name) {
    for (RelationId id : {RelationId::SchrodingerKrein, RelationId::AJ_Thm72, RelationId::AJ_Thm73,
                          RelationId::AJ_Thm74, RelationId::GUP_Krein, RelationId::GUP_Hilbert,
                          RelationId::RobertsonHilbert, RelationId::SchrodingerHilbert})
        if (to_string(id) == name) return id;
    throw InputError("unknown relation name: " + name);
}

enum class CommutatorForm {
    aJ,               // [A,B] = a J
    aI_plus_beta_B2,  // [A,B] = a (I + beta B^2)
    aI_plus_beta_BstarB,
};

struct CommutatorSpec {
    cplx a;
    double beta;
    CommutatorForm form;

    CommutatorSpec(cplx a_, double beta_, CommutatorForm form_) : a(a_), beta(beta_), form(form_) {
        if (!is_finite(a) || !std::isfinite(beta))
            throw InvalidCommutatorSpec("commutator parameters must be finite");
        if (std::abs(a.real()) > 1e-12 * std::max(1.0, std::abs(a)))
            throw InvalidCommutatorSpec("commutator constant a must be purely imaginary");
        if (beta < 0.0) throw InvalidCommutatorSpec("deformation parameter beta must be >= 0");
    }
};

struct StateVector {
    Matrix phi;

    explicit StateVector(Matrix v) : phi(std::move(v)) {
        if (phi.cols() != 1 || phi.rows() == 0)
            throw DimensionMismatch("state must be a nonempty column vector");
        require_normalized(phi);
    }
};

enum class RelationStatus { Pass, Fail, FailHypothesis };

inline std::string to_string(RelationStatus s) {
    switch (s) {
        case RelationStatus::Pass: return "pass";
        case RelationStatus::Fail: return "fail";
        case RelationStatus::FailHypothesis: return "fail-hypothesis";
    }
    throw Error("unknown relation status");
}

struct UncertaintyReport {
    RelationId relation_id;
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0;  // lhs - rhs
    double shift_a = 0.0;
    double shift_b = 0.0;
    double hypothesis_residual = 0.0;
    double jphi_phi = 0.0;
    RelationStatus status = RelationStatus::Pass;
    bool neutral_state = false;  // |(J phi, phi)| <= 1e-9
};

inline constexpr double kPassTol = 1e-8;

namespace detail {

// Shared guard for quantities that are real by theory: tolerate |imag| up to
// 1e-10 * scale, then drop the imaginary part.
inline double real_part_checked(cplx z, double scale, const char* what) {
    if (std::abs(z.imag()) > 1e-10 * std::max(1.0, scale))
        throw Error(std::string(what) + " acquired a non-real value");
    return z.real();
}

inline double radicand_to_sigma(double radicand, double scale) {
    if (radicand < -1e-12 * std::max(1.0, scale))
        throw NegativeRadicand("deviation radicand is negative beyond rounding tolerance");
    return std::sqrt(std::max(radicand, 0.0));
}

}  // namespace detail

// J-standard deviation: sigma_J(A)^2 = ||A phi||^2 - 2 (JA phi, phi) Re(A phi, phi)
// + (JA phi, phi)^2, the squared metric norm of (A - sigma I) phi at the real
// shift sigma = (JA phi, phi). Requires a J-selfadjoint A and unit phi.
inline double sigma_j(const Matrix& a, const Matrix& j, const StateVector& state) {
    if (!is_j_selfadjoint(a, j))
        throw NotJSelfAdjoint("sigma_j requires a J-selfadjoint operator");
    const Matrix& phi = state.phi;
    const Matrix aphi = a * phi;
    const double op_scale = std::max(1.0, a.frobenius() * std::max(1.0, j.frobenius()));
    const double sigma =
        detail::real_part_checked(dot(j * aphi, phi), op_scale, "(JA phi, phi)");
    const double norm2 = dot(aphi, aphi).real();
    const double re_aphi_phi = dot(aphi, phi).real();
    const double radicand = norm2 - 2.0 * sigma * re_aphi_phi + sigma * sigma;
    const double mag = std::abs(norm2) + std::abs(2.0 * sigma * re_aphi_phi) + sigma * sigma;
    return detail::radicand_to_sigma(radicand, mag);
}

// Alternative deviation {||A phi||^2 - (Re(A phi, phi))^2}^(1/2), the metric
// norm of (A - Re(A phi, phi) I) phi; the shift lives in the definite metric.
inline double sigma_j_alt(const Matrix& a, const Matrix& j, const StateVector& state) {
    if (!is_j_selfadjoint(a, j))
        throw NotJSelfAdjoint("sigma_j_alt requires a J-selfadjoint operator");
    const Matrix aphi = a * state.phi;
    const double norm2 = dot(aphi, aphi).real();
    const double re = dot(aphi, state.phi).real();
    const double radicand = norm2 - re * re;
    return detail::radicand_to_sigma(radicand, std::abs(norm2) + re * re);
}

// Plain deviation {||A phi||^2 - (A phi, phi)^2}^(1/2); the square of the
// expectation must come out real (up to rounding) for this to make sense.
inline double sigma_plain(const Matrix& a, const StateVector& state) {
    const Matrix aphi = a * state.phi;
    const double norm2 = dot(aphi, aphi).real();
    const cplx e = dot(aphi, state.phi);
    const cplx e2 = e * e;
    const double scale = std::max(1.0, a.frobenius());
    const double re_e2 = detail::real_part_checked(e2, scale * scale, "(A phi, phi)^2");
    const double radicand = norm2 - re_e2;
    return detail::radicand_to_sigma(radicand, std::abs(norm2) + std::abs(re_e2));
}

// Right-hand side of the indefinite Schrodinger relation:
// {Re(J {A,B}/2 phi, phi) - (JA phi, phi)(JB phi, phi)(2 - (J phi, phi))}^2
// + |(J [A,B]/2 phi, phi)|^2.
inline double schrodinger_krein_rhs(const Matrix& a, const Matrix& b, const Matrix& j,
                                    const StateVector& state) {
    if (!is_j_selfadjoint(a, j) || !is_j_selfadjoint(b, j))
        throw NotJSelfAdjoint("schrodinger_krein_rhs requires J-selfadjoint operators");
    const Matrix& phi = state.phi;
    const double scale =
        std::max(1.0, a.frobenius() * b.frobenius()) * std::max(1.0, j.frobenius());
    const double jphi = detail::real_part_checked(dot(j * phi, phi), j.frobenius(), "(J phi, phi)");
    const double sa =
        detail::real_part_checked(dot(j * (a * phi), phi), scale, "(JA phi, phi)");
    const double sb =
        detail::real_part_checked(dot(j * (b * phi), phi), scale, "(JB phi, phi)");
    const Matrix half_anti = 0.5 * anticommutator(a, b);
    const double t1 = dot(j * (half_anti * phi), phi).real();
    const double bracket = t1 - sa * sb * (2.0 - jphi);
    const Matrix half_comm = 0.5 * commutator(a, b);
    const cplx t2 = dot(j * (half_comm * phi), phi);
    return bracket * bracket + std::norm(t2);
}

// Hilbert-space Schrodinger bound in covariance form:
// {Re({A,B}/2 phi, phi) - (A phi, phi)(B phi, phi)}^2 + |([A,B]/2 phi, phi)|^2
// for hermitian A, B.
inline double schrodinger_hilbert_rhs(const Matrix& a, const Matrix& b, const StateVector& state) {
    if (!is_hermitian(a) || !is_hermitian(b))
        throw NotHermitian("schrodinger_hilbert_rhs requires hermitian operators");
    const Matrix& phi = state.phi;
    const double scale = std::max(1.0, a.frobenius() * b.frobenius());
    const double ea = detail::real_part_checked(dot(a * phi, phi), scale, "(A phi, phi)");
    const double eb = detail::real_part_checked(dot(b * phi, phi), scale, "(B phi, phi)");
    const double t1 = dot((0.5 * anticommutator(a, b)) * phi, phi).real();
    const double cov = t1 - ea * eb;
    const cplx t2 = dot((0.5 * commutator(a, b)) * phi, phi);
    return cov * cov + std::norm(t2);
}

inline double robertson_rhs(const Matrix& a, const Matrix& b, const StateVector& state) {
    if (!is_hermitian(a) || !is_hermitian(b))
        throw NotHermitian("robertson_rhs requires hermitian operators");
    return 0.5 * std::abs(dot(commutator(a, b) * state.phi, state.phi));
}

// Right-hand side of the deformed-commutator bound for [A,B] = a(I + beta B^2)
// with J-selfadjoint B commuting with J:
// (|a|/2) * |1 + beta ((B - rho I)^2 phi, phi)| expanded into explicit real and
// imaginary branches at the real shift rho = (JB phi, phi).
inline double gup_rhs_krein(cplx a, double beta, const Matrix& b, const Matrix& j,
                            const StateVector& state) {
    validate_symmetry(j);
    if (!is_j_selfadjoint(b, j))
        throw NotJSelfAdjoint("gup_rhs_krein requires a J-selfadjoint operator");
    const double comm_scale = std::max(1.0, j.frobenius() * b.frobenius());
    if (commutator(j, b).frobenius() > 1e-10 * comm_scale)
        throw SymmetryCommutatorViolated("gup_rhs_krein requires [J, B] = 0");
    const Matrix& phi = state.phi;
    const double op_scale = std::max(1.0, b.frobenius() * std::max(1.0, j.frobenius()));
    const double rho = detail::real_part_checked(dot(j * (b * phi), phi), op_scale, "(JB phi, phi)");
    const cplx eb = dot(b * phi, phi);
    const cplx eb2 = dot(b * (b * phi), phi);
    const double re_branch = 1.0 + beta * (eb2.real() - 2.0 * rho * eb.real() + rho * rho);
    const double im_branch = beta * (eb2.imag() - 2.0 * rho * eb.imag());
    return 0.5 * std::abs(a) * std::hypot(re_branch, im_branch);
}

// Orbit of f(s) = (|a| / (2 sigma_a)) (1 + beta s^2) started from 0; entry k
// is the k-th iterate. Models the self-consistent minimal deviation of the
// deformed relation.
inline std::vector<double> gup_series(double a_abs, double beta, double sigma_a, std::size_t n) {
    if (!(a_abs >= 0.0) || !(beta >= 0.0) || !(sigma_a > 0.0))
        throw InputError("gup_series requires a_abs >= 0, beta >= 0, sigma_a > 0");
    if (n > 20) throw InputError("gup_series is limited to 20 iterations");
    std::vector<double> orbit;
    orbit.reserve(n);
    double s = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        s = (a_abs / (2.0 * sigma_a)) * (1.0 + beta * s * s);
        if (!(std::abs(s) <= 1e12)) throw DivergentIteration("gup_series iterate exceeded 1e12");
        orbit.push_back(s);
    }
    return orbit;
}

namespace detail {

inline bool is_hilbert_relation(RelationId id) {
    return id == RelationId::GUP_Hilbert || id == RelationId::RobertsonHilbert ||
           id == RelationId::SchrodingerHilbert;
}

inline double hypothesis_residual_for(const CommutatorSpec& spec, const Matrix& a, const Matrix& b,
                                      const Matrix& j) {
    const Matrix comm = commutator(a, b);
    Matrix target(a.rows(), a.cols());
    switch (spec.form) {
        case CommutatorForm::aJ: target = spec.a * j; break;
        case CommutatorForm::aI_plus_beta_B2:
            target = spec.a * (Matrix::identity(a.rows()) + spec.beta * (b * b));
            break;
        case CommutatorForm::aI_plus_beta_BstarB:
            target = spec.a * (Matrix::identity(a.rows()) + spec.beta * (b.adjoint() * b));
            break;
    }
    return (comm - target).frobenius();
}

}  // namespace detail

// Evaluate one relation on (A, B, J, phi). Conditional relations need the
// commutator spec naming their premise; unconditional ones ignore it. The
// three Hilbert-space relations are defined at J = I and insist on receiving
// the identity for j.
inline UncertaintyReport verify_relation(RelationId id, const Matrix& a, const Matrix& b,
                                         const Matrix& j, const StateVector& state,
                                         const std::optional<CommutatorSpec>& spec = std::nullopt) {
    if (!a.is_square() || !b.is_square() || !j.is_square() || a.rows() != b.rows() ||
        a.rows() != j.rows() || a.rows() != state.phi.rows())
        throw DimensionMismatch("verify_relation needs square operators matching the state size");

    if (detail::is_hilbert_relation(id)) {
        if ((j - Matrix::identity(j.rows())).frobenius() >
            1e-10 * std::sqrt(static_cast<double>(j.rows())))
            throw InvalidSymmetry("this relation is defined at J = I; pass the identity");
    } else {
        validate_symmetry(j);
    }

    UncertaintyReport rep;
    rep.relation_id = id;
    const Matrix& phi = state.phi;
    const double op_scale = std::max(1.0, a.frobenius() * b.frobenius());

    const Matrix jeff =
        detail::is_hilbert_relation(id) ? Matrix::identity(j.rows()) : j;
    rep.jphi_phi =
        detail::real_part_checked(dot(jeff * phi, phi), jeff.frobenius(), "(J phi, phi)");
    rep.neutral_state = std::abs(rep.jphi_phi) <= 1e-9;

    auto metric_shift = [&](const Matrix& m) {
        return detail::real_part_checked(dot(jeff * (m * phi), phi),
                                         std::max(1.0, m.frobenius() * jeff.frobenius()),
                                         "(JM phi, phi)");
    };
    auto euclid_shift = [&](const Matrix& m) { return dot(m * phi, phi).real(); };

    bool hypothesis_ok = true;
    auto apply_spec = [&](std::initializer_list<CommutatorForm> allowed) {
        if (!spec.has_value())
            throw InvalidCommutatorSpec("this relation needs a commutator specification");
        bool form_ok = false;
        for (CommutatorForm f : allowed) form_ok = form_ok || spec->form == f;
        if (!form_ok)
            throw InvalidCommutatorSpec("commutator form does not match the relation");
        rep.hypothesis_residual = detail::hypothesis_residual_for(*spec, a, b, jeff);
        hypothesis_ok = rep.hypothesis_residual <= 1e-8 * op_scale;
    };

    switch (id) {
        case RelationId::SchrodingerKrein: {
            const double sa = sigma_j(a, jeff, state);
            const double sb = sigma_j(b, jeff, state);
            rep.lhs = sa * sa * sb * sb;
            rep.rhs = schrodinger_krein_rhs(a, b, jeff, state);
            rep.shift_a = metric_shift(a);
            rep.shift_b = metric_shift(b);
            break;
        }
        case RelationId::AJ_Thm72: {
            apply_spec({CommutatorForm::aJ});
            rep.lhs = sigma_j(a, jeff, state) * sigma_j(b, jeff, state);
            rep.rhs = 0.5 * std::abs(spec->a) * std::abs(rep.jphi_phi);
            rep.shift_a = metric_shift(a);
            rep.shift_b = metric_shift(b);
            break;
        }
        case RelationId::AJ_Thm73: {
            apply_spec({CommutatorForm::aJ});
            rep.lhs = sigma_j_alt(a, jeff, state) * sigma_j_alt(b, jeff, state);
            rep.rhs = 0.5 * std::abs(spec->a) * std::abs(rep.jphi_phi);
            rep.shift_a = euclid_shift(a);
            rep.shift_b = euclid_shift(b);
            break;
        }
        case RelationId::AJ_Thm74: {
            apply_spec({CommutatorForm::aJ});
            rep.lhs = sigma_plain(a, state) * sigma_plain(b, state);
            rep.rhs = 0.5 * std::abs(spec->a) * std::abs(rep.jphi_phi);
            rep.shift_a = euclid_shift(a);
            rep.shift_b = euclid_shift(b);
            break;
        }
        case RelationId::GUP_Krein: {
            apply_spec({CommutatorForm::aI_plus_beta_B2, CommutatorForm::aI_plus_beta_BstarB});
            const double ja_scale = std::max(1.0, jeff.frobenius() * a.frobenius());
            const double jb_scale = std::max(1.0, jeff.frobenius() * b.frobenius());
            if (commutator(jeff, a).frobenius() > 1e-10 * ja_scale ||
                commutator(jeff, b).frobenius() > 1e-10 * jb_scale)
                throw SymmetryCommutatorViolated("this relation requires [J,A] = [J,B] = 0");
            const double sa = sigma_j(a, jeff, state);
            const double sb = sigma_j(b, jeff, state);
            rep.lhs = sa * sb;
            if (spec->form == CommutatorForm::aI_plus_beta_B2) {
                rep.rhs = gup_rhs_krein(spec->a, spec->beta, b, jeff, state);
            } else {
                rep.rhs = 0.5 * std::abs(spec->a) * (1.0 + spec->beta * sb * sb);
            }
            rep.shift_a = metric_shift(a);
            rep.shift_b = metric_shift(b);
            break;
        }
        case RelationId::GUP_Hilbert: {
            apply_spec({CommutatorForm::aI_plus_beta_B2, CommutatorForm::aI_plus_beta_BstarB});
            if (!is_hermitian(a) || !is_hermitian(b))
                throw NotHermitian("this relation requires hermitian operators");
            const double sb = sigma_j(b, jeff, state);
            rep.lhs = sigma_j(a, jeff, state) * sb;
            rep.rhs = 0.5 * std::abs(spec->a) * (1.0 + spec->beta * sb * sb);
            rep.shift_a = euclid_shift(a);
            rep.shift_b = euclid_shift(b);
            break;
        }
        case RelationId::RobertsonHilbert: {
            if (!is_hermitian(a) || !is_hermitian(b))
                throw NotHermitian("this relation requires hermitian operators");
            rep.lhs = sigma_j(a, jeff, state) * sigma_j(b, jeff, state);
            rep.rhs = robertson_rhs(a, b, state);
            rep.shift_a = euclid_shift(a);
            rep.shift_b = euclid_shift(b);
            break;
        }
        case RelationId::SchrodingerHilbert: {
            if (!is_hermitian(a) || !is_hermitian(b))
                throw NotHermitian("this relation requires hermitian operators");
            const double sa = sigma_j(a, jeff, state);
            const double sb = sigma_j(b, jeff, state);
            rep.lhs = sa * sa * sb * sb;
            rep.rhs = schrodinger_hilbert_rhs(a, b, state);
            rep.shift_a = euclid_shift(a);
            rep.shift_b = euclid_shift(b);
            break;
        }
    }

    rep.margin = rep.lhs - rep.rhs;
    if (!hypothesis_ok)
        rep.status = RelationStatus::FailHypothesis;
    else if (rep.margin >= -kPassTol * (1.0 + std::abs(rep.rhs)))
        rep.status = RelationStatus::Pass;
    else
        rep.status = RelationStatus::Fail;
    return rep;
}

}  // namespace krein

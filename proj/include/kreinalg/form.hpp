#pragma once

// Indefinite sesquilinear hermitian forms [u,v] = (Bu,v) induced by a
// hermitian Gram matrix B, vector classification against the form, neutral
// vector construction, and form-isometry tests.

#include <algorithm>
#include <cmath>
#include <cstddef>

#include "kreinalg/eigen.hpp"
#include "kreinalg/matrix.hpp"

namespace krein {

enum class VectorClass { Positive, Negative, Neutral, ZeroVector };

inline const char* to_string(VectorClass c) {
    switch (c) {
        case VectorClass::Positive: return "Positive";
        case VectorClass::Negative: return "Negative";
        case VectorClass::Neutral: return "Neutral";
        case VectorClass::ZeroVector: return "ZeroVector";
    }
    return "?";
}

struct GramForm {
    Matrix gram;

    explicit GramForm(Matrix b) : gram(std::move(b)) {
        if (!gram.is_square()) throw DimensionMismatch("Gram matrix must be square");
        if (hermiticity_residual(gram) > 1e-10 * std::max(gram.frobenius(), 1e-300))
            throw NotHermitian("Gram matrix hermiticity residual exceeds 1e-10");
    }

    std::size_t dim() const { return gram.rows(); }
};

inline cplx form_eval(const GramForm& q, const Matrix& u, const Matrix& v) {
    if (u.rows() != q.dim() || v.rows() != q.dim() || u.cols() != 1 || v.cols() != 1)
        throw DimensionMismatch("form_eval expects column vectors matching the form dimension");
    return dot(q.gram * u, v);
}

inline VectorClass classify(const GramForm& q, const Matrix& x, double tol = 1e-9) {
    const double xn = norm(x);
    if (xn <= tol) return VectorClass::ZeroVector;
    const cplx self = form_eval(q, x, x);
    const double band = tol * std::max(q.gram.frobenius(), 1e-300) * xn * xn;
    // [x,x] is real for a hermitian form; a visible imaginary part means the
    // Gram matrix slipped past the constructor check.
    if (std::abs(self.imag()) > std::max(band, 1e-14 * std::abs(self)))
        throw NotHermitian("[x,x] has a nonvanishing imaginary part");
    if (std::abs(self.real()) <= band) return VectorClass::Neutral;
    return self.real() > 0.0 ? VectorClass::Positive : VectorClass::Negative;
}

// z = xpos + t xneg with t the larger real root of
//   [xpos,xpos] + 2 t Re[xpos,xneg] + t^2 [xneg,xneg] = 0.
// Real roots exist because [xpos,xpos][xneg,xneg] < 0.
inline Matrix find_neutral(const GramForm& q, const Matrix& xpos, const Matrix& xneg) {
    if (classify(q, xpos) != VectorClass::Positive)
        throw NotIndefinitePair("xpos does not classify Positive");
    if (classify(q, xneg) != VectorClass::Negative)
        throw NotIndefinitePair("xneg does not classify Negative");
    const double c = form_eval(q, xpos, xpos).real();
    const double a = form_eval(q, xneg, xneg).real();
    const double b = 2.0 * form_eval(q, xpos, xneg).real();
    const double disc = std::sqrt(b * b - 4.0 * a * c);
    const double t = std::max((-b + disc) / (2.0 * a), (-b - disc) / (2.0 * a));
    return xpos + t * xneg;
}

inline bool q_orthogonal(const GramForm& q, const Matrix& u, const Matrix& v,
                         double tol = 1e-10) {
    const double scale = std::max(q.gram.frobenius(), 1e-300) * norm(u) * norm(v);
    return std::abs(form_eval(q, u, v)) <= tol * scale;
}

// Isotropic vectors of the whole space are exactly ker B.
inline Matrix isotropic_subspace(const GramForm& q, double tol = 1e-10) {
    return null_space(q.gram, tol);
}

// [Au,Av] = [u,v] for all u,v  <=>  A^H B A = B.
inline bool is_form_isometry(const GramForm& q, const Matrix& a, double tol = 1e-10) {
    if (!a.is_square() || a.rows() != q.dim())
        throw DimensionMismatch("isometry candidate must match the form dimension");
    const Matrix r = a.adjoint() * q.gram * a - q.gram;
    return r.frobenius() <= tol * std::max(q.gram.frobenius(), 1e-300);
}

}  // namespace krein

#pragma once

#include <cmath>
#include <complex>
#include <numbers>

#include "slope52/matrix.hpp"

namespace slope52 {

/// Unit-disk coordinates of an SU(1,1) element: gamma = beta/alpha,
/// omega = arg(alpha) in [-pi, pi).
struct DiskParams {
    Complex gamma;
    double omega = 0.0;
};

/// Conjugation psi: A -> J A J^-1 with J = [[1, -i], [1, i]], mapping a real
/// det-1 matrix into SU(1,1).  Uses the explicit entry form, so the output is
/// Hermitian-paired by construction.
inline Mat2c to_su11(const Mat2d& m, double tol_det = kDetTol) {
    if (!is_unimodular(m, tol_det)) {
        throw NonUnimodular("to_su11: input determinant is not 1 within tolerance");
    }
    const double a = m(0, 0), b = m(0, 1), c = m(1, 0), d = m(1, 1);
    const Complex alpha((a + d) / 2, (b - c) / 2);
    const Complex beta((a - d) / 2, -(b + c) / 2);
    Mat2c u;
    u << alpha, beta, std::conj(beta), std::conj(alpha);
    return u;
}

inline bool is_su11(const Mat2c& u, double tol = kDetTol) {
    const double pairing = std::max(std::abs(u(1, 1) - std::conj(u(0, 0))),
                                    std::abs(u(1, 0) - std::conj(u(0, 1))));
    const double unit = std::abs(std::norm(u(0, 0)) - std::norm(u(0, 1)) - 1.0);
    return pairing <= tol && unit <= tol;
}

/// Extracts (gamma, omega).  |alpha| >= 1 always holds for genuine SU(1,1)
/// input; anything below signals corrupted data.
inline DiskParams su11_params(const Mat2c& u) {
    const Complex alpha = u(0, 0);
    const Complex beta = u(0, 1);
    if (std::abs(alpha) < 1.0 - 1e-12) {
        throw DegenerateAlpha("su11_params: |alpha| < 1, input is not an SU(1,1) matrix");
    }
    double omega = std::arg(alpha);
    if (omega == std::numbers::pi) omega = -std::numbers::pi;  // range [-pi, pi)
    return {beta / alpha, omega};
}

/// Inverse of su11_params: alpha = e^{i omega}/sqrt(1-|gamma|^2), beta = gamma alpha.
inline Mat2c su11_from_params(const DiskParams& p) {
    const double denom = std::sqrt(1.0 - std::norm(p.gamma));
    const Complex alpha = std::polar(1.0 / denom, p.omega);
    const Complex beta = p.gamma * alpha;
    Mat2c u;
    u << alpha, beta, std::conj(beta), std::conj(alpha);
    return u;
}

}  // namespace slope52

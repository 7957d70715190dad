#pragma once

#include <cmath>
#include <complex>
#include <numbers>

#include "slope52/slopes.hpp"
#include "slope52/su11.hpp"
#include "slope52/word.hpp"

namespace slope52 {

inline constexpr double kDiskMargin = 1e-14;

/// A point of the universal covering group: |gamma| < 1, omega unbounded.
/// omega is never reduced mod 2pi; the integer winding is the entire point.
struct CoverElement {
    Complex gamma{0.0, 0.0};
    double omega = 0.0;
};

inline CoverElement make_cover(Complex gamma, double omega) {
    if (std::abs(gamma) >= 1.0 - kDiskMargin) {
        throw DiskBoundaryOverflow("cover element: |gamma| reached the disk boundary");
    }
    return {gamma, omega};
}

/// Group law:
///   gamma'' = (gamma' + gamma e^{-2i omega'}) / (1 + gamma conj(gamma') e^{-2i omega'})
///   omega'' = omega + omega' + (1/2i) Log of the quotient of the two bracket factors.
/// Both bracket factors keep strictly positive real part while |gamma| < 1, so
/// the principal log never meets its branch cut; a non-positive real part can
/// only come from numerical blow-up and raises DiskBoundaryOverflow.
inline CoverElement cover_mul(const CoverElement& a, const CoverElement& b) {
    const Complex phase = std::polar(1.0, -2.0 * b.omega);
    const Complex num = 1.0 + a.gamma * std::conj(b.gamma) * phase;
    const Complex den = 1.0 + std::conj(a.gamma) * b.gamma * std::conj(phase);
    if (!(num.real() > 0.0) || !(den.real() > 0.0)) {
        throw DiskBoundaryOverflow("cover_mul: principal-log factor left the right half-plane");
    }
    const Complex gamma = (b.gamma + a.gamma * phase) / num;
    const double omega = a.omega + b.omega + 0.5 * (std::arg(num) - std::arg(den));
    return make_cover(gamma, omega);
}

/// (-gamma e^{2i omega}, -omega); reduces to (-gamma, 0) on the omega = 0
/// subgroup and satisfies a * inv(a) = (0, 0) exactly at the group level.
inline CoverElement cover_inv(const CoverElement& a) {
    return make_cover(-a.gamma * std::polar(1.0, 2.0 * a.omega), -a.omega);
}

/// Covering projection Phi into SU(1,1); kernel {(0, 2 m pi)}.
inline Mat2c project(const CoverElement& a) {
    return su11_from_params({a.gamma, a.omega});
}

template <>
struct GroupOps<CoverElement> {
    static CoverElement identity() { return {}; }
    static CoverElement product(const CoverElement& a, const CoverElement& b) { return cover_mul(a, b); }
    static CoverElement inverse(const CoverElement& a) { return cover_inv(a); }
};

/// Lift of rho_s to the cover.  The canonical choice (twist 0) puts the
/// meridian at (gamma_x, 0) and takes principal parameters for y.  A nonzero
/// twist composes with the central homomorphism determined by
/// x -> (0, -2 pi twist); it factors through H_1, where both generators are
/// meridians of the same class, so it shifts the omega of x AND y alike.
/// Words of total exponent sum zero (the longitude) are twist-invariant.
struct CoverAssignment {
    CoverElement lift_x;
    CoverElement lift_y;
    long long twist = 0;
};

inline CoverAssignment lift_rep(double s, long long twist = 0) {
    const auto rep = build_rep(s);
    const DiskParams px = su11_params(to_su11(rep.X));
    const DiskParams py = su11_params(to_su11(rep.Y));
    const double shift = -2.0 * std::numbers::pi * static_cast<double>(twist);
    return {make_cover(px.gamma, px.omega + shift), make_cover(py.gamma, py.omega + shift), twist};
}

inline Assignment<CoverElement> cover_assignment(const CoverAssignment& lift) {
    return {lift.lift_x, lift.lift_y};
}

/// The lifted longitude (gamma_lambda, ~0): its omega must vanish, and the
/// accumulated value stays inside the (-3pi/2, 3pi/2) window that pins the
/// integer winding to zero.
inline CoverElement lifted_longitude(double s, long long twist = 0) {
    return word_evaluate(words::longitude(), cover_assignment(lift_rep(s, twist)));
}

/// Cover evaluation of x^p lambda^q under the canonical lift.
///
/// The lifted meridian and longitude commute (both lie in the one-parameter
/// peripheral family over the diagonal subgroup), so the factors are
/// interleaved greedily to keep the running translation length near zero;
/// consuming all p meridian factors first would push the partial product onto
/// the disk boundary for p beyond ~10.
inline CoverElement lifted_filling(double s, const Slope& slope) {
    const CoverAssignment lift = lift_rep(s);
    const CoverElement lam = lifted_longitude(s);
    const CoverElement mer = slope.p >= 0 ? lift.lift_x : cover_inv(lift.lift_x);
    const double step_a = (slope.p >= 0 ? 1.0 : -1.0) * std::log(meridian_eigenvalue(s));
    const double step_b = std::log(longitude_eigenvalue(s));

    CoverElement acc;
    double c = 0.0;
    long long used_p = 0, used_q = 0;
    const long long total_p = std::llabs(slope.p);
    while (used_p < total_p || used_q < slope.q) {
        const bool take_meridian =
            used_q >= slope.q ||
            (used_p < total_p && std::abs(c + step_a) <= std::abs(c + step_b));
        if (take_meridian) {
            acc = cover_mul(acc, mer);
            c += step_a;
            ++used_p;
        } else {
            acc = cover_mul(acc, lam);
            c += step_b;
            ++used_q;
        }
    }
    return acc;
}

}  // namespace slope52

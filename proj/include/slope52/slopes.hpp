#pragma once

#include <cmath>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "slope52/rep.hpp"

namespace slope52 {

/// A surgery slope p/q in lowest terms, q >= 1.
struct Slope {
    long long p = 0;
    long long q = 1;

    double value() const { return static_cast<double>(p) / static_cast<double>(q); }

    static Slope reduced(long long p, long long q) {
        if (q == 0) throw std::invalid_argument("slope: q must be nonzero");
        if (q < 0) {
            p = -p;
            q = -q;
        }
        const long long g = std::gcd(std::llabs(p), q);
        return {p / g, q / g};
    }
};

/// A_s = sqrt(t): the (1,1)-entry of rho_s(x).
inline double meridian_eigenvalue(double s) { return std::sqrt(param_t(s)); }

/// B_s: the (1,1)-entry of rho_s(lambda), in closed form.
///
/// Evaluated through the grouped factors
///   E1 = (s - (1+s)^2 t + s t^2)/t        = s*delta - (2+delta)/t
///   E2 = (s - (2+2s+s^2) t + (1+s) t^2)/t^2 = 1 - (1-E1)/t
///   1 - (2+s) t + t^2                      = t*delta + 1
/// with delta = t-s-2 from its stable form; the expanded polynomials cancel
/// catastrophically in binary64 for s beyond ~1e3.
inline double longitude_eigenvalue(double s) {
    detail::require_positive(s, "longitude_eigenvalue");
    const double t = param_t(s);
    const double delta = t_minus_s_minus_2(s);
    const double e1 = s * delta - (2.0 + delta) / t;
    const double e2 = 1.0 - (1.0 - e1) / t;
    const double tm1 = t - 1.0;
    const double first = (s / t) * (t * delta + 1.0) * e2 * e2 / (tm1 * tm1);
    const double second_root = (1.0 + delta) * e1 / tm1;
    return first + second_root * second_root;
}

/// N t^-5, where N is the numerator of the closed form of B_s.
inline double longitude_numerator_scaled(double s) {
    detail::require_positive(s, "longitude_numerator_scaled");
    const double t = param_t(s);
    const double delta = t_minus_s_minus_2(s);
    const double e1 = s * delta - (2.0 + delta) / t;
    const double e2 = 1.0 - (1.0 - e1) / t;
    return (s / t) * (t * delta + 1.0) * e2 * e2 + (1.0 + delta) * (1.0 + delta) * e1 * e1;
}

/// g(s) = -log B_s / log A_s; the slope filled by rho_s.
inline double holonomy_slope(double s) {
    return -std::log(longitude_eigenvalue(s)) / std::log(meridian_eigenvalue(s));
}

/// |A_s^p B_s^q - 1|, computed in log space to avoid overflow.
inline double filling_residual(double s, const Slope& slope) {
    detail::require_positive(s, "filling_residual");
    const double log_a = std::log(meridian_eigenvalue(s));
    const double log_b = std::log(longitude_eigenvalue(s));
    return std::abs(std::expm1(static_cast<double>(slope.p) * log_a +
                               static_cast<double>(slope.q) * log_b));
}

struct BracketSpec {
    double s_min = 1e-8;
    double s_max = 1e8;
    int scan_points = 512;
};

/// Record of a solved slope.  The lift residual is filled by the cover layer.
struct SlopeCertificate {
    Slope slope;
    double s_star = 0.0;
    double g_residual = 0.0;
    double filling_residual = 0.0;
    double relation_residual = 0.0;
    std::optional<double> lift_omega_residual;
    std::pair<double, double> bracket{0.0, 0.0};
    std::vector<std::pair<double, double>> all_brackets;
    int iterations = 0;
};

/// Solves g(s) = p/q by sign-change scan plus bisection.  Slopes outside
/// (0, 4) are rejected; if several brackets appear, the smallest-s root is
/// certified and all brackets are recorded.
SlopeCertificate solve_slope(const Slope& slope, double tol = 1e-12,
                             const BracketSpec& search = {});

inline constexpr double kLimitTolDefault = 1e-3;
inline constexpr double kLimitTolSlow = 1e-2;  // N t^-5 converges like 1/s

struct LimitReport {
    std::string name;
    std::vector<double> grid;
    std::vector<double> values;
    double target = 0.0;
    double tolerance = 1e-3;
    bool strict_bound_ok = true;  // side conditions such as t-s > 2 everywhere
    bool converged = false;
};

struct GridSpec {
    int points_per_direction = 24;  // minimum 16
    double s_small_floor = 1e-6;
    double s_large_ceil = 1e6;
};

/// Runs every limit report: the small-s tail (t -> inf via 1/t, st -> 2,
/// B -> 1, g -> 0) and the large-s tail (t-s -> 2 with t-s > 2, s/t -> 1,
/// s(t-s-2) -> 0, t(t-s-2) -> 0, N t^-5 -> 1, g -> 4).
std::vector<LimitReport> limit_suite(const GridSpec& spec = {});

/// Geometric grid helper shared by scans, reports and the CSV export.
std::vector<double> log_grid(double lo, double hi, int points);

}  // namespace slope52

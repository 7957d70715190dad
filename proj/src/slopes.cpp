#include "slope52/slopes.hpp"

#include <algorithm>
#include <cmath>

namespace slope52 {

std::vector<double> log_grid(double lo, double hi, int points) {
    std::vector<double> grid;
    grid.reserve(static_cast<std::size_t>(points));
    const double ratio = hi / lo;
    for (int i = 0; i < points; ++i) {
        grid.push_back(i == points - 1 ? hi
                                       : lo * std::pow(ratio, static_cast<double>(i) /
                                                                  static_cast<double>(points - 1)));
    }
    return grid;
}

SlopeCertificate solve_slope(const Slope& slope, double tol, const BracketSpec& search) {
    const double r = slope.value();
    if (!(r > 0.0) || !(r < 4.0)) {
        throw SlopeOutOfRange("solve_slope: slope " + std::to_string(slope.p) + "/" +
                              std::to_string(slope.q) + " outside the supported interval (0, 4)");
    }
    if (!(tol > 0.0)) throw std::invalid_argument("solve_slope: tol must be positive");

    const std::vector<double> grid = log_grid(search.s_min, search.s_max, search.scan_points);
    std::vector<std::pair<double, double>> brackets;
    double prev_s = grid.front();
    double prev_f = holonomy_slope(prev_s) - r;
    for (std::size_t i = 1; i < grid.size(); ++i) {
        const double cur_s = grid[i];
        const double cur_f = holonomy_slope(cur_s) - r;
        if (prev_f == 0.0 || prev_f * cur_f < 0.0) brackets.emplace_back(prev_s, cur_s);
        prev_s = cur_s;
        prev_f = cur_f;
    }
    if (prev_f == 0.0) brackets.emplace_back(prev_s, prev_s);
    if (brackets.empty()) {
        throw BracketNotFound("solve_slope: no sign change of g(s) - p/q on the scan grid");
    }

    // Certify the smallest-s bracket; bisect in log space until the bracket
    // collapses to adjacent doubles, then keep the endpoint with the smaller
    // residual.
    auto [lo, hi] = brackets.front();
    double f_lo = holonomy_slope(lo) - r;
    int iterations = 0;
    while (iterations < 200) {
        const double mid = std::sqrt(lo * hi);
        if (mid <= lo || mid >= hi) break;
        const double f_mid = holonomy_slope(mid) - r;
        ++iterations;
        if (f_mid == 0.0) {
            lo = hi = mid;
            f_lo = f_mid;
            break;
        }
        if (f_lo * f_mid < 0.0) {
            hi = mid;
        } else {
            lo = mid;
            f_lo = f_mid;
        }
    }

    const double res_lo = std::abs(holonomy_slope(lo) - r);
    const double res_hi = std::abs(holonomy_slope(hi) - r);
    const double s_star = res_lo <= res_hi ? lo : hi;

    SlopeCertificate cert;
    cert.slope = slope;
    cert.s_star = s_star;
    cert.g_residual = std::min(res_lo, res_hi);
    cert.filling_residual = filling_residual(s_star, slope);
    cert.relation_residual = relation_residual(s_star);
    cert.bracket = brackets.front();
    cert.all_brackets = std::move(brackets);
    cert.iterations = iterations;
    return cert;
}

namespace {

bool monotone_tail(const std::vector<double>& values, double target) {
    const std::size_t n = values.size();
    if (n < 4) return false;
    const double anchor = std::abs(values[n - 4] - target);
    return std::abs(values[n - 1] - target) < anchor &&
           std::abs(values[n - 2] - target) < anchor &&
           std::abs(values[n - 3] - target) < anchor;
}

template <class F>
LimitReport make_report(std::string name, const std::vector<double>& grid, F&& f, double target,
                        double tolerance) {
    LimitReport report;
    report.name = std::move(name);
    report.grid = grid;
    report.values.reserve(grid.size());
    for (double s : grid) report.values.push_back(f(s));
    report.target = target;
    report.tolerance = tolerance;
    report.converged = monotone_tail(report.values, target) &&
                       std::abs(report.values.back() - target) <= tolerance;
    return report;
}

}  // namespace

std::vector<LimitReport> limit_suite(const GridSpec& spec) {
    if (spec.points_per_direction < 16) {
        throw GridTooSmall("limit_suite: need at least 16 grid points per direction");
    }

    // Descending toward s -> 0+ and ascending toward s -> infinity.
    std::vector<double> down = log_grid(spec.s_small_floor, 1.0, spec.points_per_direction);
    std::reverse(down.begin(), down.end());
    const std::vector<double> up = log_grid(1.0, spec.s_large_ceil, spec.points_per_direction);

    std::vector<LimitReport> reports;
    reports.push_back(make_report("t -> infinity as s -> 0+ (measured as 1/t -> 0)", down,
                                  [](double s) { return 1.0 / param_t(s); }, 0.0,
                                  kLimitTolDefault));
    reports.push_back(make_report("s t -> 2 as s -> 0+", down,
                                  [](double s) { return s * param_t(s); }, 2.0, kLimitTolDefault));
    reports.push_back(make_report("B -> 1 as s -> 0+", down,
                                  [](double s) { return longitude_eigenvalue(s); }, 1.0,
                                  kLimitTolDefault));
    reports.push_back(make_report("g -> 0 as s -> 0+", down,
                                  [](double s) { return holonomy_slope(s); }, 0.0,
                                  kLimitTolDefault));

    LimitReport ts = make_report("t - s -> 2 as s -> infinity (with t - s > 2 throughout)", up,
                                 [](double s) { return t_minus_s_minus_2(s) + 2.0; }, 2.0,
                                 kLimitTolDefault);
    for (double v : ts.values) {
        if (!(v > 2.0)) ts.strict_bound_ok = false;
    }
    ts.converged = ts.converged && ts.strict_bound_ok;
    reports.push_back(std::move(ts));

    reports.push_back(make_report("s / t -> 1 as s -> infinity", up,
                                  [](double s) { return s / param_t(s); }, 1.0, kLimitTolDefault));
    reports.push_back(make_report("s (t - s - 2) -> 0 as s -> infinity", up,
                                  [](double s) { return s * t_minus_s_minus_2(s); }, 0.0,
                                  kLimitTolDefault));
    reports.push_back(make_report("t (t - s - 2) -> 0 as s -> infinity", up,
                                  [](double s) { return param_t(s) * t_minus_s_minus_2(s); }, 0.0,
                                  kLimitTolDefault));
    reports.push_back(make_report("N t^-5 -> 1 as s -> infinity", up,
                                  [](double s) { return longitude_numerator_scaled(s); }, 1.0,
                                  kLimitTolSlow));
    reports.push_back(make_report("g -> 4 as s -> infinity", up,
                                  [](double s) { return holonomy_slope(s); }, 4.0,
                                  kLimitTolDefault));
    return reports;
}

}  // namespace slope52

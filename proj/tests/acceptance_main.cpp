// Acceptance suite: every check the library certifies, at its shipped
// tolerance, one pass/fail line per criterion.  Exit code is the number of
// failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "slope52/certificate.hpp"
#include "slope52/cover.hpp"

using namespace slope52;

namespace {

constexpr double kPi = std::numbers::pi;

struct Criterion {
    int number;
    std::string label;
    bool ok;
    double runtime_ms;
    double budget_ms;
    std::string detail;
};

std::vector<Criterion> results;

template <class F>
void run_criterion(int number, const std::string& label, double budget_ms, F&& body) {
    std::string detail;
    bool ok = false;
    const auto start = std::chrono::steady_clock::now();
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    ok = ok && ms < budget_ms;
    results.push_back({number, label, ok, ms, budget_ms, detail});
}

const std::vector<Slope> kSlopes = {Slope::reduced(1, 2), Slope::reduced(1, 1),
                                    Slope::reduced(3, 2), Slope::reduced(2, 1),
                                    Slope::reduced(5, 2), Slope::reduced(3, 1),
                                    Slope::reduced(7, 2), Slope::reduced(19, 5)};

std::string fmt(const char* pattern, double a, double b = 0.0) {
    char buf[160];
    std::snprintf(buf, sizeof(buf), pattern, a, b);
    return buf;
}

}  // namespace

int main() {
    const std::vector<double> grid = log_grid(1e-6, 1e6, 64);

    run_criterion(1, "defining polynomial |phi(s, T(s))| <= 1e-9 max(1, s^3) on the 64-point grid",
                  100.0, [&](std::string& detail) {
                      double worst = 0.0;
                      for (double s : grid) {
                          const double bound = 1e-9 * std::max(1.0, s * s * s);
                          worst = std::max(worst, std::abs(riley_phi(s, param_T(s))) / bound);
                      }
                      detail = fmt("max residual/bound %.3e", worst);
                      return worst <= 1.0;
                  });

    run_criterion(2, "relation residual <= 1e-8 on the grid; t+0.01 control >= 1e-3 at s=1",
                  100.0, [&](std::string& detail) {
                      double worst = 0.0;
                      for (double s : grid) worst = std::max(worst, relation_residual(s));
                      const double control = relation_residual_for_t(1.0, param_t(1.0) + 0.01);
                      detail = fmt("max residual %.3e, control %.3e", worst, control);
                      return worst <= 1e-8 && control >= 1e-3;
                  });

    run_criterion(3, "longitude: off-diag <= 1e-7 rel, entry matches closed form to 1e-7 rel, B > 0",
                  100.0, [&](std::string& detail) {
                      double worst_off = 0.0, worst_match = 0.0;
                      bool positive = true;
                      for (double s : grid) {
                          const Mat2d lam = longitude_matrix(s);
                          const double b = longitude_eigenvalue(s);
                          positive = positive && b > 0.0 && lam(0, 0) > 0.0;
                          worst_off = std::max(worst_off,
                                               std::max(std::abs(lam(0, 1)), std::abs(lam(1, 0))) /
                                                   max_abs(lam));
                          worst_match = std::max(worst_match, std::abs(lam(0, 0) - b) / b);
                      }
                      detail = fmt("max off-diag %.3e, max entry mismatch %.3e", worst_off,
                                   worst_match);
                      return worst_off <= 1e-7 && worst_match <= 1e-7 && positive;
                  });

    run_criterion(4, "all limit reports converge with monotone tails; g endpoints within 0.05",
                  1000.0, [&](std::string& detail) {
                      const auto reports = limit_suite();
                      bool all = true;
                      for (const auto& r : reports) all = all && r.converged;
                      const double g_low = holonomy_slope(1e-5);
                      const double g_high = holonomy_slope(1e5);
                      char buf[160];
                      std::snprintf(buf, sizeof(buf), "%zu reports, g(1e-5)=%.3e, |g(1e5)-4|=%.3e",
                                    reports.size(), g_low, std::abs(g_high - 4.0));
                      detail = buf;
                      return all && reports.size() >= 9 && g_low < 0.05 &&
                             std::abs(g_high - 4.0) < 0.05;
                  });

    run_criterion(5, "eight slopes solve with |g(s*)-p/q| <= 1e-12 and |A^p B^q - 1| <= 1e-8",
                  1000.0, [&](std::string& detail) {
                      double worst_g = 0.0, worst_fill = 0.0;
                      for (const Slope& slope : kSlopes) {
                          const SlopeCertificate cert = solve_slope(slope, 1e-12);
                          worst_g = std::max(worst_g, cert.g_residual);
                          worst_fill = std::max(worst_fill, cert.filling_residual);
                      }
                      detail = fmt("max g residual %.3e, max filling residual %.3e", worst_g,
                                   worst_fill);
                      return worst_g <= 1e-12 && worst_fill <= 1e-8;
                  });

    run_criterion(6, "cover group law: identity/inverse/associativity/kernel/projection at 1e-9, "
                     "real subgroup at 1e-12",
                  1000.0, [&](std::string& detail) {
                      std::mt19937_64 rng(101);
                      std::uniform_real_distribution<double> radius(0.0, 0.9);
                      std::uniform_real_distribution<double> angle(-kPi, kPi);
                      std::uniform_real_distribution<double> omega(-4.0 * kPi, 4.0 * kPi);
                      const auto rand_elem = [&] {
                          return make_cover(std::polar(radius(rng), angle(rng)), omega(rng));
                      };
                      double worst = 0.0, worst_sub = 0.0;
                      const CoverElement id{};
                      const CoverElement k2pi = make_cover({0.0, 0.0}, 2.0 * kPi);
                      for (int i = 0; i < 120; ++i) {
                          const CoverElement a = rand_elem(), b = rand_elem(), c = rand_elem();
                          const CoverElement ab_c = cover_mul(cover_mul(a, b), c);
                          const CoverElement a_bc = cover_mul(a, cover_mul(b, c));
                          worst = std::max({worst, std::abs(ab_c.gamma - a_bc.gamma),
                                            std::abs(ab_c.omega - a_bc.omega)});
                          const CoverElement unit = cover_mul(a, cover_inv(a));
                          worst = std::max({worst, std::abs(unit.gamma), std::abs(unit.omega)});
                          const CoverElement ida = cover_mul(id, a);
                          worst = std::max({worst, std::abs(ida.gamma - a.gamma),
                                            std::abs(ida.omega - a.omega)});
                          const CoverElement lk = cover_mul(k2pi, a);
                          const CoverElement rk = cover_mul(a, k2pi);
                          worst = std::max({worst, std::abs(lk.gamma - rk.gamma),
                                            std::abs(lk.omega - rk.omega),
                                            std::abs(lk.omega - a.omega - 2.0 * kPi)});
                          worst = std::max(worst, max_abs_diff<Complex>(
                                                      project(cover_mul(a, b)),
                                                      Mat2c(project(a) * project(b))));
                          // closure of the real-axis subgroup (-1,1) x {0}
                          const CoverElement ra = make_cover({2.0 * radius(rng) - 0.9, 0.0}, 0.0);
                          const CoverElement rb = make_cover({2.0 * radius(rng) - 0.9, 0.0}, 0.0);
                          const CoverElement rp = cover_mul(ra, rb);
                          worst_sub = std::max({worst_sub, std::abs(rp.gamma.imag()),
                                                std::abs(rp.omega),
                                                std::abs(cover_inv(ra).omega)});
                      }
                      detail = fmt("max law deviation %.3e, max subgroup leak %.3e", worst,
                                   worst_sub);
                      return worst <= 1e-9 && worst_sub <= 1e-12;
                  });

    run_criterion(7, "lift certificates: longitude omega <= 1e-8 in the window, filling <= 1e-7, "
                     "twist-invariant, negative control departs",
                  1000.0, [&](std::string& detail) {
                      double worst_omega = 0.0, worst_fill = 0.0, worst_twist = 0.0;
                      bool windows = true;
                      for (const Slope& slope : kSlopes) {
                          const SlopeCertificate cert = solve_slope(slope, 1e-12);
                          const CoverElement lam = lifted_longitude(cert.s_star);
                          worst_omega = std::max(worst_omega, std::abs(lam.omega));
                          windows = windows && std::abs(lam.omega) < 1.5 * kPi;
                          const CoverElement filled = lifted_filling(cert.s_star, slope);
                          worst_fill = std::max({worst_fill, std::abs(filled.gamma),
                                                 std::abs(filled.omega)});
                          for (long long twist : {-2LL, 0LL, 3LL}) {
                              const CoverElement tw = lifted_longitude(cert.s_star, twist);
                              worst_twist = std::max({worst_twist, std::abs(tw.gamma - lam.gamma),
                                                      std::abs(tw.omega - lam.omega)});
                          }
                      }
                      const CoverElement control = lifted_filling(1.0, Slope::reduced(1, 1));
                      const double departure =
                          std::max(std::abs(control.gamma), std::abs(control.omega));
                      detail = fmt("max omega %.3e, max filling %.3e, ", worst_omega, worst_fill) +
                               fmt("max twist drift %.3e, control %.3e", worst_twist, departure);
                      return worst_omega <= 1e-8 && windows && worst_fill <= 1e-7 &&
                             worst_twist <= 1e-9 && departure > 1e-2;
                  });

    run_criterion(8, "closed-form and word-product longitude entries agree to 1e-7 rel on the "
                     "grid including s = 1e-6 and 1e6",
                  1000.0, [&](std::string& detail) {
                      double worst = 0.0;
                      for (double s : grid) {
                          const double closed = longitude_eigenvalue(s);
                          const double word = longitude_matrix(s)(0, 0);
                          worst = std::max(worst, std::abs(word - closed) / closed);
                      }
                      const double low = std::abs(longitude_matrix(1e-6)(0, 0) -
                                                  longitude_eigenvalue(1e-6)) /
                                         longitude_eigenvalue(1e-6);
                      const double high = std::abs(longitude_matrix(1e6)(0, 0) -
                                                   longitude_eigenvalue(1e6)) /
                                          longitude_eigenvalue(1e6);
                      detail = fmt("max rel disagreement %.3e (ends %.3e, ", worst, low) +
                               fmt("%.3e)", high);
                      return worst <= 1e-7;
                  });

    int failures = 0;
    for (const Criterion& c : results) {
        if (!c.ok) ++failures;
        std::printf("[%s] criterion %d: %s  -- %s; %.1f ms (budget %.0f ms)\n",
                    c.ok ? "PASS" : "FAIL", c.number, c.label.c_str(), c.detail.c_str(),
                    c.runtime_ms, c.budget_ms);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(results.size()) - failures,
                results.size());
    return failures;
}

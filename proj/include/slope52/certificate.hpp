#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "slope52/slopes.hpp"

namespace slope52 {

using Json = nlohmann::ordered_json;

/// Acceptance thresholds used by the commands; every value has a flag on the
/// CLI side or is documented in --help.
struct Tolerances {
    double det = kDetTol;
    double phi_scale = 1e-9;          // |phi| <= phi_scale * max(1, s^3)
    double relation = 1e-8;
    double longitude_offdiag = 1e-8;  // relative to the max entry
    double longitude_match = 1e-7;    // closed form vs word product, relative
    double nonabelian_floor = 1e-6;
    double solve = 1e-12;             // |g(s*) - p/q|
    double filling = 1e-8;            // |A^p B^q - 1|
    double lift_omega = 1e-8;
    double lift_filling = 1e-7;
};

struct CertificateDocument {
    std::string command;
    Json inputs;
    Json tolerances;
    Json results;
    bool pass = false;

    Json to_json() const;
    static CertificateDocument from_json(const Json& j);
    std::string to_text() const;
};

/// All section-2 checks at one parameter value.  A tol override replaces the
/// residual thresholds (phi scale, relation, longitude) wholesale.
CertificateDocument cmd_verify(double s, std::optional<double> tol = std::nullopt);

/// Solves g(s) = p/q and certifies the root, including the lifted filling.
CertificateDocument cmd_solve(const Slope& slope, double tol = 1e-12);

/// Runs every limit report.
CertificateDocument cmd_limits(int grid_points = 24);

/// Solve + full cover-lift certificate; twist exercises the central
/// re-lifting of the longitude check.
CertificateDocument cmd_lift(const Slope& slope, double tol = 1e-12, long long twist = 0);

/// CSV of (s, t, A, B, g) on a log grid, 17 significant digits.
std::string gcurve_csv(double s_min, double s_max, int points);

/// Accepts "p/q" or a bare integer "p" (meaning p/1); rejects q = 0.
Slope parse_slope(const std::string& text);

}  // namespace slope52

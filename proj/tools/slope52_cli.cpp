#include <cstdio>
#include <exception>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "slope52/certificate.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

int emit(const slope52::CertificateDocument& doc, const std::string& format) {
    if (format == "json") {
        std::cout << doc.to_json().dump(2) << "\n";
    } else {
        std::cout << doc.to_text();
    }
    return doc.pass ? kExitPass : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"slope52: certified SL(2,R) surgery representations of the 5_2 knot group.\n"
                 "Builds the one-parameter representation family, solves the slope equation\n"
                 "g(s) = p/q on (0,4), lifts to the universal covering group, and emits\n"
                 "machine-readable residual certificates."};
    app.require_subcommand(1);

    std::string format = "text";
    const auto add_format = [&](CLI::App* cmd, bool csv_ok) {
        cmd->add_option("--format", format,
                        csv_ok ? "Output format: text|csv (identical CSV stream)"
                               : "Output format: text|json")
            ->default_val("text");
    };

    // verify
    double s = 1.0;
    std::optional<double> verify_tol;
    CLI::App* verify = app.add_subcommand(
        "verify", "Check the representation at one parameter value: defining polynomial,\n"
                  "relation wx = yw, longitude diagonality, closed-form match, non-abelian image.\n"
                  "Default thresholds: phi 1e-9*max(1,s^3), relation 1e-8, longitude off-diag\n"
                  "1e-8 (relative), closed-form match 1e-7 (relative), non-abelian floor 1e-6.");
    verify->add_option("--s", s, "Parameter s > 0")->required();
    double verify_tol_raw = 0.0;
    CLI::Option* vtol = verify->add_option("--tol", verify_tol_raw,
                                           "Override the residual thresholds wholesale");
    add_format(verify, false);

    // solve
    std::string slope_text;
    double solve_tol = 1e-12;
    CLI::App* solve = app.add_subcommand(
        "solve", "Solve g(s) = p/q for a rational slope in (0,4) by bracketed bisection\n"
                 "(512-point log scan on s in [1e-8, 1e8]) and certify the root.\n"
                 "Default --tol 1e-12 on |g(s*) - p/q|.");
    solve->add_option("--slope", slope_text, "Slope p/q or integer p")->required();
    solve->add_option("--tol", solve_tol, "Root residual tolerance (default 1e-12)");
    add_format(solve, false);

    // g-curve
    double gmin = 1e-4, gmax = 1e4;
    int gpoints = 101;
    CLI::App* gcurve = app.add_subcommand(
        "g-curve", "Export s,t,A,B,g on a log grid as CSV (17 significant digits).");
    gcurve->add_option("--min", gmin, "Smallest s (> 0)")->required();
    gcurve->add_option("--max", gmax, "Largest s (> min)")->required();
    gcurve->add_option("--points", gpoints, "Number of rows (>= 2)")->required();
    add_format(gcurve, true);

    // limits
    int grid_points = 24;
    CLI::App* limits = app.add_subcommand(
        "limits", "Run every limit report on descending/ascending log grids and check the\n"
                  "monotone-tail criterion (tolerance 1e-3, 1e-2 for N t^-5).");
    limits->add_option("--grid-points", grid_points, "Points per direction (>= 16, default 24)");
    add_format(limits, false);

    // lift
    std::string lift_slope_text;
    double lift_tol = 1e-12;
    long long twist = 0;
    CLI::App* lift = app.add_subcommand(
        "lift", "Solve the slope, lift the representation to the universal cover, and check\n"
                "the lifted longitude (omega = 0, inside the (-3pi/2, 3pi/2) window) and the\n"
                "lifted filling x^p lambda^q = (0,0). --twist re-lifts the longitude through\n"
                "the central twist determined by its value on a meridian; exponent-sum-zero\n"
                "words are invariant. The filling check always uses the canonical lift.");
    lift->add_option("--slope", lift_slope_text, "Slope p/q or integer p")->required();
    lift->add_option("--tol", lift_tol, "Root residual tolerance (default 1e-12)");
    lift->add_option("--twist", twist, "Longitude lift twist (default 0)");
    add_format(lift, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        const bool is_gcurve = gcurve->parsed();
        if (format != "text" && format != "json" && format != "csv") {
            throw std::invalid_argument("unknown --format '" + format + "'");
        }
        if (format == "csv" && !is_gcurve) {
            throw std::invalid_argument("--format csv is only valid for g-curve");
        }
        if (format == "json" && is_gcurve) {
            throw std::invalid_argument("g-curve emits CSV; use --format text or csv");
        }

        if (verify->parsed()) {
            if (vtol->count() > 0) verify_tol = verify_tol_raw;
            return emit(slope52::cmd_verify(s, verify_tol), format);
        }
        if (solve->parsed()) {
            return emit(slope52::cmd_solve(slope52::parse_slope(slope_text), solve_tol), format);
        }
        if (gcurve->parsed()) {
            std::cout << slope52::gcurve_csv(gmin, gmax, gpoints);
            return kExitPass;
        }
        if (limits->parsed()) {
            return emit(slope52::cmd_limits(grid_points), format);
        }
        if (lift->parsed()) {
            return emit(slope52::cmd_lift(slope52::parse_slope(lift_slope_text), lift_tol, twist),
                        format);
        }
        return kExitUsage;
    } catch (const slope52::SlopeOutOfRange& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const slope52::NonPositiveParameter& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const slope52::GridTooSmall& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailed;
    }
}

#include "slope52/certificate.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "slope52/cover.hpp"

namespace slope52 {

namespace {

constexpr const char* kSchemaVersion = "1";

std::string full_precision(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string check_line(const std::string& label, double value, const std::string& rel,
                       double threshold, bool ok) {
    char buf[160];
    std::snprintf(buf, sizeof(buf), "  %-28s %-12.3e %s %-9.0e %s", label.c_str(), value,
                  rel.c_str(), threshold, ok ? "pass" : "FAIL");
    return buf;
}

Json tolerances_json(const Tolerances& tol) {
    return Json{{"det", tol.det},
                {"phi_scale", tol.phi_scale},
                {"relation", tol.relation},
                {"longitude_offdiag", tol.longitude_offdiag},
                {"longitude_match", tol.longitude_match},
                {"nonabelian_floor", tol.nonabelian_floor},
                {"solve", tol.solve},
                {"filling", tol.filling},
                {"lift_omega", tol.lift_omega},
                {"lift_filling", tol.lift_filling}};
}

Json certificate_json(const SlopeCertificate& cert) {
    Json j{{"slope", {{"p", cert.slope.p}, {"q", cert.slope.q}, {"value", cert.slope.value()}}},
           {"s_star", cert.s_star},
           {"g_residual", cert.g_residual},
           {"filling_residual", cert.filling_residual},
           {"relation_residual", cert.relation_residual},
           {"lift_omega_residual", nullptr},
           {"bracket", {cert.bracket.first, cert.bracket.second}},
           {"all_brackets", Json::array()},
           {"iterations", cert.iterations}};
    if (cert.lift_omega_residual) j["lift_omega_residual"] = *cert.lift_omega_residual;
    for (const auto& [lo, hi] : cert.all_brackets) j["all_brackets"].push_back({lo, hi});
    return j;
}

/// Solve and complete the certificate with the cover-lift residuals.
SlopeCertificate certify_slope(const Slope& slope, double tol, CoverElement* filling_out) {
    SlopeCertificate cert = solve_slope(slope, tol);
    const CoverElement lam = lifted_longitude(cert.s_star);
    cert.lift_omega_residual = std::abs(lam.omega);
    const CoverElement filled = lifted_filling(cert.s_star, slope);
    if (filling_out) *filling_out = filled;
    return cert;
}

}  // namespace

Json CertificateDocument::to_json() const {
    return Json{{"schema_version", kSchemaVersion}, {"command", command}, {"inputs", inputs},
                {"tolerances", tolerances},         {"results", results}, {"status", pass ? "pass" : "fail"}};
}

CertificateDocument CertificateDocument::from_json(const Json& j) {
    CertificateDocument doc;
    doc.command = j.at("command").get<std::string>();
    doc.inputs = j.at("inputs");
    doc.tolerances = j.at("tolerances");
    doc.results = j.at("results");
    doc.pass = j.at("status").get<std::string>() == "pass";
    return doc;
}

std::string CertificateDocument::to_text() const {
    std::ostringstream out;
    out << command << "\n";
    if (results.contains("lines")) {
        for (const auto& line : results.at("lines")) out << line.get<std::string>() << "\n";
    }
    out << "status: " << (pass ? "pass" : "fail") << "\n";
    return out.str();
}

CertificateDocument cmd_verify(double s, std::optional<double> tol) {
    if (!(s > 0.0)) throw NonPositiveParameter("verify: s must be positive");
    Tolerances tols;
    if (tol) {
        tols.phi_scale = *tol;
        tols.relation = *tol;
        tols.longitude_offdiag = *tol;
        tols.longitude_match = *tol;
    }

    const double T = param_T(s);
    const double t = param_t(s);
    const double phi = riley_phi(s, T);
    const double phi_bound = tols.phi_scale * std::max(1.0, s * s * s);
    const double relation = relation_residual(s);
    const Mat2d lam = longitude_matrix(s);
    const double lam_scale = max_abs(lam);
    const double offdiag = std::max(std::abs(lam(0, 1)), std::abs(lam(1, 0))) / lam_scale;
    const double b_closed = longitude_eigenvalue(s);
    const double b_match = std::abs(lam(0, 0) - b_closed) / std::abs(b_closed);
    const double nonabelian = nonabelian_residual(s);
    const double delta = t_minus_s_minus_2(s);

    const bool phi_ok = std::abs(phi) <= phi_bound;
    const bool relation_ok = relation <= tols.relation;
    const bool offdiag_ok = offdiag <= tols.longitude_offdiag;
    const bool match_ok = b_match <= tols.longitude_match;
    const bool nonabelian_ok = nonabelian > tols.nonabelian_floor;
    const bool bounds_ok = t > 3.0 && T > 4.0 && delta > 0.0 && b_closed > 0.0;

    CertificateDocument doc;
    doc.command = "verify";
    doc.inputs = Json{{"s", s}, {"tol", tol ? Json(*tol) : Json(nullptr)}};
    doc.tolerances = tolerances_json(tols);
    doc.results = Json{{"T", T},
                       {"t", t},
                       {"phi_residual", std::abs(phi)},
                       {"phi_bound", phi_bound},
                       {"relation_residual", relation},
                       {"longitude_offdiag_rel", offdiag},
                       {"longitude_match_rel", b_match},
                       {"nonabelian_residual", nonabelian},
                       {"B", b_closed},
                       {"t_gt_3", t > 3.0},
                       {"T_gt_4", T > 4.0},
                       {"t_minus_s_gt_2", delta > 0.0},
                       {"B_positive", b_closed > 0.0}};
    doc.pass = phi_ok && relation_ok && offdiag_ok && match_ok && nonabelian_ok && bounds_ok;

    Json lines = Json::array();
    lines.push_back("  s = " + full_precision(s) + "  T = " + full_precision(T) +
                    "  t = " + full_precision(t));
    lines.push_back(check_line("phi residual", std::abs(phi), "<=", phi_bound, phi_ok));
    lines.push_back(check_line("relation residual", relation, "<=", tols.relation, relation_ok));
    lines.push_back(check_line("longitude off-diag (rel)", offdiag, "<=", tols.longitude_offdiag,
                               offdiag_ok));
    lines.push_back(check_line("longitude B match (rel)", b_match, "<=", tols.longitude_match,
                               match_ok));
    lines.push_back(check_line("non-abelian residual", nonabelian, "> ", tols.nonabelian_floor,
                               nonabelian_ok));
    lines.push_back(std::string("  t>3 T>4 t-s>2 B>0           ") +
                    (bounds_ok ? "all hold" : "VIOLATED"));
    doc.results["lines"] = lines;
    return doc;
}

CertificateDocument cmd_solve(const Slope& slope, double tol) {
    Tolerances tols;
    tols.solve = tol;
    CoverElement filled;
    const SlopeCertificate cert = certify_slope(slope, tol, &filled);

    const bool ok = cert.g_residual <= tols.solve && cert.filling_residual <= tols.filling &&
                    cert.relation_residual <= tols.relation &&
                    *cert.lift_omega_residual <= tols.lift_omega &&
                    std::abs(filled.gamma) <= tols.lift_filling &&
                    std::abs(filled.omega) <= tols.lift_filling;

    CertificateDocument doc;
    doc.command = "solve";
    doc.inputs = Json{{"slope", std::to_string(slope.p) + "/" + std::to_string(slope.q)},
                      {"tol", tol}};
    doc.tolerances = tolerances_json(tols);
    doc.results = Json{{"certificate", certificate_json(cert)},
                       {"lifted_filling",
                        {{"gamma_abs", std::abs(filled.gamma)}, {"omega_abs", std::abs(filled.omega)}}}};
    doc.pass = ok;

    Json lines = Json::array();
    lines.push_back("  slope " + std::to_string(slope.p) + "/" + std::to_string(slope.q) + " = " +
                    full_precision(slope.value()));
    lines.push_back("  s* = " + full_precision(cert.s_star) + "   (bracket [" +
                    full_precision(cert.bracket.first) + ", " + full_precision(cert.bracket.second) +
                    "], " + std::to_string(cert.iterations) + " bisections, " +
                    std::to_string(cert.all_brackets.size()) + " bracket(s))");
    lines.push_back(check_line("|g(s*) - p/q|", cert.g_residual, "<=", tols.solve,
                               cert.g_residual <= tols.solve));
    lines.push_back(check_line("|A^p B^q - 1|", cert.filling_residual, "<=", tols.filling,
                               cert.filling_residual <= tols.filling));
    lines.push_back(check_line("relation residual", cert.relation_residual, "<=", tols.relation,
                               cert.relation_residual <= tols.relation));
    lines.push_back(check_line("lifted longitude |omega|", *cert.lift_omega_residual, "<=",
                               tols.lift_omega, *cert.lift_omega_residual <= tols.lift_omega));
    lines.push_back(check_line("lifted filling |gamma|", std::abs(filled.gamma), "<=",
                               tols.lift_filling, std::abs(filled.gamma) <= tols.lift_filling));
    lines.push_back(check_line("lifted filling |omega|", std::abs(filled.omega), "<=",
                               tols.lift_filling, std::abs(filled.omega) <= tols.lift_filling));
    doc.results["lines"] = lines;
    return doc;
}

CertificateDocument cmd_limits(int grid_points) {
    const std::vector<LimitReport> reports = limit_suite(GridSpec{grid_points});

    bool all = true;
    Json rows = Json::array();
    Json lines = Json::array();
    for (const LimitReport& rep : reports) {
        all = all && rep.converged;
        rows.push_back(Json{{"name", rep.name},
                            {"target", rep.target},
                            {"tolerance", rep.tolerance},
                            {"final_value", rep.values.back()},
                            {"final_error", std::abs(rep.values.back() - rep.target)},
                            {"strict_bound_ok", rep.strict_bound_ok},
                            {"converged", rep.converged},
                            {"grid", rep.grid},
                            {"values", rep.values}});
        char buf[200];
        std::snprintf(buf, sizeof(buf), "  %-58s final err %-10.3e tol %-8.0e %s", rep.name.c_str(),
                      std::abs(rep.values.back() - rep.target), rep.tolerance,
                      rep.converged ? "converged" : "NOT CONVERGED");
        lines.push_back(std::string(buf));
    }

    CertificateDocument doc;
    doc.command = "limits";
    doc.inputs = Json{{"grid_points", grid_points}};
    doc.tolerances = Json{{"default", kLimitTolDefault}, {"Nt5", kLimitTolSlow}};
    doc.results = Json{{"reports", rows}, {"lines", lines}};
    doc.pass = all;
    return doc;
}

CertificateDocument cmd_lift(const Slope& slope, double tol, long long twist) {
    Tolerances tols;
    tols.solve = tol;
    CoverElement filled;
    const SlopeCertificate cert = certify_slope(slope, tol, &filled);

    const CoverElement lam = lifted_longitude(cert.s_star, twist);
    const double b = longitude_eigenvalue(cert.s_star);
    const double gamma_lambda = (b * b - 1.0) / (b * b + 1.0);
    const double omega_res = std::abs(lam.omega);
    const double gamma_res = std::abs(lam.gamma - Complex(gamma_lambda, 0.0));
    const double window = 1.5 * std::numbers::pi;
    const bool in_window = lam.omega > -window && lam.omega < window;

    const bool ok = cert.g_residual <= tols.solve && cert.filling_residual <= tols.filling &&
                    omega_res <= tols.lift_omega && in_window &&
                    std::abs(filled.gamma) <= tols.lift_filling &&
                    std::abs(filled.omega) <= tols.lift_filling;

    CertificateDocument doc;
    doc.command = "lift";
    doc.inputs = Json{{"slope", std::to_string(slope.p) + "/" + std::to_string(slope.q)},
                      {"tol", tol},
                      {"twist", twist}};
    doc.tolerances = tolerances_json(tols);
    doc.results = Json{{"certificate", certificate_json(cert)},
                       {"longitude",
                        {{"omega_residual", omega_res},
                         {"gamma_residual", gamma_res},
                         {"gamma", lam.gamma.real()},
                         {"omega_raw", lam.omega},
                         {"window_halfwidth", window},
                         {"in_window", in_window}}},
                       {"lifted_filling",
                        {{"gamma_abs", std::abs(filled.gamma)}, {"omega_abs", std::abs(filled.omega)}}}};
    doc.pass = ok;

    Json lines = Json::array();
    lines.push_back("  slope " + std::to_string(slope.p) + "/" + std::to_string(slope.q) +
                    ", twist " + std::to_string(twist) + ", s* = " + full_precision(cert.s_star));
    lines.push_back(check_line("lifted longitude |omega|", omega_res, "<=", tols.lift_omega,
                               omega_res <= tols.lift_omega));
    lines.push_back(check_line("longitude gamma residual", gamma_res, "<=", tols.lift_omega,
                               gamma_res <= tols.lift_omega));
    lines.push_back(std::string("  omega window (-3pi/2, 3pi/2)   ") +
                    (in_window ? "inside" : "OUTSIDE"));
    lines.push_back(check_line("lifted filling |gamma|", std::abs(filled.gamma), "<=",
                               tols.lift_filling, std::abs(filled.gamma) <= tols.lift_filling));
    lines.push_back(check_line("lifted filling |omega|", std::abs(filled.omega), "<=",
                               tols.lift_filling, std::abs(filled.omega) <= tols.lift_filling));
    lines.push_back(check_line("|g(s*) - p/q|", cert.g_residual, "<=", tols.solve,
                               cert.g_residual <= tols.solve));
    doc.results["lines"] = lines;
    return doc;
}

std::string gcurve_csv(double s_min, double s_max, int points) {
    if (!(s_min > 0.0) || !(s_min < s_max)) {
        throw std::invalid_argument("g-curve: require 0 < min < max");
    }
    if (points < 2) throw std::invalid_argument("g-curve: require points >= 2");

    std::ostringstream out;
    out << "s,t,A,B,g\n";
    for (double s : log_grid(s_min, s_max, points)) {
        out << full_precision(s) << ',' << full_precision(param_t(s)) << ','
            << full_precision(meridian_eigenvalue(s)) << ','
            << full_precision(longitude_eigenvalue(s)) << ','
            << full_precision(holonomy_slope(s)) << '\n';
    }
    return out.str();
}

Slope parse_slope(const std::string& text) {
    const auto bad = [&] { return std::invalid_argument("slope: expected p or p/q, got '" + text + "'"); };
    const std::size_t slash = text.find('/');
    const std::string p_part = text.substr(0, slash);
    long long p = 0;
    long long q = 1;
    auto parse_int = [&](const std::string& part, long long& out) {
        if (part.empty()) throw bad();
        const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), out);
        if (ec != std::errc() || ptr != part.data() + part.size()) throw bad();
    };
    parse_int(p_part, p);
    if (slash != std::string::npos) parse_int(text.substr(slash + 1), q);
    if (q == 0) throw std::invalid_argument("slope: q must be nonzero");
    return Slope::reduced(p, q);
}

}  // namespace slope52

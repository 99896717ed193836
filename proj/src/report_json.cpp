#include "report_json.hpp"

#include <json.hpp>

#include <cstdio>

#include "chern.hpp"
#include "invariants.hpp"

namespace folis::reports {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string finish(const ordered_json& doc) { return doc.dump(2) + "\n"; }

ordered_json spec_header(const CompleteIntersectionSpec& spec) {
    ordered_json j;
    j["n"] = std::to_string(spec.ambient_dim());
    ordered_json degrees = ordered_json::array();
    for (int d : spec.degrees()) degrees.push_back(std::to_string(d));
    j["degrees"] = degrees;
    j["dim"] = std::to_string(spec.dim());
    j["total_degree"] = to_string(spec.total_degree());
    return j;
}

ordered_json complex_json(const std::complex<double>& z) {
    ordered_json j;
    j["re"] = format_double(z.real());
    j["im"] = format_double(z.imag());
    return j;
}

ordered_json solve_json(const verifier::SolveReport& solve) {
    ordered_json j;
    j["seed"] = std::to_string(solve.options.seed);
    j["starts_per_chart"] = std::to_string(solve.options.starts_per_chart);
    j["tol_residual"] = format_double(solve.options.tol_residual);
    j["tol_dedup"] = format_double(solve.options.tol_dedup);
    j["tol_rank"] = format_double(solve.options.tol_rank);

    ordered_json points = ordered_json::array();
    for (const verifier::SingularPoint& p : solve.points) {
        ordered_json pj;
        ordered_json coords = ordered_json::array();
        for (const auto& c : p.coordinates) coords.push_back(complex_json(c));
        pj["coordinates"] = coords;
        pj["residual"] = format_double(p.residual);
        pj["smooth_point"] = p.on_smooth_locus;
        pj["nondegenerate"] = p.nondegenerate;
        points.push_back(pj);
    }
    j["points"] = points;
    j["distinct_points"] = std::to_string(solve.points.size());
    j["nondegenerate_count"] = std::to_string(solve.nondegenerate_count);

    ordered_json charts = ordered_json::array();
    for (const verifier::ChartDiagnostics& c : solve.charts) {
        ordered_json cj;
        cj["chart"] = std::to_string(c.chart);
        cj["converged_starts"] = std::to_string(c.converged_starts);
        cj["no_convergence_warning"] = c.no_convergence;
        charts.push_back(cj);
    }
    j["charts"] = charts;
    return j;
}

}  // namespace

std::string format_double(double v) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.17g", v);
    return buffer;
}

std::string chi_json(const CompleteIntersectionSpec& spec) {
    ordered_json j;
    j["command"] = "chi";
    j.update(spec_header(spec));
    ordered_json chi = ordered_json::array();
    for (int q = 0; q <= spec.dim(); ++q) {
        chi.push_back(to_string(chern::section_euler_characteristic(spec, q)));
    }
    j["chi_sections"] = chi;
    return finish(j);
}

std::string polar_json(const CompleteIntersectionSpec& spec) {
    ordered_json j;
    j["command"] = "polar";
    j.update(spec_header(spec));
    const invariants::PolarClasses severi = invariants::polar_classes_severi_todd(spec);
    const invariants::PolarClasses chern_path = invariants::polar_classes_via_chern(spec);
    ordered_json a = ordered_json::array();
    for (const BigInt& r : severi.rho) a.push_back(to_string(r));
    ordered_json b = ordered_json::array();
    for (const BigInt& r : chern_path.rho) b.push_back(to_string(r));
    j["polar_product_formula"] = a;
    j["polar_chern_integral"] = b;
    j["paths_agree"] = (severi.rho == chern_path.rho);
    return finish(j);
}

std::string count_json(const CompleteIntersectionSpec& spec, FoliationDegree d,
                       bool* forms_agree) {
    ordered_json j;
    j["command"] = "count";
    j.update(spec_header(spec));
    j["d"] = std::to_string(d.value());
    const BigInt w = invariants::sing_count_wronski(spec, d);
    const BigInt e = invariants::sing_count_euler(spec, d);
    const BigInt c = chern::twisted_top_chern_count(spec, d);
    const bool agree = (w == e && w == c);
    j["wronski_form"] = to_string(w);
    j["euler_form"] = to_string(e);
    j["chern_form"] = to_string(c);
    j["forms_agree"] = agree;
    const invariants::SingCountPolynomial poly = invariants::sing_count_poly(spec);
    ordered_json coeffs = ordered_json::array();
    for (const BigInt& cf : poly.coeffs) coeffs.push_back(to_string(cf));
    j["polynomial_coefficients"] = coeffs;  // by descending power of d
    if (forms_agree) *forms_agree = agree;
    return finish(j);
}

std::string bound_json(const CompleteIntersectionSpec& spec) {
    ordered_json j;
    j["command"] = "bound";
    j.update(spec_header(spec));
    const bounds::BoundReport r = bounds::bound_report(spec);
    j["parity"] = r.dim_is_odd ? "odd" : "even";
    j["applicable"] = r.applicable;
    j["alpha"] = to_string(r.alpha);
    j["beta"] = to_string(r.beta);
    j["nonpositivity_threshold"] = r.nonpositivity_threshold ? to_string(*r.nonpositivity_threshold) : "vacuous";
    j["min_degree"] = std::to_string(r.min_degree);
    j["beta_skipped_indeterminate"] = r.beta_skipped_indeterminate;
    return finish(j);
}

std::string identities_json(const identities::IdentitiesReport& report) {
    ordered_json j;
    j["command"] = "identities";
    ordered_json grids = ordered_json::array();
    for (const identities::GridResult& g : report.grids) {
        ordered_json gj;
        gj["name"] = g.name;
        gj["checks"] = std::to_string(g.checks);
        gj["violations"] = std::to_string(g.violations);
        if (!g.sample_failures.empty()) {
            ordered_json fails = ordered_json::array();
            for (const std::string& f : g.sample_failures) fails.push_back(f);
            gj["sample_failures"] = fails;
        }
        grids.push_back(gj);
    }
    j["grids"] = grids;
    ordered_json info;
    info["positive_below_bound"] = std::to_string(report.positive_below_bound);
    info["nonpositive_on_grid"] = std::to_string(report.nonpositive_on_grid);
    if (!report.nonpositive_on_grid_example.empty()) {
        info["nonpositive_on_grid_example"] = report.nonpositive_on_grid_example;
    }
    info["nonpositive_at_admissible_degree"] =
        std::to_string(report.nonpositive_at_admissible_degree);
    if (!report.nonpositive_at_admissible_degree_example.empty()) {
        info["nonpositive_at_admissible_degree_example"] =
            report.nonpositive_at_admissible_degree_example;
    }
    j["informational"] = info;
    j["total_violations"] = std::to_string(report.total_violations());
    return finish(j);
}

std::string verify_json(const verifier::VerifyOutcome& outcome, const std::string& source) {
    ordered_json j;
    j["command"] = "verify-example";
    j["system"] = source;
    j["n"] = std::to_string(outcome.ambient_dim);
    ordered_json degrees = ordered_json::array();
    for (int d : outcome.variety_degrees) degrees.push_back(std::to_string(d));
    j["degrees"] = degrees;
    j["foliation_degree"] = std::to_string(outcome.foliation_degree);
    j["radial_cofactor"] = outcome.radial_cofactor;
    j["invariant"] = outcome.invariant;
    ordered_json cert = ordered_json::array();
    for (const auto& row : outcome.certificate) {
        ordered_json rj = ordered_json::array();
        for (const std::string& a : row) rj.push_back(a);
        cert.push_back(rj);
    }
    j["certificate"] = cert;
    j["formula_count"] = to_string(outcome.formula_count);
    j["solver"] = solve_json(outcome.solve);
    j["count_matches"] = outcome.count_matches;
    if (outcome.min_degree) {
        ordered_json bj;
        bj["alpha"] = *outcome.alpha;
        bj["min_degree"] = std::to_string(*outcome.min_degree);
        bj["attained"] = outcome.bound_attained;
        j["degree_bound"] = bj;
    }
    return finish(j);
}

}  // namespace folis::reports

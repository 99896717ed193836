// Command-line front end. Talks to the library exclusively through the C API
// in folis.h; table output is rendered from the library's JSON documents so
// both formats always agree.
#include <folis.h>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr int kExitValidation = 2;
constexpr int kExitMismatch = 3;

struct CommonOptions {
    int n = 0;
    std::vector<int> degrees;
    std::string format = "table";
    std::string output_path;
};

std::string take_string(char* owned) {
    std::string s = owned ? owned : "";
    folis_string_free(owned);
    return s;
}

int report_error(folis_status status) {
    std::cerr << "error: " << folis_last_error() << "\n";
    return status == FOLIS_ERR_INTERNAL ? kExitMismatch : kExitValidation;
}

// Writes the JSON document to the requested path (empty path: no-op).
bool save_report(const std::string& path, const std::string& doc_text) {
    if (path.empty()) return true;
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot write report to '" << path << "'\n";
        return false;
    }
    out << doc_text;
    return true;
}

using CiHandle = std::unique_ptr<folis_ci, decltype(&folis_ci_destroy)>;

CiHandle make_ci(const CommonOptions& common, folis_status* status) {
    folis_ci* raw = nullptr;
    *status = folis_ci_create(common.n, common.degrees.data(), common.degrees.size(), &raw);
    return CiHandle(raw, &folis_ci_destroy);
}

void add_spec_flags(CLI::App* cmd, CommonOptions& common) {
    cmd->add_option("-n,--ambient", common.n, "ambient projective dimension")
        ->envname("FOLIS_N")
        ->required();
    cmd->add_option("-D,--degrees", common.degrees, "defining degrees d1,d2,...")
        ->delimiter(',')
        ->envname("FOLIS_DEGREES")
        ->required();
    cmd->add_option("--format", common.format, "output format: table or json")
        ->check(CLI::IsMember({"table", "json"}))
        ->envname("FOLIS_FORMAT");
    cmd->add_option("-o,--output", common.output_path, "also write the JSON report to this path");
}

void print_kv(const std::string& key, const ordered_json& value) {
    std::string text = value.is_string() ? value.get<std::string>() : value.dump();
    std::printf("%-24s %s\n", key.c_str(), text.c_str());
}

void print_header(const ordered_json& doc) {
    std::string degrees;
    for (const auto& d : doc["degrees"]) {
        if (!degrees.empty()) degrees += ",";
        degrees += d.get<std::string>();
    }
    std::printf("V: n=%s degrees=(%s) dim=%s total degree=%s\n",
                doc["n"].get<std::string>().c_str(), degrees.c_str(),
                doc["dim"].get<std::string>().c_str(),
                doc["total_degree"].get<std::string>().c_str());
}

int run_chi(const CommonOptions& common, int q, bool q_given) {
    folis_status status = FOLIS_OK;
    CiHandle ci = make_ci(common, &status);
    if (status != FOLIS_OK) return report_error(status);

    if (q_given) {
        char* value = nullptr;
        status = folis_ci_chi_section(ci.get(), q, &value);
        if (status != FOLIS_OK) return report_error(status);
        std::string text = take_string(value);
        std::string doc = "{\n  \"command\": \"chi\",\n  \"q\": \"" + std::to_string(q) +
                          "\",\n  \"chi\": \"" + text + "\"\n}\n";
        if (!save_report(common.output_path, doc)) return kExitValidation;
        if (common.format == "json") {
            std::fputs(doc.c_str(), stdout);
        } else {
            std::printf("chi(V_[%d]) = %s\n", q, text.c_str());
        }
        return 0;
    }

    char* json = nullptr;
    status = folis_chi_json(ci.get(), &json);
    if (status != FOLIS_OK) return report_error(status);
    std::string doc_text = take_string(json);
    if (!save_report(common.output_path, doc_text)) return kExitValidation;
    if (common.format == "json") {
        std::fputs(doc_text.c_str(), stdout);
        return 0;
    }
    ordered_json doc = ordered_json::parse(doc_text);
    print_header(doc);
    std::printf("%-6s %s\n", "q", "chi(V_[q])");
    int index = 0;
    for (const auto& value : doc["chi_sections"]) {
        std::printf("%-6d %s\n", index++, value.get<std::string>().c_str());
    }
    return 0;
}

int run_polar(const CommonOptions& common) {
    folis_status status = FOLIS_OK;
    CiHandle ci = make_ci(common, &status);
    if (status != FOLIS_OK) return report_error(status);

    char* json = nullptr;
    status = folis_polar_json(ci.get(), &json);
    if (status != FOLIS_OK) return report_error(status);
    std::string doc_text = take_string(json);
    if (!save_report(common.output_path, doc_text)) return kExitValidation;
    if (common.format == "json") {
        std::fputs(doc_text.c_str(), stdout);
        return 0;
    }
    ordered_json doc = ordered_json::parse(doc_text);
    print_header(doc);
    std::printf("%-6s %-20s %s\n", "j", "product formula", "chern integral");
    const auto& a = doc["polar_product_formula"];
    const auto& b = doc["polar_chern_integral"];
    for (size_t j = 0; j < a.size(); ++j) {
        std::printf("%-6zu %-20s %s\n", j, a[j].get<std::string>().c_str(),
                    b[j].get<std::string>().c_str());
    }
    std::printf("paths agree: %s\n", doc["paths_agree"].get<bool>() ? "yes" : "no");
    return doc["paths_agree"].get<bool>() ? 0 : kExitMismatch;
}

int run_count(const CommonOptions& common, int d) {
    folis_status status = FOLIS_OK;
    CiHandle ci = make_ci(common, &status);
    if (status != FOLIS_OK) return report_error(status);

    int agree = 0;
    char* json = nullptr;
    status = folis_count_json(ci.get(), d, &agree, &json);
    if (status != FOLIS_OK) return report_error(status);
    std::string doc_text = take_string(json);
    if (!save_report(common.output_path, doc_text)) return kExitValidation;
    if (common.format == "json") {
        std::fputs(doc_text.c_str(), stdout);
    } else {
        ordered_json doc = ordered_json::parse(doc_text);
        print_header(doc);
        print_kv("foliation degree", doc["d"]);
        print_kv("count (wronski form)", doc["wronski_form"]);
        print_kv("count (euler form)", doc["euler_form"]);
        print_kv("count (chern form)", doc["chern_form"]);
        print_kv("forms agree", doc["forms_agree"]);
    }
    return agree ? 0 : kExitMismatch;
}

int run_bound(const CommonOptions& common) {
    folis_status status = FOLIS_OK;
    CiHandle ci = make_ci(common, &status);
    if (status != FOLIS_OK) return report_error(status);

    char* json = nullptr;
    status = folis_bound_json(ci.get(), &json);
    if (status != FOLIS_OK) return report_error(status);
    std::string doc_text = take_string(json);
    if (!save_report(common.output_path, doc_text)) return kExitValidation;
    if (common.format == "json") {
        std::fputs(doc_text.c_str(), stdout);
        return 0;
    }
    ordered_json doc = ordered_json::parse(doc_text);
    print_header(doc);
    for (const char* key : {"parity", "applicable", "alpha", "beta", "nonpositivity_threshold",
                            "min_degree"}) {
        print_kv(key, doc[key]);
    }
    return 0;
}

int run_identities(const std::string& format, const std::string& output_path) {
    int64_t violations = 0;
    char* json = nullptr;
    folis_status status = folis_identities_json(&violations, &json);
    if (status != FOLIS_OK) return report_error(status);
    std::string doc_text = take_string(json);
    if (!save_report(output_path, doc_text)) return kExitValidation;
    if (format == "json") {
        std::fputs(doc_text.c_str(), stdout);
    } else {
        ordered_json doc = ordered_json::parse(doc_text);
        std::printf("%-28s %12s %12s\n", "identity grid", "checks", "violations");
        for (const auto& grid : doc["grids"]) {
            std::printf("%-28s %12s %12s\n", grid["name"].get<std::string>().c_str(),
                        grid["checks"].get<std::string>().c_str(),
                        grid["violations"].get<std::string>().c_str());
        }
        std::printf("\ninformational (not violations):\n");
        for (const auto& [key, value] : doc["informational"].items()) {
            print_kv(key, value);
        }
        std::printf("total violations: %s\n", doc["total_violations"].get<std::string>().c_str());
    }
    return violations == 0 ? 0 : kExitMismatch;
}

struct VerifyArgs {
    std::string which;
    int n = 1;
    int ell = 3;
    std::string format = "table";
    std::string output_path;
    folis_solver_options options{};
};

std::string complex_text(const ordered_json& c) {
    return "(" + c["re"].get<std::string>() + ", " + c["im"].get<std::string>() + ")";
}

int run_verify(const VerifyArgs& args) {
    int count_matches = 0;
    char* json = nullptr;
    folis_status status = FOLIS_OK;
    if (args.which == "1") {
        status = folis_verify_example1_json(args.n, args.ell, &args.options, &count_matches,
                                            &json);
    } else if (args.which == "2") {
        status = folis_verify_example2_json(&args.options, &count_matches, &json);
    } else {
        std::ifstream in(args.which);
        if (!in) {
            std::cerr << "error: cannot open system file '" << args.which << "'\n";
            return kExitValidation;
        }
        std::ostringstream text;
        text << in.rdbuf();
        status = folis_verify_system_json(text.str().c_str(), &args.options, &count_matches,
                                          &json);
    }
    if (status != FOLIS_OK) return report_error(status);
    std::string doc_text = take_string(json);
    if (!save_report(args.output_path, doc_text)) return kExitValidation;
    if (args.format == "json") {
        std::fputs(doc_text.c_str(), stdout);
        return count_matches ? 0 : kExitMismatch;
    }

    ordered_json doc = ordered_json::parse(doc_text);
    std::string degrees;
    for (const auto& d : doc["degrees"]) {
        if (!degrees.empty()) degrees += ",";
        degrees += d.get<std::string>();
    }
    std::printf("system: %s  (P^%s, degrees (%s), foliation degree %s)\n",
                doc["system"].get<std::string>().c_str(), doc["n"].get<std::string>().c_str(),
                degrees.c_str(), doc["foliation_degree"].get<std::string>().c_str());
    print_kv("invariant", doc["invariant"]);
    print_kv("formula count", doc["formula_count"]);
    const auto& solver = doc["solver"];
    print_kv("distinct points", solver["distinct_points"]);
    print_kv("nondegenerate", solver["nondegenerate_count"]);
    print_kv("count matches", doc["count_matches"]);
    if (doc.contains("degree_bound")) {
        print_kv("alpha", doc["degree_bound"]["alpha"]);
        print_kv("min degree", doc["degree_bound"]["min_degree"]);
        print_kv("bound attained", doc["degree_bound"]["attained"]);
    }
    std::printf("\nsingular points:\n");
    for (const auto& point : solver["points"]) {
        std::string coords;
        for (const auto& c : point["coordinates"]) {
            if (!coords.empty()) coords += " : ";
            coords += complex_text(c);
        }
        std::printf("  [%s]\n    residual %s, smooth %s, nondegenerate %s\n", coords.c_str(),
                    point["residual"].get<std::string>().c_str(),
                    point["smooth_point"].get<bool>() ? "yes" : "no",
                    point["nondegenerate"].get<bool>() ? "yes" : "no");
    }
    for (const auto& chart : solver["charts"]) {
        if (chart["no_convergence_warning"].get<bool>()) {
            std::printf("warning: no start converged in chart %s\n",
                        chart["chart"].get<std::string>().c_str());
        }
    }
    return count_matches ? 0 : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"characteristic numbers of complete intersections and singularity counts of "
                 "foliations leaving them invariant"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(folis_version()));

    CommonOptions chi_common;
    int chi_q = 0;
    CLI::App* chi = app.add_subcommand("chi", "Euler characteristics of V and its sections");
    add_spec_flags(chi, chi_common);
    CLI::Option* chi_q_opt = chi->add_option("-q,--section", chi_q, "single section index");

    CommonOptions polar_common;
    CLI::App* polar = app.add_subcommand("polar", "polar classes by both computation paths");
    add_spec_flags(polar, polar_common);

    CommonOptions count_common;
    int count_d = 0;
    CLI::App* count = app.add_subcommand("count", "singularity count of an invariant foliation");
    add_spec_flags(count, count_common);
    count->add_option("-d,--foliation-degree", count_d, "foliation degree (>= 2)")
        ->envname("FOLIS_D")
        ->required();

    CommonOptions bound_common;
    CLI::App* bound = app.add_subcommand("bound", "degree bound diagnostics");
    add_spec_flags(bound, bound_common);

    std::string identities_format = "table";
    std::string identities_output;
    CLI::App* identities = app.add_subcommand("identities", "run the identity grids");
    identities->add_option("--format", identities_format, "output format: table or json")
        ->check(CLI::IsMember({"table", "json"}))
        ->envname("FOLIS_FORMAT");
    identities->add_option("-o,--output", identities_output,
                           "also write the JSON report to this path");

    VerifyArgs verify_args;
    folis_solver_options_init(&verify_args.options);
    CLI::App* verify = app.add_subcommand(
        "verify-example", "build a reference system, certify invariance, locate singular "
                          "points and compare with the formulas");
    verify->add_option("which", verify_args.which, "1, 2, or a path to a system file")
        ->required();
    verify->add_option("-n,--pairs", verify_args.n, "example 1: n (ambient dimension 2n)");
    verify->add_option("-l,--ell", verify_args.ell, "example 1: hypersurface degree (>= 3)");
    verify->add_option("--format", verify_args.format, "output format: table or json")
        ->check(CLI::IsMember({"table", "json"}))
        ->envname("FOLIS_FORMAT");
    verify->add_option("-o,--output", verify_args.output_path,
                       "also write the JSON report to this path");
    verify->add_option("--seed", verify_args.options.seed, "multistart seed")
        ->envname("FOLIS_SEED");
    verify->add_option("--starts", verify_args.options.starts_per_chart, "starts per chart")
        ->envname("FOLIS_STARTS");
    verify->add_option("--tol-residual", verify_args.options.tol_residual,
                       "max accepted residual")
        ->envname("FOLIS_TOL_RESIDUAL");
    verify->add_option("--tol-dedup", verify_args.options.tol_dedup,
                       "projective deduplication distance")
        ->envname("FOLIS_TOL_DEDUP");
    verify->add_option("--tol-rank", verify_args.options.tol_rank, "rank test tolerance")
        ->envname("FOLIS_TOL_RANK");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitValidation;
    }

    if (chi->parsed()) return run_chi(chi_common, chi_q, chi_q_opt->count() > 0);
    if (polar->parsed()) return run_polar(polar_common);
    if (count->parsed()) return run_count(count_common, count_d);
    if (bound->parsed()) return run_bound(bound_common);
    if (identities->parsed()) return run_identities(identities_format, identities_output);
    if (verify->parsed()) return run_verify(verify_args);
    return kExitValidation;
}

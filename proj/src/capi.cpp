// The extern-C surface: opaque handles over the exact core, error codes, and
// string/JSON marshalling. All exceptions stop here.
#include "folis.h"

#include <cstring>
#include <stdexcept>
#include <string>

#include "bounds.hpp"
#include "chern.hpp"
#include "ci.hpp"
#include "errors.hpp"
#include "examples.hpp"
#include "identities.hpp"
#include "invariants.hpp"
#include "parse.hpp"
#include "report_json.hpp"
#include "verify.hpp"

struct folis_ci {
    folis::CompleteIntersectionSpec spec;
};

namespace {

thread_local std::string g_last_error;

folis_status fail(folis_status code, const char* what) {
    g_last_error = what;
    return code;
}

template <typename Fn>
folis_status guarded(Fn&& fn) {
    try {
        fn();
        g_last_error.clear();
        return FOLIS_OK;
    } catch (const folis::ParseError& e) {
        return fail(FOLIS_ERR_PARSE, e.what());
    } catch (const folis::NotApplicableError& e) {
        return fail(FOLIS_ERR_NOT_APPLICABLE, e.what());
    } catch (const folis::NotSmoothPointError& e) {
        return fail(FOLIS_ERR_NOT_APPLICABLE, e.what());
    } catch (const folis::InternalError& e) {
        return fail(FOLIS_ERR_INTERNAL, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(FOLIS_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::domain_error& e) {
        return fail(FOLIS_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::exception& e) {
        return fail(FOLIS_ERR_INTERNAL, e.what());
    }
}

folis_status require(bool condition, const char* what) {
    return condition ? FOLIS_OK : fail(FOLIS_ERR_INVALID_ARGUMENT, what);
}

void write_string(const std::string& value, char** out) {
    char* copy = new char[value.size() + 1];
    std::memcpy(copy, value.c_str(), value.size() + 1);
    *out = copy;
}

folis::verifier::SolverOptions to_options(const folis_solver_options* options) {
    folis::verifier::SolverOptions opts;
    if (options) {
        opts.seed = options->seed;
        opts.starts_per_chart = options->starts_per_chart;
        opts.tol_residual = options->tol_residual;
        opts.tol_dedup = options->tol_dedup;
        opts.tol_rank = options->tol_rank;
        opts.max_iterations = options->max_iterations;
    }
    if (opts.starts_per_chart < 1 || opts.max_iterations < 1 || !(opts.tol_residual > 0) ||
        !(opts.tol_dedup > 0) || !(opts.tol_rank > 0)) {
        throw std::invalid_argument("invalid solver options");
    }
    return opts;
}

void verify_common(const folis::verifier::ExampleSystem& system, const std::string& label,
                   const folis_solver_options* options, int* count_matches, char** out) {
    const folis::verifier::VerifyOutcome outcome =
        folis::verifier::verify_system(system, to_options(options));
    if (count_matches) *count_matches = outcome.count_matches ? 1 : 0;
    write_string(folis::reports::verify_json(outcome, label), out);
}

}  // namespace

extern "C" {

folis_status folis_ci_create(int n, const int* degrees, size_t num_degrees, folis_ci** out) {
    if (folis_status s = require(out && degrees && num_degrees > 0, "null argument");
        s != FOLIS_OK) {
        return s;
    }
    *out = nullptr;
    return guarded([&] {
        std::vector<int> d(degrees, degrees + num_degrees);
        *out = new folis_ci{folis::CompleteIntersectionSpec(n, std::move(d))};
    });
}

void folis_ci_destroy(folis_ci* ci) { delete ci; }

int folis_ci_dimension(const folis_ci* ci) { return ci ? ci->spec.dim() : -1; }

folis_status folis_ci_chi_section(const folis_ci* ci, int q, char** out) {
    if (folis_status s = require(ci && out, "null argument"); s != FOLIS_OK) return s;
    return guarded([&] {
        write_string(folis::to_string(folis::chern::section_euler_characteristic(ci->spec, q)),
                     out);
    });
}

folis_status folis_ci_polar_class(const folis_ci* ci, int j, int via_chern_path, char** out) {
    if (folis_status s = require(ci && out, "null argument"); s != FOLIS_OK) return s;
    return guarded([&] {
        const folis::invariants::PolarClasses pc =
            via_chern_path ? folis::invariants::polar_classes_via_chern(ci->spec)
                           : folis::invariants::polar_classes_severi_todd(ci->spec);
        if (j < 0 || j > pc.top_index()) {
            throw std::invalid_argument("polar class index out of range");
        }
        write_string(folis::to_string(pc.rho[static_cast<size_t>(j)]), out);
    });
}

folis_status folis_ci_singularity_count(const folis_ci* ci, int d, char** out) {
    if (folis_status s = require(ci && out, "null argument"); s != FOLIS_OK) return s;
    return guarded([&] {
        const folis::FoliationDegree fd(d);
        const folis::BigInt w = folis::invariants::sing_count_wronski(ci->spec, fd);
        const folis::BigInt e = folis::invariants::sing_count_euler(ci->spec, fd);
        const folis::BigInt c = folis::chern::twisted_top_chern_count(ci->spec, fd);
        if (w != e || w != c) throw folis::InternalError("singularity-count forms disagree");
        write_string(folis::to_string(w), out);
    });
}

folis_status folis_ci_alpha(const folis_ci* ci, char** out) {
    if (folis_status s = require(ci && out, "null argument"); s != FOLIS_OK) return s;
    return guarded([&] { write_string(folis::to_string(folis::bounds::alpha(ci->spec)), out); });
}

folis_status folis_ci_beta(const folis_ci* ci, char** out) {
    if (folis_status s = require(ci && out, "null argument"); s != FOLIS_OK) return s;
    return guarded([&] { write_string(folis::to_string(folis::bounds::beta(ci->spec)), out); });
}

folis_status folis_ci_min_foliation_degree(const folis_ci* ci, int* out) {
    if (folis_status s = require(ci && out, "null argument"); s != FOLIS_OK) return s;
    return guarded([&] { *out = folis::bounds::min_foliation_degree(ci->spec); });
}

folis_status folis_chi_json(const folis_ci* ci, char** out) {
    if (folis_status s = require(ci && out, "null argument"); s != FOLIS_OK) return s;
    return guarded([&] { write_string(folis::reports::chi_json(ci->spec), out); });
}

folis_status folis_polar_json(const folis_ci* ci, char** out) {
    if (folis_status s = require(ci && out, "null argument"); s != FOLIS_OK) return s;
    return guarded([&] { write_string(folis::reports::polar_json(ci->spec), out); });
}

folis_status folis_count_json(const folis_ci* ci, int d, int* forms_agree, char** out) {
    if (folis_status s = require(ci && out, "null argument"); s != FOLIS_OK) return s;
    return guarded([&] {
        bool agree = false;
        std::string doc = folis::reports::count_json(ci->spec, folis::FoliationDegree(d), &agree);
        if (forms_agree) *forms_agree = agree ? 1 : 0;
        write_string(doc, out);
    });
}

folis_status folis_bound_json(const folis_ci* ci, char** out) {
    if (folis_status s = require(ci && out, "null argument"); s != FOLIS_OK) return s;
    return guarded([&] { write_string(folis::reports::bound_json(ci->spec), out); });
}

folis_status folis_identities_json(int64_t* violations, char** out) {
    if (folis_status s = require(out != nullptr, "null argument"); s != FOLIS_OK) return s;
    return guarded([&] {
        const folis::identities::IdentitiesReport report = folis::identities::run_identity_grids();
        if (violations) *violations = report.total_violations();
        write_string(folis::reports::identities_json(report), out);
    });
}

void folis_solver_options_init(folis_solver_options* options) {
    if (!options) return;
    const folis::verifier::SolverOptions defaults;
    options->seed = defaults.seed;
    options->starts_per_chart = defaults.starts_per_chart;
    options->tol_residual = defaults.tol_residual;
    options->tol_dedup = defaults.tol_dedup;
    options->tol_rank = defaults.tol_rank;
    options->max_iterations = defaults.max_iterations;
}

folis_status folis_verify_example1_json(int n, int ell, const folis_solver_options* options,
                                        int* count_matches, char** out) {
    if (folis_status s = require(out != nullptr, "null argument"); s != FOLIS_OK) return s;
    return guarded([&] {
        verify_common(folis::verifier::fermat_hypersurface_system(n, ell), "example-1", options,
                      count_matches, out);
    });
}

folis_status folis_verify_example2_json(const folis_solver_options* options, int* count_matches,
                                        char** out) {
    if (folis_status s = require(out != nullptr, "null argument"); s != FOLIS_OK) return s;
    return guarded([&] {
        verify_common(folis::verifier::quartic_curve_system(), "example-2", options,
                      count_matches, out);
    });
}

folis_status folis_verify_system_json(const char* system_text,
                                      const folis_solver_options* options, int* count_matches,
                                      char** out) {
    if (folis_status s = require(out != nullptr && system_text != nullptr, "null argument");
        s != FOLIS_OK) {
        return s;
    }
    return guarded([&] {
        verify_common(folis::verifier::parse_system(system_text), "custom", options,
                      count_matches, out);
    });
}

const char* folis_last_error(void) { return g_last_error.c_str(); }

void folis_string_free(char* s) { delete[] s; }

const char* folis_version(void) { return "0.1.0"; }

}  // extern "C"

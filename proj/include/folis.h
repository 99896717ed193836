/* folis: exact characteristic numbers of smooth complete intersections and
 * singularity counts of one-dimensional holomorphic foliations that leave
 * them invariant.
 *
 * All functions return folis_status; results are written through out
 * parameters. Exact integers and rationals cross the boundary as
 * NUL-terminated decimal strings ("42", "-7", "3/4"); release them with
 * folis_string_free. JSON documents use the same conventions and a fixed
 * layout, so identical inputs produce byte-identical output.
 *
 * On failure, folis_last_error() returns a thread-local description of the
 * most recent error raised on the calling thread.
 */
#ifndef FOLIS_H
#define FOLIS_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define FOLIS_API __declspec(dllexport)
#else
#define FOLIS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum folis_status {
    FOLIS_OK = 0,
    FOLIS_ERR_INVALID_ARGUMENT = 1, /* malformed input or out-of-range parameter */
    FOLIS_ERR_NOT_APPLICABLE = 2,   /* outside the domain (even dimension, linear subspace, degree < 2) */
    FOLIS_ERR_PARSE = 3,            /* malformed polynomial/system text */
    FOLIS_ERR_INTERNAL = 4          /* an internal identity failed; always a bug */
} folis_status;

/* A smooth complete intersection, held behind an opaque handle. */
typedef struct folis_ci folis_ci;

/* n >= 2 is the ambient projective dimension; degrees carries k entries with
 * 1 <= k <= n-1 and every entry >= 1. */
FOLIS_API folis_status folis_ci_create(int n, const int* degrees, size_t num_degrees,
                                       folis_ci** out);
FOLIS_API void folis_ci_destroy(folis_ci* ci);
FOLIS_API int folis_ci_dimension(const folis_ci* ci);

/* chi of the section by q generic hyperplanes, 0 <= q <= dim; q = 0 is chi(V). */
FOLIS_API folis_status folis_ci_chi_section(const folis_ci* ci, int q, char** out);
/* The j-th polar class, 0 <= j <= dim; via_chern_path selects the
 * Chern-integral route instead of the product formula. */
FOLIS_API folis_status folis_ci_polar_class(const folis_ci* ci, int j, int via_chern_path,
                                            char** out);
/* Number of singularities of a degree-d foliation leaving V invariant
 * (d >= 2). All three internal forms are evaluated and must agree. */
FOLIS_API folis_status folis_ci_singularity_count(const folis_ci* ci, int d, char** out);
/* The ratio of the top polar classes (as "p/q") and its companion lower
 * bound; both are undefined for linear subspaces. */
FOLIS_API folis_status folis_ci_alpha(const folis_ci* ci, char** out);
FOLIS_API folis_status folis_ci_beta(const folis_ci* ci, char** out);
/* Smallest admissible foliation degree (dim V odd, non-linear V only). */
FOLIS_API folis_status folis_ci_min_foliation_degree(const folis_ci* ci, int* out);

/* JSON documents mirroring the CLI commands. */
FOLIS_API folis_status folis_chi_json(const folis_ci* ci, char** out);
FOLIS_API folis_status folis_polar_json(const folis_ci* ci, char** out);
FOLIS_API folis_status folis_count_json(const folis_ci* ci, int d, int* forms_agree,
                                        char** out);
FOLIS_API folis_status folis_bound_json(const folis_ci* ci, char** out);
/* Runs every identity grid; violations receives the total failure count. */
FOLIS_API folis_status folis_identities_json(int64_t* violations, char** out);

typedef struct folis_solver_options {
    uint64_t seed;
    int starts_per_chart;
    double tol_residual;
    double tol_dedup;
    double tol_rank;
    int max_iterations;
} folis_solver_options;

/* Fills in the defaults (seed 0, 200 starts, 1e-10 / 1e-6 / 1e-8, 160). */
FOLIS_API void folis_solver_options_init(folis_solver_options* options);

/* End-to-end verification of the built-in systems. Example 1 is the Fermat
 * hypersurface of degree ell >= 3 in P^{2n}; example 2 is the quartic curve
 * cut out by two quadrics in P^3. count_matches (may be NULL) receives
 * whether the nondegenerate singular point count equals the closed-form
 * count. options may be NULL for defaults. */
FOLIS_API folis_status folis_verify_example1_json(int n, int ell,
                                                  const folis_solver_options* options,
                                                  int* count_matches, char** out);
FOLIS_API folis_status folis_verify_example2_json(const folis_solver_options* options,
                                                  int* count_matches, char** out);
/* Same pipeline on a user-supplied system in the documented text format. */
FOLIS_API folis_status folis_verify_system_json(const char* system_text,
                                                const folis_solver_options* options,
                                                int* count_matches, char** out);

FOLIS_API const char* folis_last_error(void);
FOLIS_API void folis_string_free(char* s);
FOLIS_API const char* folis_version(void);

#ifdef __cplusplus
}
#endif

#endif /* FOLIS_H */

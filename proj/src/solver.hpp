// Locating the singular points of a foliation on an invariant variety: the
// parallelism locus {rank [Y(p); p] <= 1} intersected with the variety is
// solved chart by chart with multistart damped Gauss-Newton, deduplicated
// projectively, and every reported point is classified (smooth point of V or
// not, nondegenerate linearization or not).
#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "field.hpp"
#include "multipoly.hpp"

namespace folis::verifier {

struct SolverOptions {
    std::uint64_t seed = 0;
    int starts_per_chart = 200;
    double tol_residual = 1e-10;
    double tol_dedup = 1e-6;
    double tol_rank = 1e-8;
    int max_iterations = 160;
};

struct SingularPoint {
    // Homogeneous coordinates, scaled so the first coordinate of maximal
    // modulus is exactly 1.
    std::vector<std::complex<double>> coordinates;
    double residual = 0.0;   // max |equation| over minors and defining polynomials
    bool on_smooth_locus = false;
    bool nondegenerate = false;
};

struct ChartDiagnostics {
    int chart = 0;
    int converged_starts = 0;
    bool no_convergence = false;  // warning: not a single start converged here
};

struct SolveReport {
    std::vector<SingularPoint> points;  // pairwise distinct, canonically sorted
    std::vector<ChartDiagnostics> charts;
    int nondegenerate_count = 0;
    SolverOptions options;
};

// All 2x2 minors of [Y(p); p] followed by the defining polynomials: the
// homogeneous system cutting out the singular points on the variety.
std::vector<MultiPoly> singular_system(const HomogeneousField& field,
                                       const std::vector<MultiPoly>& varieties_homogeneous);

SolveReport find_singular_points(const HomogeneousField& field,
                                 const std::vector<MultiPoly>& varieties_homogeneous,
                                 const SolverOptions& options = {});

// Whether the linearization of the field at the given singular point, taken
// in the chart of the point's largest coordinate and restricted to the
// tangent space of the variety, is invertible. Throws NotSmoothPointError
// when the variety is not smooth at the point.
bool nondegeneracy_check(const std::vector<std::complex<double>>& point,
                         const HomogeneousField& field,
                         const std::vector<MultiPoly>& varieties_homogeneous,
                         const SolverOptions& options = {});

// Fubini-Study chordal distance between projective points.
double projective_distance(const std::vector<std::complex<double>>& a,
                           const std::vector<std::complex<double>>& b);

}  // namespace folis::verifier

#include "verify.hpp"

#include <stdexcept>

#include "bounds.hpp"
#include "chern.hpp"
#include "errors.hpp"
#include "ideal.hpp"
#include "invariants.hpp"

namespace folis::verifier {

VerifyOutcome verify_system(const ExampleSystem& system, const SolverOptions& options) {
    VerifyOutcome out;
    const int n = system.field.ambient_dim();
    out.ambient_dim = n;

    const FoliationDecomposition dec = foliation_degree(system.field);
    out.foliation_degree = dec.degree;
    out.radial_cofactor = dec.radial_cofactor.to_string();
    if (dec.degree < 2) {
        throw NotApplicableError("foliation degree must be >= 2");
    }

    std::vector<MultiPoly> homogeneous;
    homogeneous.reserve(system.varieties.size());
    for (const MultiPoly& f : system.varieties) {
        MultiPoly h = homogenize_polynomial(f, system.field.chart);
        out.variety_degrees.push_back(static_cast<int>(h.degree()));
        homogeneous.push_back(std::move(h));
    }

    const CompleteIntersectionSpec spec(n, out.variety_degrees);
    const FoliationDegree d(dec.degree);

    if (auto cert = invariance_certificate(system.field, system.varieties)) {
        out.invariant = true;
        for (const auto& row : cert->multipliers) {
            std::vector<std::string> printable;
            printable.reserve(row.size());
            for (const MultiPoly& a : row) printable.push_back(a.to_string());
            out.certificate.push_back(std::move(printable));
        }
    }

    const BigInt n_wronski = invariants::sing_count_wronski(spec, d);
    const BigInt n_euler = invariants::sing_count_euler(spec, d);
    const BigInt n_chern = chern::twisted_top_chern_count(spec, d);
    if (n_wronski != n_euler || n_wronski != n_chern) {
        throw InternalError("singularity-count forms disagree");
    }
    out.formula_count = n_wronski;

    out.solve = find_singular_points(homogenize(system.field), homogeneous, options);
    out.count_matches = (BigInt(out.solve.nondegenerate_count) == out.formula_count);

    if (spec.dim() % 2 != 0 && !spec.is_linear_subspace()) {
        const bounds::BoundReport bound = bounds::bound_report(spec);
        out.min_degree = bound.min_degree;
        out.alpha = to_string(bound.alpha);
        out.bound_attained = (bound.min_degree == dec.degree);
    }
    return out;
}

}  // namespace folis::verifier

#include "bounds.hpp"

#include <algorithm>
#include <vector>

#include "errors.hpp"
#include "invariants.hpp"
#include "symfun.hpp"

namespace folis::bounds {

namespace {

void reject_linear(const CompleteIntersectionSpec& spec) {
    if (spec.is_linear_subspace()) {
        throw NotApplicableError("bound undefined; linear subspaces are excluded");
    }
}

std::vector<BigInt> shifted_wronski_row(const CompleteIntersectionSpec& spec) {
    return symfun::wronski_row(spec.dim(), spec.shifted_degree_vector());
}

}  // namespace

BigRat alpha(const CompleteIntersectionSpec& spec) {
    reject_linear(spec);
    const std::vector<BigInt> w = shifted_wronski_row(spec);
    const BigInt& den = w[w.size() - 2];
    if (den == 0) throw InternalError("alpha: vanishing W_{n-k-1} for a non-linear variety");
    return make_rational(w.back(), den);
}

BigRat beta(const CompleteIntersectionSpec& spec) {
    BoundReport r = bound_report(spec);
    return r.beta;
}

BoundReport bound_report(const CompleteIntersectionSpec& spec) {
    reject_linear(spec);
    const int dim = spec.dim();
    const std::vector<BigInt> w = shifted_wronski_row(spec);

    BoundReport report;
    report.dim = dim;
    report.dim_is_odd = (dim % 2 != 0);
    report.alpha = make_rational(w.back(), w[w.size() - 2]);

    // beta = min of W_1 and the successive difference ratios.
    BigRat best(w[1]);
    std::optional<BigRat> threshold;
    for (int j = 2; j <= dim; ++j) {
        BigInt num = w[static_cast<size_t>(j)] - w[static_cast<size_t>(j) - 1];
        BigInt den = w[static_cast<size_t>(j) - 1] - w[static_cast<size_t>(j) - 2];
        if (den == 0) {
            if (num != 0) {
                throw InternalError("beta: difference ratio with zero denominator only");
            }
            // 0/0: the Wronski row has stabilised; the ratio imposes no
            // constraint and is treated as +infinity.
            report.beta_skipped_indeterminate = true;
            continue;
        }
        BigRat ratio = make_rational(num, den);
        if (!threshold || ratio < *threshold) threshold = ratio;
        if (ratio < best) best = ratio;
    }
    report.beta = best;
    report.nonpositivity_threshold = threshold;

    BigInt min_d = rat_ceil(report.alpha);
    if (min_d < 2) min_d = 2;
    report.min_degree = static_cast<int>(min_d.get_si());
    report.applicable = report.dim_is_odd;
    return report;
}

int min_foliation_degree(const CompleteIntersectionSpec& spec) {
    if (spec.dim() % 2 == 0) {
        throw NotApplicableError("degree bound not applicable: dim V is even");
    }
    return bound_report(spec).min_degree;
}

BigRat curve_degree_bound(int n, FoliationDegree d) {
    if (n < 2) throw std::invalid_argument("curve_degree_bound: n must be >= 2");
    BigRat base = BigRat(1) + make_rational(BigInt(d.value()), BigInt(n - 1));
    return rpow(base, static_cast<unsigned long>(n - 1));
}

FeasibilityReport feasibility_report(const CompleteIntersectionSpec& spec, FoliationDegree d) {
    FeasibilityReport out;
    out.bound = bound_report(spec);
    out.d = d.value();
    out.passes_degree_bound = (BigRat(d.value()) >= out.bound.alpha);
    out.sing_count = invariants::sing_count_wronski(spec, d);
    return out;
}

}  // namespace folis::bounds

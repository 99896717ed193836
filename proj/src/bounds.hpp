// The degree bound for foliations leaving a complete intersection invariant:
// the polar-class ratio alpha, the difference-ratio floor beta that sandwiches
// it, and the resulting minimal admissible foliation degree (odd-dimensional
// varieties only, linear subspaces excluded).
#pragma once

#include <optional>

#include "bigrat.hpp"
#include "ci.hpp"

namespace folis::bounds {

// alpha = rho_{n-k} / rho_{n-k-1} = W_{n-k}(d-1) / W_{n-k-1}(d-1); also the
// minimum of the consecutive ratios W_j / W_{j-1}. Throws NotApplicableError
// for linear subspaces (the bound is undefined there).
BigRat alpha(const CompleteIntersectionSpec& spec);

// beta = min{ W_1, min_{2<=j<=n-k} (W_j - W_{j-1}) / (W_{j-1} - W_{j-2}) } at
// the shifted degrees. 0/0 ratios (possible when some d_l = 1) are treated as
// +infinity and skipped. Satisfies alpha >= beta > alpha - 1.
BigRat beta(const CompleteIntersectionSpec& spec);

// Smallest integer d >= 2 with d >= alpha. Requires dim V odd and a
// non-linear variety; throws NotApplicableError otherwise.
int min_foliation_degree(const CompleteIntersectionSpec& spec);

// (1 + d/(n-1))^{n-1}: the upper bound on the degree of an invariant curve
// (codimension n-1) in projective n-space. For n = 2 this is the
// hypersurface bound d + 1.
BigRat curve_degree_bound(int n, FoliationDegree d);

struct BoundReport {
    BigRat alpha;
    BigRat beta;
    // min_{2<=delta<=n-k} of the difference ratios; empty when dim V = 1
    // (the range is vacuous) or every ratio was indeterminate.
    std::optional<BigRat> nonpositivity_threshold;
    int min_degree = 0;   // max(2, ceil(alpha))
    int dim = 0;
    bool dim_is_odd = false;
    bool applicable = false;              // dim odd and not a linear subspace
    bool beta_skipped_indeterminate = false;  // some 0/0 ratio was skipped
};

// Full bound diagnostic; throws NotApplicableError for linear subspaces.
BoundReport bound_report(const CompleteIntersectionSpec& spec);

struct FeasibilityReport {
    BoundReport bound;
    int d = 0;
    bool passes_degree_bound = false;  // d >= alpha (only meaningful when applicable)
    BigInt sing_count;
};

FeasibilityReport feasibility_report(const CompleteIntersectionSpec& spec, FoliationDegree d);

}  // namespace folis::bounds

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bounds.hpp"
#include "errors.hpp"

#include <stdexcept>

using folis::BigRat;
using folis::CompleteIntersectionSpec;
using folis::FoliationDegree;
using folis::NotApplicableError;
using namespace folis::bounds;

TEST_CASE("alpha values") {
    CHECK(alpha(CompleteIntersectionSpec(3, {2, 2})) == 2);
    // Hypersurfaces: the ratio collapses to d1 - 1.
    for (int n = 2; n <= 7; ++n) {
        for (int d1 = 2; d1 <= 6; ++d1) {
            CHECK(alpha(CompleteIntersectionSpec(n, {d1})) == d1 - 1);
        }
    }
    CHECK(alpha(CompleteIntersectionSpec(5, {2, 2})) == BigRat(4, 3));
    CHECK_THROWS_AS(alpha(CompleteIntersectionSpec(4, {1, 1})), NotApplicableError);
}

TEST_CASE("beta values") {
    CHECK(beta(CompleteIntersectionSpec(5, {2, 2})) == 1);
    // Curves (dim 1): the inner minimum is vacuous and beta = W_1.
    CHECK(beta(CompleteIntersectionSpec(3, {2, 2})) == 2);
    CHECK(beta(CompleteIntersectionSpec(3, {3})) == 2);
    CHECK_THROWS_AS(beta(CompleteIntersectionSpec(4, {1, 1})), NotApplicableError);
}

TEST_CASE("beta skips indeterminate ratios when a degree equals one") {
    // Shifted degrees (1,0,0): the Wronski row is constant, every difference
    // ratio is 0/0 and only W_1 remains.
    const CompleteIntersectionSpec spec(7, {2, 1, 1});
    const BoundReport report = bound_report(spec);
    CHECK(report.beta == 1);
    CHECK(report.beta_skipped_indeterminate);
    CHECK_FALSE(report.nonpositivity_threshold.has_value());
    CHECK(report.alpha == 1);
    CHECK(report.alpha >= report.beta);
    CHECK(report.beta > report.alpha - 1);
}

TEST_CASE("minimal admissible degree") {
    CHECK(min_foliation_degree(CompleteIntersectionSpec(3, {2, 2})) == 2);
    CHECK(min_foliation_degree(CompleteIntersectionSpec(2, {3})) == 2);
    // Clamped to the standing hypothesis d >= 2.
    CHECK(min_foliation_degree(CompleteIntersectionSpec(2, {2})) == 2);
    CHECK(min_foliation_degree(CompleteIntersectionSpec(2, {5})) == 4);
    // Non-integer ratio rounds up.
    CHECK(min_foliation_degree(CompleteIntersectionSpec(5, {2, 2})) == 2);
    CHECK_THROWS_AS(min_foliation_degree(CompleteIntersectionSpec(3, {2})), NotApplicableError);
    CHECK_THROWS_AS(min_foliation_degree(CompleteIntersectionSpec(3, {1, 1})),
                    NotApplicableError);
}

TEST_CASE("invariant curve degree bound") {
    CHECK(curve_degree_bound(3, FoliationDegree(2)) == 4);
    CHECK(curve_degree_bound(2, FoliationDegree(2)) == 3);
    CHECK(curve_degree_bound(2, FoliationDegree(5)) == 6);
    CHECK(curve_degree_bound(4, FoliationDegree(2)) == BigRat(125, 27));
    CHECK_THROWS_AS(curve_degree_bound(1, FoliationDegree(2)), std::invalid_argument);
}

TEST_CASE("bound report fields") {
    const BoundReport report = bound_report(CompleteIntersectionSpec(3, {2, 2}));
    CHECK(report.alpha == 2);
    CHECK(report.beta == 2);
    CHECK_FALSE(report.nonpositivity_threshold.has_value());  // dim 1: vacuous
    CHECK(report.min_degree == 2);
    CHECK(report.dim == 1);
    CHECK(report.dim_is_odd);
    CHECK(report.applicable);

    const BoundReport even = bound_report(CompleteIntersectionSpec(3, {2}));
    CHECK_FALSE(even.dim_is_odd);
    CHECK_FALSE(even.applicable);
    CHECK(even.alpha == 1);

    const BoundReport threshold = bound_report(CompleteIntersectionSpec(5, {2, 2}));
    REQUIRE(threshold.nonpositivity_threshold.has_value());
    CHECK(*threshold.nonpositivity_threshold == 1);  // min over (W_j-W_{j-1})/(W_{j-1}-W_{j-2})
}

TEST_CASE("feasibility report") {
    const FeasibilityReport report =
        feasibility_report(CompleteIntersectionSpec(3, {2, 2}), FoliationDegree(2));
    CHECK(report.d == 2);
    CHECK(report.bound.applicable);
    CHECK(report.bound.alpha == 2);
    CHECK(report.passes_degree_bound);
    CHECK(report.sing_count == 4);

    const FeasibilityReport fails =
        feasibility_report(CompleteIntersectionSpec(2, {5}), FoliationDegree(2));
    CHECK_FALSE(fails.passes_degree_bound);  // alpha = 4
    CHECK(fails.sing_count == -5);
}

TEST_CASE("sandwich on a sample of odd-dimensional specs") {
    const std::vector<CompleteIntersectionSpec> specs = {
        CompleteIntersectionSpec(4, {2, 3, 4}), CompleteIntersectionSpec(7, {5, 5}),
        CompleteIntersectionSpec(8, {2, 2, 3}), CompleteIntersectionSpec(5, {4, 4})};
    for (const auto& spec : specs) {
        REQUIRE(spec.dim() % 2 == 1);
        const BoundReport report = bound_report(spec);
        CHECK(report.alpha >= report.beta);
        CHECK(report.beta > report.alpha - 1);
    }
}

// Exhaustive grid checks of the combinatorial identities and inequalities
// behind the count formulas and the degree bound. Each grid reports how many
// instances were checked and how many failed; a healthy build reports zero
// violations everywhere.
#pragma once

#include <string>
#include <vector>

namespace folis::identities {

struct GridResult {
    std::string name;
    long long checks = 0;
    long long violations = 0;
    std::vector<std::string> sample_failures;  // at most a handful, for diagnostics

    void record(bool ok, const std::string& description);
};

struct IdentitiesReport {
    std::vector<GridResult> grids;

    // Informational counters, not violations. The positivity of the count and
    // the degree bound are linked in one direction only (a positive count
    // forces the degree above the bound); the other direction genuinely fails
    // on parts of the grid, which is the obstruction mechanism itself: a
    // nonpositive value certifies that no invariant nondegenerate
    // configuration with those parameters exists.
    long long positive_below_bound = 0;           // would contradict the proved direction
    long long nonpositive_on_grid = 0;            // N <= 0 anywhere on the full grid
    std::string nonpositive_on_grid_example;
    long long nonpositive_at_admissible_degree = 0;  // N <= 0 despite d >= min degree
    std::string nonpositive_at_admissible_degree_example;

    long long total_violations() const;
};

IdentitiesReport run_identity_grids();

}  // namespace folis::identities

// End-to-end verification of a foliation/variety pair: degree decomposition,
// invariance certificate, numeric location of the singular points, and
// comparison of the nondegenerate count against the closed formulas.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bigrat.hpp"
#include "examples.hpp"
#include "solver.hpp"

namespace folis::verifier {

struct VerifyOutcome {
    int ambient_dim = 0;
    std::vector<int> variety_degrees;
    int foliation_degree = 0;
    std::string radial_cofactor;  // printable g ("0" when absent)

    bool invariant = false;
    std::vector<std::vector<std::string>> certificate;  // printable multipliers

    BigInt formula_count;  // closed-form N (all three forms, checked to agree)
    SolveReport solve;
    bool count_matches = false;  // nondegenerate point count == formula count

    // Degree bound data; only present when dim V is odd and V is not linear.
    std::optional<int> min_degree;
    std::optional<std::string> alpha;  // exact rational as text
    bool bound_attained = false;       // min_degree == foliation degree
};

// Runs the full pipeline on an affine system. Throws std::invalid_argument /
// NotApplicableError on inputs outside the supported domain (foliation degree
// < 2, codimension out of range, inhomogeneous data after homogenization).
VerifyOutcome verify_system(const ExampleSystem& system, const SolverOptions& options = {});

}  // namespace folis::verifier

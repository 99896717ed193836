// Invariance certificates: X(F_m) = sum_l A_{m,l} F_l with the multipliers
// found by solving an exact linear system in their unknown coefficients
// (ansatz degree = deg X(F_m) - deg F_l per generator, no Groebner bases).
#pragma once

#include <optional>
#include <vector>

#include "field.hpp"
#include "multipoly.hpp"

namespace folis::verifier {

struct InvarianceCertificate {
    // multipliers[m][l] is the cofactor of F_l in the expression of X(F_m).
    std::vector<std::vector<MultiPoly>> multipliers;
};

// Finds a certificate for the variety {F_1 = .. = F_k = 0} (affine,
// dehomogenized to the chart of the field), or nullopt when the linear
// system is inconsistent, i.e. the variety is not invariant up to the
// ansatz degree. A returned certificate always re-multiplies exactly.
std::optional<InvarianceCertificate> invariance_certificate(
    const AffineVectorField& field, const std::vector<MultiPoly>& varieties);

// Exact check that the certificate reproduces X(F_m) for every generator.
bool certificate_is_exact(const AffineVectorField& field,
                          const std::vector<MultiPoly>& varieties,
                          const InvarianceCertificate& certificate);

// All exponent vectors in num_vars variables of total degree <= max_degree,
// in a fixed deterministic order.
std::vector<Exponents> monomials_up_to_degree(int num_vars, long max_degree);

// Solves M x = rhs over the rationals (dense, exact). Returns a particular
// solution with free variables set to zero, or nullopt when inconsistent.
std::optional<std::vector<BigRat>> solve_exact_linear_system(
    std::vector<std::vector<BigRat>> matrix, std::vector<BigRat> rhs);

}  // namespace folis::verifier

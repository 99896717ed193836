// Floating-point evaluation of exact polynomials and a damped Gauss-Newton
// (Levenberg-Marquardt) iteration for overdetermined complex systems. This
// is the only part of the library that leaves exact arithmetic.
#pragma once

#include <Eigen/Dense>
#include <complex>
#include <optional>
#include <vector>

#include "multipoly.hpp"

namespace folis::verifier {

struct CompiledPoly {
    struct Term {
        std::complex<double> coeff;
        std::vector<int> exps;
    };
    int num_vars = 0;
    std::vector<Term> terms;

    std::complex<double> eval(const Eigen::VectorXcd& x) const;
};

CompiledPoly compile_poly(const MultiPoly& p);

struct CompiledSystem {
    int num_vars = 0;
    std::vector<CompiledPoly> equations;
    std::vector<std::vector<CompiledPoly>> jacobian;  // [equation][variable]

    Eigen::VectorXcd residual(const Eigen::VectorXcd& x) const;
    Eigen::MatrixXcd jacobian_at(const Eigen::VectorXcd& x) const;
    double max_abs_residual(const Eigen::VectorXcd& x) const;
};

CompiledSystem compile_system(const std::vector<MultiPoly>& equations);

// Minimizes |r(x)|^2 from the given start; reports the final iterate when
// the residual dropped below tol, nullopt otherwise.
std::optional<Eigen::VectorXcd> solve_square_system(const CompiledSystem& system,
                                                    Eigen::VectorXcd start, double tol,
                                                    int max_iterations);

}  // namespace folis::verifier

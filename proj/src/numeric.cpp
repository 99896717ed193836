#include "numeric.hpp"

namespace folis::verifier {

std::complex<double> CompiledPoly::eval(const Eigen::VectorXcd& x) const {
    std::complex<double> acc(0.0, 0.0);
    for (const Term& t : terms) {
        std::complex<double> v = t.coeff;
        for (size_t i = 0; i < t.exps.size(); ++i) {
            for (int rep = 0; rep < t.exps[i]; ++rep) v *= x[static_cast<Eigen::Index>(i)];
        }
        acc += v;
    }
    return acc;
}

CompiledPoly compile_poly(const MultiPoly& p) {
    CompiledPoly out;
    out.num_vars = p.num_vars();
    out.terms.reserve(p.terms().size());
    for (const auto& [e, c] : p.terms()) {
        out.terms.push_back(CompiledPoly::Term{std::complex<double>(to_double(c), 0.0), e});
    }
    return out;
}

CompiledSystem compile_system(const std::vector<MultiPoly>& equations) {
    CompiledSystem sys;
    if (equations.empty()) return sys;
    sys.num_vars = equations[0].num_vars();
    for (const MultiPoly& eq : equations) {
        sys.equations.push_back(compile_poly(eq));
        std::vector<CompiledPoly> row;
        row.reserve(static_cast<size_t>(sys.num_vars));
        for (int v = 0; v < sys.num_vars; ++v) row.push_back(compile_poly(eq.partial_derivative(v)));
        sys.jacobian.push_back(std::move(row));
    }
    return sys;
}

Eigen::VectorXcd CompiledSystem::residual(const Eigen::VectorXcd& x) const {
    Eigen::VectorXcd r(static_cast<Eigen::Index>(equations.size()));
    for (size_t i = 0; i < equations.size(); ++i) {
        r[static_cast<Eigen::Index>(i)] = equations[i].eval(x);
    }
    return r;
}

Eigen::MatrixXcd CompiledSystem::jacobian_at(const Eigen::VectorXcd& x) const {
    Eigen::MatrixXcd j(static_cast<Eigen::Index>(equations.size()), num_vars);
    for (size_t i = 0; i < equations.size(); ++i) {
        for (int v = 0; v < num_vars; ++v) {
            j(static_cast<Eigen::Index>(i), v) = jacobian[i][static_cast<size_t>(v)].eval(x);
        }
    }
    return j;
}

double CompiledSystem::max_abs_residual(const Eigen::VectorXcd& x) const {
    double m = 0.0;
    for (const CompiledPoly& eq : equations) m = std::max(m, std::abs(eq.eval(x)));
    return m;
}

std::optional<Eigen::VectorXcd> solve_square_system(const CompiledSystem& system,
                                                    Eigen::VectorXcd x, double tol,
                                                    int max_iterations) {
    double lambda = 1e-3;
    Eigen::VectorXcd r = system.residual(x);
    double cost = r.squaredNorm();

    for (int iter = 0; iter < max_iterations; ++iter) {
        if (r.cwiseAbs().maxCoeff() < tol) return x;
        Eigen::MatrixXcd j = system.jacobian_at(x);
        Eigen::MatrixXcd jhj = j.adjoint() * j;
        Eigen::VectorXcd g = j.adjoint() * r;

        bool stepped = false;
        for (int attempt = 0; attempt < 12; ++attempt) {
            Eigen::MatrixXcd damped = jhj;
            damped.diagonal().array() += std::complex<double>(lambda, 0.0);
            Eigen::VectorXcd delta = damped.ldlt().solve(g);
            Eigen::VectorXcd candidate = x - delta;
            Eigen::VectorXcd rc = system.residual(candidate);
            double candidate_cost = rc.squaredNorm();
            if (std::isfinite(candidate_cost) && candidate_cost < cost) {
                x = candidate;
                r = rc;
                cost = candidate_cost;
                lambda = std::max(lambda * 0.35, 1e-14);
                stepped = true;
                break;
            }
            lambda *= 8.0;
            if (lambda > 1e12) break;
        }
        if (!stepped) break;                       // stalled in a local minimum
        if (x.norm() > 1e8 || !std::isfinite(cost)) break;  // diverged
    }
    if (r.cwiseAbs().maxCoeff() < tol) return x;
    return std::nullopt;
}

}  // namespace folis::verifier

#include "solver.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <algorithm>
#include <random>
#include <stdexcept>

#include "errors.hpp"
#include "numeric.hpp"

namespace folis::verifier {

namespace {

void check_inputs(const HomogeneousField& field,
                  const std::vector<MultiPoly>& varieties) {
    if (field.is_zero()) throw std::invalid_argument("zero homogeneous field");
    const int coords = field.ambient_dim() + 1;
    const long degree = field.degree();
    for (const MultiPoly& c : field.components) {
        if (c.num_vars() != coords) throw std::invalid_argument("field variable-count mismatch");
        if (!c.is_homogeneous()) throw std::invalid_argument("field components must be homogeneous");
        if (!c.is_zero() && c.degree() != degree) {
            throw std::invalid_argument("field components must share one degree");
        }
    }
    if (varieties.empty()) throw std::invalid_argument("no defining polynomials");
    if (static_cast<int>(varieties.size()) > coords - 2) {
        throw std::invalid_argument("variety must have dimension >= 1");
    }
    for (const MultiPoly& f : varieties) {
        if (f.num_vars() != coords) throw std::invalid_argument("variety variable-count mismatch");
        if (f.is_zero() || !f.is_homogeneous()) {
            throw std::invalid_argument("defining polynomials must be nonzero and homogeneous");
        }
    }
}

// First index of maximal modulus.
size_t argmax_modulus(const std::vector<std::complex<double>>& p) {
    size_t best = 0;
    double best_mod = -1.0;
    for (size_t i = 0; i < p.size(); ++i) {
        double m = std::abs(p[i]);
        if (m > best_mod) {
            best_mod = m;
            best = i;
        }
    }
    return best;
}

std::vector<std::complex<double>> normalize_projective(
    std::vector<std::complex<double>> p) {
    const size_t best = argmax_modulus(p);
    const std::complex<double> scale = p[best];
    for (auto& c : p) c /= scale;
    p[best] = std::complex<double>(1.0, 0.0);  // exact after normalization
    return p;
}

Eigen::VectorXcd to_eigen(const std::vector<std::complex<double>>& v) {
    Eigen::VectorXcd x(static_cast<Eigen::Index>(v.size()));
    for (size_t i = 0; i < v.size(); ++i) x[static_cast<Eigen::Index>(i)] = v[i];
    return x;
}

// Uniform double in [-2, 2], generated without distribution objects so the
// stream depends only on the engine.
double uniform_pm2(std::mt19937_64& rng) {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    return 4.0 * u - 2.0;
}

bool lexicographic_less(const SingularPoint& a, const SingularPoint& b) {
    for (size_t i = 0; i < a.coordinates.size(); ++i) {
        const auto& ca = a.coordinates[i];
        const auto& cb = b.coordinates[i];
        if (ca.real() != cb.real()) return ca.real() < cb.real();
        if (ca.imag() != cb.imag()) return ca.imag() < cb.imag();
    }
    return false;
}

// Orthonormal basis of the tangent space of {f = 0} at an affine point, or
// nothing when the variety fails the rank test there.
std::optional<Eigen::MatrixXcd> tangent_frame(const std::vector<MultiPoly>& affine_varieties,
                                              const Eigen::VectorXcd& u, int num_vars,
                                              double tol_rank) {
    const int k = static_cast<int>(affine_varieties.size());
    Eigen::MatrixXcd df(k, num_vars);
    for (int m = 0; m < k; ++m) {
        for (int v = 0; v < num_vars; ++v) {
            df(m, v) = compile_poly(affine_varieties[static_cast<size_t>(m)]
                                        .partial_derivative(v))
                           .eval(u);
        }
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(df, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    const double scale = sv.size() > 0 ? sv[0] : 0.0;
    if (sv.size() < k || sv[k - 1] <= tol_rank * std::max(scale, 1.0)) {
        return std::nullopt;  // rank-deficient: V not smooth here
    }
    return Eigen::MatrixXcd(svd.matrixV().rightCols(num_vars - k));
}

}  // namespace

double projective_distance(const std::vector<std::complex<double>>& a,
                           const std::vector<std::complex<double>>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("projective points of different spaces");
    std::complex<double> inner(0.0, 0.0);
    double na = 0.0, nb = 0.0;
    for (size_t i = 0; i < a.size(); ++i) {
        inner += std::conj(a[i]) * b[i];
        na += std::norm(a[i]);
        nb += std::norm(b[i]);
    }
    const double cos2 = std::norm(inner) / (na * nb);
    return std::sqrt(std::max(0.0, 1.0 - cos2));
}

std::vector<MultiPoly> singular_system(const HomogeneousField& field,
                                       const std::vector<MultiPoly>& varieties_homogeneous) {
    check_inputs(field, varieties_homogeneous);
    const int coords = field.ambient_dim() + 1;
    std::vector<MultiPoly> eqs;
    for (int i = 0; i < coords; ++i) {
        for (int j = i + 1; j < coords; ++j) {
            MultiPoly minor = field.components[static_cast<size_t>(i)] *
                                  MultiPoly::variable(coords, j) -
                              field.components[static_cast<size_t>(j)] *
                                  MultiPoly::variable(coords, i);
            eqs.push_back(std::move(minor));
        }
    }
    for (const MultiPoly& f : varieties_homogeneous) eqs.push_back(f);
    return eqs;
}

bool nondegeneracy_check(const std::vector<std::complex<double>>& point,
                         const HomogeneousField& field,
                         const std::vector<MultiPoly>& varieties_homogeneous,
                         const SolverOptions& options) {
    check_inputs(field, varieties_homogeneous);
    const int coords = field.ambient_dim() + 1;
    if (static_cast<int>(point.size()) != coords) {
        throw std::invalid_argument("point dimension mismatch");
    }
    const std::vector<std::complex<double>> p = normalize_projective(point);
    const int chart = static_cast<int>(argmax_modulus(p));

    // Affine data in the chart of the (normalized-to-1) largest coordinate.
    const std::vector<MultiPoly> affine_field = affine_field_in_chart(field, chart);
    std::vector<MultiPoly> affine_varieties;
    for (const MultiPoly& f : varieties_homogeneous) {
        affine_varieties.push_back(dehomogenize_polynomial(f, chart));
    }
    Eigen::VectorXcd u(coords - 1);
    {
        int a = 0;
        for (int i = 0; i < coords; ++i) {
            if (i == chart) continue;
            u[a++] = p[static_cast<size_t>(i)];
        }
    }

    const auto frame = tangent_frame(affine_varieties, u, coords - 1, options.tol_rank);
    if (!frame) throw NotSmoothPointError("variety is not smooth at the reported point");

    const int n = coords - 1;
    Eigen::MatrixXcd jac(n, n);
    for (int row = 0; row < n; ++row) {
        for (int col = 0; col < n; ++col) {
            jac(row, col) =
                compile_poly(affine_field[static_cast<size_t>(row)].partial_derivative(col))
                    .eval(u);
        }
    }
    const Eigen::MatrixXcd restricted = frame->adjoint() * jac * (*frame);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(restricted);
    const auto& sv = svd.singularValues();
    const double jac_scale = jac.norm();
    const double floor = options.tol_rank * std::max({sv[0], jac_scale, 1.0});
    return sv[sv.size() - 1] > floor;
}

SolveReport find_singular_points(const HomogeneousField& field,
                                 const std::vector<MultiPoly>& varieties_homogeneous,
                                 const SolverOptions& options) {
    check_inputs(field, varieties_homogeneous);
    const int coords = field.ambient_dim() + 1;
    const std::vector<MultiPoly> system = singular_system(field, varieties_homogeneous);
    const CompiledSystem homogeneous = compile_system(system);
    // Converge well below the reporting tolerance to leave headroom for the
    // renormalized homogeneous residual.
    const double inner_tol = options.tol_residual * 1e-2;

    SolveReport report;
    report.options = options;

    std::mt19937_64 rng(options.seed);
    for (int chart = 0; chart < coords; ++chart) {
        std::vector<MultiPoly> chart_eqs;
        chart_eqs.reserve(system.size());
        for (const MultiPoly& eq : system) chart_eqs.push_back(dehomogenize_polynomial(eq, chart));
        const CompiledSystem compiled = compile_system(chart_eqs);

        ChartDiagnostics diag;
        diag.chart = chart;
        for (int s = 0; s < options.starts_per_chart; ++s) {
            Eigen::VectorXcd start(coords - 1);
            for (int v = 0; v < coords - 1; ++v) {
                const double re = uniform_pm2(rng);
                const double im = uniform_pm2(rng);
                start[v] = std::complex<double>(re, im);
            }
            auto solution = solve_square_system(compiled, start, inner_tol,
                                                options.max_iterations);
            if (!solution) continue;
            ++diag.converged_starts;

            std::vector<std::complex<double>> p(static_cast<size_t>(coords));
            {
                int a = 0;
                for (int i = 0; i < coords; ++i) {
                    p[static_cast<size_t>(i)] = (i == chart)
                                                    ? std::complex<double>(1.0, 0.0)
                                                    : (*solution)[a++];
                }
            }
            p = normalize_projective(std::move(p));
            const double residual = homogeneous.max_abs_residual(to_eigen(p));
            if (!(residual < options.tol_residual)) continue;

            bool duplicate = false;
            for (SingularPoint& existing : report.points) {
                if (projective_distance(existing.coordinates, p) < options.tol_dedup) {
                    if (residual < existing.residual) {
                        existing.coordinates = p;
                        existing.residual = residual;
                    }
                    duplicate = true;
                    break;
                }
            }
            if (!duplicate) {
                SingularPoint pt;
                pt.coordinates = std::move(p);
                pt.residual = residual;
                report.points.push_back(std::move(pt));
            }
        }
        diag.no_convergence = (diag.converged_starts == 0);
        report.charts.push_back(diag);
    }

    for (SingularPoint& pt : report.points) {
        try {
            pt.on_smooth_locus = true;
            pt.nondegenerate =
                nondegeneracy_check(pt.coordinates, field, varieties_homogeneous, options);
        } catch (const NotSmoothPointError&) {
            pt.on_smooth_locus = false;
            pt.nondegenerate = false;
        }
        if (pt.nondegenerate) ++report.nondegenerate_count;
    }

    std::sort(report.points.begin(), report.points.end(), lexicographic_less);
    return report;
}

}  // namespace folis::verifier

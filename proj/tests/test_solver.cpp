#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cmath>
#include <complex>
#include <fstream>

#include "errors.hpp"
#include "examples.hpp"
#include "parse.hpp"
#include "solver.hpp"
#include "verify.hpp"

using folis::NotSmoothPointError;
using namespace folis::verifier;

namespace {

using Point = std::vector<std::complex<double>>;

std::vector<Point> load_fixture_points(const std::string& key) {
    std::ifstream in(std::string(FOLIS_FIXTURE_DIR) + "/example2_singular_points.json");
    REQUIRE(in.good());
    const nlohmann::json doc = nlohmann::json::parse(in);
    std::vector<Point> out;
    for (const auto& point : doc.at(key)) {
        Point p;
        for (const auto& coord : point) {
            p.emplace_back(coord[0].get<double>(), coord[1].get<double>());
        }
        out.push_back(p);
    }
    return out;
}

bool contains_point(const std::vector<Point>& reference, const Point& candidate, double tol) {
    for (const Point& r : reference) {
        if (projective_distance(r, candidate) < tol) return true;
    }
    return false;
}

SolveReport solve_example(const ExampleSystem& sys, const SolverOptions& options = {}) {
    std::vector<MultiPoly> homogeneous;
    for (const MultiPoly& f : sys.varieties) {
        homogeneous.push_back(homogenize_polynomial(f, sys.field.chart));
    }
    return find_singular_points(homogenize(sys.field), homogeneous, options);
}

}  // namespace

TEST_CASE("projective distance") {
    const Point a = {{1.0, 0.0}, {0.0, 1.0}};
    Point scaled = a;
    for (auto& c : scaled) c *= std::complex<double>(0.3, -2.0);
    CHECK(projective_distance(a, a) == doctest::Approx(0.0));
    CHECK(projective_distance(a, scaled) == doctest::Approx(0.0));
    const Point b = {{1.0, 0.0}, {0.0, -1.0}};
    CHECK(projective_distance(a, b) > 0.5);
}

TEST_CASE("singular system shape") {
    const ExampleSystem sys = quartic_curve_system();
    std::vector<MultiPoly> homogeneous;
    for (const MultiPoly& f : sys.varieties) {
        homogeneous.push_back(homogenize_polynomial(f, sys.field.chart));
    }
    const auto eqs = singular_system(homogenize(sys.field), homogeneous);
    CHECK(eqs.size() == 6 + 2);  // C(4,2) minors + two quadrics
    for (const MultiPoly& eq : eqs) CHECK(eq.is_homogeneous());
}

TEST_CASE("cubic curve singular points are the analytic ones") {
    const SolveReport report = solve_example(fermat_hypersurface_system(1, 3));
    REQUIRE(report.points.size() == 3);
    CHECK(report.nondegenerate_count == 3);

    // (0 : omega : 1) with omega^3 = -1.
    std::vector<Point> expected;
    for (int m = 0; m < 3; ++m) {
        const std::complex<double> omega = std::polar(1.0, M_PI * (2.0 * m + 1.0) / 3.0);
        expected.push_back(Point{{0.0, 0.0}, omega, {1.0, 0.0}});
    }
    for (const SingularPoint& p : report.points) {
        CHECK(p.residual < 1e-10);
        CHECK(p.on_smooth_locus);
        CHECK(p.nondegenerate);
        CHECK(contains_point(expected, p.coordinates, 1e-8));
    }

    // The chart of the first coordinate contains no solutions.
    CHECK(report.charts[0].no_convergence);
    CHECK_FALSE(report.charts[1].no_convergence);
}

TEST_CASE("quartic plane curve count") {
    const SolveReport report = solve_example(fermat_hypersurface_system(1, 4));
    CHECK(report.points.size() == 4);
    CHECK(report.nondegenerate_count == 4);
}

TEST_CASE("quartic-curve system finds all eight points") {
    const SolveReport report = solve_example(quartic_curve_system());
    REQUIRE(report.points.size() == 8);
    CHECK(report.nondegenerate_count == 4);

    const auto nondegenerate = load_fixture_points("nondegenerate");
    const auto nodes = load_fixture_points("curve_singular_locus");
    for (const SingularPoint& p : report.points) {
        CHECK(p.residual < 1e-10);
        if (p.nondegenerate) {
            CHECK(p.on_smooth_locus);
            CHECK(contains_point(nondegenerate, p.coordinates, 1e-8));
        } else {
            CHECK_FALSE(p.on_smooth_locus);
            CHECK(contains_point(nodes, p.coordinates, 1e-8));
        }
    }
}

TEST_CASE("reported points are pairwise distinct under the dedup metric") {
    for (const SolveReport& report :
         {solve_example(quartic_curve_system()), solve_example(fermat_hypersurface_system(1, 4))}) {
        for (size_t i = 0; i < report.points.size(); ++i) {
            for (size_t j = i + 1; j < report.points.size(); ++j) {
                CHECK(projective_distance(report.points[i].coordinates,
                                          report.points[j].coordinates) >=
                      report.options.tol_dedup);
            }
        }
    }
}

TEST_CASE("same seed reproduces bitwise identical reports") {
    const ExampleSystem sys = quartic_curve_system();
    const SolveReport a = solve_example(sys);
    const SolveReport b = solve_example(sys);
    REQUIRE(a.points.size() == b.points.size());
    for (size_t i = 0; i < a.points.size(); ++i) {
        CHECK(a.points[i].coordinates == b.points[i].coordinates);
        CHECK(a.points[i].residual == b.points[i].residual);
    }
}

TEST_CASE("different seeds find the same point set") {
    SolverOptions other;
    other.seed = 12345;
    const SolveReport a = solve_example(quartic_curve_system());
    const SolveReport b = solve_example(quartic_curve_system(), other);
    REQUIRE(a.points.size() == b.points.size());
    for (const SingularPoint& p : a.points) {
        bool found = false;
        for (const SingularPoint& q : b.points) {
            if (projective_distance(p.coordinates, q.coordinates) < 1e-8) found = true;
        }
        CHECK(found);
    }
}

TEST_CASE("nondegeneracy rejects points where the variety is singular") {
    const ExampleSystem sys = quartic_curve_system();
    std::vector<MultiPoly> homogeneous;
    for (const MultiPoly& f : sys.varieties) {
        homogeneous.push_back(homogenize_polynomial(f, sys.field.chart));
    }
    const HomogeneousField y = homogenize(sys.field);
    const Point node = {{1.0, 0.0}, {0.0, 1.0}, {1.0, 0.0}, {0.0, 1.0}};
    CHECK_THROWS_AS(nondegeneracy_check(node, y, homogeneous), NotSmoothPointError);
}

TEST_CASE("a forced degenerate zero fails the nondegeneracy test") {
    // Multiply the cubic-curve field by z2^3 + 1, which vanishes at every
    // singular point: the linearization there becomes zero.
    ExampleSystem sys = fermat_hypersurface_system(1, 3);
    const MultiPoly factor = parse_polynomial("z2^3 + 1", 2);
    for (MultiPoly& c : sys.field.components) c = c * factor;

    std::vector<MultiPoly> homogeneous = {
        homogenize_polynomial(sys.varieties[0], sys.field.chart)};
    const HomogeneousField y = homogenize(sys.field);
    const std::complex<double> omega = std::polar(1.0, M_PI / 3.0);
    const Point zero = {{0.0, 0.0}, omega, {1.0, 0.0}};
    CHECK_FALSE(nondegeneracy_check(zero, y, homogeneous));
}

TEST_CASE("full verification outcomes") {
    const VerifyOutcome cubic = verify_system(fermat_hypersurface_system(1, 3));
    CHECK(cubic.foliation_degree == 2);
    CHECK(cubic.invariant);
    CHECK(cubic.formula_count == 3);
    CHECK(cubic.count_matches);
    REQUIRE(cubic.min_degree.has_value());
    CHECK(*cubic.min_degree == 2);
    CHECK(cubic.bound_attained);

    const VerifyOutcome quartic = verify_system(quartic_curve_system());
    CHECK(quartic.formula_count == 4);
    CHECK(quartic.count_matches);
    CHECK(quartic.invariant);
    CHECK(quartic.bound_attained);
}

TEST_CASE("solver input validation") {
    const ExampleSystem sys = quartic_curve_system();
    std::vector<MultiPoly> homogeneous;
    for (const MultiPoly& f : sys.varieties) {
        homogeneous.push_back(homogenize_polynomial(f, sys.field.chart));
    }
    HomogeneousField zero;
    zero.components.assign(4, MultiPoly(4));
    CHECK_THROWS_AS(find_singular_points(zero, homogeneous), std::invalid_argument);

    const HomogeneousField y = homogenize(sys.field);
    CHECK_THROWS_AS(find_singular_points(y, {}), std::invalid_argument);
    // Inhomogeneous defining polynomial.
    CHECK_THROWS_AS(find_singular_points(y, {parse_polynomial("z1^2 + z2", 4)}),
                    std::invalid_argument);
}

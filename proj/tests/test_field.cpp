#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "errors.hpp"
#include "examples.hpp"
#include "field.hpp"
#include "parse.hpp"

#include <stdexcept>

using folis::BigRat;
using folis::NotApplicableError;
using namespace folis::verifier;

namespace {

MultiPoly p(const std::string& text, int num_vars) { return parse_polynomial(text, num_vars); }

AffineVectorField radial_field(int n) {
    AffineVectorField field;
    field.chart = n;
    for (int i = 0; i < n; ++i) field.components.push_back(MultiPoly::variable(n, i));
    return field;
}

}  // namespace

TEST_CASE("degree decomposition of the quartic-curve field") {
    const ExampleSystem sys = quartic_curve_system();
    const FoliationDecomposition dec = foliation_degree(sys.field);
    CHECK(dec.degree == 2);
    CHECK(dec.radial_cofactor == p("-1 * z1 * z2", 3));
    REQUIRE(dec.graded.size() == 3);
    // Degree-2 left-over parts after removing gR.
    CHECK(dec.graded[2][0] == p("z1 * z3", 3));
    CHECK(dec.graded[2][1] == p("2 * z2 * z3", 3));
    CHECK(dec.graded[2][2] == p("z3^2 - z2^2", 3));
    CHECK(dec.graded[1][1] == p("-1 * z1", 3));
    CHECK(dec.graded[0][2] == p("1", 3));
}

TEST_CASE("degree decomposition of the hypersurface fields") {
    for (int n = 1; n <= 2; ++n) {
        for (int ell = 3; ell <= 4; ++ell) {
            const ExampleSystem sys = fermat_hypersurface_system(n, ell);
            const FoliationDecomposition dec = foliation_degree(sys.field);
            CHECK(dec.degree == ell - 1);
            Exponents e(static_cast<size_t>(2 * n), 0);
            e[1] = ell - 1;
            CHECK(dec.radial_cofactor == MultiPoly::monomial(2 * n, e, BigRat(1)));
        }
    }
}

TEST_CASE("built-in cubic-curve system has the expected polynomials") {
    const ExampleSystem sys = fermat_hypersurface_system(1, 3);
    REQUIRE(sys.field.components.size() == 2);
    CHECK(sys.field.chart == 2);
    CHECK(sys.field.components[0] == p("z2^2 * z1", 2));
    CHECK(sys.field.components[1] == p("z2^3 + 1", 2));
    REQUIRE(sys.varieties.size() == 1);
    CHECK(sys.varieties[0] == p("z1^3 + z2^3 + 1", 2));

    // For n = 2 the coupled pair terms appear.
    const ExampleSystem wide = fermat_hypersurface_system(2, 3);
    REQUIRE(wide.field.components.size() == 4);
    CHECK(wide.field.components[2] == p("z2^2 * z3 - z4^2", 4));
    CHECK(wide.field.components[3] == p("z2^2 * z4 + z3^2", 4));
    CHECK_THROWS_AS(fermat_hypersurface_system(0, 3), std::invalid_argument);
    CHECK_THROWS_AS(fermat_hypersurface_system(1, 2), std::invalid_argument);
}

TEST_CASE("radial field decomposes with degree zero") {
    const FoliationDecomposition dec = foliation_degree(radial_field(3));
    CHECK(dec.degree == 0);
    CHECK(dec.radial_cofactor == MultiPoly::constant(3, BigRat(1)));
}

TEST_CASE("zero field is rejected") {
    AffineVectorField zero;
    zero.chart = 2;
    zero.components.assign(2, MultiPoly(2));
    CHECK_THROWS_AS(foliation_degree(zero), std::invalid_argument);
}

TEST_CASE("directional derivative") {
    // The radial field scales a homogeneous polynomial by its degree.
    const MultiPoly f = p("z1^2 * z2 + z3^3", 3);
    CHECK(apply_field(radial_field(3), f) == f.scaled(BigRat(3)));

    AffineVectorField d1;
    d1.chart = 2;
    d1.components = {p("1", 2), MultiPoly(2)};
    CHECK(apply_field(d1, p("z1^2", 2)) == p("2 * z1", 2));
}

TEST_CASE("homogenization of the quartic-curve field") {
    const HomogeneousField y = homogenize(quartic_curve_system().field);
    REQUIRE(y.components.size() == 4);
    CHECK(y.components[0] == p("z1 * z3", 4));
    CHECK(y.components[1] == p("2 * z2 * z3 - z1 * z4", 4));
    CHECK(y.components[2] == p("z3^2 + z4^2 - z2^2", 4));
    CHECK(y.components[3] == p("z1 * z2", 4));
    CHECK(y.degree() == 2);
}

TEST_CASE("homogenization restricted to its chart recovers the field") {
    const std::vector<ExampleSystem> systems = {
        quartic_curve_system(), fermat_hypersurface_system(1, 3),
        fermat_hypersurface_system(2, 3), fermat_hypersurface_system(1, 4),
        fermat_hypersurface_system(2, 4)};
    for (const ExampleSystem& sys : systems) {
        const HomogeneousField y = homogenize(sys.field);
        const std::vector<MultiPoly> recovered = affine_field_in_chart(y, sys.field.chart);
        REQUIRE(recovered.size() == sys.field.components.size());
        for (size_t i = 0; i < recovered.size(); ++i) {
            CHECK(recovered[i] == sys.field.components[i]);
        }
    }
}

TEST_CASE("field with no radial top part has matching degree") {
    AffineVectorField field;
    field.chart = 2;
    field.components = {p("z2^2", 2), p("z1^2", 2)};
    const FoliationDecomposition dec = foliation_degree(field);
    CHECK(dec.degree == 2);
    CHECK(dec.radial_cofactor.is_zero());
    const HomogeneousField y = homogenize(field);
    CHECK(y.components[2].is_zero());
    CHECK(y.components[0] == p("z2^2", 3));
}

// Polynomial vector fields representing one-dimensional foliations of
// projective space: the affine representation in a chosen chart, its graded
// decomposition X = gR + X_0 + .. + X_d, and the homogeneous representative
// used to locate singular points in every chart at once.
#pragma once

#include <vector>

#include "multipoly.hpp"

namespace folis::verifier {

// A polynomial field in the affine chart {Z_chart = 1} of P^n. The i-th
// component differentiates the i-th affine variable; affine variable i
// corresponds to homogeneous coordinate i when i < chart and i+1 otherwise.
struct AffineVectorField {
    int chart = 0;
    std::vector<MultiPoly> components;

    int ambient_dim() const { return static_cast<int>(components.size()); }
};

// n+1 homogeneous components of a common degree d in the n+1 homogeneous
// coordinates, defined modulo h * (Z_0..Z_n). The locus {Y(p) parallel to p}
// does not depend on the representative.
struct HomogeneousField {
    std::vector<MultiPoly> components;

    int ambient_dim() const { return static_cast<int>(components.size()) - 1; }
    long degree() const;
    bool is_zero() const;
};

// X = gR + sum_{j=0..d} X_j with g homogeneous of degree d and X_j a field
// with homogeneous degree-j components. Exactly one of the following holds:
// g != 0, or g == 0 and X_d is not a multiple of the radial field.
struct FoliationDecomposition {
    explicit FoliationDecomposition(int num_vars) : radial_cofactor(num_vars) {}

    int degree = 0;
    MultiPoly radial_cofactor;                 // g; the zero polynomial when absent
    std::vector<std::vector<MultiPoly>> graded;  // graded[j] = components of X_j
};

// Decomposes the field and determines its degree. Throws on the zero field
// and on representations violating the dichotomy above.
FoliationDecomposition foliation_degree(const AffineVectorField& field);

// Directional derivative X(f) = sum_i components[i] * df/dz_i.
MultiPoly apply_field(const AffineVectorField& field, const MultiPoly& f);

// Homogeneous representative of the foliation given by an affine field:
// Y_chart = -g and Y_i = (X_i - g*w_i) raised to degree d. When g == 0 this
// is the plain degree-d homogenization of the components with Y_chart = 0.
HomogeneousField homogenize(const AffineVectorField& field);

// The affine field induced by Y in the chart {Z_c = 1}:
// A_a(u) = Y_a(u) - u_a * Y_c(u), dehomogenized.
std::vector<MultiPoly> affine_field_in_chart(const HomogeneousField& field, int chart);

// Homogenize an affine polynomial (variables of the chart `chart` of P^n) to
// its own total degree in the n+1 homogeneous coordinates.
MultiPoly homogenize_polynomial(const MultiPoly& affine, int chart);

// Substitute Z_chart = 1 in a homogeneous polynomial.
MultiPoly dehomogenize_polynomial(const MultiPoly& homog, int chart);

}  // namespace folis::verifier

// The two built-in reference systems: a Fermat hypersurface of even-
// dimensional projective space with the rotation-like field that leaves it
// invariant, and the degree-(2,2) curve in P^3 with its degree-2 field.
#pragma once

#include <vector>

#include "field.hpp"
#include "multipoly.hpp"

namespace folis::verifier {

struct ExampleSystem {
    AffineVectorField field;
    std::vector<MultiPoly> varieties;  // affine defining polynomials
};

// Fermat hypersurface of degree ell >= 3 in P^{2n} (n >= 1), together with
// the degree-(ell-1) field tangent to it; affine chart = last coordinate.
ExampleSystem fermat_hypersurface_system(int n, int ell);

// The quartic curve cut out by two quadrics in P^3 with its degree-2 field;
// affine chart = last coordinate.
ExampleSystem quartic_curve_system();

}  // namespace folis::verifier

#include "examples.hpp"

#include <stdexcept>

namespace folis::verifier {

namespace {

MultiPoly var_power(int num_vars, int index, int exp) {
    Exponents e(static_cast<size_t>(num_vars), 0);
    e[static_cast<size_t>(index)] = exp;
    return MultiPoly::monomial(num_vars, e, BigRat(1));
}

}  // namespace

ExampleSystem fermat_hypersurface_system(int n, int ell) {
    if (n < 1) throw std::invalid_argument("fermat_hypersurface_system: n must be >= 1");
    if (ell < 3) throw std::invalid_argument("fermat_hypersurface_system: degree must be >= 3");
    const int vars = 2 * n;  // affine variables z_1..z_2n, chart = Z_{2n+1}

    ExampleSystem sys;
    sys.field.chart = vars;
    sys.field.components.assign(static_cast<size_t>(vars), MultiPoly(vars));

    const MultiPoly z2_pow = var_power(vars, 1, ell - 1);
    // z_1 component: z_2^{l-1} z_1 ; z_2 component: z_2^l + 1.
    sys.field.components[0] = z2_pow * MultiPoly::variable(vars, 0);
    sys.field.components[1] =
        var_power(vars, 1, ell) + MultiPoly::constant(vars, BigRat(1));
    // Coupled pairs (z_{2i-1}, z_{2i}) for i = 2..n.
    for (int i = 2; i <= n; ++i) {
        const int a = 2 * i - 2;  // z_{2i-1}
        const int b = 2 * i - 1;  // z_{2i}
        sys.field.components[static_cast<size_t>(a)] =
            z2_pow * MultiPoly::variable(vars, a) - var_power(vars, b, ell - 1);
        sys.field.components[static_cast<size_t>(b)] =
            z2_pow * MultiPoly::variable(vars, b) + var_power(vars, a, ell - 1);
    }

    MultiPoly fermat = MultiPoly::constant(vars, BigRat(1));
    for (int i = 0; i < vars; ++i) fermat = fermat + var_power(vars, i, ell);
    sys.varieties.push_back(fermat);
    return sys;
}

ExampleSystem quartic_curve_system() {
    const int vars = 3;  // affine chart Z_4 = 1

    ExampleSystem sys;
    sys.field.chart = vars;
    sys.field.components.assign(static_cast<size_t>(vars), MultiPoly(vars));

    const MultiPoly z1 = MultiPoly::variable(vars, 0);
    const MultiPoly z2 = MultiPoly::variable(vars, 1);
    const MultiPoly z3 = MultiPoly::variable(vars, 2);
    const MultiPoly one = MultiPoly::constant(vars, BigRat(1));
    const MultiPoly two = MultiPoly::constant(vars, BigRat(2));

    sys.field.components[0] = -(z1 * z1 * z2) + z1 * z3;
    sys.field.components[1] = -(z1 * z2 * z2) + two * z2 * z3 - z1;
    sys.field.components[2] = -(z1 * z2 * z3) - z2 * z2 + z3 * z3 + one;

    sys.varieties.push_back(z1 * z1 + z2 * z2 + z3 * z3 + one);
    sys.varieties.push_back(z1 * z3 + z2);
    return sys;
}

}  // namespace folis::verifier

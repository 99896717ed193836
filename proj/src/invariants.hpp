// Polar classes of complete intersections and the singularity-count
// polynomial for an invariant variety, in its three equivalent forms, plus
// the hyperplane-section recursion tying polar classes to Euler
// characteristics.
#pragma once

#include <vector>

#include "bigrat.hpp"
#include "ci.hpp"

namespace folis::invariants {

// (rho_0 .. rho_{n-k}); rho_0 = d^0(V).
struct PolarClasses {
    std::vector<BigInt> rho;
    int top_index() const { return static_cast<int>(rho.size()) - 1; }
};

// rho_j = d^0(V) * W_j(d_1-1, .., d_k-1)  (classical product formula).
PolarClasses polar_classes_severi_todd(const CompleteIntersectionSpec& spec);

// rho_j = d^0 * sum_{i=0..j} (-1)^i C(n-k+1-i, j-i) * (h^i coefficient of
// c(V)); an independent route through the Chern series.
PolarClasses polar_classes_via_chern(const CompleteIntersectionSpec& spec);

// N as a polynomial in the foliation degree d: coeffs[j] multiplies
// d^{(n-k)-j} and equals sum_{i=0..j} (-1)^i rho_i.
struct SingCountPolynomial {
    std::vector<BigInt> coeffs;
    BigInt evaluate(int d) const;
};

SingCountPolynomial sing_count_poly(const CompleteIntersectionSpec& spec);

// The three forms of the count of singularities of a degree-d foliation
// leaving V invariant. They agree exactly; each is computed along its own
// path (Wronski values, Euler characteristics, Chern integral).
BigInt sing_count_wronski(const CompleteIntersectionSpec& spec, FoliationDegree d);
BigInt sing_count_euler(const CompleteIntersectionSpec& spec, FoliationDegree d);

// Whether sum_{i=0..j} (-1)^i rho_i == chi(V_[n-k-j]) - chi(V_[n-k-j+1])
// for 1 <= j <= n-k. An identity; exposed as a testable oracle.
bool lefschetz_coefficient_check(const CompleteIntersectionSpec& spec, int j);

}  // namespace folis::invariants

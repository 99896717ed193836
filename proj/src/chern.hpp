// Chern-class arithmetic for complete intersections: the total Chern class
// as a truncated series in the hyperplane class, Euler characteristics of the
// variety and its generic hyperplane sections, and the Baum-Bott style
// integral of the top Chern class of the twisted tangent bundle.
#pragma once

#include <vector>

#include "bigrat.hpp"
#include "ci.hpp"
#include "hseries.hpp"

namespace folis::chern {

// Multiplicative inverse of a truncated series; throws std::domain_error on a
// vanishing constant term.
HSeries series_invert(const HSeries& s);

// c(V) = (1+h)^{n+1} / prod(1 + d_l h), truncated at order n-k. Coefficients
// are provably integers; a non-integer coefficient raises InternalError.
HSeries total_chern(const CompleteIntersectionSpec& spec);

// The integer coefficients of total_chern, index i = coefficient of h^i.
std::vector<BigInt> total_chern_coefficients(const CompleteIntersectionSpec& spec);

// chi(V) = (top coefficient of c(V)) * d^0(V).
BigInt euler_characteristic(const CompleteIntersectionSpec& spec);

// chi of the section of V by q generic hyperplanes, 0 <= q <= dim V.
// q = dim V yields d^0(V) (a finite set of points).
BigInt section_euler_characteristic(const CompleteIntersectionSpec& spec, int q);

// Number of zeros of a generic section of TV tensor O(d-1): the integral over
// V of the top Chern class of the twisted tangent bundle, expanded in the
// Chern coefficients of V.
BigInt twisted_top_chern_count(const CompleteIntersectionSpec& spec, FoliationDegree d);

}  // namespace folis::chern

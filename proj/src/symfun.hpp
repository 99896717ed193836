// Exact combinatorics: binomial coefficients and the Wronski (complete
// homogeneous symmetric) functions W_delta, together with the shift and
// reduction identities built from them.
//
// W_delta(x_1..x_k) is the sum of all monomials of total degree delta.
// It satisfies W_0 = 1, W_delta = 0 for delta < 0 and the recurrence
//   W_j(x_1..x_k) = W_{j-1}(x_1..x_k) * x_k + W_j(x_1..x_{k-1}),
// which is what the implementation runs on. All arithmetic is exact.
#pragma once

#include <vector>

#include "bigrat.hpp"

namespace folis::symfun {

using IntVector = std::vector<BigInt>;

// C(n, m); zero outside the triangle, including n < 0.
BigInt binomial(long n, long m);

// W_delta(xs). Throws std::invalid_argument when xs is empty.
BigInt wronski(long delta, const IntVector& xs);

// W_0 .. W_top in one pass; top < 0 yields an empty vector.
std::vector<BigInt> wronski_row(long top, const IntVector& xs);

// W_p(d_1 - 1, .., d_k - 1) evaluated through the alternating binomial
// expansion in the unshifted values W_i(d_1..d_k):
//   sum_{i=0..p} (-1)^{p-i} C(k+p-1, p-i) W_i(ds).
// Entries of ds must be >= 1 (the shift must stay nonnegative).
BigInt wronski_shifted_via_todd(long p, const IntVector& ds);

// sum_{delta=0..j} (-1)^delta W_delta(xs); requires j >= 0.
BigInt alternating_wronski_sum(long j, const IntVector& xs);

// Whether
//   W_delta(x_1..x_k) == W_delta(x_1..x_{k+1}) - x_{k+1} W_{delta-1}(x_1..x_{k+1})
// holds for the given inputs (xs_plus carries k+1 >= 2 entries). Exposed as a
// directly testable oracle; it is an identity, so the result is always true.
bool reduction_identity_check(long delta, const IntVector& xs_plus);

}  // namespace folis::symfun

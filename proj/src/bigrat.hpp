// Exact arbitrary-precision integers and rationals, plus the handful of
// helpers the rest of the library needs. Thin layer over GMP.
#pragma once

#include <gmpxx.h>

#include <string>

namespace folis {

using BigInt = mpz_class;
using BigRat = mpq_class;

// Reduced p/q with q > 0. Throws std::invalid_argument when den == 0.
BigRat make_rational(const BigInt& num, const BigInt& den);

BigInt ipow(const BigInt& base, unsigned long exp);
BigRat rpow(const BigRat& base, unsigned long exp);

// Smallest integer >= q.
BigInt rat_ceil(const BigRat& q);

std::string to_string(const BigInt& v);
// "p" when the denominator is 1, "p/q" otherwise.
std::string to_string(const BigRat& v);

double to_double(const BigRat& v);

}  // namespace folis

#include "bigrat.hpp"

#include <stdexcept>

namespace folis {

BigRat make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    BigRat q(num, den);
    q.canonicalize();
    return q;
}

BigInt ipow(const BigInt& base, unsigned long exp) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

BigRat rpow(const BigRat& base, unsigned long exp) {
    BigInt num = ipow(base.get_num(), exp);
    BigInt den = ipow(base.get_den(), exp);
    return make_rational(num, den);
}

BigInt rat_ceil(const BigRat& q) {
    BigInt r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return r;
}

std::string to_string(const BigInt& v) { return v.get_str(); }

std::string to_string(const BigRat& v) {
    if (v.get_den() == 1) return v.get_num().get_str();
    return v.get_num().get_str() + "/" + v.get_den().get_str();
}

double to_double(const BigRat& v) { return v.get_d(); }

}  // namespace folis

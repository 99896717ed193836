#include "symfun.hpp"

#include <stdexcept>

namespace folis::symfun {

BigInt binomial(long n, long m) {
    if (n < 0 || m < 0 || m > n) return BigInt(0);
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(m));
    return r;
}

std::vector<BigInt> wronski_row(long top, const IntVector& xs) {
    if (xs.empty()) throw std::invalid_argument("wronski: at least one variable required");
    if (top < 0) return {};
    std::vector<BigInt> w(static_cast<size_t>(top) + 1, BigInt(0));
    w[0] = 1;
    // One variable at a time; ascending j makes the in-place update read
    // w[j] as W_j^(k-1) and w[j-1] as the already-updated W_{j-1}^(k).
    for (const BigInt& x : xs) {
        for (long j = 1; j <= top; ++j) {
            w[static_cast<size_t>(j)] += w[static_cast<size_t>(j) - 1] * x;
        }
    }
    return w;
}

BigInt wronski(long delta, const IntVector& xs) {
    if (xs.empty()) throw std::invalid_argument("wronski: at least one variable required");
    if (delta < 0) return BigInt(0);
    return wronski_row(delta, xs).back();
}

BigInt wronski_shifted_via_todd(long p, const IntVector& ds) {
    if (ds.empty()) throw std::invalid_argument("wronski_shifted_via_todd: empty argument vector");
    for (const BigInt& d : ds) {
        if (d < 1) throw std::invalid_argument("wronski_shifted_via_todd: entries must be >= 1");
    }
    if (p < 0) return BigInt(0);
    const long k = static_cast<long>(ds.size());
    const std::vector<BigInt> w = wronski_row(p, ds);
    BigInt sum(0);
    for (long i = 0; i <= p; ++i) {
        BigInt term = binomial(k + p - 1, p - i) * w[static_cast<size_t>(i)];
        if ((p - i) % 2 != 0) {
            sum -= term;
        } else {
            sum += term;
        }
    }
    return sum;
}

BigInt alternating_wronski_sum(long j, const IntVector& xs) {
    if (j < 0) throw std::invalid_argument("alternating_wronski_sum: j must be >= 0");
    const std::vector<BigInt> w = wronski_row(j, xs);
    BigInt sum(0);
    for (long delta = 0; delta <= j; ++delta) {
        if (delta % 2 != 0) {
            sum -= w[static_cast<size_t>(delta)];
        } else {
            sum += w[static_cast<size_t>(delta)];
        }
    }
    return sum;
}

bool reduction_identity_check(long delta, const IntVector& xs_plus) {
    if (xs_plus.size() < 2) {
        throw std::invalid_argument("reduction_identity_check: need k+1 >= 2 variables");
    }
    IntVector xs(xs_plus.begin(), xs_plus.end() - 1);
    const BigInt& last = xs_plus.back();
    BigInt lhs = wronski(delta, xs);
    BigInt rhs = wronski(delta, xs_plus) - last * wronski(delta - 1, xs_plus);
    return lhs == rhs;
}

}  // namespace folis::symfun

#include "chern.hpp"

#include <stdexcept>

#include "errors.hpp"
#include "symfun.hpp"

namespace folis::chern {

HSeries series_invert(const HSeries& s) { return s.inverse(); }

HSeries total_chern(const CompleteIntersectionSpec& spec) {
    const int m = spec.dim();
    const int n = spec.ambient_dim();
    HSeries numerator(m);
    for (int i = 0; i <= m; ++i) {
        numerator[i] = BigRat(symfun::binomial(n + 1, i));
    }
    HSeries denominator = HSeries::one(m);
    for (int d : spec.degrees()) {
        denominator = denominator * HSeries::one_plus(BigRat(d), m);
    }
    return numerator * denominator.inverse();
}

std::vector<BigInt> total_chern_coefficients(const CompleteIntersectionSpec& spec) {
    const HSeries c = total_chern(spec);
    std::vector<BigInt> out;
    out.reserve(static_cast<size_t>(c.order()) + 1);
    for (int i = 0; i <= c.order(); ++i) {
        if (c[i].get_den() != 1) {
            throw InternalError("total Chern class produced a non-integer coefficient");
        }
        out.push_back(c[i].get_num());
    }
    return out;
}

BigInt euler_characteristic(const CompleteIntersectionSpec& spec) {
    return total_chern_coefficients(spec).back() * spec.total_degree();
}

BigInt section_euler_characteristic(const CompleteIntersectionSpec& spec, int q) {
    if (q < 0 || q > spec.dim()) {
        throw std::invalid_argument("section index must satisfy 0 <= q <= dim V");
    }
    if (q == spec.dim()) {
        // Cutting down to dimension zero leaves d^0(V) points.
        return spec.total_degree();
    }
    return euler_characteristic(
        CompleteIntersectionSpec(spec.ambient_dim() - q, spec.degrees()));
}

BigInt twisted_top_chern_count(const CompleteIntersectionSpec& spec, FoliationDegree d) {
    const int dim = spec.dim();
    const std::vector<BigInt> c = total_chern_coefficients(spec);
    const BigInt dval(d.value());
    BigInt total(0);
    for (int j = 0; j <= dim; ++j) {
        BigInt coeff(0);
        for (int i = 0; i <= j; ++i) {
            BigInt term = symfun::binomial(dim - i, j - i) * c[static_cast<size_t>(i)];
            if ((j - i) % 2 != 0) {
                coeff -= term;
            } else {
                coeff += term;
            }
        }
        total += coeff * ipow(dval, static_cast<unsigned long>(dim - j));
    }
    return total * spec.total_degree();
}

}  // namespace folis::chern

#include "invariants.hpp"

#include <stdexcept>

#include "chern.hpp"
#include "symfun.hpp"

namespace folis::invariants {

PolarClasses polar_classes_severi_todd(const CompleteIntersectionSpec& spec) {
    const BigInt d0 = spec.total_degree();
    const std::vector<BigInt> w = symfun::wronski_row(spec.dim(), spec.shifted_degree_vector());
    PolarClasses out;
    out.rho.reserve(w.size());
    for (const BigInt& wj : w) out.rho.push_back(d0 * wj);
    return out;
}

PolarClasses polar_classes_via_chern(const CompleteIntersectionSpec& spec) {
    const int dim = spec.dim();
    const BigInt d0 = spec.total_degree();
    const std::vector<BigInt> c = chern::total_chern_coefficients(spec);
    PolarClasses out;
    out.rho.reserve(static_cast<size_t>(dim) + 1);
    for (int j = 0; j <= dim; ++j) {
        BigInt sum(0);
        for (int i = 0; i <= j; ++i) {
            BigInt term = symfun::binomial(dim + 1 - i, j - i) * c[static_cast<size_t>(i)];
            if (i % 2 != 0) {
                sum -= term;
            } else {
                sum += term;
            }
        }
        out.rho.push_back(d0 * sum);
    }
    return out;
}

BigInt SingCountPolynomial::evaluate(int d) const {
    BigInt acc(0);
    const BigInt dval(d);
    for (const BigInt& c : coeffs) acc = acc * dval + c;
    return acc;
}

SingCountPolynomial sing_count_poly(const CompleteIntersectionSpec& spec) {
    const PolarClasses pc = polar_classes_severi_todd(spec);
    SingCountPolynomial poly;
    poly.coeffs.reserve(pc.rho.size());
    BigInt partial(0);
    for (size_t i = 0; i < pc.rho.size(); ++i) {
        if (i % 2 != 0) {
            partial -= pc.rho[i];
        } else {
            partial += pc.rho[i];
        }
        poly.coeffs.push_back(partial);
    }
    return poly;
}

BigInt sing_count_wronski(const CompleteIntersectionSpec& spec, FoliationDegree d) {
    const int dim = spec.dim();
    const std::vector<BigInt> w = symfun::wronski_row(dim, spec.shifted_degree_vector());
    const BigInt dval(d.value());
    BigInt total(0);
    BigInt partial(0);
    for (int j = 0; j <= dim; ++j) {
        if (j % 2 != 0) {
            partial -= w[static_cast<size_t>(j)];
        } else {
            partial += w[static_cast<size_t>(j)];
        }
        total += partial * ipow(dval, static_cast<unsigned long>(dim - j));
    }
    return total * spec.total_degree();
}

BigInt sing_count_euler(const CompleteIntersectionSpec& spec, FoliationDegree d) {
    const int dim = spec.dim();
    const BigInt dval(d.value());
    BigInt total = chern::section_euler_characteristic(spec, dim) *
                   ipow(dval, static_cast<unsigned long>(dim));
    for (int j = 1; j <= dim; ++j) {
        BigInt diff = chern::section_euler_characteristic(spec, dim - j) -
                      chern::section_euler_characteristic(spec, dim - j + 1);
        total += diff * ipow(dval, static_cast<unsigned long>(dim - j));
    }
    return total;
}

bool lefschetz_coefficient_check(const CompleteIntersectionSpec& spec, int j) {
    const int dim = spec.dim();
    if (j < 1 || j > dim) {
        throw std::invalid_argument("lefschetz_coefficient_check: j must satisfy 1 <= j <= dim V");
    }
    const PolarClasses pc = polar_classes_severi_todd(spec);
    BigInt lhs(0);
    for (int i = 0; i <= j; ++i) {
        if (i % 2 != 0) {
            lhs -= pc.rho[static_cast<size_t>(i)];
        } else {
            lhs += pc.rho[static_cast<size_t>(i)];
        }
    }
    BigInt rhs = chern::section_euler_characteristic(spec, dim - j) -
                 chern::section_euler_characteristic(spec, dim - j + 1);
    return lhs == rhs;
}

}  // namespace folis::invariants

#include "hseries.hpp"

#include <stdexcept>

namespace folis {

HSeries::HSeries(int order) {
    if (order < 0) throw std::invalid_argument("series order must be >= 0");
    coeffs_.assign(static_cast<size_t>(order) + 1, BigRat(0));
}

HSeries HSeries::one(int order) {
    HSeries s(order);
    s.coeffs_[0] = 1;
    return s;
}

HSeries HSeries::one_plus(const BigRat& c, int order) {
    HSeries s = one(order);
    if (order >= 1) s.coeffs_[1] = c;
    return s;
}

HSeries HSeries::operator+(const HSeries& rhs) const {
    if (order() != rhs.order()) throw std::invalid_argument("series order mismatch");
    HSeries r(order());
    for (size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] = coeffs_[i] + rhs.coeffs_[i];
    return r;
}

HSeries HSeries::operator-(const HSeries& rhs) const {
    if (order() != rhs.order()) throw std::invalid_argument("series order mismatch");
    HSeries r(order());
    for (size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] = coeffs_[i] - rhs.coeffs_[i];
    return r;
}

HSeries HSeries::operator*(const HSeries& rhs) const {
    if (order() != rhs.order()) throw std::invalid_argument("series order mismatch");
    HSeries r(order());
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (size_t j = 0; i + j < coeffs_.size(); ++j) {
            r.coeffs_[i + j] += coeffs_[i] * rhs.coeffs_[j];
        }
    }
    return r;
}

HSeries HSeries::scaled(const BigRat& c) const {
    HSeries r(order());
    for (size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] = coeffs_[i] * c;
    return r;
}

HSeries HSeries::inverse() const {
    if (coeffs_[0] == 0) throw std::domain_error("series inverse: zero constant term");
    HSeries r(order());
    r.coeffs_[0] = BigRat(1) / coeffs_[0];
    for (size_t i = 1; i < coeffs_.size(); ++i) {
        BigRat acc(0);
        for (size_t j = 1; j <= i; ++j) acc += coeffs_[j] * r.coeffs_[i - j];
        r.coeffs_[i] = -acc / coeffs_[0];
    }
    return r;
}

}  // namespace folis

// Truncated power series in the hyperplane class h with exact rational
// coefficients. Every operation drops terms above the truncation order, so a
// series of order m always carries exactly m+1 coefficients.
#pragma once

#include <vector>

#include "bigrat.hpp"

namespace folis {

class HSeries {
public:
    // Zero series of the given truncation order (order >= 0).
    explicit HSeries(int order);
    static HSeries one(int order);
    // 1 + c*h, truncated.
    static HSeries one_plus(const BigRat& c, int order);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const BigRat& operator[](int i) const { return coeffs_.at(static_cast<size_t>(i)); }
    BigRat& operator[](int i) { return coeffs_.at(static_cast<size_t>(i)); }

    HSeries operator+(const HSeries& rhs) const;
    HSeries operator-(const HSeries& rhs) const;
    HSeries operator*(const HSeries& rhs) const;
    HSeries scaled(const BigRat& c) const;

    // Multiplicative inverse up to the truncation order. Throws
    // std::domain_error when the constant term vanishes.
    HSeries inverse() const;

    bool operator==(const HSeries& rhs) const { return coeffs_ == rhs.coeffs_; }

private:
    std::vector<BigRat> coeffs_;
};

}  // namespace folis

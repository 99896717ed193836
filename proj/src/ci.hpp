// The arithmetic data of a smooth complete intersection in projective space:
// ambient dimension n and multidegree (d_1..d_k). Everything downstream is a
// function of these numbers alone.
#pragma once

#include <vector>

#include "bigrat.hpp"

namespace folis {

class CompleteIntersectionSpec {
public:
    // Requires n >= 2, 1 <= k <= n-1 and every degree >= 1.
    CompleteIntersectionSpec(int ambient_dim, std::vector<int> degrees);

    int ambient_dim() const { return n_; }
    const std::vector<int>& degrees() const { return degrees_; }
    int codim() const { return static_cast<int>(degrees_.size()); }
    int dim() const { return n_ - codim(); }

    // d^0(V) = product of the degrees.
    BigInt total_degree() const;
    // All degrees equal to 1, i.e. a linear subspace.
    bool is_linear_subspace() const;

    // (d_1..d_k) and (d_1-1..d_k-1) as exact integer vectors.
    std::vector<BigInt> degree_vector() const;
    std::vector<BigInt> shifted_degree_vector() const;

private:
    int n_;
    std::vector<int> degrees_;
};

// The degree of a one-dimensional holomorphic foliation; the standing
// hypothesis everywhere is d >= 2.
class FoliationDegree {
public:
    explicit FoliationDegree(int d);
    int value() const { return d_; }

private:
    int d_;
};

}  // namespace folis

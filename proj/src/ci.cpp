#include "ci.hpp"

#include <stdexcept>
#include <utility>

namespace folis {

CompleteIntersectionSpec::CompleteIntersectionSpec(int ambient_dim, std::vector<int> degrees)
    : n_(ambient_dim), degrees_(std::move(degrees)) {
    if (n_ < 2) throw std::invalid_argument("ambient projective dimension must be >= 2");
    const int k = static_cast<int>(degrees_.size());
    if (k < 1) throw std::invalid_argument("at least one defining degree required");
    if (k > n_ - 1) throw std::invalid_argument("codimension must be <= n-1");
    for (int d : degrees_) {
        if (d < 1) throw std::invalid_argument("defining degrees must be >= 1");
    }
}

BigInt CompleteIntersectionSpec::total_degree() const {
    BigInt p(1);
    for (int d : degrees_) p *= d;
    return p;
}

bool CompleteIntersectionSpec::is_linear_subspace() const {
    for (int d : degrees_) {
        if (d != 1) return false;
    }
    return true;
}

std::vector<BigInt> CompleteIntersectionSpec::degree_vector() const {
    std::vector<BigInt> v;
    v.reserve(degrees_.size());
    for (int d : degrees_) v.emplace_back(d);
    return v;
}

std::vector<BigInt> CompleteIntersectionSpec::shifted_degree_vector() const {
    std::vector<BigInt> v;
    v.reserve(degrees_.size());
    for (int d : degrees_) v.emplace_back(d - 1);
    return v;
}

FoliationDegree::FoliationDegree(int d) : d_(d) {
    if (d < 2) throw std::invalid_argument("foliation degree must be >= 2");
}

}  // namespace folis

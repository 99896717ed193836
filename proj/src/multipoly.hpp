// Sparse multivariate polynomials with exact rational coefficients.
// Terms are kept in a map from exponent vector to coefficient; zero
// coefficients are never stored, so the zero polynomial has no terms.
#pragma once

#include <complex>
#include <map>
#include <string>
#include <vector>

#include "bigrat.hpp"

namespace folis::verifier {

using Exponents = std::vector<int>;

class MultiPoly {
public:
    explicit MultiPoly(int num_vars);

    static MultiPoly constant(int num_vars, const BigRat& c);
    static MultiPoly variable(int num_vars, int index);
    static MultiPoly monomial(int num_vars, Exponents exps, const BigRat& c);

    int num_vars() const { return num_vars_; }
    bool is_zero() const { return terms_.empty(); }
    // Total degree; -1 for the zero polynomial.
    long degree() const;
    bool is_homogeneous() const;

    const std::map<Exponents, BigRat>& terms() const { return terms_; }

    void add_term(const Exponents& exps, const BigRat& c);

    MultiPoly operator+(const MultiPoly& rhs) const;
    MultiPoly operator-(const MultiPoly& rhs) const;
    MultiPoly operator*(const MultiPoly& rhs) const;
    MultiPoly operator-() const;
    MultiPoly scaled(const BigRat& c) const;
    bool operator==(const MultiPoly& rhs) const;

    MultiPoly partial_derivative(int var) const;

    BigRat evaluate(const std::vector<BigRat>& point) const;
    std::complex<double> evaluate(const std::vector<std::complex<double>>& point) const;

    // The sum of the terms of exact total degree deg.
    MultiPoly homogeneous_part(long deg) const;
    // Every term divisible by the given variable?
    bool divisible_by_variable(int var) const;
    // Quotient by the given variable (requires divisibility).
    MultiPoly divided_by_variable(int var) const;

    // Insert a fresh variable at position `at` (exponent 0 everywhere);
    // the result has num_vars + 1 variables.
    MultiPoly insert_variable(int at) const;
    // Pad each term with powers of variable `var` so every term reaches
    // total degree target_degree (requires degree() <= target_degree).
    MultiPoly raise_to_degree(int var, long target_degree) const;
    // Substitute variable `var` = 1 and remove it from the variable list.
    MultiPoly substitute_one(int var) const;

    // Human-readable and parser-compatible form: terms joined by " + ",
    // each "c * z1^2 * z3". Variables are named z1..zn.
    std::string to_string() const;

private:
    int num_vars_;
    std::map<Exponents, BigRat> terms_;
};

}  // namespace folis::verifier

#include "ideal.hpp"

#include <map>
#include <stdexcept>

namespace folis::verifier {

std::vector<Exponents> monomials_up_to_degree(int num_vars, long max_degree) {
    std::vector<Exponents> out;
    if (max_degree < 0) return out;
    Exponents current(static_cast<size_t>(num_vars), 0);
    // Depth-first over positions; lexicographic by construction.
    auto recurse = [&](auto&& self, int pos, long remaining) -> void {
        if (pos == num_vars) {
            out.push_back(current);
            return;
        }
        for (long e = 0; e <= remaining; ++e) {
            current[static_cast<size_t>(pos)] = static_cast<int>(e);
            self(self, pos + 1, remaining - e);
        }
        current[static_cast<size_t>(pos)] = 0;
    };
    recurse(recurse, 0, max_degree);
    return out;
}

std::optional<std::vector<BigRat>> solve_exact_linear_system(
    std::vector<std::vector<BigRat>> matrix, std::vector<BigRat> rhs) {
    const size_t rows = matrix.size();
    if (rhs.size() != rows) throw std::invalid_argument("rhs length mismatch");
    const size_t cols = rows == 0 ? 0 : matrix[0].size();

    std::vector<size_t> pivot_col_of_row;
    size_t row = 0;
    for (size_t col = 0; col < cols && row < rows; ++col) {
        size_t pivot = row;
        while (pivot < rows && matrix[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(matrix[pivot], matrix[row]);
        std::swap(rhs[pivot], rhs[row]);
        for (size_t r = 0; r < rows; ++r) {
            if (r == row || matrix[r][col] == 0) continue;
            BigRat factor = matrix[r][col] / matrix[row][col];
            for (size_t c = col; c < cols; ++c) matrix[r][c] -= factor * matrix[row][c];
            rhs[r] -= factor * rhs[row];
        }
        pivot_col_of_row.push_back(col);
        ++row;
    }
    for (size_t r = row; r < rows; ++r) {
        if (rhs[r] != 0) return std::nullopt;  // inconsistent
    }
    std::vector<BigRat> solution(cols, BigRat(0));
    for (size_t r = 0; r < pivot_col_of_row.size(); ++r) {
        solution[pivot_col_of_row[r]] = rhs[r] / matrix[r][pivot_col_of_row[r]];
    }
    return solution;
}

namespace {

struct AnsatzBlock {
    size_t offset = 0;                 // first unknown index of this block
    std::vector<Exponents> monomials;  // ansatz monomials for this generator
};

MultiPoly certificate_combination(const std::vector<MultiPoly>& varieties,
                                  const std::vector<MultiPoly>& multipliers) {
    MultiPoly acc(varieties[0].num_vars());
    for (size_t l = 0; l < varieties.size(); ++l) acc = acc + multipliers[l] * varieties[l];
    return acc;
}

}  // namespace

std::optional<InvarianceCertificate> invariance_certificate(
    const AffineVectorField& field, const std::vector<MultiPoly>& varieties) {
    if (varieties.empty()) throw std::invalid_argument("no defining polynomials");
    const int n = field.ambient_dim();
    for (const MultiPoly& f : varieties) {
        if (f.num_vars() != n) throw std::invalid_argument("polynomial variable-count mismatch");
        if (f.is_zero()) throw std::invalid_argument("zero defining polynomial");
    }

    InvarianceCertificate cert;
    for (const MultiPoly& f : varieties) {
        const MultiPoly target = apply_field(field, f);
        std::vector<MultiPoly> multipliers(varieties.size(), MultiPoly(n));
        if (target.is_zero()) {
            cert.multipliers.push_back(std::move(multipliers));
            continue;
        }
        const long target_degree = target.degree();

        // Unknown layout: one block of monomial coefficients per generator.
        std::vector<AnsatzBlock> blocks(varieties.size());
        size_t num_unknowns = 0;
        for (size_t l = 0; l < varieties.size(); ++l) {
            blocks[l].offset = num_unknowns;
            blocks[l].monomials =
                monomials_up_to_degree(n, target_degree - varieties[l].degree());
            num_unknowns += blocks[l].monomials.size();
        }
        if (num_unknowns == 0) return std::nullopt;

        // Equations: one per monomial of degree <= deg(target).
        std::map<Exponents, size_t> equation_index;
        const std::vector<Exponents> equation_monomials =
            monomials_up_to_degree(n, target_degree);
        for (size_t i = 0; i < equation_monomials.size(); ++i) {
            equation_index.emplace(equation_monomials[i], i);
        }

        std::vector<std::vector<BigRat>> matrix(
            equation_monomials.size(), std::vector<BigRat>(num_unknowns, BigRat(0)));
        std::vector<BigRat> rhs(equation_monomials.size(), BigRat(0));
        for (const auto& [e, c] : target.terms()) rhs[equation_index.at(e)] = c;

        for (size_t l = 0; l < varieties.size(); ++l) {
            for (size_t m = 0; m < blocks[l].monomials.size(); ++m) {
                const Exponents& ansatz = blocks[l].monomials[m];
                for (const auto& [e, c] : varieties[l].terms()) {
                    Exponents product(e.size());
                    for (size_t i = 0; i < e.size(); ++i) product[i] = e[i] + ansatz[i];
                    matrix[equation_index.at(product)][blocks[l].offset + m] += c;
                }
            }
        }

        auto solution = solve_exact_linear_system(std::move(matrix), std::move(rhs));
        if (!solution) return std::nullopt;

        for (size_t l = 0; l < varieties.size(); ++l) {
            MultiPoly a(n);
            for (size_t m = 0; m < blocks[l].monomials.size(); ++m) {
                a.add_term(blocks[l].monomials[m], (*solution)[blocks[l].offset + m]);
            }
            multipliers[l] = a;
        }
        if (!(certificate_combination(varieties, multipliers) == target)) {
            return std::nullopt;  // solver produced a non-solution; treat as failure
        }
        cert.multipliers.push_back(std::move(multipliers));
    }
    return cert;
}

bool certificate_is_exact(const AffineVectorField& field,
                          const std::vector<MultiPoly>& varieties,
                          const InvarianceCertificate& certificate) {
    if (certificate.multipliers.size() != varieties.size()) return false;
    for (size_t m = 0; m < varieties.size(); ++m) {
        MultiPoly target = apply_field(field, varieties[m]);
        if (!(certificate_combination(varieties, certificate.multipliers[m]) == target)) {
            return false;
        }
    }
    return true;
}

}  // namespace folis::verifier

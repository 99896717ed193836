#include "field.hpp"

#include <optional>
#include <stdexcept>

#include "errors.hpp"

namespace folis::verifier {

namespace {

void check_affine_field(const AffineVectorField& field) {
    const int n = field.ambient_dim();
    if (n < 1) throw std::invalid_argument("vector field needs at least one component");
    if (field.chart < 0 || field.chart > n) {
        throw std::invalid_argument("chart index out of range");
    }
    for (const MultiPoly& c : field.components) {
        if (c.num_vars() != n) {
            throw std::invalid_argument("component variable-count mismatch");
        }
    }
}

// If parts == g * (w_1..w_n) for a single polynomial g, return g.
std::optional<MultiPoly> radial_cofactor_of(const std::vector<MultiPoly>& parts) {
    const int n = static_cast<int>(parts.size());
    std::optional<MultiPoly> g;
    for (int i = 0; i < n; ++i) {
        if (parts[static_cast<size_t>(i)].is_zero()) return std::nullopt;
        if (!parts[static_cast<size_t>(i)].divisible_by_variable(i)) return std::nullopt;
        MultiPoly q = parts[static_cast<size_t>(i)].divided_by_variable(i);
        if (!g) {
            g = q;
        } else if (!(*g == q)) {
            return std::nullopt;
        }
    }
    return g;
}

}  // namespace

long HomogeneousField::degree() const {
    long d = -1;
    for (const MultiPoly& c : components) d = std::max(d, c.degree());
    return d;
}

bool HomogeneousField::is_zero() const {
    for (const MultiPoly& c : components) {
        if (!c.is_zero()) return false;
    }
    return true;
}

FoliationDecomposition foliation_degree(const AffineVectorField& field) {
    check_affine_field(field);
    const int n = field.ambient_dim();

    long top = -1;
    for (const MultiPoly& c : field.components) top = std::max(top, c.degree());
    if (top < 0) throw std::invalid_argument("zero vector field");

    std::vector<MultiPoly> top_parts;
    top_parts.reserve(static_cast<size_t>(n));
    for (const MultiPoly& c : field.components) top_parts.push_back(c.homogeneous_part(top));

    FoliationDecomposition out(n);
    std::vector<MultiPoly> rest;
    if (std::optional<MultiPoly> g = radial_cofactor_of(top_parts); g && top >= 1) {
        out.degree = static_cast<int>(top) - 1;
        out.radial_cofactor = *g;
        for (int i = 0; i < n; ++i) {
            rest.push_back(field.components[static_cast<size_t>(i)] -
                           *g * MultiPoly::variable(n, i));
        }
    } else {
        out.degree = static_cast<int>(top);
        out.radial_cofactor = MultiPoly(n);  // zero
        rest = field.components;
    }

    out.graded.resize(static_cast<size_t>(out.degree) + 1);
    for (int j = 0; j <= out.degree; ++j) {
        for (const MultiPoly& c : rest) {
            out.graded[static_cast<size_t>(j)].push_back(c.homogeneous_part(j));
        }
    }

    if (out.radial_cofactor.is_zero() && out.degree >= 1 &&
        radial_cofactor_of(out.graded.back()).has_value()) {
        // With g == 0, a radial top part means the written degree overstates
        // the foliation degree (and forces a codimension-one singular set).
        throw NotApplicableError("degree representation not reduced");
    }
    return out;
}

MultiPoly apply_field(const AffineVectorField& field, const MultiPoly& f) {
    check_affine_field(field);
    if (f.num_vars() != field.ambient_dim()) {
        throw std::invalid_argument("polynomial variable-count mismatch");
    }
    MultiPoly acc(f.num_vars());
    for (int i = 0; i < field.ambient_dim(); ++i) {
        acc = acc + field.components[static_cast<size_t>(i)] * f.partial_derivative(i);
    }
    return acc;
}

MultiPoly homogenize_polynomial(const MultiPoly& affine, int chart) {
    const long deg = std::max(affine.degree(), 0L);
    return affine.insert_variable(chart).raise_to_degree(chart, deg);
}

MultiPoly dehomogenize_polynomial(const MultiPoly& homog, int chart) {
    return homog.substitute_one(chart);
}

HomogeneousField homogenize(const AffineVectorField& field) {
    const FoliationDecomposition dec = foliation_degree(field);
    const int n = field.ambient_dim();
    const int d = dec.degree;

    HomogeneousField out;
    out.components.assign(static_cast<size_t>(n) + 1, MultiPoly(n + 1));

    out.components[static_cast<size_t>(field.chart)] =
        -dec.radial_cofactor.insert_variable(field.chart);

    for (int i = 0; i < n; ++i) {
        const int hom_index = (i < field.chart) ? i : i + 1;
        MultiPoly reduced = field.components[static_cast<size_t>(i)] -
                            dec.radial_cofactor * MultiPoly::variable(n, i);
        if (reduced.is_zero()) continue;
        out.components[static_cast<size_t>(hom_index)] =
            reduced.insert_variable(field.chart).raise_to_degree(field.chart, d);
    }
    return out;
}

std::vector<MultiPoly> affine_field_in_chart(const HomogeneousField& field, int chart) {
    const int n = field.ambient_dim();
    if (n < 1) throw std::invalid_argument("homogeneous field needs at least two components");
    if (chart < 0 || chart > n) throw std::invalid_argument("chart index out of range");

    const MultiPoly chart_comp = dehomogenize_polynomial(
        field.components[static_cast<size_t>(chart)], chart);
    std::vector<MultiPoly> out;
    out.reserve(static_cast<size_t>(n));
    for (int h = 0; h <= n; ++h) {
        if (h == chart) continue;
        const int affine_index = (h < chart) ? h : h - 1;
        MultiPoly a = dehomogenize_polynomial(field.components[static_cast<size_t>(h)], chart) -
                      MultiPoly::variable(n, affine_index) * chart_comp;
        out.push_back(a);
    }
    return out;
}

}  // namespace folis::verifier

#include "drlab/interpolation.hpp"

namespace drlab {

std::vector<std::vector<Rational>> lagrange_basis(std::span<const Rational> nodes) {
    const std::size_t m = nodes.size();
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            if (nodes[i] == nodes[j])
                throw std::invalid_argument("duplicate interpolation node " + nodes[i].to_string());

    std::vector<std::vector<Rational>> basis(m, std::vector<Rational>(m));
    for (std::size_t i = 0; i < m; ++i) {
        // prod_{j != i} (t - x_j), built up one linear factor at a time
        std::vector<Rational> poly{Rational(1)};
        Rational denom(1);
        for (std::size_t j = 0; j < m; ++j) {
            if (j == i)
                continue;
            std::vector<Rational> next(poly.size() + 1);
            for (std::size_t k = 0; k < poly.size(); ++k) {
                next[k + 1] += poly[k];
                next[k] -= poly[k] * nodes[j];
            }
            poly = std::move(next);
            denom *= nodes[i] - nodes[j];
        }
        for (std::size_t k = 0; k < m; ++k)
            basis[i][k] = poly[k] / denom;
    }
    return basis;
}

TPoly interpolate_in_t(std::span<const std::pair<Rational, MultiPoly>> samples) {
    std::vector<Rational> nodes;
    std::vector<MultiPoly> values;
    for (const auto &[t, v] : samples) {
        nodes.push_back(t);
        values.push_back(v);
    }
    TPoly out{interpolate<MultiPoly>(nodes, values)};
    while (!out.coefficients.empty() && out.coefficients.back().is_zero())
        out.coefficients.pop_back();
    return out;
}

MultiPoly TPoly::evaluate(const Rational &t) const {
    MultiPoly acc;
    for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it)
        acc = acc * MultiPoly(t) + *it;
    return acc;
}

}  // namespace drlab

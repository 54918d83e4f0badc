#ifndef DRLAB_INTERPOLATION_HPP
#define DRLAB_INTERPOLATION_HPP

#include "drlab/multi_poly.hpp"
#include "drlab/rational.hpp"

#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace drlab {

/// Polynomial in a deformation parameter t with MultiPoly coefficients;
/// coefficients[r] multiplies t^r. Trailing zeros are trimmed.
struct TPoly {
    std::vector<MultiPoly> coefficients;

    int degree() const { return static_cast<int>(coefficients.size()) - 1; }
    MultiPoly coefficient(std::size_t r) const {
        return r < coefficients.size() ? coefficients[r] : MultiPoly();
    }
    MultiPoly evaluate(const Rational &t) const;
    friend bool operator==(const TPoly &, const TPoly &) = default;
};

/// Coefficient rows (in powers of t) of the Lagrange basis polynomials
/// through `nodes`. Throws std::invalid_argument on duplicate nodes.
std::vector<std::vector<Rational>> lagrange_basis(std::span<const Rational> nodes);

/// Coefficients (lowest power first, untrimmed, size == nodes.size()) of the
/// unique polynomial of degree < nodes.size() through (nodes[i], values[i]).
/// Works over any ring that a Rational can scale.
template <class T>
std::vector<T> interpolate(std::span<const Rational> nodes, std::span<const T> values) {
    if (nodes.size() != values.size())
        throw std::invalid_argument("interpolate: node/value count mismatch");
    auto basis = lagrange_basis(nodes);
    std::vector<T> out(nodes.size(), T(Rational()));
    for (std::size_t i = 0; i < nodes.size(); ++i)
        for (std::size_t r = 0; r < nodes.size(); ++r)
            if (!basis[i][r].is_zero())
                out[r] = out[r] + values[i] * T(basis[i][r]);
    return out;
}

/// Lagrange interpolation of MultiPoly-valued samples in t.
TPoly interpolate_in_t(std::span<const std::pair<Rational, MultiPoly>> samples);

}  // namespace drlab

#endif  // DRLAB_INTERPOLATION_HPP

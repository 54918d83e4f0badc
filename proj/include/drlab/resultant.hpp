#ifndef DRLAB_RESULTANT_HPP
#define DRLAB_RESULTANT_HPP

#include "drlab/dual.hpp"
#include "drlab/errors.hpp"
#include "drlab/interpolation.hpp"
#include "drlab/multi_poly.hpp"
#include "drlab/rational.hpp"

#include <array>
#include <concepts>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace drlab {

/// Commutative integral domain with exact division, as used by the
/// determinant and resultant kernels.
template <class T>
concept ExactRing = std::constructible_from<T, Rational> && requires(const T &a, const T &b) {
    { a + b } -> std::convertible_to<T>;
    { a - b } -> std::convertible_to<T>;
    { a * b } -> std::convertible_to<T>;
    { -a } -> std::convertible_to<T>;
    { is_zero(a) } -> std::same_as<bool>;
    { exact_divide(a, b) } -> std::convertible_to<T>;
};

/// Binary form f = sum_i a_i x^i y^(m-i). coefficients[0] is the y^m
/// coefficient, coefficients[m] the x^m coefficient.
template <ExactRing T>
struct BinaryForm {
    std::vector<T> coefficients;

    BinaryForm() : coefficients{T(Rational())} {}
    explicit BinaryForm(std::vector<T> coeffs) : coefficients(std::move(coeffs)) {
        if (coefficients.empty())
            throw std::invalid_argument("a binary form needs at least one coefficient");
    }

    int degree() const { return static_cast<int>(coefficients.size()) - 1; }
    const T &operator[](std::size_t i) const { return coefficients.at(i); }
    bool is_zero() const {
        for (const auto &c : coefficients)
            if (!drlab::is_zero(c))
                return false;
        return true;
    }
    friend bool operator==(const BinaryForm &, const BinaryForm &) = default;
};

template <class T>
using Matrix = std::vector<std::vector<T>>;

/// Coefficients of Sum_r DR_{n,r} t^r: entries[r] is DR_{n,r}.
template <ExactRing T>
struct DRSeries {
    int n = 0;
    std::vector<T> entries;
};

namespace detail {

template <ExactRing T>
bool usable_pivot(const T &x) {
    return !is_zero(x);
}

// Division by a dual number needs a nonzero value part.
inline bool usable_pivot(const DualScalar &x) { return !x.value.is_zero(); }

}  // namespace detail

/// Sylvester matrix of (f, g) with d = deg f, e = deg g, both >= 1: e rows of
/// shifted f coefficients (leading x^d coefficient first), then d rows of
/// shifted g coefficients.
template <ExactRing T>
Matrix<T> sylvester_matrix(const BinaryForm<T> &f, const BinaryForm<T> &g) {
    const int d = f.degree();
    const int e = g.degree();
    if (d < 1 || e < 1)
        throw std::invalid_argument("sylvester_matrix needs degrees >= 1");
    if (f.is_zero() || g.is_zero())
        throw std::invalid_argument("sylvester_matrix of a zero form");
    const int size = d + e;
    Matrix<T> m(size, std::vector<T>(size, T(Rational())));
    for (int k = 0; k < e; ++k)
        for (int i = 0; i <= d; ++i)
            m[k][k + i] = f[d - i];
    for (int k = 0; k < d; ++k)
        for (int j = 0; j <= e; ++j)
            m[e + k][k + j] = g[e - j];
    return m;
}

/// Determinant by Bareiss fraction-free elimination. Every division is exact
/// in an integral domain. Over dual numbers a pivot must have a nonzero value
/// part; a column without one raises NumericDegenerate.
template <ExactRing T>
T det_fraction_free(Matrix<T> m) {
    const std::size_t n = m.size();
    for (const auto &row : m)
        if (row.size() != n)
            throw std::invalid_argument("determinant of a non-square matrix");
    if (n == 0)
        return T(Rational(1));
    bool negate = false;
    T prev(Rational(1));
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (!detail::usable_pivot(m[k][k])) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && !detail::usable_pivot(m[swap_row][k]))
                ++swap_row;
            if (swap_row == n) {
                bool column_zero = true;
                for (std::size_t i = k; i < n; ++i)
                    column_zero = column_zero && is_zero(m[i][k]);
                if (column_zero)
                    return T(Rational());
                throw NumericDegenerate("no invertible pivot in column " + std::to_string(k));
            }
            std::swap(m[k], m[swap_row]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = exact_divide(T(m[k][k] * m[i][j] - m[i][k] * m[k][j]), prev);
            m[i][k] = T(Rational());
        }
        prev = m[k][k];
    }
    T det = m[n - 1][n - 1];
    return negate ? T(-det) : det;
}

template <ExactRing T>
T ring_pow(const T &base, int exponent) {
    T out(Rational(1));
    for (int i = 0; i < exponent; ++i)
        out = out * base;
    return out;
}

/// Resultant normalized so that for f = prod(alpha_i0 x - alpha_i1 y) and
/// g = prod(beta_j0 x - beta_j1 y) it equals prod_{i,j} [alpha_i, beta_j].
/// This is (-1)^(de) times the Sylvester determinant; a constant argument c
/// against a form of degree m gives c^m.
template <ExactRing T>
T signed_resultant(const BinaryForm<T> &f, const BinaryForm<T> &g) {
    const bool f_zero = f.is_zero();
    const bool g_zero = g.is_zero();
    if (f_zero && g_zero)
        throw std::invalid_argument("resultant of two zero forms");
    const int d = f.degree();
    const int e = g.degree();
    if (e == 0)
        return ring_pow(g[0], d);
    if (d == 0)
        return ring_pow(f[0], e);
    if (f_zero || g_zero)
        return T(Rational());
    T det = det_fraction_free(sylvester_matrix(f, g));
    return (d * e) % 2 == 0 ? det : T(-det);
}

/// x * d/dx f, coefficient-wise i * a_i.
template <ExactRing T>
BinaryForm<T> x_dx(const BinaryForm<T> &f) {
    std::vector<T> c;
    for (int i = 0; i <= f.degree(); ++i)
        c.push_back(T(f[i] * T(Rational(i))));
    return BinaryForm<T>(std::move(c));
}

/// res(f, x f_x) / (a_0 a_d). Throws NumericDegenerate when a_0 a_d == 0.
template <ExactRing T>
T discriminant(const BinaryForm<T> &f) {
    const int d = f.degree();
    if (d < 2)
        throw std::invalid_argument("discriminant needs degree >= 2");
    T lead_trail = f[0] * f[d];
    if (is_zero(lead_trail))
        throw NumericDegenerate("discriminant requires a_0 * a_d != 0");
    return exact_divide(signed_resultant(f, x_dx(f)), lead_trail);
}

/// x f_x + t x y g for deg f = n, deg g = n - 2.
template <ExactRing T>
BinaryForm<T> deformed_derivative(const BinaryForm<T> &f, const BinaryForm<T> &g, const Rational &t) {
    BinaryForm<T> out = x_dx(f);
    const T scale(t);
    for (int k = 0; k <= g.degree(); ++k)
        out.coefficients[k + 1] = out.coefficients[k + 1] + scale * g[k];
    return out;
}

/// DR_{n,0..n}: coefficients in t of res(f, x f_x + t x y g) / (a_0 a_n),
/// extracted by evaluating at t = 0..n and interpolating.
template <ExactRing T>
DRSeries<T> dr_series(const BinaryForm<T> &f, const BinaryForm<T> &g) {
    const int n = f.degree();
    if (n < 2)
        throw std::invalid_argument("dr_series needs n >= 2");
    if (g.degree() != n - 2)
        throw std::invalid_argument("dr_series: second form must have degree n - 2");
    T lead_trail = f[0] * f[n];
    if (is_zero(lead_trail))
        throw NumericDegenerate("dr_series requires a_0 * a_n != 0");
    std::vector<Rational> nodes;
    std::vector<T> samples;
    for (int t = 0; t <= n; ++t) {
        nodes.emplace_back(t);
        samples.push_back(exact_divide(signed_resultant(f, deformed_derivative(f, g, Rational(t))), lead_trail));
    }
    return DRSeries<T>{n, interpolate<T>(nodes, samples)};
}

/// Product of binary forms (degrees add).
template <ExactRing T>
BinaryForm<T> multiply(const BinaryForm<T> &f, const BinaryForm<T> &g) {
    std::vector<T> c(f.coefficients.size() + g.coefficients.size() - 1, T(Rational()));
    for (std::size_t i = 0; i < f.coefficients.size(); ++i)
        for (std::size_t j = 0; j < g.coefficients.size(); ++j)
            c[i + j] = c[i + j] + f.coefficients[i] * g.coefficients[j];
    return BinaryForm<T>(std::move(c));
}

template <ExactRing T>
BinaryForm<T> scale(const BinaryForm<T> &f, const T &s) {
    BinaryForm<T> out = f;
    for (auto &c : out.coefficients)
        c = c * s;
    return out;
}

/// 2x2 matrix [[a, b], [c, d]] acting by (g.f)(x, y) = f(ax + by, cx + dy).
using Mat2 = std::array<Rational, 4>;

template <ExactRing T>
BinaryForm<T> act(const Mat2 &g, const BinaryForm<T> &f) {
    const int m = f.degree();
    const BinaryForm<T> first({T(g[1]), T(g[0])});   // a x + b y
    const BinaryForm<T> second({T(g[3]), T(g[2])});  // c x + d y
    BinaryForm<T> out(std::vector<T>(m + 1, T(Rational())));
    for (int i = 0; i <= m; ++i) {
        BinaryForm<T> piece({f[i]});
        for (int k = 0; k < i; ++k)
            piece = multiply(piece, first);
        for (int k = i; k < m; ++k)
            piece = multiply(piece, second);
        for (int k = 0; k <= m; ++k)
            out.coefficients[k] = out.coefficients[k] + piece[k];
    }
    return out;
}

/// Form with symbolic coefficients prefix0..prefixm (e.g. a0, a1, a2).
BinaryForm<MultiPoly> generic_form(const std::string &prefix, int degree);

/// Substitutes a point into every coefficient.
BinaryForm<Rational> evaluate(const BinaryForm<MultiPoly> &f, const std::map<std::string, Rational> &point);

}  // namespace drlab

#endif  // DRLAB_RESULTANT_HPP

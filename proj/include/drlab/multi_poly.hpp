#ifndef DRLAB_MULTI_POLY_HPP
#define DRLAB_MULTI_POLY_HPP

#include "drlab/dual.hpp"
#include "drlab/rational.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace drlab {

/// Sparse multivariate polynomial over the rationals.
///
/// Terms are keyed by exponent vectors over an ordered list of variable
/// names (the namespace). Binary operations on polynomials with different
/// namespaces first re-embed both operands into the union namespace: the
/// left operand's variables in order, followed by new variables of the right
/// operand. Terms are kept sorted by decreasing lexicographic exponent order
/// and never hold a zero coefficient.
class MultiPoly {
public:
    using Exponents = std::vector<std::uint32_t>;
    using Namespace = std::vector<std::string>;

    struct Term {
        Exponents exponents;
        Rational coefficient;
        friend bool operator==(const Term &, const Term &) = default;
    };

    MultiPoly() = default;
    MultiPoly(const Rational &constant);
    MultiPoly(long constant) : MultiPoly(Rational(constant)) {}
    MultiPoly(int constant) : MultiPoly(Rational(constant)) {}

    static MultiPoly variable(const std::string &name);
    /// Builds a polynomial from raw terms; duplicates are merged, zeros dropped.
    static MultiPoly from_terms(Namespace vars, std::vector<Term> terms);

    const Namespace &variables() const;
    std::span<const Term> terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Value of a constant polynomial; throws std::domain_error otherwise.
    Rational constant_value() const;
    std::uint32_t total_degree() const;
    /// Degree in one variable (0 when the variable is absent).
    std::uint32_t degree_in(const std::string &var) const;

    /// Re-embeds into `target`, which must contain every variable used here.
    MultiPoly with_namespace(std::shared_ptr<const Namespace> target) const;

    MultiPoly &operator+=(const MultiPoly &o);
    MultiPoly &operator-=(const MultiPoly &o);
    MultiPoly &operator*=(const MultiPoly &o);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly &b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly &b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly &a, const MultiPoly &b);
    friend MultiPoly operator-(const MultiPoly &a);

    MultiPoly scaled(const Rational &c) const;
    MultiPoly derivative(const std::string &var) const;

    /// Replaces each mapped variable by a polynomial; unmapped variables stay.
    MultiPoly substitute(const std::map<std::string, MultiPoly> &images) const;

    /// Exact value at a point; throws std::out_of_range when a variable that
    /// occurs in some term is unbound.
    Rational evaluate(const std::map<std::string, Rational> &point) const;

    /// Value and exact partial derivative along `direction`, by evaluating
    /// with dual numbers. `direction` must be bound in `point`.
    DualScalar eval_with_dual(const std::map<std::string, Rational> &point,
                              const std::string &direction) const;

    std::string to_string() const;

    friend bool operator==(const MultiPoly &a, const MultiPoly &b);
    friend std::ostream &operator<<(std::ostream &os, const MultiPoly &p) {
        return os << p.to_string();
    }

private:
    static std::shared_ptr<const Namespace> empty_namespace();
    static std::shared_ptr<const Namespace> merged(const MultiPoly &a, const MultiPoly &b);
    void align_to(const std::shared_ptr<const Namespace> &ns);
    void add_scaled(const MultiPoly &o, int sign);

    std::shared_ptr<const Namespace> vars_ = empty_namespace();
    std::vector<Term> terms_;

    friend MultiPoly exact_divide(const MultiPoly &p, const MultiPoly &q);
};

/// Raises to a non-negative power; throws std::invalid_argument for e < 0.
MultiPoly pow(const MultiPoly &base, long exponent);

inline bool is_zero(const MultiPoly &p) { return p.is_zero(); }

/// Returns r with p == q * r. Throws NotDivisible when no polynomial
/// quotient exists and std::domain_error when q is zero.
MultiPoly exact_divide(const MultiPoly &p, const MultiPoly &q);

}  // namespace drlab

#endif  // DRLAB_MULTI_POLY_HPP

#ifndef DRLAB_LAURENT_HPP
#define DRLAB_LAURENT_HPP

#include "drlab/bracket.hpp"
#include "drlab/rational.hpp"
#include "drlab/theorem_check.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace drlab {

enum class LaurentFamily : std::uint8_t { A, B, C, D };

/// Variable of the Laurent ring attached to the fan triangulation through
/// beta_{n-2}:
///   A_i = [b_{n-2}, a_i]   i = 1..n
///   B_i = [b_{n-2}, b_i]   i = 1..n-3
///   C_i = [a_i, a_{i+1}]   i = 1..n-1,   C_n = [a_n, b_1]
///   D_i = [b_i, b_{i+1}]   i = 1..n-4
struct LaurentVar {
    LaurentFamily family = LaurentFamily::A;
    int index = 1;

    std::string name() const;  // "A1", "C3"
    static LaurentVar parse(const std::string &name);
    friend auto operator<=>(const LaurentVar &, const LaurentVar &) = default;
};

/// The labelled (2n-2)-gon alpha_1..alpha_n, beta_1..beta_{n-2}
/// (counter-clockwise) with all diagonals drawn from the apex beta_{n-2}.
class PolygonModel {
public:
    explicit PolygonModel(int n);

    int n() const { return n_; }
    SymbolId apex() const { return beta(n_ - 2); }
    /// Non-apex vertices in counter-clockwise order, starting at alpha_1.
    const std::vector<SymbolId> &chain() const { return chain_; }
    std::vector<SymbolId> vertex_cycle() const;

    /// Variables in lex priority order A_1..A_n, B_1..B_{n-3}, C_1..C_n, D_1..D_{n-4}.
    const std::vector<LaurentVar> &variables() const { return vars_; }
    std::size_t variable_count() const { return vars_.size(); }
    /// Column of a variable in exponent vectors; throws std::out_of_range.
    std::size_t column(LaurentVar v) const;
    /// True exactly for the diagonals of the triangulation.
    bool invertible(LaurentVar v) const;
    BracketFactor defining_bracket(LaurentVar v) const;

    std::vector<BracketFactor> polygon_edges() const;
    std::vector<BracketFactor> diagonals() const;

    /// Position of a non-apex vertex on the chain; throws for the apex.
    std::size_t position(SymbolId s) const;
    /// Variable equal to [apex, s] for a non-apex vertex s.
    LaurentVar apex_variable(SymbolId s) const;
    /// Variable equal to [s, t] for chain-consecutive s, t (s before t).
    LaurentVar edge_variable(SymbolId s, SymbolId t) const;

private:
    int n_;
    std::vector<SymbolId> chain_;
    std::vector<LaurentVar> vars_;
};

/// Exponent vector over PolygonModel::variables(); negative entries allowed.
/// Ordered lexicographically in the variable priority order, so `a > b`
/// means a is larger in the monomial order.
struct LaurentMonomial {
    std::vector<int> exponents;

    LaurentMonomial() = default;
    explicit LaurentMonomial(std::size_t size) : exponents(size, 0) {}
    explicit LaurentMonomial(std::vector<int> e) : exponents(std::move(e)) {}

    int degree(const PolygonModel &model, LaurentVar v) const { return exponents.at(model.column(v)); }
    LaurentMonomial &operator*=(const LaurentMonomial &o);
    friend LaurentMonomial operator*(LaurentMonomial a, const LaurentMonomial &b) { return a *= b; }
    friend auto operator<=>(const LaurentMonomial &, const LaurentMonomial &) = default;

    std::string to_string(const PolygonModel &model) const;
};

/// Rational Laurent polynomial over a polygon model's variables. Terms are
/// kept in decreasing monomial order with no zero coefficients.
class LaurentPoly {
public:
    struct Term {
        LaurentMonomial monomial;
        Rational coefficient;
        friend bool operator==(const Term &, const Term &) = default;
    };

    LaurentPoly() = default;
    explicit LaurentPoly(std::size_t variable_count) : width_(variable_count) {}
    static LaurentPoly monomial(LaurentMonomial m, Rational coefficient);
    static LaurentPoly from_terms(std::size_t variable_count, std::vector<Term> terms);

    std::size_t width() const { return width_; }
    const std::vector<Term> &terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    LaurentPoly &operator+=(const LaurentPoly &o);
    LaurentPoly &operator-=(const LaurentPoly &o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly &b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly &b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly &a, const LaurentPoly &b);
    friend LaurentPoly operator-(const LaurentPoly &a);
    LaurentPoly scaled(const Rational &c) const;

    /// Substitutes each variable's defining bracket value.
    Rational evaluate(const PolygonModel &model, const SymbolAssignment &a) const;
    std::string to_string(const PolygonModel &model) const;

    friend bool operator==(const LaurentPoly &, const LaurentPoly &) = default;

private:
    std::size_t width_ = 0;
    std::vector<Term> terms_;
};

LaurentPoly pow(const LaurentPoly &base, unsigned exponent);

/// Boundary walk from x to y on the side of the polygon avoiding the apex.
/// Throws std::invalid_argument when x == y or either endpoint is the apex.
std::vector<SymbolId> boundary_path(const PolygonModel &model, SymbolId x, SymbolId y);

/// Laurent expansion of [x, y] along the boundary path,
///   [x, y] = sum_i [g, x][g, y][d_i, d_{i+1}] / ([g, d_i][g, d_{i+1}]),
/// with g the apex. Exponents are accumulated additively, so the endpoint
/// factors cancel without any polynomial division.
LaurentPoly laurent_expand_bracket(const PolygonModel &model, SymbolId x, SymbolId y);

/// Multiplicative-additive extension of laurent_expand_bracket.
LaurentPoly laurent_expand_poly(const PolygonModel &model, const BracketPolynomial &bp);

/// Largest monomial in the lex order; throws std::domain_error for zero.
LaurentMonomial lex_leading_monomial(const LaurentPoly &p);

/// Closed-form leading monomial of [alpha_i, alpha_j] or [alpha_i, beta_k]
/// (either argument order). Throws std::invalid_argument otherwise.
LaurentMonomial lm_bracket_closed_form(const PolygonModel &model, SymbolId x, SymbolId y);

/// Leading monomial of DR_{n,r} as the product of bracket leading monomials
/// of the I = [r] term. Requires n >= 3 and r == 0 or 2 <= r <= n.
LaurentMonomial lm_dr_closed_form(int n, int r);

struct DegreeFormula {
    int c = 0;        // deg_{C_l} lm(DR_{n,r})
    int a_prime = 0;  // deg_{A_l} lm(DR_{n,r}) + c
};

/// Closed forms for deg_{C_l} and a'_{r,l}. The l = n case needs n >= 4.
DegreeFormula degree_formulas(int n, int r, int l);

/// deg_{A_l} of the leading monomial of the I-term of the bracket sum, by
/// the piecewise closed formula.
int per_term_A_degree(int n, const std::vector<int> &subset, int l);

struct TermRanking {
    std::vector<int> subset;
    LaurentMonomial lm;
};

struct DominanceReport {
    int n = 0;
    int r = 0;
    /// All C(n, r) terms sorted by decreasing leading monomial.
    std::vector<TermRanking> ranking;
    /// True when the I = [r] term's lm is strictly larger than every other.
    bool dominant = false;
    /// Number of terms whose lm was also confirmed by full expansion.
    std::size_t fully_expanded = 0;
    /// (subset, l) pairs where per_term_A_degree disagrees with the expansion.
    std::vector<std::pair<std::vector<int>, int>> formula_mismatches;
};

/// Expands every term of the bracket sum for DR_{n,r} and ranks the leading
/// monomials. Term lms are taken as products of the lms of fully expanded
/// brackets; terms are also expanded in full when n <= full_expansion_max_n.
DominanceReport dominance_check(int n, int r, int full_expansion_max_n = 4);

enum class DegreeMethod { ClosedForm, Direct };

struct DegreeMatrix {
    int n = 0;
    DegreeMethod method = DegreeMethod::ClosedForm;
    std::vector<int> rows;                  // r values: 0, 2, 3, ..., n
    std::vector<LaurentVar> columns;
    std::vector<std::vector<int>> degrees;  // degrees[row][column]
};

inline constexpr int kDirectExpansionMaxN = 5;

/// Rows deg_X lm(DR_{n,r}) for r in {0, 2, ..., n}. The direct method fully
/// expands the bracket sums and throws BudgetExceeded for n > direct_max_n.
DegreeMatrix degree_matrix_P(int n, DegreeMethod method, int direct_max_n = kDirectExpansionMaxN);

/// v_r = (a'_{r,2} - a'_{r,3}, c_{r,2}, ..., c_{r,n-1}) for r in {0, 2, ..., n}.
std::vector<std::vector<int>> proof_vectors(int n);

/// Checks both readings of a' against lm_dr_closed_form over all (r, l):
/// deg_A == a' - c versus the literal deg_A - deg_C == a'.
struct APrimeReading {
    bool minus_form_holds = true;
    bool literal_definition_holds = true;
};
APrimeReading check_a_prime_reading(int n);

/// Every bracket's expansion re-evaluated at random generic assignments, plus
/// the denominator discipline (inverses only on diagonals).
VerificationReport verify_laurent(int n, int trials, std::uint64_t seed);

}  // namespace drlab

#endif  // DRLAB_LAURENT_HPP

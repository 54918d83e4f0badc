#ifndef DRLAB_BRACKET_HPP
#define DRLAB_BRACKET_HPP

#include "drlab/multi_poly.hpp"
#include "drlab/rational.hpp"
#include "drlab/resultant.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace drlab {

enum class Family : std::uint8_t { Alpha, Beta };

/// Root symbol alpha_i (1 <= i <= n) or beta_k (1 <= k <= n - 2).
/// Ordered alpha_1 < ... < alpha_n < beta_1 < ... < beta_{n-2}.
struct SymbolId {
    Family family = Family::Alpha;
    int index = 1;

    std::string name() const;  // "a3", "b1"
    static SymbolId parse(const std::string &name);
    friend auto operator<=>(const SymbolId &, const SymbolId &) = default;
};

inline SymbolId alpha(int i) { return {Family::Alpha, i}; }
inline SymbolId beta(int k) { return {Family::Beta, k}; }

/// Coordinates (s_0, s_1) of a symbol, i.e. the linear factor s_0 x - s_1 y.
struct SymbolCoords {
    Rational u;
    Rational v;
    friend bool operator==(const SymbolCoords &, const SymbolCoords &) = default;
};

class SymbolAssignment {
public:
    void bind(SymbolId s, SymbolCoords c) { coords_[s] = std::move(c); }
    /// Throws std::out_of_range for an unbound symbol.
    const SymbolCoords &at(SymbolId s) const;
    bool contains(SymbolId s) const { return coords_.contains(s); }
    const std::map<SymbolId, SymbolCoords> &coords() const { return coords_; }

    /// Value of the degree-0 second form when n == 2 (there are no beta
    /// symbols then, and the form is just this constant).
    Rational constant_form{1};

    bool pairwise_brackets_nonzero() const;
    bool alpha_coordinates_nonzero() const;

    friend bool operator==(const SymbolAssignment &, const SymbolAssignment &) = default;

private:
    std::map<SymbolId, SymbolCoords> coords_;
};

/// [s, t] = s_0 t_1 - t_0 s_1.
Rational bracket_eval(SymbolId s, SymbolId t, const SymbolAssignment &a);

using BracketFactor = std::pair<SymbolId, SymbolId>;

/// Signed product of brackets in canonical form: each factor has its smaller
/// symbol first and factors are sorted.
struct BracketMonomial {
    int sign = 1;
    std::vector<BracketFactor> factors;
    friend bool operator==(const BracketMonomial &, const BracketMonomial &) = default;
};

/// Canonical form of a product of brackets; std::nullopt when a factor
/// [s, s] makes the product vanish.
std::optional<BracketMonomial> canonicalize(std::span<const BracketFactor> factors);

/// Rational combination of canonical bracket monomials over the symbols of
/// context n (alpha_1..alpha_n, beta_1..beta_{n-2}). Monomial signs are folded
/// into the coefficients.
class BracketPolynomial {
public:
    explicit BracketPolynomial(int n) : n_(n) {}

    int context() const { return n_; }
    const std::map<std::vector<BracketFactor>, Rational> &terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    void add(const BracketMonomial &m, const Rational &coefficient);
    /// Canonicalizes and accumulates a raw product of brackets.
    void add_product(std::span<const BracketFactor> factors, const Rational &coefficient);

    friend bool operator==(const BracketPolynomial &, const BracketPolynomial &) = default;

private:
    void check_bounds(const BracketFactor &f) const;

    int n_;
    std::map<std::vector<BracketFactor>, Rational> terms_;
};

/// [a,b][c,d] + [a,c][d,b] + [a,d][b,c]; requires four distinct symbols.
BracketPolynomial plucker_relation(SymbolId a, SymbolId b, SymbolId c, SymbolId d);

/// One summand of the bracket expression for DR_{n,r}, before merging.
struct DRBracketTerm {
    std::vector<int> subset;              // I, increasing
    std::vector<BracketFactor> factors;   // as written: [alpha_i, alpha_j], [beta_k, alpha_i]
};

/// All I subset of [n] with |I| = r in co-lexicographic order.
std::vector<std::vector<int>> colex_subsets(int n, int r);

/// The C(n, r) raw terms prod_{j in J, i != j} [a_i, a_j] * prod_{i in I, k} [b_k, a_i].
/// Throws SpecialCase for (n, r) == (2, 2).
std::vector<DRBracketTerm> dr_bracket_terms(int n, int r);
BracketPolynomial dr_bracket_sum(int n, int r);

/// Expanded forms prod (a_i0 x - a_i1 y) of degree n and prod (b_k0 x - b_k1 y)
/// of degree n - 2 (the constant `constant_form` when n == 2).
std::pair<BinaryForm<Rational>, BinaryForm<Rational>> forms_from_assignment(const SymbolAssignment &a, int n);

/// Name of the coordinate variable s_eps of a symbol, e.g. "a2_0".
std::string coordinate_name(SymbolId s, int eps);

/// Coefficients a_0..a_m of prod_{j=1}^m (s_j0 x - s_j1 y) as polynomials in
/// the symbol coordinates of the given family.
std::vector<MultiPoly> expand_form_coefficients(Family family, int m);

Rational eval_bracket_poly(const BracketPolynomial &bp, const SymbolAssignment &a);

/// Expands every bracket as s_0 t_1 - t_0 s_1 over the coordinate variables.
MultiPoly bracket_poly_to_multipoly(const BracketPolynomial &bp);

/// Deterministic per seed: integer coordinates in [-bound, bound], resampled
/// until all pairwise brackets and all alpha coordinates are nonzero. For
/// n == 2 the constant second form is drawn nonzero as well. Throws
/// std::runtime_error when the resampling budget runs out.
SymbolAssignment random_generic_assignment(int n, std::uint64_t seed, long bound = 16);

/// SplitMix64 finalizer, used to derive independent per-trial seeds.
std::uint64_t mix_seed(std::uint64_t master, std::uint64_t index);

std::vector<SymbolId> all_symbols(int n);

}  // namespace drlab

#endif  // DRLAB_BRACKET_HPP

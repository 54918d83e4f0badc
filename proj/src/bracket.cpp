#include "drlab/bracket.hpp"

#include "drlab/errors.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace drlab {

std::string SymbolId::name() const {
    return (family == Family::Alpha ? "a" : "b") + std::to_string(index);
}

SymbolId SymbolId::parse(const std::string &name) {
    if (name.size() < 2 || (name[0] != 'a' && name[0] != 'b'))
        throw std::invalid_argument("malformed symbol name '" + name + "'");
    std::size_t used = 0;
    int index = 0;
    try {
        index = std::stoi(name.substr(1), &used);
    } catch (const std::exception &) {
        throw std::invalid_argument("malformed symbol name '" + name + "'");
    }
    if (used != name.size() - 1 || index < 1)
        throw std::invalid_argument("malformed symbol name '" + name + "'");
    return {name[0] == 'a' ? Family::Alpha : Family::Beta, index};
}

const SymbolCoords &SymbolAssignment::at(SymbolId s) const {
    auto it = coords_.find(s);
    if (it == coords_.end())
        throw std::out_of_range("unbound symbol " + s.name());
    return it->second;
}

bool SymbolAssignment::pairwise_brackets_nonzero() const {
    for (auto i = coords_.begin(); i != coords_.end(); ++i)
        for (auto j = std::next(i); j != coords_.end(); ++j)
            if ((i->second.u * j->second.v - j->second.u * i->second.v).is_zero())
                return false;
    return true;
}

bool SymbolAssignment::alpha_coordinates_nonzero() const {
    for (const auto &[s, c] : coords_)
        if (s.family == Family::Alpha && (c.u.is_zero() || c.v.is_zero()))
            return false;
    return true;
}

Rational bracket_eval(SymbolId s, SymbolId t, const SymbolAssignment &a) {
    const auto &x = a.at(s);
    const auto &y = a.at(t);
    return x.u * y.v - y.u * x.v;
}

std::optional<BracketMonomial> canonicalize(std::span<const BracketFactor> factors) {
    BracketMonomial m;
    m.factors.reserve(factors.size());
    for (auto [s, t] : factors) {
        if (s == t)
            return std::nullopt;
        if (t < s) {
            std::swap(s, t);
            m.sign = -m.sign;
        }
        m.factors.emplace_back(s, t);
    }
    std::sort(m.factors.begin(), m.factors.end());
    return m;
}

void BracketPolynomial::check_bounds(const BracketFactor &f) const {
    for (SymbolId s : {f.first, f.second}) {
        int limit = s.family == Family::Alpha ? n_ : n_ - 2;
        if (s.index < 1 || s.index > limit)
            throw std::out_of_range("symbol " + s.name() + " outside context n=" + std::to_string(n_));
    }
}

void BracketPolynomial::add(const BracketMonomial &m, const Rational &coefficient) {
    for (const auto &f : m.factors)
        check_bounds(f);
    Rational c = m.sign < 0 ? -coefficient : coefficient;
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(m.factors, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

void BracketPolynomial::add_product(std::span<const BracketFactor> factors, const Rational &coefficient) {
    for (const auto &f : factors)
        check_bounds(f);
    if (auto m = canonicalize(factors))
        add(*m, coefficient);
}

BracketPolynomial plucker_relation(SymbolId a, SymbolId b, SymbolId c, SymbolId d) {
    std::vector<SymbolId> syms{a, b, c, d};
    std::sort(syms.begin(), syms.end());
    if (std::adjacent_find(syms.begin(), syms.end()) != syms.end())
        throw std::invalid_argument("plucker_relation needs four distinct symbols");
    int n = 2;
    for (auto s : syms)
        n = std::max(n, s.family == Family::Alpha ? s.index : s.index + 2);
    BracketPolynomial p(n);
    const BracketFactor t1[] = {{a, b}, {c, d}};
    const BracketFactor t2[] = {{a, c}, {d, b}};
    const BracketFactor t3[] = {{a, d}, {b, c}};
    p.add_product(t1, Rational(1));
    p.add_product(t2, Rational(1));
    p.add_product(t3, Rational(1));
    return p;
}

std::vector<std::vector<int>> colex_subsets(int n, int r) {
    if (n < 0 || r < 0 || r > n || n > 62)
        throw std::invalid_argument("colex_subsets: need 0 <= r <= n <= 62");
    std::vector<std::vector<int>> out;
    if (r == 0) {
        out.emplace_back();
        return out;
    }
    // Gosper's hack walks the r-subsets in increasing bitmask order, which is
    // co-lexicographic order.
    std::uint64_t mask = (std::uint64_t{1} << r) - 1;
    const std::uint64_t limit = std::uint64_t{1} << n;
    while (mask < limit) {
        std::vector<int> subset;
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1)
                subset.push_back(i + 1);
        out.push_back(std::move(subset));
        std::uint64_t c = mask & -mask;
        std::uint64_t rr = mask + c;
        mask = (((rr ^ mask) >> 2) / c) | rr;
    }
    return out;
}

std::vector<DRBracketTerm> dr_bracket_terms(int n, int r) {
    if (n < 2 || r < 0 || r > n)
        throw std::invalid_argument("dr_bracket_terms: need n >= 2 and 0 <= r <= n");
    if (n == 2 && r == 2)
        throw SpecialCase("DR_{2,2} = f_0^2 has no bracket expression");
    std::vector<DRBracketTerm> out;
    for (auto &subset : colex_subsets(n, r)) {
        std::vector<bool> in_subset(n + 1, false);
        for (int i : subset)
            in_subset[i] = true;
        DRBracketTerm term;
        for (int j = 1; j <= n; ++j) {
            if (in_subset[j])
                continue;
            for (int i = 1; i <= n; ++i)
                if (i != j)
                    term.factors.emplace_back(alpha(i), alpha(j));
        }
        for (int i : subset)
            for (int k = 1; k <= n - 2; ++k)
                term.factors.emplace_back(beta(k), alpha(i));
        term.subset = std::move(subset);
        out.push_back(std::move(term));
    }
    return out;
}

BracketPolynomial dr_bracket_sum(int n, int r) {
    BracketPolynomial p(n);
    for (const auto &term : dr_bracket_terms(n, r))
        p.add_product(term.factors, Rational(1));
    return p;
}

std::pair<BinaryForm<Rational>, BinaryForm<Rational>> forms_from_assignment(const SymbolAssignment &a, int n) {
    if (n < 2)
        throw std::invalid_argument("forms_from_assignment needs n >= 2");
    auto product = [&](Family family, int m) {
        BinaryForm<Rational> f({Rational(1)});
        for (int i = 1; i <= m; ++i) {
            const auto &c = a.at({family, i});
            f = multiply(f, BinaryForm<Rational>({-c.v, c.u}));
        }
        return f;
    };
    BinaryForm<Rational> second = n == 2 ? BinaryForm<Rational>({a.constant_form}) : product(Family::Beta, n - 2);
    return {product(Family::Alpha, n), second};
}

std::string coordinate_name(SymbolId s, int eps) { return s.name() + "_" + std::to_string(eps); }

std::vector<MultiPoly> expand_form_coefficients(Family family, int m) {
    if (m < 1)
        throw std::invalid_argument("expand_form_coefficients needs m >= 1");
    BinaryForm<MultiPoly> f({MultiPoly(1)});
    for (int j = 1; j <= m; ++j) {
        SymbolId s{family, j};
        MultiPoly u = MultiPoly::variable(coordinate_name(s, 0));
        MultiPoly v = MultiPoly::variable(coordinate_name(s, 1));
        f = multiply(f, BinaryForm<MultiPoly>({-v, u}));
    }
    return f.coefficients;
}

Rational eval_bracket_poly(const BracketPolynomial &bp, const SymbolAssignment &a) {
    std::map<BracketFactor, Rational> cache;
    Rational sum;
    for (const auto &[factors, coefficient] : bp.terms()) {
        Rational term = coefficient;
        for (const auto &f : factors) {
            auto it = cache.find(f);
            if (it == cache.end())
                it = cache.emplace(f, bracket_eval(f.first, f.second, a)).first;
            term *= it->second;
            if (term.is_zero())
                break;
        }
        sum += term;
    }
    return sum;
}

MultiPoly bracket_poly_to_multipoly(const BracketPolynomial &bp) {
    std::map<BracketFactor, MultiPoly> cache;
    MultiPoly sum;
    for (const auto &[factors, coefficient] : bp.terms()) {
        MultiPoly term(coefficient);
        for (const auto &f : factors) {
            auto it = cache.find(f);
            if (it == cache.end()) {
                auto [s, t] = f;
                MultiPoly b = MultiPoly::variable(coordinate_name(s, 0)) * MultiPoly::variable(coordinate_name(t, 1)) -
                              MultiPoly::variable(coordinate_name(t, 0)) * MultiPoly::variable(coordinate_name(s, 1));
                it = cache.emplace(f, std::move(b)).first;
            }
            term *= it->second;
        }
        sum += term;
    }
    return sum;
}

std::uint64_t mix_seed(std::uint64_t master, std::uint64_t index) {
    std::uint64_t z = master + 0x9e3779b97f4a7c15ull * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

std::vector<SymbolId> all_symbols(int n) {
    std::vector<SymbolId> out;
    for (int i = 1; i <= n; ++i)
        out.push_back(alpha(i));
    for (int k = 1; k <= n - 2; ++k)
        out.push_back(beta(k));
    return out;
}

SymbolAssignment random_generic_assignment(int n, std::uint64_t seed, long bound) {
    if (n < 2)
        throw std::invalid_argument("random_generic_assignment needs n >= 2");
    if (bound < 1)
        throw std::invalid_argument("random_generic_assignment needs bound >= 1");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> coord(-bound, bound);
    constexpr int kMaxAttempts = 10000;
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        SymbolAssignment a;
        for (auto s : all_symbols(n))
            a.bind(s, {Rational(coord(rng)), Rational(coord(rng))});
        if (n == 2) {
            long c = 0;
            while (c == 0)
                c = coord(rng);
            a.constant_form = Rational(c);
        }
        if (a.alpha_coordinates_nonzero() && a.pairwise_brackets_nonzero())
            return a;
    }
    throw std::runtime_error("random_generic_assignment: resampling budget exhausted (bound " +
                             std::to_string(bound) + " too small for n=" + std::to_string(n) + ")");
}

}  // namespace drlab

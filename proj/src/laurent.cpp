#include "drlab/laurent.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace drlab {

namespace {

struct MonomialHash {
    std::size_t operator()(const std::vector<int> &e) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (int x : e)
            h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        return h;
    }
};

bool by_decreasing_monomial(const LaurentPoly::Term &a, const LaurentPoly::Term &b) {
    return a.monomial > b.monomial;
}

}  // namespace

// ---------------------------------------------------------------- variables

std::string LaurentVar::name() const {
    static constexpr char letters[] = {'A', 'B', 'C', 'D'};
    return std::string(1, letters[static_cast<int>(family)]) + std::to_string(index);
}

LaurentVar LaurentVar::parse(const std::string &name) {
    if (name.size() < 2 || name[0] < 'A' || name[0] > 'D')
        throw std::invalid_argument("malformed Laurent variable '" + name + "'");
    int index = 0;
    for (std::size_t i = 1; i < name.size(); ++i) {
        if (name[i] < '0' || name[i] > '9')
            throw std::invalid_argument("malformed Laurent variable '" + name + "'");
        index = index * 10 + (name[i] - '0');
    }
    return {static_cast<LaurentFamily>(name[0] - 'A'), index};
}

PolygonModel::PolygonModel(int n) : n_(n) {
    if (n < 3)
        throw std::invalid_argument("PolygonModel needs n >= 3");
    for (int i = 1; i <= n; ++i)
        chain_.push_back(alpha(i));
    for (int k = 1; k <= n - 3; ++k)
        chain_.push_back(beta(k));
    for (int i = 1; i <= n; ++i)
        vars_.push_back({LaurentFamily::A, i});
    for (int i = 1; i <= n - 3; ++i)
        vars_.push_back({LaurentFamily::B, i});
    for (int i = 1; i <= n; ++i)
        vars_.push_back({LaurentFamily::C, i});
    for (int i = 1; i <= n - 4; ++i)
        vars_.push_back({LaurentFamily::D, i});
}

std::vector<SymbolId> PolygonModel::vertex_cycle() const {
    auto cycle = chain_;
    cycle.push_back(apex());
    return cycle;
}

std::size_t PolygonModel::column(LaurentVar v) const {
    auto it = std::lower_bound(vars_.begin(), vars_.end(), v);
    if (it == vars_.end() || *it != v)
        throw std::out_of_range("variable " + v.name() + " not in the ring for n=" + std::to_string(n_));
    return static_cast<std::size_t>(it - vars_.begin());
}

bool PolygonModel::invertible(LaurentVar v) const {
    column(v);
    // diagonals from the apex skip its two neighbours alpha_1 and
    // beta_{n-3} (alpha_n when n == 3)
    switch (v.family) {
    case LaurentFamily::A:
        return v.index >= 2 && (n_ > 3 || v.index < n_);
    case LaurentFamily::B:
        return v.index <= n_ - 4;
    default:
        return false;
    }
}

BracketFactor PolygonModel::defining_bracket(LaurentVar v) const {
    column(v);
    switch (v.family) {
    case LaurentFamily::A:
        return {apex(), alpha(v.index)};
    case LaurentFamily::B:
        return {apex(), beta(v.index)};
    case LaurentFamily::C:
        return v.index < n_ ? BracketFactor{alpha(v.index), alpha(v.index + 1)} : BracketFactor{alpha(n_), beta(1)};
    case LaurentFamily::D:
        return {beta(v.index), beta(v.index + 1)};
    }
    throw std::logic_error("unreachable");
}

std::vector<BracketFactor> PolygonModel::polygon_edges() const {
    auto cycle = vertex_cycle();
    std::vector<BracketFactor> edges;
    for (std::size_t i = 0; i < cycle.size(); ++i)
        edges.emplace_back(cycle[i], cycle[(i + 1) % cycle.size()]);
    return edges;
}

std::vector<BracketFactor> PolygonModel::diagonals() const {
    std::vector<BracketFactor> out;
    for (std::size_t i = 1; i + 1 < chain_.size(); ++i)
        out.emplace_back(apex(), chain_[i]);
    return out;
}

std::size_t PolygonModel::position(SymbolId s) const {
    if (s.family == Family::Alpha && s.index >= 1 && s.index <= n_)
        return static_cast<std::size_t>(s.index - 1);
    if (s.family == Family::Beta && s.index >= 1 && s.index <= n_ - 3)
        return static_cast<std::size_t>(n_ + s.index - 1);
    throw std::out_of_range("symbol " + s.name() + " is not a chain vertex for n=" + std::to_string(n_));
}

LaurentVar PolygonModel::apex_variable(SymbolId s) const {
    position(s);
    return s.family == Family::Alpha ? LaurentVar{LaurentFamily::A, s.index} : LaurentVar{LaurentFamily::B, s.index};
}

LaurentVar PolygonModel::edge_variable(SymbolId s, SymbolId t) const {
    if (position(t) != position(s) + 1)
        throw std::invalid_argument(s.name() + "," + t.name() + " is not a boundary edge");
    if (s.family == Family::Alpha)
        return {LaurentFamily::C, s.index};
    return {LaurentFamily::D, s.index};
}

// ---------------------------------------------------------------- monomials

LaurentMonomial &LaurentMonomial::operator*=(const LaurentMonomial &o) {
    if (exponents.size() != o.exponents.size())
        throw std::invalid_argument("Laurent monomials of different widths");
    for (std::size_t i = 0; i < exponents.size(); ++i)
        exponents[i] += o.exponents[i];
    return *this;
}

std::string LaurentMonomial::to_string(const PolygonModel &model) const {
    std::ostringstream os;
    bool any = false;
    for (std::size_t i = 0; i < exponents.size(); ++i) {
        if (exponents[i] == 0)
            continue;
        if (any)
            os << '*';
        os << model.variables()[i].name();
        if (exponents[i] != 1)
            os << '^' << exponents[i];
        any = true;
    }
    return any ? os.str() : "1";
}

// ---------------------------------------------------------------- polynomials

LaurentPoly LaurentPoly::monomial(LaurentMonomial m, Rational coefficient) {
    LaurentPoly p(m.exponents.size());
    if (!coefficient.is_zero())
        p.terms_.push_back({std::move(m), std::move(coefficient)});
    return p;
}

LaurentPoly LaurentPoly::from_terms(std::size_t variable_count, std::vector<Term> terms) {
    LaurentPoly p(variable_count);
    for (auto &t : terms) {
        if (t.monomial.exponents.size() != variable_count)
            throw std::invalid_argument("Laurent term width mismatch");
        p += monomial(std::move(t.monomial), std::move(t.coefficient));
    }
    return p;
}

LaurentPoly &LaurentPoly::operator+=(const LaurentPoly &o) {
    if (o.is_zero())
        return *this;
    if (is_zero())
        width_ = o.width_;
    if (width_ != o.width_)
        throw std::invalid_argument("Laurent polynomials of different widths");
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.begin();
    auto b = o.terms_.begin();
    while (a != terms_.end() || b != o.terms_.end()) {
        if (b == o.terms_.end() || (a != terms_.end() && a->monomial > b->monomial)) {
            out.push_back(std::move(*a++));
        } else if (a == terms_.end() || b->monomial > a->monomial) {
            out.push_back(*b++);
        } else {
            Rational c = a->coefficient + b->coefficient;
            if (!c.is_zero())
                out.push_back({std::move(a->monomial), std::move(c)});
            ++a;
            ++b;
        }
    }
    terms_ = std::move(out);
    return *this;
}

LaurentPoly &LaurentPoly::operator-=(const LaurentPoly &o) { return *this += -o; }

LaurentPoly operator-(const LaurentPoly &a) {
    LaurentPoly out = a;
    for (auto &t : out.terms_)
        t.coefficient = -t.coefficient;
    return out;
}

LaurentPoly LaurentPoly::scaled(const Rational &c) const {
    if (c.is_zero())
        return LaurentPoly(width_);
    LaurentPoly out = *this;
    for (auto &t : out.terms_)
        t.coefficient *= c;
    return out;
}

LaurentPoly operator*(const LaurentPoly &a, const LaurentPoly &b) {
    if (a.is_zero() || b.is_zero())
        return LaurentPoly(std::max(a.width_, b.width_));
    if (a.width_ != b.width_)
        throw std::invalid_argument("Laurent polynomials of different widths");
    std::unordered_map<std::vector<int>, mpq_class, MonomialHash> acc;
    acc.reserve(a.terms_.size() * b.terms_.size());
    std::vector<int> e(a.width_);
    for (const auto &s : a.terms_) {
        for (const auto &t : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i)
                e[i] = s.monomial.exponents[i] + t.monomial.exponents[i];
            acc[e] += s.coefficient.raw() * t.coefficient.raw();
        }
    }
    LaurentPoly out(a.width_);
    out.terms_.reserve(acc.size());
    for (auto &[exps, c] : acc)
        if (sgn(c) != 0)
            out.terms_.push_back({LaurentMonomial(exps), Rational(c)});
    std::sort(out.terms_.begin(), out.terms_.end(), by_decreasing_monomial);
    return out;
}

LaurentPoly pow(const LaurentPoly &base, unsigned exponent) {
    LaurentPoly result = LaurentPoly::monomial(LaurentMonomial(base.width()), Rational(1));
    LaurentPoly b = base;
    while (exponent > 0) {
        if (exponent & 1)
            result = result * b;
        exponent >>= 1;
        if (exponent > 0)
            b = b * b;
    }
    return result;
}

Rational LaurentPoly::evaluate(const PolygonModel &model, const SymbolAssignment &a) const {
    if (width_ != 0 && width_ != model.variable_count())
        throw std::invalid_argument("Laurent polynomial does not belong to this model");
    std::vector<Rational> values;
    for (auto v : model.variables()) {
        auto [s, t] = model.defining_bracket(v);
        values.push_back(bracket_eval(s, t, a));
    }
    Rational sum;
    for (const auto &term : terms_) {
        Rational m = term.coefficient;
        for (std::size_t i = 0; i < values.size(); ++i) {
            int e = term.monomial.exponents[i];
            if (e > 0)
                m *= pow(values[i], static_cast<unsigned>(e));
            else if (e < 0)
                m /= pow(values[i], static_cast<unsigned>(-e));
        }
        sum += m;
    }
    return sum;
}

std::string LaurentPoly::to_string(const PolygonModel &model) const {
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto &t : terms_) {
        Rational c = t.coefficient;
        bool negative = c.sign() < 0;
        if (negative)
            c = -c;
        os << (first ? (negative ? "-" : "") : (negative ? " - " : " + "));
        first = false;
        std::string mono = t.monomial.to_string(model);
        if (mono == "1")
            os << c;
        else if (c == Rational(1))
            os << mono;
        else
            os << c << '*' << mono;
    }
    return os.str();
}

// ---------------------------------------------------------------- expansion

std::vector<SymbolId> boundary_path(const PolygonModel &model, SymbolId x, SymbolId y) {
    if (x == y)
        throw std::invalid_argument("boundary_path needs distinct endpoints");
    if (x == model.apex() || y == model.apex())
        throw std::invalid_argument("boundary_path endpoint equals the apex");
    std::size_t px = model.position(x);
    std::size_t py = model.position(y);
    const auto &chain = model.chain();
    std::vector<SymbolId> path;
    if (px < py) {
        path.assign(chain.begin() + static_cast<long>(px), chain.begin() + static_cast<long>(py) + 1);
    } else {
        for (std::size_t i = px + 1; i-- > py;)
            path.push_back(chain[i]);
    }
    return path;
}

LaurentPoly laurent_expand_bracket(const PolygonModel &model, SymbolId x, SymbolId y) {
    const std::size_t width = model.variable_count();
    if (x == y)
        return LaurentPoly(width);
    auto unit = [&](LaurentVar v, int sign) {
        LaurentMonomial m(width);
        m.exponents[model.column(v)] = 1;
        return LaurentPoly::monomial(std::move(m), Rational(sign));
    };
    if (x == model.apex())
        return unit(model.apex_variable(y), 1);
    if (y == model.apex())
        return unit(model.apex_variable(x), -1);
    if (model.position(x) > model.position(y))
        return -laurent_expand_bracket(model, y, x);

    auto path = boundary_path(model, x, y);
    const std::size_t x_col = model.column(model.apex_variable(x));
    const std::size_t y_col = model.column(model.apex_variable(y));
    LaurentPoly out(width);
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        LaurentMonomial m(width);
        m.exponents[x_col] += 1;
        m.exponents[y_col] += 1;
        m.exponents[model.column(model.edge_variable(path[i], path[i + 1]))] += 1;
        m.exponents[model.column(model.apex_variable(path[i]))] -= 1;
        m.exponents[model.column(model.apex_variable(path[i + 1]))] -= 1;
        out += LaurentPoly::monomial(std::move(m), Rational(1));
    }
    return out;
}

LaurentPoly laurent_expand_poly(const PolygonModel &model, const BracketPolynomial &bp) {
    const std::size_t width = model.variable_count();
    std::map<BracketFactor, LaurentPoly> cache;
    auto expansion = [&](const BracketFactor &f) -> const LaurentPoly & {
        auto it = cache.find(f);
        if (it == cache.end())
            it = cache.emplace(f, laurent_expand_bracket(model, f.first, f.second)).first;
        return it->second;
    };
    LaurentPoly sum(width);
    for (const auto &[factors, coefficient] : bp.terms()) {
        // factors are sorted, so equal brackets are adjacent
        LaurentPoly term = LaurentPoly::monomial(LaurentMonomial(width), coefficient);
        for (std::size_t i = 0; i < factors.size();) {
            std::size_t j = i;
            while (j < factors.size() && factors[j] == factors[i])
                ++j;
            term = term * pow(expansion(factors[i]), static_cast<unsigned>(j - i));
            i = j;
        }
        sum += term;
    }
    return sum;
}

LaurentMonomial lex_leading_monomial(const LaurentPoly &p) {
    if (p.is_zero())
        throw std::domain_error("leading monomial of the zero polynomial");
    return p.terms().front().monomial;
}

// ---------------------------------------------------------------- soundness

VerificationReport verify_laurent(int n, int trials, std::uint64_t seed) {
    PolygonModel model(n);
    VerificationReport rep;
    rep.target = "laurent";
    rep.n = n;
    rep.trials = trials;
    rep.seed = seed;

    auto symbols = all_symbols(n);
    std::vector<std::pair<BracketFactor, LaurentPoly>> expansions;
    for (auto x : symbols) {
        for (auto y : symbols) {
            if (x == y)
                continue;
            auto e = laurent_expand_bracket(model, x, y);
            for (const auto &t : e.terms()) {
                ++rep.checks;
                for (std::size_t c = 0; c < model.variable_count(); ++c) {
                    if (t.monomial.exponents[c] < 0 && !model.invertible(model.variables()[c])) {
                        rep.failures.push_back({0, -1, "inverses only on diagonals", t.monomial.to_string(model),
                                                "expansion of [" + x.name() + "," + y.name() +
                                                    "] inverts a boundary variable",
                                                std::nullopt});
                    }
                }
            }
            expansions.emplace_back(BracketFactor{x, y}, std::move(e));
        }
    }
    for (int trial = 0; trial < trials; ++trial) {
        auto a = random_generic_assignment(n, mix_seed(seed, static_cast<std::uint64_t>(trial)));
        for (const auto &[f, e] : expansions) {
            ++rep.checks;
            Rational expected = bracket_eval(f.first, f.second, a);
            Rational actual = e.evaluate(model, a);
            if (expected != actual)
                rep.failures.push_back({static_cast<std::uint64_t>(trial), -1, expected.to_string(),
                                        actual.to_string(),
                                        "expansion of [" + f.first.name() + "," + f.second.name() + "] disagrees",
                                        a});
        }
    }
    return rep;
}

}  // namespace drlab

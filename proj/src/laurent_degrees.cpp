#include "drlab/errors.hpp"
#include "drlab/laurent.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace drlab {

namespace {

void require_dr_index(int n, int r) {
    if (n < 3)
        throw std::invalid_argument("leading-monomial formulas need n >= 3");
    if (r == 1)
        throw std::invalid_argument("DR_{n,1} vanishes and has no leading monomial");
    if (r < 0 || r > n)
        throw std::invalid_argument("r out of range");
}

int c_formula(int n, int r, int l) {
    if (l <= r - 1)
        return 0;
    if (l <= n - 1)
        return 2 * l - r;
    return r;
}

int a_prime_formula(int n, int r, int l) { return l <= r ? 2 * n - r - 2 : 2 * n - 2 * l; }

// Accumulates exponents with the conventions B_0 = A_n and D_0 = C_n.
struct ExponentBuilder {
    const PolygonModel &model;
    LaurentMonomial m;

    explicit ExponentBuilder(const PolygonModel &p) : model(p), m(p.variable_count()) {}

    void add(LaurentFamily family, int index, int e) {
        if (index == 0 && family == LaurentFamily::B)
            family = LaurentFamily::A, index = model.n();
        else if (index == 0 && family == LaurentFamily::D)
            family = LaurentFamily::C, index = model.n();
        m.exponents[model.column({family, index})] += e;
    }
};

}  // namespace

LaurentMonomial lm_bracket_closed_form(const PolygonModel &model, SymbolId x, SymbolId y) {
    const int n = model.n();
    if (y < x)
        std::swap(x, y);
    if (x == y)
        throw std::invalid_argument("lm_bracket_closed_form of [s, s]");
    if (x.family != Family::Alpha || x.index < 1 || x.index > n)
        throw std::invalid_argument("lm_bracket_closed_form covers [alpha_i, alpha_j] and [alpha_i, beta_k] only");
    ExponentBuilder b(model);
    const int i = x.index;
    if (y.family == Family::Alpha) {
        const int j = y.index;
        if (j > n)
            throw std::invalid_argument("alpha index out of range");
        b.add(LaurentFamily::A, i, 1);
        b.add(LaurentFamily::A, j - 1, -1);
        b.add(LaurentFamily::C, j - 1, 1);
        return b.m;
    }
    const int k = y.index;
    if (k < 1 || k > n - 2)
        throw std::invalid_argument("beta index out of range");
    b.add(LaurentFamily::A, i, 1);
    if (k == n - 2)
        return b.m;
    // k == 1 is the B_0 = A_n, D_0 = C_n instance of the general case
    b.add(LaurentFamily::B, k - 1, -1);
    b.add(LaurentFamily::D, k - 1, 1);
    return b.m;
}

LaurentMonomial lm_dr_closed_form(int n, int r) {
    require_dr_index(n, r);
    PolygonModel model(n);
    ExponentBuilder b(model);
    for (int j = r + 1; j <= n; ++j) {
        for (int i = 1; i < j; ++i) {
            b.add(LaurentFamily::A, i, 1);
            b.add(LaurentFamily::A, j - 1, -1);
            b.add(LaurentFamily::C, j - 1, 1);
        }
        for (int i = j + 1; i <= n; ++i) {
            b.add(LaurentFamily::A, j, 1);
            b.add(LaurentFamily::A, i - 1, -1);
            b.add(LaurentFamily::C, i - 1, 1);
        }
    }
    for (int k = 1; k <= n - 3; ++k) {
        b.add(LaurentFamily::B, k - 1, -r);
        b.add(LaurentFamily::D, k - 1, r);
    }
    for (int i = 1; i <= r; ++i)
        b.add(LaurentFamily::A, i, n - 2);
    return b.m;
}

DegreeFormula degree_formulas(int n, int r, int l) {
    require_dr_index(n, r);
    if (l < 1 || l > n)
        throw std::invalid_argument("l out of range");
    if (l == n && n < 4)
        throw std::invalid_argument("the closed form for deg C_n needs n >= 4");
    return {c_formula(n, r, l), a_prime_formula(n, r, l)};
}

int per_term_A_degree(int n, const std::vector<int> &subset, int l) {
    if (n < 3 || l < 1 || l > n)
        throw std::invalid_argument("per_term_A_degree: need n >= 3 and l in [n]");
    std::vector<bool> in_i(n + 2, false);
    for (int i : subset) {
        if (i < 1 || i > n)
            throw std::invalid_argument("subset element out of range");
        in_i[i] = true;
    }
    const int r = static_cast<int>(subset.size());
    int degree = in_i[l] ? n - 2 : n - l;
    if (l < n && !in_i[l + 1])
        degree -= l;
    if (l <= n - 1) {
        int j_below = 0;
        for (int k = 1; k <= l; ++k)
            j_below += in_i[k] ? 0 : 1;
        degree += n - r - 2 * j_below;
    } else if (n >= 4) {
        // B_0 = A_n enters once per I element, only when k = 1 is a
        // non-apex beta
        degree -= r;
    }
    return degree;
}

DominanceReport dominance_check(int n, int r, int full_expansion_max_n) {
    PolygonModel model(n);
    DominanceReport rep;
    rep.n = n;
    rep.r = r;
    std::map<BracketFactor, LaurentMonomial> bracket_lm;
    const std::size_t a_cols = static_cast<std::size_t>(n);

    for (const auto &term : dr_bracket_terms(n, r)) {
        LaurentMonomial lm(model.variable_count());
        for (const auto &f : term.factors) {
            auto it = bracket_lm.find(f);
            if (it == bracket_lm.end())
                it = bracket_lm.emplace(f, lex_leading_monomial(laurent_expand_bracket(model, f.first, f.second))).first;
            lm *= it->second;
        }
        if (n <= full_expansion_max_n) {
            BracketPolynomial single(n);
            single.add_product(term.factors, Rational(1));
            if (lex_leading_monomial(laurent_expand_poly(model, single)) != lm)
                throw std::logic_error("leading monomial is not multiplicative on a bracket term");
            ++rep.fully_expanded;
        }
        for (std::size_t l = 1; l <= a_cols; ++l)
            if (per_term_A_degree(n, term.subset, static_cast<int>(l)) != lm.exponents[l - 1])
                rep.formula_mismatches.emplace_back(term.subset, static_cast<int>(l));
        rep.ranking.push_back({term.subset, std::move(lm)});
    }
    std::stable_sort(rep.ranking.begin(), rep.ranking.end(),
                     [](const TermRanking &a, const TermRanking &b) { return a.lm > b.lm; });
    std::vector<int> first_r;
    for (int i = 1; i <= r; ++i)
        first_r.push_back(i);
    rep.dominant = rep.ranking.front().subset == first_r &&
                   (rep.ranking.size() == 1 || rep.ranking[0].lm > rep.ranking[1].lm);
    return rep;
}

DegreeMatrix degree_matrix_P(int n, DegreeMethod method, int direct_max_n) {
    if (n < 3)
        throw std::invalid_argument("degree_matrix_P needs n >= 3");
    if (method == DegreeMethod::Direct && n > direct_max_n)
        throw BudgetExceeded("direct expansion of DR_{n,r} is limited to n <= " + std::to_string(direct_max_n));
    PolygonModel model(n);
    DegreeMatrix P;
    P.n = n;
    P.method = method;
    P.columns = model.variables();
    for (int r = 0; r <= n; ++r) {
        if (r == 1)
            continue;
        LaurentMonomial lm = method == DegreeMethod::ClosedForm
                                 ? lm_dr_closed_form(n, r)
                                 : lex_leading_monomial(laurent_expand_poly(model, dr_bracket_sum(n, r)));
        P.rows.push_back(r);
        P.degrees.push_back(lm.exponents);
    }
    return P;
}

std::vector<std::vector<int>> proof_vectors(int n) {
    if (n < 3)
        throw std::invalid_argument("proof_vectors needs n >= 3");
    std::vector<std::vector<int>> out;
    for (int r = 0; r <= n; ++r) {
        if (r == 1)
            continue;
        std::vector<int> v{a_prime_formula(n, r, 2) - a_prime_formula(n, r, 3)};
        for (int l = 2; l <= n - 1; ++l)
            v.push_back(c_formula(n, r, l));
        out.push_back(std::move(v));
    }
    return out;
}

APrimeReading check_a_prime_reading(int n) {
    PolygonModel model(n);
    APrimeReading reading;
    for (int r = 0; r <= n; ++r) {
        if (r == 1)
            continue;
        auto lm = lm_dr_closed_form(n, r);
        for (int l = 1; l <= n; ++l) {
            if (l == n && n < 4)
                continue;
            auto f = degree_formulas(n, r, l);
            int deg_a = lm.degree(model, {LaurentFamily::A, l});
            int deg_c = lm.degree(model, {LaurentFamily::C, l});
            reading.minus_form_holds = reading.minus_form_holds && deg_a == f.a_prime - f.c;
            reading.literal_definition_holds = reading.literal_definition_holds && deg_a - deg_c == f.a_prime;
        }
    }
    return reading;
}

}  // namespace drlab

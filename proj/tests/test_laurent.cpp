#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "drlab/errors.hpp"
#include "drlab/laurent.hpp"

#include <random>

using namespace drlab;

namespace {

LaurentMonomial mono(const PolygonModel &m, std::initializer_list<std::pair<const char *, int>> exps) {
    LaurentMonomial out(m.variable_count());
    for (const auto &[name, e] : exps)
        out.exponents[m.column(LaurentVar::parse(name))] += e;
    return out;
}

LaurentPoly random_laurent(const PolygonModel &m, std::mt19937_64 &rng) {
    std::uniform_int_distribution<int> e(-2, 2), c(-4, 4), count(1, 4);
    std::vector<LaurentPoly::Term> terms;
    int k = count(rng);
    for (int i = 0; i < k; ++i) {
        LaurentMonomial mo(m.variable_count());
        for (auto &x : mo.exponents)
            x = e(rng);
        int coef = c(rng);
        terms.push_back({mo, Rational(coef == 0 ? 1 : coef)});
    }
    return LaurentPoly::from_terms(m.variable_count(), std::move(terms));
}

}  // namespace

TEST_CASE("polygon model shape") {
    for (int n = 3; n <= 8; ++n) {
        PolygonModel m(n);
        CHECK(m.vertex_cycle().size() == static_cast<std::size_t>(2 * n - 2));
        CHECK(m.apex() == beta(n - 2));
        CHECK(m.polygon_edges().size() + m.diagonals().size() == static_cast<std::size_t>(2 * (2 * n - 2) - 3));
        std::size_t expected_vars = n + std::max(n - 3, 0) + n + std::max(n - 4, 0);
        CHECK(m.variable_count() == expected_vars);
        for (const auto &v : m.variables()) {
            bool diagonal = (v.family == LaurentFamily::A && v.index >= 2 && v.index <= n &&
                             !(n == 3 && v.index == 3)) ||
                            (v.family == LaurentFamily::B && v.index <= n - 4);
            CHECK(m.invertible(v) == diagonal);
        }
    }
    PolygonModel m3(3);
    CHECK(m3.invertible({LaurentFamily::A, 2}));
    CHECK_FALSE(m3.invertible({LaurentFamily::A, 3}));
    CHECK_THROWS(PolygonModel(2));
}

TEST_CASE("boundary_path") {
    PolygonModel m(5);
    CHECK(boundary_path(m, alpha(1), alpha(4)) == std::vector<SymbolId>{alpha(1), alpha(2), alpha(3), alpha(4)});
    CHECK(boundary_path(m, alpha(2), beta(2)) ==
          std::vector<SymbolId>{alpha(2), alpha(3), alpha(4), alpha(5), beta(1), beta(2)});
    CHECK(boundary_path(m, alpha(1), alpha(2)) == std::vector<SymbolId>{alpha(1), alpha(2)});
    CHECK_THROWS_AS(boundary_path(m, alpha(1), beta(3)), std::invalid_argument);
    CHECK_THROWS_AS(boundary_path(m, alpha(1), alpha(1)), std::invalid_argument);
}

TEST_CASE("laurent_expand_bracket examples") {
    PolygonModel m(3);
    auto c1 = laurent_expand_bracket(m, alpha(1), alpha(2));
    CHECK(c1 == LaurentPoly::monomial(mono(m, {{"C1", 1}}), Rational(1)));

    auto e13 = laurent_expand_bracket(m, alpha(1), alpha(3));
    LaurentPoly expected = LaurentPoly::monomial(mono(m, {{"A1", 1}, {"A2", -1}, {"C2", 1}}), Rational(1)) +
                           LaurentPoly::monomial(mono(m, {{"A3", 1}, {"A2", -1}, {"C1", 1}}), Rational(1));
    CHECK(e13 == expected);

    PolygonModel m5(5);
    for (int i = 1; i <= 5; ++i)
        CHECK(laurent_expand_bracket(m5, alpha(i), beta(3)) ==
              LaurentPoly::monomial(mono(m5, {{("A" + std::to_string(i)).c_str(), 1}}), Rational(-1)));
}

TEST_CASE("laurent_expand_poly examples") {
    PolygonModel m(3);
    auto disc = laurent_expand_poly(m, dr_bracket_sum(3, 0));
    // [a1,a3]^2 contributes three Laurent terms
    CHECK(disc.size() == 3);
    CHECK(lex_leading_monomial(disc) == mono(m, {{"A1", 2}, {"A2", -2}, {"C1", 2}, {"C2", 4}}));
    for (int n = 3; n <= 5; ++n)
        CHECK(laurent_expand_poly(PolygonModel(n), dr_bracket_sum(n, 1)).is_zero());
    CHECK(laurent_expand_poly(m, BracketPolynomial(3)).is_zero());
}

TEST_CASE("evaluation compatibility and denominators") {
    for (int n = 3; n <= 6; ++n) {
        auto rep = verify_laurent(n, 40, 5);
        CHECK(rep.passed());
        CHECK(rep.checks > 0);
    }
}

TEST_CASE("lex leading monomial") {
    PolygonModel m(3);
    auto e13 = laurent_expand_bracket(m, alpha(1), alpha(3));
    CHECK(lex_leading_monomial(e13) == mono(m, {{"A1", 1}, {"A2", -1}, {"C2", 1}}));
    auto single = LaurentPoly::monomial(mono(m, {{"C3", 2}}), Rational(5));
    CHECK(lex_leading_monomial(single) == mono(m, {{"C3", 2}}));
    CHECK_THROWS_AS(lex_leading_monomial(LaurentPoly(m.variable_count())), std::domain_error);
}

TEST_CASE("lm multiplicativity against all term pairs") {
    PolygonModel m(5);
    std::mt19937_64 rng(2);
    for (int t = 0; t < 50; ++t) {
        auto p = random_laurent(m, rng), q = random_laurent(m, rng);
        if (p.is_zero() || q.is_zero())
            continue;
        LaurentMonomial best;
        bool first = true;
        for (const auto &a : p.terms())
            for (const auto &b : q.terms()) {
                auto prod = a.monomial * b.monomial;
                if (first || prod > best)
                    best = prod;
                first = false;
            }
        CHECK(lex_leading_monomial(p * q) == best);
        CHECK(lex_leading_monomial(p * q) == lex_leading_monomial(p) * lex_leading_monomial(q));
    }
}

TEST_CASE("lm_bracket_closed_form") {
    PolygonModel m3(3);
    CHECK(lm_bracket_closed_form(m3, alpha(1), alpha(3)) == mono(m3, {{"A1", 1}, {"A2", -1}, {"C2", 1}}));
    PolygonModel m5(5);
    CHECK(lm_bracket_closed_form(m5, alpha(2), beta(1)) == mono(m5, {{"A2", 1}, {"A5", -1}, {"C5", 1}}));
    CHECK(lm_bracket_closed_form(m5, alpha(2), beta(3)) == mono(m5, {{"A2", 1}}));
    CHECK(lm_bracket_closed_form(m3, alpha(2), beta(1)) == mono(m3, {{"A2", 1}}));
    CHECK_THROWS_AS(lm_bracket_closed_form(m5, beta(1), beta(2)), std::invalid_argument);
    CHECK_THROWS_AS(lm_bracket_closed_form(m5, alpha(1), beta(4)), std::invalid_argument);

    for (int n = 3; n <= 6; ++n) {
        PolygonModel m(n);
        auto syms = all_symbols(n);
        for (auto x : syms)
            for (auto y : syms) {
                if (x == y || x.family == Family::Beta && y.family == Family::Beta)
                    continue;
                CHECK(lm_bracket_closed_form(m, x, y) == lex_leading_monomial(laurent_expand_bracket(m, x, y)));
            }
    }
}

TEST_CASE("lm_dr_closed_form") {
    PolygonModel m(3);
    CHECK(lm_dr_closed_form(3, 0) == mono(m, {{"A1", 2}, {"A2", -2}, {"C1", 2}, {"C2", 4}}));
    CHECK(lm_dr_closed_form(3, 3) == mono(m, {{"A1", 1}, {"A2", 1}, {"A3", 1}}));
    CHECK(lm_dr_closed_form(3, 2) == mono(m, {{"A1", 2}, {"C2", 2}}));
    CHECK_THROWS_AS(lm_dr_closed_form(4, 1), std::invalid_argument);
    for (int n = 3; n <= 5; ++n) {
        PolygonModel pm(n);
        for (int r = 0; r <= n; ++r) {
            if (r == 1)
                continue;
            CHECK(lm_dr_closed_form(n, r) == lex_leading_monomial(laurent_expand_poly(pm, dr_bracket_sum(n, r))));
        }
    }
}

TEST_CASE("degree_formulas") {
    CHECK(degree_formulas(5, 2, 3).c == 4);
    CHECK(degree_formulas(5, 3, 2).c == 0);
    CHECK(degree_formulas(5, 2, 4).a_prime == 2);
    CHECK_THROWS_AS(degree_formulas(3, 3, 3), std::invalid_argument);
    CHECK_THROWS_AS(degree_formulas(5, 2, 6), std::invalid_argument);
    // direct value that the closed form for l = n would contradict at n = 3
    CHECK(lm_dr_closed_form(3, 3).degree(PolygonModel(3), {LaurentFamily::C, 3}) == 0);

    for (int n = 4; n <= 8; ++n) {
        PolygonModel m(n);
        for (int r = 0; r <= n; ++r) {
            if (r == 1)
                continue;
            auto lm = lm_dr_closed_form(n, r);
            for (int l = 1; l <= n; ++l) {
                auto f = degree_formulas(n, r, l);
                CHECK(lm.degree(m, {LaurentFamily::C, l}) == f.c);
                CHECK(lm.degree(m, {LaurentFamily::A, l}) == f.a_prime - f.c);
            }
        }
    }
}

TEST_CASE("a' reading") {
    for (int n = 3; n <= 8; ++n) {
        auto reading = check_a_prime_reading(n);
        CHECK(reading.minus_form_holds);
        CHECK_FALSE(reading.literal_definition_holds);
    }
}

TEST_CASE("per_term_A_degree") {
    CHECK(per_term_A_degree(3, {1, 2}, 1) == 2);
    CHECK(per_term_A_degree(3, {}, 2) == -2);
    CHECK(per_term_A_degree(3, {1, 2, 3}, 3) == 1);
    for (int n = 3; n <= 5; ++n) {
        PolygonModel m(n);
        for (int r = 0; r <= n; ++r) {
            if (n == 2 && r == 2)
                continue;
            for (const auto &term : dr_bracket_terms(n, r)) {
                BracketPolynomial single(n);
                single.add_product(term.factors, Rational(1));
                auto lm = lex_leading_monomial(laurent_expand_poly(m, single));
                for (int l = 1; l <= n; ++l)
                    CHECK(per_term_A_degree(n, term.subset, l) == lm.degree(m, {LaurentFamily::A, l}));
            }
        }
    }
}

TEST_CASE("dominance") {
    auto r32 = dominance_check(3, 2);
    CHECK(r32.dominant);
    CHECK(r32.ranking.size() == 3);
    CHECK(r32.ranking.front().subset == std::vector<int>{1, 2});
    CHECK(r32.fully_expanded == 3);

    auto r42 = dominance_check(4, 2);
    CHECK(r42.dominant);
    CHECK(r42.ranking.size() == 6);

    auto r50 = dominance_check(5, 0);
    CHECK(r50.dominant);
    CHECK(r50.ranking.size() == 1);

    for (int n = 3; n <= 6; ++n)
        for (int r = 0; r <= n; ++r) {
            if (r == 1)
                continue;
            auto rep = dominance_check(n, r);
            CHECK(rep.dominant);
            CHECK(rep.formula_mismatches.empty());
        }
}

TEST_CASE("degree matrix P") {
    auto p3 = degree_matrix_P(3, DegreeMethod::Direct);
    REQUIRE(p3.rows == std::vector<int>{0, 2, 3});
    CHECK(p3.degrees[0] == std::vector<int>{2, -2, 0, 2, 4, 0});
    CHECK(p3.degrees[1] == std::vector<int>{2, 0, 0, 0, 2, 0});
    CHECK(p3.degrees[2] == std::vector<int>{1, 1, 1, 0, 0, 0});
    for (int n = 3; n <= 5; ++n)
        CHECK(degree_matrix_P(n, DegreeMethod::ClosedForm).degrees == degree_matrix_P(n, DegreeMethod::Direct).degrees);
    CHECK_THROWS_AS(degree_matrix_P(6, DegreeMethod::Direct), BudgetExceeded);
}

TEST_CASE("proof vectors") {
    auto v = proof_vectors(5);
    CHECK(v.size() == 5);
    for (const auto &row : v)
        CHECK(row.size() == 4);
}

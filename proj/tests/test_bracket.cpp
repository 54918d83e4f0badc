#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "drlab/bracket.hpp"
#include "drlab/errors.hpp"
#include "drlab/theorem_check.hpp"

#include <random>

using namespace drlab;

namespace {

SymbolAssignment assign(std::initializer_list<std::pair<SymbolId, SymbolCoords>> items) {
    SymbolAssignment a;
    for (const auto &[s, c] : items)
        a.bind(s, c);
    return a;
}

long binomial(int n, int k) {
    long out = 1;
    for (int i = 1; i <= k; ++i)
        out = out * (n - k + i) / i;
    return out;
}

}  // namespace

TEST_CASE("symbol order and names") {
    CHECK(alpha(3) < beta(1));
    CHECK(alpha(1) < alpha(2));
    CHECK(beta(1) < beta(2));
    CHECK(alpha(3).name() == "a3");
    CHECK(SymbolId::parse("b2") == beta(2));
    CHECK_THROWS(SymbolId::parse("c1"));
}

TEST_CASE("bracket_eval") {
    auto a = assign({{alpha(1), {1, 0}}, {alpha(2), {0, 1}}, {beta(1), {Rational(3), Rational(-2)}}});
    CHECK(bracket_eval(alpha(1), alpha(2), a) == 1);
    CHECK(bracket_eval(alpha(1), alpha(1), a) == 0);
    CHECK(bracket_eval(alpha(2), alpha(1), a) == -1);
    CHECK(bracket_eval(alpha(2), beta(1), a) == -bracket_eval(beta(1), alpha(2), a));
    CHECK_THROWS_AS(bracket_eval(alpha(1), alpha(3), a), std::out_of_range);
}

TEST_CASE("canonicalize") {
    std::vector<BracketFactor> one{{beta(1), alpha(2)}};
    auto m = canonicalize(one);
    REQUIRE(m);
    CHECK(m->sign == -1);
    CHECK(m->factors == std::vector<BracketFactor>{{alpha(2), beta(1)}});

    std::vector<BracketFactor> two{{alpha(1), alpha(2)}, {alpha(2), alpha(1)}};
    m = canonicalize(two);
    REQUIRE(m);
    CHECK(m->sign == -1);
    CHECK(m->factors == std::vector<BracketFactor>{{alpha(1), alpha(2)}, {alpha(1), alpha(2)}});

    std::vector<BracketFactor> zero{{alpha(3), beta(1)}, {alpha(1), alpha(1)}};
    CHECK_FALSE(canonicalize(zero));

    std::vector<BracketFactor> unsorted{{alpha(2), alpha(3)}, {alpha(1), beta(1)}};
    m = canonicalize(unsorted);
    REQUIRE(m);
    CHECK(m->sign == 1);
    CHECK(m->factors.front() == BracketFactor{alpha(1), beta(1)});
}

TEST_CASE("bracket polynomial merges and cancels") {
    BracketPolynomial p(3);
    std::vector<BracketFactor> f{{alpha(1), alpha(2)}};
    std::vector<BracketFactor> g{{alpha(2), alpha(1)}};
    p.add_product(f, Rational(1));
    p.add_product(g, Rational(1));
    CHECK(p.is_zero());
    std::vector<BracketFactor> out_of_range{{alpha(4), alpha(1)}};
    CHECK_THROWS_AS(p.add_product(out_of_range, Rational(1)), std::out_of_range);
}

TEST_CASE("plucker relation") {
    auto rel = plucker_relation(alpha(1), alpha(2), alpha(3), beta(1));
    CHECK(rel.size() == 3);
    auto basis = assign({{alpha(1), {1, 0}}, {alpha(2), {0, 1}}, {alpha(3), {1, 1}}, {beta(1), {1, -1}}});
    CHECK(eval_bracket_poly(rel, basis) == 0);
    CHECK_THROWS(plucker_relation(alpha(1), alpha(2), alpha(2), beta(1)));
    CHECK(verify_plucker(5, 1000, 3).passed());
}

TEST_CASE("eval_bracket_poly") {
    CHECK(eval_bracket_poly(BracketPolynomial(3), SymbolAssignment()) == 0);
    for (int n = 2; n <= 6; ++n) {
        auto sum = dr_bracket_sum(n, 1);
        for (std::uint64_t s = 0; s < 10; ++s)
            CHECK(eval_bracket_poly(sum, random_generic_assignment(n, s)) == 0);
    }
}

TEST_CASE("dr_bracket_terms shape") {
    for (int n = 2; n <= 7; ++n) {
        for (int r = 0; r <= n; ++r) {
            if (n == 2 && r == 2)
                continue;
            auto terms = dr_bracket_terms(n, r);
            CHECK(static_cast<long>(terms.size()) == binomial(n, r));
            for (const auto &t : terms) {
                CHECK(static_cast<int>(t.factors.size()) == (n - r) * (n - 1) + r * (n - 2));
                std::map<SymbolId, int> count;
                for (const auto &[s, u] : t.factors) {
                    ++count[s];
                    ++count[u];
                }
                for (int i = 1; i <= n; ++i)
                    CHECK(count[alpha(i)] == 2 * n - 2 - r);
                for (int k = 1; k <= n - 2; ++k)
                    CHECK(count[beta(k)] == r);
            }
        }
    }
    CHECK(dr_bracket_terms(5, 2).size() == 10);
    CHECK_THROWS_AS(dr_bracket_terms(2, 2), SpecialCase);
}

TEST_CASE("dr_bracket_sum endpoints for n = 3") {
    auto d = dr_bracket_sum(3, 0);
    REQUIRE(d.size() == 1);
    const auto &[factors, coefficient] = *d.terms().begin();
    CHECK(factors.size() == 6);
    // prod_{i != j} [a_i, a_j] = -prod_{i<j} [a_i, a_j]^2
    CHECK(coefficient == -1);

    auto res = dr_bracket_sum(3, 3);
    REQUIRE(res.size() == 1);
    CHECK(res.terms().begin()->first ==
          std::vector<BracketFactor>{{alpha(1), beta(1)}, {alpha(2), beta(1)}, {alpha(3), beta(1)}});
    CHECK(res.terms().begin()->second == -1);
}

TEST_CASE("colex subsets") {
    auto s = colex_subsets(4, 2);
    std::vector<std::vector<int>> expected{{1, 2}, {1, 3}, {2, 3}, {1, 4}, {2, 4}, {3, 4}};
    CHECK(s == expected);
    CHECK(colex_subsets(3, 0) == std::vector<std::vector<int>>{{}});
}

TEST_CASE("forms_from_assignment") {
    auto a = assign({{alpha(1), {1, 1}}, {alpha(2), {1, 2}}});
    a.constant_form = Rational(3);
    auto [f, g] = forms_from_assignment(a, 2);
    CHECK(f.coefficients == std::vector<Rational>{2, -3, 1});
    CHECK(g.coefficients == std::vector<Rational>{3});

    SymbolAssignment single;
    single.bind(alpha(1), {1, 5});
    single.bind(alpha(2), {1, 0});
    single.bind(alpha(3), {1, 0});
    single.bind(beta(1), {1, 7});
    auto [f3, g3] = forms_from_assignment(single, 3);
    CHECK(g3.coefficients == std::vector<Rational>{-7, 1});
    CHECK(f3[3] == 1);
    CHECK_THROWS_AS(forms_from_assignment(a, 3), std::out_of_range);
}

TEST_CASE("expand_form_coefficients") {
    auto one = expand_form_coefficients(Family::Alpha, 1);
    CHECK(one[0] == -MultiPoly::variable("a1_1"));
    CHECK(one[1] == MultiPoly::variable("a1_0"));

    auto two = expand_form_coefficients(Family::Alpha, 2);
    auto v = [](const char *s) { return MultiPoly::variable(s); };
    CHECK(two[1] == -v("a1_0") * v("a2_1") - v("a2_0") * v("a1_1"));
    CHECK(two[0] * two[2] == v("a1_1") * v("a1_0") * v("a2_1") * v("a2_0"));
}

TEST_CASE("random_generic_assignment") {
    auto a = random_generic_assignment(5, 42);
    auto b = random_generic_assignment(5, 42);
    CHECK(a == b);
    CHECK(a.pairwise_brackets_nonzero());
    CHECK(a.alpha_coordinates_nonzero());
    CHECK_FALSE(random_generic_assignment(5, 43) == a);

    SymbolAssignment bad = a;
    bad.bind(alpha(1), {0, 3});
    CHECK_FALSE(bad.alpha_coordinates_nonzero());
}

TEST_CASE("identity check harness") {
    CHECK(verify_theorem1(2, 20, 1, Mode::Numeric).passed());
    CHECK(verify_theorem1(2, 1, 1, Mode::Symbolic).passed());
    CHECK(verify_theorem1(4, 20, 9, Mode::Numeric).passed());

    auto rep = verify_theorem1(3, 5, 2, Mode::Numeric, BracketPerturbation{2, 1, Rational(1)});
    CHECK_FALSE(rep.passed());
    REQUIRE_FALSE(rep.failures.empty());
    CHECK(rep.failures.front().r == 2);
    CHECK(rep.failures.front().witness.has_value());

    CHECK(verify_vanishing(3, 1, 0, Mode::Symbolic).passed());
    CHECK_THROWS_AS(verify_theorem1(kSymbolicMaxN + 1, 1, 0, Mode::Symbolic), BudgetExceeded);
}

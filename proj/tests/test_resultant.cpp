#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "drlab/bracket.hpp"
#include "drlab/errors.hpp"
#include "drlab/resultant.hpp"
#include "drlab/theorem_check.hpp"

#include <algorithm>
#include <numeric>
#include <random>

using namespace drlab;

namespace {

MultiPoly var(const char *name) { return MultiPoly::variable(name); }

using RForm = BinaryForm<Rational>;

RForm form(std::initializer_list<long> c) {
    std::vector<Rational> v;
    for (long x : c)
        v.emplace_back(x);
    return RForm(std::move(v));
}

// Determinant by the permutation expansion.
template <class T>
T leibniz(const Matrix<T> &m) {
    const std::size_t n = m.size();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    T total(Rational(0));
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                inversions += perm[i] > perm[j] ? 1 : 0;
        T prod(Rational(1));
        for (std::size_t i = 0; i < n; ++i)
            prod = prod * m[i][perm[i]];
        total = inversions % 2 == 0 ? T(total + prod) : T(total - prod);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

RForm random_form(std::mt19937_64 &rng, int degree, long bound = 9) {
    std::uniform_int_distribution<long> c(-bound, bound);
    std::vector<Rational> v;
    for (int i = 0; i <= degree; ++i)
        v.emplace_back(c(rng));
    if (v.back().is_zero())
        v.back() = Rational(1);
    return RForm(std::move(v));
}

}  // namespace

TEST_CASE("sylvester_matrix") {
    MultiPoly a = var("a"), b = var("b");
    BinaryForm<MultiPoly> f({-a, MultiPoly(1)});
    BinaryForm<MultiPoly> g({-b, MultiPoly(1)});
    auto m = sylvester_matrix(f, g);
    REQUIRE(m.size() == 2);
    CHECK(m[0][0] == MultiPoly(1));
    CHECK(m[0][1] == -a);
    CHECK(m[1][0] == MultiPoly(1));
    CHECK(m[1][1] == -b);
    CHECK(det_fraction_free(m) == a - b);

    auto big = sylvester_matrix(form({1, 2, 3, 4}), form({5, 6, 7}));
    CHECK(big.size() == 5);
    for (const auto &row : big)
        CHECK(row.size() == 5);
    CHECK_THROWS_AS(sylvester_matrix(form({0, 0}), form({1, 1})), std::invalid_argument);
}

TEST_CASE("det_fraction_free") {
    Matrix<Rational> id(4, std::vector<Rational>(4));
    for (int i = 0; i < 4; ++i)
        id[i][i] = 1;
    CHECK(det_fraction_free(id) == 1);

    Matrix<Rational> rep{{1, 2, 3}, {4, 5, 6}, {1, 2, 3}};
    CHECK(det_fraction_free(rep) == 0);

    // needs a row swap
    Matrix<Rational> swap{{0, 1, 2}, {3, 0, 1}, {4, 5, 0}};
    CHECK(det_fraction_free(swap) == leibniz(swap));

    std::mt19937_64 rng(1);
    std::uniform_int_distribution<long> c(-6, 6);
    for (int t = 0; t < 30; ++t) {
        int n = 1 + t % 6;
        Matrix<Rational> m(n, std::vector<Rational>(n));
        for (auto &row : m)
            for (auto &x : row)
                x = Rational(c(rng));
        CHECK(det_fraction_free(m) == leibniz(m));
    }

    // symbolic entries against the permutation expansion
    MultiPoly x = var("x"), y = var("y"), z = var("z");
    Matrix<MultiPoly> s{{x, y, MultiPoly(0)}, {MultiPoly(0), x, y}, {z, MultiPoly(1), x}};
    CHECK(det_fraction_free(s) == leibniz(s));
}

TEST_CASE("signed_resultant examples") {
    CHECK(signed_resultant(form({-1, 1}), form({-2, 1})) == 1);
    // res(f, x) is the y^d coefficient
    auto f = generic_form("a", 3);
    BinaryForm<MultiPoly> x_form({MultiPoly(0), MultiPoly(1)});
    CHECK(signed_resultant(f, x_form) == var("a0"));
    // common factor (x - y)
    CHECK(signed_resultant(multiply(form({-1, 1}), form({3, 2})), multiply(form({-1, 1}), form({5, 1, 1}))) == 0);
    // constant second argument
    CHECK(signed_resultant(form({1, 2, 3}), form({5})) == 25);
    CHECK_THROWS(signed_resultant(form({0, 0}), form({0})));
}

TEST_CASE("discriminant examples") {
    auto f = generic_form("a", 2);
    MultiPoly a0 = var("a0"), a1 = var("a1"), a2 = var("a2");
    CHECK(discriminant(f) == MultiPoly(4) * a0 * a2 - a1 * a1);

    auto cubic = multiply(multiply(form({-1, 1}), form({-2, 1})), form({-3, 1}));
    CHECK(discriminant(cubic) == -4);
    CHECK(discriminant(multiply(form({-1, 1}), form({-1, 1}))) == 0);
    CHECK_THROWS_AS(discriminant(form({0, 1, 1})), NumericDegenerate);
}

TEST_CASE("dr_series for n = 2 symbolic") {
    auto series = dr_series(generic_form("a", 2), generic_form("b", 0));
    MultiPoly a0 = var("a0"), a1 = var("a1"), a2 = var("a2"), b0 = var("b0");
    REQUIRE(series.entries.size() == 3);
    CHECK(series.entries[0] == MultiPoly(4) * a0 * a2 - a1 * a1);
    CHECK(series.entries[1].is_zero());
    CHECK(series.entries[2] == b0 * b0);
}

TEST_CASE("dr_series endpoints and vanishing") {
    std::mt19937_64 rng(8);
    for (int n = 2; n <= 6; ++n) {
        for (int t = 0; t < 5; ++t) {
            auto [f, g] = random_form_pair(n, rng);
            auto s = dr_series(f, g);
            REQUIRE(s.entries.size() == static_cast<std::size_t>(n + 1));
            CHECK(s.entries[0] == discriminant(f));
            CHECK(s.entries[1].is_zero());
            // the top coefficient is res(f, x y g) / (a_0 a_n) = (-1)^n res(f, g)
            Rational res = signed_resultant(f, g);
            CHECK(s.entries[n] == (n % 2 == 0 ? res : -res));
        }
    }
    CHECK_THROWS_AS(dr_series(form({0, 1, 1}), form({1})), NumericDegenerate);
    CHECK_THROWS_AS(dr_series(form({1, 1, 1}), form({1, 1})), std::invalid_argument);
}

TEST_CASE("resultant antisymmetry and multiplicativity") {
    std::mt19937_64 rng(21);
    for (int t = 0; t < 30; ++t) {
        int d = 1 + t % 4, e = 1 + (t / 4) % 3;
        auto f = random_form(rng, d), g = random_form(rng, e), h = random_form(rng, 2);
        Rational fg = signed_resultant(f, g);
        CHECK(signed_resultant(g, f) == ((d * e) % 2 == 0 ? fg : -fg));
        CHECK(signed_resultant(f, multiply(g, h)) == fg * signed_resultant(f, h));
    }
}

TEST_CASE("resultant and discriminant match bracket products") {
    for (int n = 2; n <= 5; ++n) {
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            auto a = random_generic_assignment(n + 2, seed);  // gives n + 2 alphas, n betas
            std::vector<SymbolCoords> as, bs;
            for (int i = 1; i <= n; ++i)
                as.push_back(a.at(alpha(i)));
            for (int k = 1; k <= n - 1; ++k)
                bs.push_back(a.at(beta(k)));
            auto product_form = [](const std::vector<SymbolCoords> &cs) {
                RForm f(std::vector<Rational>{Rational(1)});
                for (const auto &c : cs)
                    f = multiply(f, RForm(std::vector<Rational>{-c.v, c.u}));
                return f;
            };
            auto bracket = [](const SymbolCoords &s, const SymbolCoords &t) { return s.u * t.v - t.u * s.v; };
            Rational res(1), disc(1);
            for (const auto &s : as)
                for (const auto &t : bs)
                    res *= bracket(s, t);
            for (std::size_t i = 0; i < as.size(); ++i)
                for (std::size_t j = 0; j < as.size(); ++j)
                    if (i != j)
                        disc *= bracket(as[i], as[j]);
            CHECK(signed_resultant(product_form(as), product_form(bs)) == res);
            CHECK(discriminant(product_form(as)) == disc);
        }
    }
}

TEST_CASE("scaling law and SL2 invariance") {
    CHECK(verify_invariance(3, 10, 4).passed());
    CHECK(verify_invariance(5, 5, 4).passed());
}

TEST_CASE("action of a unimodular matrix") {
    Mat2 g{1, 2, 0, 1};  // x -> x + 2y
    auto f = form({0, 0, 1});  // x^2
    CHECK(act(g, f) == form({4, 4, 1}));
}

TEST_CASE("dual numbers through dr_series") {
    // d/da0 of DR_{2,0} = 4 a0 a2 - a1^2 at (a0, a1, a2) = (2, 3, 5) is 4 a2 = 20
    BinaryForm<DualScalar> f({DualScalar(2, 1), DualScalar(3), DualScalar(5)});
    BinaryForm<DualScalar> g({DualScalar(7)});
    auto s = dr_series(f, g);
    CHECK(s.entries[0] == DualScalar(4 * 2 * 5 - 9, 20));
    CHECK(s.entries[2] == DualScalar(49, 0));
}

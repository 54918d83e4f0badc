#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "drlab/serialize.hpp"

using namespace drlab;

TEST_CASE("rationals") {
    CHECK(to_json(Rational(Integer(-3), Integer(6))) == "-1/2");
    CHECK(to_json(Rational(4)) == "4");
    CHECK(rational_from_json(Json("7/21")) == Rational(Integer(1), Integer(3)));
    CHECK(rational_from_json(Json(5)) == 5);
    CHECK_THROWS_AS(rational_from_json(Json(1.5)), std::invalid_argument);
    CHECK_THROWS_AS(rational_from_json(Json("x")), std::invalid_argument);
}

TEST_CASE("multipoly round trip") {
    auto a0 = MultiPoly::variable("a0"), a1 = MultiPoly::variable("a1"), a2 = MultiPoly::variable("a2");
    MultiPoly p = MultiPoly(4) * a0 * a2 - a1 * a1 + MultiPoly(Rational(Integer(1), Integer(3)));
    Json j = to_json(p);
    CHECK(j.is_array());
    CHECK(j.size() == 3);
    CHECK(multipoly_from_json(j) == p);
    CHECK(to_json(p).dump() == j.dump());
    CHECK(to_json(MultiPoly()).dump() == "[]");
}

TEST_CASE("binary forms") {
    Json j = Json::parse(R"({"degree": 2, "coefficients": ["1", "-3/2", 2]})");
    auto f = binary_form_from_json(j);
    CHECK(f.degree() == 2);
    CHECK(f[1] == Rational(Integer(-3), Integer(2)));
    CHECK(to_json(f)["coefficients"][1] == "-3/2");
    CHECK_THROWS(binary_form_from_json(Json::parse(R"({"degree": 3, "coefficients": ["1"]})")));
    CHECK_THROWS(binary_form_from_json(Json::parse(R"({"coefficients": []})")));
    CHECK_THROWS(binary_form_from_json(Json::parse(R"([1, 2])")));
}

TEST_CASE("bracket polynomial") {
    auto rel = plucker_relation(alpha(1), alpha(2), alpha(3), beta(1));
    Json j = to_json(rel);
    REQUIRE(j.size() == 3);
    for (const auto &t : j) {
        CHECK((t["sign"] == 1 || t["sign"] == -1));
        CHECK(t["factors"].size() == 2);
        CHECK(t["coefficient"] == "1");
    }
    CHECK(j[0]["factors"][0][0] == "a1");
}

TEST_CASE("laurent and degree matrix") {
    PolygonModel m(3);
    auto p = laurent_expand_bracket(m, alpha(1), alpha(3));
    Json j = to_json(p, m);
    REQUIRE(j.size() == 2);
    CHECK(j[0]["exponents"]["A1"] == 1);
    CHECK(j[0]["exponents"]["A2"] == -1);

    auto P = degree_matrix_P(3, DegreeMethod::Direct);
    Json jp = to_json(P);
    CHECK(jp["n"] == 3);
    CHECK(jp["rows"].size() == 3);
    CHECK(jp["rows"][0]["r"] == 0);
    CHECK(jp["rows"][0]["degrees"] == Json::array({2, -2, 0, 2, 4, 0}));
}

TEST_CASE("reports and certificates") {
    auto rep = verify_theorem1(3, 2, 1, Mode::Numeric, BracketPerturbation{0, 0, Rational(1)});
    Json j = to_json(rep);
    CHECK(j["n"] == 3);
    CHECK(j["mode"] == "numeric");
    CHECK(j["passed"] == false);
    REQUIRE(j["failures"].size() > 0);
    CHECK(j["failures"][0].contains("assignment"));
    CHECK(j["failures"][0]["assignment"].contains("a1"));

    auto cert = multiplicative_independence(ExponentMatrix{{1, 1}, {2, 2}});
    Json jc = to_json(cert);
    CHECK(jc["verdict"] == "dependent");
    CHECK(jc["kernel"] == Json::array({2, -1}));
    CHECK(jc["rank"] == 1);
}

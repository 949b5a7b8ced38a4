#include "doctest.h"
#include "effjet/io.hpp"
#include "effjet/random_instances.hpp"

using namespace effjet;

TEST_CASE("rational interchange canonicalizes") {
    Rational q = rational_from_strings("6", "-4");
    CHECK(q == Rational(-3, 2));
    Json j = rational_to_json(q);
    CHECK(j["num"] == "-3");
    CHECK(j["den"] == "2");
    CHECK(rational_from_json(j) == q);
    CHECK(rational_from_json(Json(7)) == Rational(7));
    CHECK_THROWS_AS(rational_from_strings("1", "0"), std::invalid_argument);
    CHECK_THROWS_AS(rational_from_json(Json{{"num", "x"}}), FormatError);
}

TEST_CASE("polynomial round trip") {
    SeededRng rng(81);
    for (int t = 0; t < 20; ++t) {
        int vars = static_cast<int>(rng.uniform(1, 4));
        MultiPoly p = random_poly(rng, vars, 4, 4);
        CHECK(poly_from_json(poly_to_json(p)) == p);
    }
}

TEST_CASE("series and germ round trip") {
    SeededRng rng(82);
    for (int t = 0; t < 20; ++t) {
        Series s = random_series(rng, static_cast<int>(rng.uniform(0, 5)));
        CHECK(series_from_json(series_to_json(s)) == s);
    }
    CurveGerm f = random_germ(rng, 3, 4);
    Json j = germ_to_json(f);
    CurveGerm g = germ_from_json(j);
    CHECK(g.num_vars() == 3);
    for (int i = 0; i < 3; ++i) CHECK(g.component(i) == f.component(i));
}

TEST_CASE("jet polynomial round trip") {
    SeededRng rng(83);
    for (int t = 0; t < 20; ++t) {
        int n = static_cast<int>(rng.uniform(1, 3));
        int k = static_cast<int>(rng.uniform(0, 3));
        JetPoly q = random_jetpoly(rng, n, k, 3);
        CHECK(jetpoly_from_json(jetpoly_to_json(q)) == q);
    }
}

TEST_CASE("malformed documents are rejected") {
    CHECK_THROWS_AS(poly_from_json(Json{{"terms", Json::array()}}), FormatError);
    CHECK_THROWS_AS(poly_from_json(Json{{"vars", 2},
                                        {"terms", Json::array({Json{{"exp", {1}}, {"num", "1"}}})}}),
                    FormatError);
    CHECK_THROWS_AS(series_from_json(Json{{"order", 2}, {"coeffs", Json::array()}}), FormatError);
    Json bad_w{{"k", 1}, {"g", Json::array({poly_to_json(MultiPoly::variable(1, 0))})}};
    CHECK_THROWS_AS(wronskian_input_from_json(bad_w), FormatError);
}

TEST_CASE("emitted documents are deterministic") {
    MultiPoly p = MultiPoly::variable(2, 0).pow(2) + MultiPoly::variable(2, 1) * Rational(3, 7);
    CHECK(poly_to_json(p).dump(2) == poly_to_json(p).dump(2));
    auto rep = kobayashi_bound(4);
    CHECK(bound_report_to_json(rep).dump(2) == bound_report_to_json(kobayashi_bound(4)).dump(2));
}

TEST_CASE("fermat spec and coefficients parse from documents") {
    Json spec_doc{{"n", 1}, {"eps", 0}, {"delta", 1}, {"r", 1}, {"k", 1}};
    auto spec = fermat_spec_from_json(spec_doc);
    CHECK(spec.section_degree() == 2);
    Json coeff_doc{{"1,0", poly_to_json(MultiPoly::constant(2, Rational(1)))},
                   {"0,1", poly_to_json(MultiPoly::constant(2, Rational(1)))}};
    auto coeffs = fermat_coeffs_from_json(coeff_doc, spec);
    auto sigma = build_section(spec, coeffs);
    CHECK(sigma == MultiPoly::variable(2, 0).pow(2) + MultiPoly::variable(2, 1).pow(2));
    CHECK_THROWS_AS(fermat_coeffs_from_json(Json{{"2,0", poly_to_json(MultiPoly(2))}}, spec),
                    FormatError);
}

TEST_CASE("grassmannian point documents validate") {
    Json doc{{"N", 2}, {"delta", 1}, {"rows", {{1, 0, 0}, {0, 1, 0}}}};
    auto pt = grass_point_from_json(doc, 5);
    CHECK(pt.rows.size() == 2);
    Json bad{{"N", 2}, {"delta", 1}, {"rows", {{1, 0, 0}, {2, 0, 0}}}};
    CHECK_THROWS_AS(grass_point_from_json(bad, 5), FormatError);
}

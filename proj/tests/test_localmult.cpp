#include "doctest.h"
#include "effjet/localmult.hpp"
#include "effjet/rng.hpp"

using namespace effjet;

namespace {

MultiPoly x(int vars, int i) { return MultiPoly::variable(vars, i); }

ChartIdeal at_origin(std::vector<MultiPoly> gens, int vars) {
    ChartIdeal ideal;
    ideal.gens = std::move(gens);
    ideal.base_point.assign(static_cast<std::size_t>(vars), Rational(0));
    return ideal;
}

}  // namespace

TEST_CASE("simple zero has length one") {
    auto res = local_length(at_origin({x(1, 0)}, 1));
    REQUIRE(res.stabilized);
    CHECK(res.length == 1);
}

TEST_CASE("monomial complete intersection (x^2, y^3) has length 6") {
    auto res = local_length(at_origin({x(2, 0).pow(2), x(2, 1).pow(3)}, 2));
    REQUIRE(res.stabilized);
    CHECK(res.length == 6);
}

TEST_CASE("worked chart example eliminates to (x^2, t+1)") {
    // Ideal (x^2, y^2 + t, 1 + y) at (x, y, t) = (0, -1, -1).
    ChartIdeal ideal;
    ideal.gens = {x(3, 0).pow(2), x(3, 1).pow(2) + x(3, 2),
                  MultiPoly::constant(3, Rational(1)) + x(3, 1)};
    ideal.base_point = {Rational(0), Rational(-1), Rational(-1)};
    auto res = local_length(ideal);
    REQUIRE(res.stabilized);
    CHECK(res.length == 2);
}

TEST_CASE("generators must vanish at the base point") {
    ChartIdeal ideal;
    ideal.gens = {x(1, 0) + MultiPoly::constant(1, Rational(1))};
    ideal.base_point = {Rational(0)};
    CHECK_THROWS_AS(local_length(ideal), std::invalid_argument);
}

TEST_CASE("non-isolated zero exceeds the cap") {
    // (x*y) vanishes on both axes.
    auto res = local_length(at_origin({x(2, 0) * x(2, 1)}, 2));
    CHECK(!res.stabilized);
}

TEST_CASE("dimensions stay monotone until stabilization") {
    auto res = local_length(at_origin({x(2, 0).pow(3), x(2, 1).pow(2)}, 2));
    REQUIRE(res.stabilized);
    CHECK(res.length == 6);
    for (std::size_t i = 1; i < res.dims.size(); ++i) CHECK(res.dims[i] >= res.dims[i - 1]);
    CHECK(res.dims.back() == res.dims[res.dims.size() - 2]);
}

TEST_CASE("mixed generators without linear terms") {
    // (x^2 - y^3, y^2): basis {1, x, y, xy}.
    auto res = local_length(at_origin({x(2, 0).pow(2) - x(2, 1).pow(3), x(2, 1).pow(2)}, 2));
    REQUIRE(res.stabilized);
    CHECK(res.length == 4);
}

TEST_CASE("implicit-function elimination with a curved graph") {
    // (y + y^2 - x^2, x^3): solving y = x^2 - x^4 + ... leaves (x^3).
    auto res = local_length(at_origin(
        {x(2, 1) + x(2, 1).pow(2) - x(2, 0).pow(2), x(2, 0).pow(3)}, 2));
    REQUIRE(res.stabilized);
    CHECK(res.length == 3);
}

TEST_CASE("elimination handles linear terms mixed across variables") {
    // (y - x^2, x^3) at origin: substitution gives (x^3).
    auto res = local_length(at_origin({x(2, 1) - x(2, 0).pow(2), x(2, 0).pow(3)}, 2));
    REQUIRE(res.stabilized);
    CHECK(res.length == 3);
}

TEST_CASE("transverse linear system has length 1") {
    auto res = local_length(at_origin({x(2, 0) + x(2, 1), x(2, 0) - x(2, 1)}, 2));
    REQUIRE(res.stabilized);
    CHECK(res.length == 1);
}

TEST_CASE("node multiplicity") {
    // (x*y, x + y): local algebra C[x]/(x^2).
    auto res = local_length(at_origin({x(2, 0) * x(2, 1), x(2, 0) + x(2, 1)}, 2));
    REQUIRE(res.stabilized);
    CHECK(res.length == 2);
}

TEST_CASE("random monomial ideals match the closed form") {
    SeededRng rng(61);
    for (int t = 0; t < 25; ++t) {
        int vars = static_cast<int>(rng.uniform(1, 4));
        ChartIdeal ideal;
        ideal.base_point.assign(static_cast<std::size_t>(vars), Rational(0));
        long expected = 1;
        for (int i = 0; i < vars; ++i) {
            long a = rng.uniform(1, 4);
            expected *= a;
            ideal.gens.push_back(x(vars, i).pow(static_cast<unsigned>(a)));
        }
        auto res = local_length(ideal);
        REQUIRE(res.stabilized);
        CHECK(res.length == expected);
    }
}

TEST_CASE("explicit cap override is honored") {
    auto res = local_length(at_origin({x(1, 0).pow(5)}, 1), 3);
    CHECK(!res.stabilized);
    CHECK(res.cap == 3);
    auto full = local_length(at_origin({x(1, 0).pow(5)}, 1), 10);
    REQUIRE(full.stabilized);
    CHECK(full.length == 5);
}

#include "doctest.h"
#include "effjet/random_instances.hpp"
#include "effjet/series.hpp"

using namespace effjet;

namespace {

Series make(int order, std::vector<long> ints) {
    std::vector<Rational> c;
    for (long v : ints) c.emplace_back(v);
    return Series(order, std::move(c));
}

}  // namespace

TEST_CASE("composition examples") {
    // f = t, phi = 2t.
    Series f = Series::identity(4);
    Series phi = make(4, {0, 2, 0, 0, 0});
    CHECK(f.compose(phi) == phi);

    // f = t^2, phi = t + t^2 -> t^2 + 2t^3 + t^4.
    Series f2 = make(4, {0, 0, 1, 0, 0});
    Series phi2 = make(4, {0, 1, 1, 0, 0});
    CHECK(f2.compose(phi2) == make(4, {0, 0, 1, 2, 1}));
    // Truncated lower, the t^4 term falls away.
    CHECK(f2.compose(phi2.truncated(3)) == make(3, {0, 0, 1, 2}));

    // Constants are fixed by any reparametrization.
    Series one = Series::constant(4, Rational(1));
    CHECK(one.compose(phi2) == one);
}

TEST_CASE("composition requires phi(0) = 0") {
    Series f = Series::identity(3);
    Series bad = make(3, {1, 1, 0, 0});
    CHECK_THROWS_AS(f.compose(bad), std::invalid_argument);
}

TEST_CASE("derivative examples") {
    CHECK(make(2, {1, 1, 1}).derivative() == make(1, {1, 2}));
    CHECK(make(3, {0, 0, 0, 1}).derivative() == make(2, {0, 0, 3}));
    CHECK(make(2, {5, 2, -1}).derivative() == make(1, {2, -2}));
    CHECK_THROWS_AS(make(0, {1}).derivative(), std::invalid_argument);
}

TEST_CASE("reparametrization germ validation") {
    CHECK_THROWS_AS(ReparamGerm(make(2, {1, 1, 0})), std::invalid_argument);  // phi(0) != 0
    CHECK_THROWS_AS(ReparamGerm(make(2, {0, 0, 1})), std::invalid_argument);  // phi'(0) = 0
    ReparamGerm ok(make(2, {0, 3, 1}));
    CHECK(ok.derivative_at_zero() == Rational(3));
}

TEST_CASE("polynomial evaluation on germs") {
    // g = x0 on f = (t, t^2) is t.
    CurveGerm f({Series::identity(3), make(3, {0, 0, 1, 0})});
    CHECK(poly_eval_germ(MultiPoly::variable(2, 0), f) == Series::identity(3));
    // g = x0*x1 on (t, t) is t^2.
    CurveGerm diag({Series::identity(3), Series::identity(3)});
    MultiPoly g = MultiPoly::variable(2, 0) * MultiPoly::variable(2, 1);
    CHECK(poly_eval_germ(g, diag) == make(3, {0, 0, 1, 0}));
    // g = x0^2 + x1 on (1+t, t^2) is 1 + 2t + 2t^2.
    CurveGerm shifted({make(2, {1, 1, 0}), make(2, {0, 0, 1})});
    MultiPoly g2 = MultiPoly::variable(2, 0).pow(2) + MultiPoly::variable(2, 1);
    CHECK(poly_eval_germ(g2, shifted) == make(2, {1, 2, 2}));
    // Variable-count mismatch.
    CHECK_THROWS_AS(poly_eval_germ(MultiPoly::variable(3, 0), f), std::invalid_argument);
}

TEST_CASE("composition is associative up to truncation") {
    SeededRng rng(5);
    for (int t = 0; t < 30; ++t) {
        int order = static_cast<int>(rng.uniform(2, 6));
        Series f = random_series(rng, order);
        ReparamGerm phi = random_reparam(rng, order);
        ReparamGerm psi = random_reparam(rng, order);
        Series lhs = f.compose(phi.series()).compose(psi.series());
        Series rhs = f.compose(phi.series().compose(psi.series()));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("chain rule holds exactly") {
    SeededRng rng(6);
    for (int t = 0; t < 30; ++t) {
        int order = static_cast<int>(rng.uniform(2, 6));
        Series f = random_series(rng, order);
        ReparamGerm phi = random_reparam(rng, order);
        Series lhs = f.compose(phi.series()).derivative();
        Series rhs = f.derivative().compose(phi.series().truncated(order - 1)) *
                     phi.series().derivative();
        CHECK(lhs == rhs);
    }
}

TEST_CASE("germ evaluation is a ring homomorphism") {
    SeededRng rng(7);
    for (int t = 0; t < 30; ++t) {
        int vars = static_cast<int>(rng.uniform(1, 3));
        int order = static_cast<int>(rng.uniform(1, 5));
        MultiPoly g = random_poly(rng, vars, 3, 3);
        MultiPoly h = random_poly(rng, vars, 3, 3);
        CurveGerm f = random_germ(rng, vars, order);
        CHECK(poly_eval_germ(g * h, f) == poly_eval_germ(g, f) * poly_eval_germ(h, f));
        CHECK(poly_eval_germ(g + h, f) == poly_eval_germ(g, f) + poly_eval_germ(h, f));
    }
}

TEST_CASE("curve germs share one truncation order") {
    CHECK_THROWS_AS(CurveGerm({Series(2), Series(3)}), std::invalid_argument);
    CHECK_THROWS_AS(CurveGerm(std::vector<Series>{}), std::invalid_argument);
}

#include "doctest.h"
#include "effjet/multipoly.hpp"
#include "effjet/random_instances.hpp"

using namespace effjet;

namespace {

MultiPoly x(int vars, int i) { return MultiPoly::variable(vars, i); }

}  // namespace

TEST_CASE("polynomial addition cancels exactly") {
    MultiPoly a = x(2, 0) + x(2, 1);
    MultiPoly b = x(2, 0) - x(2, 1);
    CHECK(a + b == x(2, 0) * Rational(2));
}

TEST_CASE("monomial product") {
    CHECK(x(1, 0) * x(1, 0) == x(1, 0).pow(2));
}

TEST_CASE("binomial square expands by hand") {
    MultiPoly s = x(2, 0) + x(2, 1);
    MultiPoly expected = x(2, 0).pow(2) + x(2, 0) * x(2, 1) * Rational(2) + x(2, 1).pow(2);
    CHECK(s * s == expected);
}

TEST_CASE("mismatched variable counts are rejected") {
    CHECK_THROWS_AS(x(2, 0) + x(3, 0), std::invalid_argument);
    CHECK_THROWS_AS(x(2, 0) * x(1, 0), std::invalid_argument);
}

TEST_CASE("ring axioms on random triples") {
    SeededRng rng(11);
    for (int t = 0; t < 40; ++t) {
        int vars = static_cast<int>(rng.uniform(1, 3));
        MultiPoly a = random_poly(rng, vars, 3, 3);
        MultiPoly b = random_poly(rng, vars, 3, 3);
        MultiPoly c = random_poly(rng, vars, 3, 3);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
    }
}

TEST_CASE("degree and homogeneity bookkeeping") {
    MultiPoly p = x(2, 0).pow(3) + x(2, 0) * x(2, 1).pow(2);
    CHECK(p.degree() == 3);
    CHECK(p.homogeneous_degree() == 3);
    MultiPoly q = p + x(2, 1);
    CHECK(!q.homogeneous_degree().has_value());
    CHECK(MultiPoly(2).degree() == -1);
}

TEST_CASE("partial derivatives and evaluation") {
    MultiPoly p = x(2, 0).pow(2) * x(2, 1) + x(2, 1) * Rational(5);
    CHECK(p.partial(0) == x(2, 0) * x(2, 1) * Rational(2));
    CHECK(p.partial(1) == x(2, 0).pow(2) + MultiPoly::constant(2, Rational(5)));
    CHECK(p.eval({Rational(2), Rational(3)}) == Rational(27));
}

TEST_CASE("substitution composes exactly") {
    // p(x, y) with x -> y^2 equals direct expansion.
    MultiPoly p = x(2, 0).pow(2) + x(2, 1);
    MultiPoly sub = p.substitute(0, x(2, 1).pow(2));
    CHECK(sub == x(2, 1).pow(4) + x(2, 1));
    CHECK(p.substitute_all({x(2, 1), x(2, 0)}) == x(2, 1).pow(2) + x(2, 0));
}

TEST_CASE("restrict_variables reindexes cleanly") {
    MultiPoly p = x(3, 0).pow(2) + x(3, 2);
    std::vector<bool> keep = {true, false, true};
    MultiPoly q = p.restrict_variables(keep);
    CHECK(q == x(2, 0).pow(2) + x(2, 1));
    MultiPoly bad = x(3, 1);
    CHECK_THROWS_AS(bad.restrict_variables(keep), std::logic_error);
}

TEST_CASE("monomial basis is descending lex") {
    auto basis = monomials_of_degree(3, 2);
    CHECK(basis.size() == 6);
    CHECK(basis.front() == Exponents{2, 0, 0});
    CHECK(basis.back() == Exponents{0, 0, 2});
    CHECK(binomial(4, 2) == 6);
}

TEST_CASE("rational matrix rank") {
    std::vector<std::vector<Rational>> rows = {
        {Rational(1), Rational(2)}, {Rational(2), Rational(4)}, {Rational(0), Rational(1)}};
    CHECK(rational_rank(rows) == 2);
}

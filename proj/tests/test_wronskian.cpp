#include "doctest.h"
#include "effjet/random_instances.hpp"
#include "effjet/wronskian.hpp"

using namespace effjet;

namespace {

Series make(int order, std::vector<long> ints) {
    std::vector<Rational> c;
    for (long v : ints) c.emplace_back(v);
    return Series(order, std::move(c));
}

WronskianInput input(int k, std::vector<MultiPoly> g) {
    WronskianInput inp;
    inp.k = k;
    inp.g = std::move(g);
    return inp;
}

MultiPoly one(int vars) { return MultiPoly::constant(vars, Rational(1)); }

}  // namespace

TEST_CASE("wronskian of (1, z1) is z1'") {
    auto w = wronskian(input(1, {one(1), MultiPoly::variable(1, 0)}));
    CHECK(w == JetPoly::jet_variable(1, 1, 0, 1));
    CHECK(w.weighted_degree() == 1);
}

TEST_CASE("repeated sections give the zero wronskian") {
    MultiPoly z = MultiPoly::variable(1, 0);
    CHECK(wronskian(input(1, {z, z})).is_zero());
    CHECK(wronskian(input(2, {one(1), z, z})).is_zero());
}

TEST_CASE("wronskian of (1, z1, z1^2) collapses to 2(z1')^3") {
    auto w = wronskian(input(2, {one(1), MultiPoly::variable(1, 0),
                                 MultiPoly::variable(1, 0).pow(2)}));
    JetPoly zp = JetPoly::jet_variable(1, 2, 0, 1);
    CHECK(w == zp * zp * zp * Rational(2));
    CHECK(w.weighted_degree() == 3);
}

TEST_CASE("series oracle agrees on the worked examples") {
    auto inp = input(1, {one(1), MultiPoly::variable(1, 0)});
    CurveGerm f({make(3, {0, 0, 1, 0})});  // t^2
    CHECK(wronskian_series_oracle(inp, f, 2) == make(2, {0, 2, 0}));
    CHECK(wronskian(inp).eval_on_germ(f, 2) == make(2, {0, 2, 0}));

    auto inp2 = input(2, {one(1), MultiPoly::variable(1, 0), MultiPoly::variable(1, 0).pow(2)});
    CurveGerm line({Series::identity(2)});
    CHECK(wronskian_series_oracle(inp2, line, 0) == Series::constant(0, Rational(2)));

    auto rep_zero = wronskian_series_oracle(input(1, {MultiPoly::variable(1, 0),
                                                      MultiPoly::variable(1, 0)}),
                                            f, 1);
    CHECK(rep_zero.is_zero());
}

TEST_CASE("oracle equivalence on random instances") {
    SeededRng rng(31);
    for (int t = 0; t < 40; ++t) {
        int n = static_cast<int>(rng.uniform(1, 3));
        int k = static_cast<int>(rng.uniform(1, 3));
        int K = static_cast<int>(rng.uniform(0, 4));
        WronskianInput inp;
        inp.k = k;
        for (int j = 0; j <= k; ++j) inp.g.push_back(random_poly(rng, n, 2, 2));
        CurveGerm f = random_germ(rng, n, k + K);
        CHECK(wronskian(inp).eval_on_germ(f, K) == wronskian_series_oracle(inp, f, K));
    }
}

TEST_CASE("reparametrization covariance examples") {
    auto inp = input(1, {one(1), MultiPoly::variable(1, 0)});
    CurveGerm f({Series::identity(3)});

    Series id(3);
    id.set_coeff(1, Rational(1));
    auto rep_id = check_reparam_invariance(inp, f, ReparamGerm(id));
    CHECK(rep_id.equal);

    Series three(3);
    three.set_coeff(1, Rational(3));
    auto rep3 = check_reparam_invariance(inp, f, ReparamGerm(three));
    CHECK(rep3.lhs == Rational(3));
    CHECK(rep3.rhs == Rational(3));
    CHECK(rep3.equal);
}

TEST_CASE("reparametrization covariance on random instances") {
    SeededRng rng(32);
    for (int t = 0; t < 30; ++t) {
        int n = static_cast<int>(rng.uniform(1, 3));
        int k = static_cast<int>(rng.uniform(1, 3));
        WronskianInput inp;
        inp.k = k;
        for (int j = 0; j <= k; ++j) inp.g.push_back(random_poly(rng, n, 2, 2));
        CurveGerm f = random_germ(rng, n, k + 2);
        ReparamGerm phi = random_reparam(rng, k + 2);
        CHECK(check_reparam_invariance(inp, f, phi).equal);
    }
}

TEST_CASE("jet truncation of sections") {
    MultiPoly z = MultiPoly::variable(1, 0);
    CHECK(jet_truncate(z.pow(3), {Rational(0)}, 2).poly.is_zero());

    // z^2 at x = 1 through order 2: 1 + 2u + u^2 in u = z - 1.
    auto jet = jet_truncate(z.pow(2), {Rational(1)}, 2);
    MultiPoly u = MultiPoly::variable(1, 0);
    CHECK(jet.poly == one(1) + u * Rational(2) + u.pow(2));

    auto c = jet_truncate(MultiPoly::constant(1, Rational(9)), {Rational(4)}, 3);
    CHECK(c.poly == MultiPoly::constant(1, Rational(9)));

    // Truncation drops exactly the high-order tail.
    auto partial = jet_truncate(z.pow(3), {Rational(1)}, 2);
    CHECK(partial.poly == one(1) + u * Rational(3) + u.pow(2) * Rational(3));
}

TEST_CASE("wronskian value depends only on k-jets at the base point") {
    // h = 0 is trivially invisible.
    auto inp = input(1, {one(1), MultiPoly::variable(1, 0)});
    CurveGerm f({Series::identity(3)});
    CHECK(check_jet_dependence(inp, MultiPoly(1), {Rational(0)}, f).equal);

    // k = 1, x = 0, h = z1^3.
    SeededRng rng(33);
    for (int t = 0; t < 10; ++t) {
        CurveGerm g = random_germ_at(rng, {Rational(0)}, 1);
        auto rep = check_jet_dependence(inp, MultiPoly::variable(1, 0).pow(3), {Rational(0)}, g);
        CHECK(rep.equal);
    }

    // k = 2, x = (1, 0), h = (z1 - 1)^3.
    MultiPoly z1 = MultiPoly::variable(2, 0);
    MultiPoly z2 = MultiPoly::variable(2, 1);
    auto inp2 = input(2, {one(2), z1, z2});
    MultiPoly h = (z1 - one(2)).pow(3);
    std::vector<Rational> x = {Rational(1), Rational(0)};
    for (int t = 0; t < 10; ++t) {
        CurveGerm g = random_germ_at(rng, x, 2);
        CHECK(check_jet_dependence(inp2, h, x, g).equal);
    }

    // Perturbations that fail the vanishing order are rejected.
    CHECK_THROWS_AS(check_jet_dependence(inp, MultiPoly::variable(1, 0), {Rational(0)}, f),
                    std::invalid_argument);
}

TEST_CASE("trivialization rescales by h(x)^(k+1)") {
    SeededRng rng(34);
    for (int t = 0; t < 15; ++t) {
        int n = static_cast<int>(rng.uniform(1, 3));
        int k = static_cast<int>(rng.uniform(1, 3));
        WronskianInput inp;
        inp.k = k;
        for (int j = 0; j <= k; ++j) inp.g.push_back(random_poly(rng, n, 2, 2));
        CurveGerm f = random_germ(rng, n, k);
        MultiPoly h(n);
        Rational h0(0);
        while (sgn(h0) == 0) {
            h = random_poly(rng, n, 2, 2) + MultiPoly::constant(n, rng.small_int());
            h0 = h.eval(f.value_at_zero());
        }
        CHECK(check_trivialization(inp, h, f).equal);
    }
}

TEST_CASE("wronskian weighted degree is k(k+1)/2") {
    SeededRng rng(35);
    for (int t = 0; t < 20; ++t) {
        int n = static_cast<int>(rng.uniform(1, 2));
        int k = static_cast<int>(rng.uniform(1, 3));
        WronskianInput inp;
        inp.k = k;
        for (int j = 0; j <= k; ++j) inp.g.push_back(random_poly(rng, n, 2, 2));
        JetPoly w = wronskian(inp);
        if (!w.is_zero()) CHECK(w.weighted_degree() == wronskian_weight(k));
    }
}

TEST_CASE("input validation") {
    WronskianInput bad;
    bad.k = 1;
    bad.g = {one(1)};
    CHECK_THROWS_AS(wronskian(bad), std::invalid_argument);
    WronskianInput mixed;
    mixed.k = 1;
    mixed.g = {one(1), one(2)};
    CHECK_THROWS_AS(wronskian(mixed), std::invalid_argument);
}

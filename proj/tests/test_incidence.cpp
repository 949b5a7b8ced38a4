#include "doctest.h"
#include "effjet/incidence.hpp"
#include "effjet/rng.hpp"

using namespace effjet;

TEST_CASE("single witness chart matches the explicit spans") {
    auto ideal = build_single_instance(2, 2);
    REQUIRE(ideal.gens.size() == 3);
    CHECK(ideal.base_point ==
          std::vector<Rational>{Rational(0), Rational(-1), Rational(-1)});
    // delta = 1 flips the sign of the t coordinate.
    auto odd = build_single_instance(2, 1);
    CHECK(odd.base_point[2] == Rational(1));
    CHECK_THROWS_AS(build_single_instance(1, 2), std::invalid_argument);

    // (N=3, delta=2): generators z1^2, z2^2, z3^2 + t, 1 + z3.
    auto big = build_single_instance(3, 2);
    auto z = [](int i) { return MultiPoly::variable(4, i); };
    REQUIRE(big.gens.size() == 4);
    CHECK(big.gens[0] == z(0).pow(2));
    CHECK(big.gens[1] == z(1).pow(2));
    CHECK(big.gens[2] == z(2).pow(2) + z(3));
    CHECK(big.gens[3] == MultiPoly::constant(4, Rational(1)) + z(2));
}

TEST_CASE("single multiplicities are delta^(N-1)") {
    CHECK(verify_single_mult(2, 2).computed == 2);
    CHECK(verify_single_mult(2, 3).computed == 3);
    CHECK(verify_single_mult(3, 2).computed == 4);
    CHECK(verify_single_mult(2, 1).computed == 1);
    for (int N = 2; N <= 4; ++N)
        for (int delta = 1; delta <= 3; ++delta) {
            auto rep = verify_single_mult(N, delta);
            CHECK(rep.pass);
        }
}

TEST_CASE("product multiplicities equal the exponents b_i") {
    auto rep1 = verify_product_mult(2, 1, {2, 3}, 1);
    CHECK(rep1.computed == 18);
    CHECK(rep1.pass);
    CHECK(!rep1.layout_note.empty());
    auto rep2 = verify_product_mult(2, 1, {2, 3}, 2);
    CHECK(rep2.computed == 12);
    CHECK(rep2.pass);
}

TEST_CASE("one-factor product reduces to the single case") {
    // c = 1, k = N-1 is the single-Grassmannian instance.
    auto prod = verify_product_mult(1, 2, {3}, 1);
    auto single = verify_single_mult(3, 3);
    CHECK(prod.computed == single.computed);
    CHECK(prod.computed == 9);  // 3^2
}

TEST_CASE("pluecker degree of the single moving span is one") {
    for (int N = 2; N <= 3; ++N)
        for (int delta = 2; delta <= 3; ++delta) {
            GrassCurveSpec spec;
            spec.mode = GrassCurveSpec::Mode::Single;
            spec.N = N;
            spec.delta = delta;
            auto degs = plucker_degrees(spec);
            REQUIRE(degs.size() == 1);
            CHECK(degs[0] == 1);
        }
}

TEST_CASE("product curves move in exactly one factor") {
    GrassCurveSpec spec;
    spec.mode = GrassCurveSpec::Mode::Product;
    spec.c = 2;
    spec.k = 1;
    spec.deltas = {2, 3};
    for (int moving = 1; moving <= 2; ++moving) {
        spec.moving = moving;
        auto degs = plucker_degrees(spec);
        REQUIRE(degs.size() == 2);
        for (int factor = 1; factor <= 2; ++factor)
            CHECK(degs[static_cast<std::size_t>(factor - 1)] == (factor == moving ? 1 : 0));
    }
}

TEST_CASE("pluecker degree is invariant under row operations") {
    SeededRng rng(71);
    GrassCurveSpec spec;
    spec.mode = GrassCurveSpec::Mode::Single;
    spec.N = 3;
    spec.delta = 2;
    ParamMatrix m = plucker_matrix_single(spec.N, spec.delta);
    long base = plucker_degree_matrix(m);
    for (int t = 0; t < 10; ++t) {
        // Random elementary operations: swap, scale, add a multiple.
        ParamMatrix m2 = m;
        for (int step = 0; step < 4; ++step) {
            std::size_t a = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(m2.size()) - 1));
            std::size_t b = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(m2.size()) - 1));
            long kind = rng.uniform(0, 2);
            if (kind == 0) {
                std::swap(m2[a], m2[b]);
            } else if (kind == 1) {
                Rational c = rng.small_nonzero();
                for (auto& e : m2[a]) e = e * c;
            } else if (a != b) {
                Rational c = rng.small_int();
                for (std::size_t j = 0; j < m2[a].size(); ++j)
                    m2[a][j] = m2[a][j] + m2[b][j] * c;
            }
        }
        CHECK(plucker_degree_matrix(m2) == base);
    }
}

TEST_CASE("rank-deficient parametrized matrices are rejected") {
    ParamMatrix m(2, std::vector<MultiPoly>(3, MultiPoly(2)));
    m[0][0] = MultiPoly::constant(2, Rational(1));
    m[1][0] = MultiPoly::constant(2, Rational(2));  // proportional rows
    CHECK_THROWS_AS(plucker_degree_matrix(m), std::invalid_argument);
}

TEST_CASE("fiber finiteness by exact rank for linear systems") {
    GrassPointFq pt;
    pt.p = 5;
    pt.N = 2;
    pt.delta = 1;
    pt.rows = {{1, 0, 0}, {0, 1, 0}};  // Span(z0, z1)
    auto rep = fiber_finite(pt, {});
    CHECK(rep.kind == FiberReport::Kind::Finite);
    CHECK(rep.count == 1);
    CHECK(!rep.heuristic);

    GrassPointFq line;
    line.p = 5;
    line.N = 3;
    line.delta = 1;
    line.rows = {{1, 0, 0, 0}, {0, 1, 0, 0}};  // a line survives
    CHECK(fiber_finite(line, {}).kind == FiberReport::Kind::PositiveDim);

    // Restricting to a stratum can cut the fiber down to a point.
    auto restricted = fiber_finite(line, {2});
    CHECK(restricted.kind == FiberReport::Kind::Finite);
    CHECK(restricted.count == 1);
}

TEST_CASE("fiber enumeration classifies squares of coordinates") {
    GrassPointFq pt;
    pt.p = 5;
    pt.N = 2;
    pt.delta = 2;
    // Span(z0^2, z1^2): only [0,0,1] survives.
    pt.rows = {{1, 0, 0, 0, 0, 0}, {0, 0, 0, 1, 0, 0}};
    auto rep = fiber_finite(pt, {});
    CHECK(rep.kind == FiberReport::Kind::Finite);
    CHECK(rep.count == 1);
    CHECK(rep.heuristic);
    CHECK(rep.count_q == 1);
    CHECK(rep.count_q2 == 1);

    // Span(z0^2, z0 z1) vanishes on the whole line z0 = 0.
    GrassPointFq cone;
    cone.p = 5;
    cone.N = 2;
    cone.delta = 2;
    cone.rows = {{1, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0}};
    auto rep2 = fiber_finite(cone, {});
    CHECK(rep2.kind == FiberReport::Kind::PositiveDim);
    CHECK(rep2.count_q == 6);    // P^1(F_5)
    CHECK(rep2.count_q2 == 26);  // P^1(F_25)
}

TEST_CASE("fiber counts are independent of the worker count") {
    GrassPointFq pt;
    pt.p = 5;
    pt.N = 2;
    pt.delta = 2;
    pt.rows = {{1, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0}};
    auto serial = fiber_finite(pt, {}, 1000000, 1);
    auto parallel = fiber_finite(pt, {}, 1000000, 4);
    CHECK(serial.count_q == parallel.count_q);
    CHECK(serial.count_q2 == parallel.count_q2);
    CHECK(serial.kind == parallel.kind);
}

TEST_CASE("fiber probe input validation") {
    GrassPointFq dep;
    dep.p = 5;
    dep.N = 2;
    dep.delta = 1;
    dep.rows = {{1, 0, 0}, {2, 0, 0}};
    CHECK_THROWS_AS(fiber_finite(dep, {}), std::invalid_argument);

    GrassPointFq ok;
    ok.p = 5;
    ok.N = 2;
    ok.delta = 2;
    ok.rows = {{1, 0, 0, 0, 0, 0}};
    CHECK_THROWS_AS(fiber_finite(ok, {}, 10), std::invalid_argument);  // budget too small
    CHECK_THROWS_AS(fiber_finite(ok, {5}), std::invalid_argument);     // J out of range
}

TEST_CASE("verification reports carry expected values") {
    auto rep = verify_single_mult(2, 2);
    CHECK(rep.expected == 2);
    CHECK(!rep.cap_exceeded);
    CHECK(rep.detail.stabilized);
    auto capped = verify_single_mult(3, 3, 2);  // cap too low to stabilize
    CHECK(capped.cap_exceeded);
    CHECK(!capped.pass);
}

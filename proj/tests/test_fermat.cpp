#include "doctest.h"
#include "effjet/fermat.hpp"
#include "effjet/random_instances.hpp"

using namespace effjet;

namespace {

MultiPoly z(int vars, int i) { return MultiPoly::variable(vars, i); }

FermatCoeffs constant_coeffs(const FermatSpec& spec, const Rational& value) {
    FermatCoeffs out;
    for (const auto& index : monomials_of_degree(spec.n + 1, spec.delta))
        out.a.emplace(index, MultiPoly::constant(spec.n + 1, value));
    return out;
}

}  // namespace

TEST_CASE("diagonal fermat section in one variable pair") {
    auto spec = FermatSpec::with_default_tau(1, 0, 1, 1, 1);
    auto sigma = build_section(spec, constant_coeffs(spec, Rational(1)));
    CHECK(sigma == z(2, 0).pow(2) + z(2, 1).pow(2));
    CHECK(sigma.homogeneous_degree() == 2);
    CHECK(spec.section_degree() == 2);
}

TEST_CASE("zero coefficients give the zero section") {
    auto spec = FermatSpec::with_default_tau(1, 0, 1, 1, 1);
    CHECK(build_section(spec, constant_coeffs(spec, Rational(0))).is_zero());
    CHECK(build_section(spec, FermatCoeffs{}).is_zero());
}

TEST_CASE("single-term section carries the full degree") {
    auto spec = FermatSpec::with_default_tau(2, 1, 1, 2, 1);
    FermatCoeffs coeffs;
    coeffs.a.emplace(Exponents{1, 0, 0}, z(3, 2));
    auto sigma = build_section(spec, coeffs);
    CHECK(sigma == z(3, 2) * z(3, 0).pow(3));
    CHECK(sigma.homogeneous_degree() == 4);  // eps + (r+k)delta = 1 + 3
}

TEST_CASE("coefficient validation") {
    auto spec = FermatSpec::with_default_tau(1, 1, 1, 1, 1);
    FermatCoeffs bad_degree;
    bad_degree.a.emplace(Exponents{1, 0}, MultiPoly::constant(2, Rational(1)));  // degree 0, eps 1
    CHECK_THROWS_AS(build_section(spec, bad_degree), std::invalid_argument);

    FermatCoeffs bad_index;
    bad_index.a.emplace(Exponents{2, 0}, z(2, 0));  // |I| = 2 != delta
    CHECK_THROWS_AS(build_section(spec, bad_index), std::invalid_argument);

    FermatCoeffs inhomogeneous;
    inhomogeneous.a.emplace(Exponents{1, 0}, z(2, 0) + MultiPoly::constant(2, Rational(1)));
    CHECK_THROWS_AS(build_section(spec, inhomogeneous), std::invalid_argument);
}

TEST_CASE("spec validation") {
    CHECK_THROWS_AS(FermatSpec::with_default_tau(1, 0, 1, 0, 1), std::invalid_argument);  // r = 0
    FermatSpec dup = FermatSpec::with_default_tau(2, 0, 1, 1, 1);
    dup.tau[2] = dup.tau[0];  // repeated form breaks general position
    CHECK_THROWS_AS(dup.validate(), std::invalid_argument);
    FermatSpec shifted = FermatSpec::with_default_tau(2, 0, 1, 1, 1);
    shifted.tau[2] = z(3, 0) + z(3, 1);  // still in general position
    shifted.validate();
}

TEST_CASE("sections are linear in the coefficients") {
    SeededRng rng(51);
    for (int t = 0; t < 15; ++t) {
        int n = static_cast<int>(rng.uniform(1, 2));
        int delta = static_cast<int>(rng.uniform(1, 2));
        int eps = static_cast<int>(rng.uniform(0, 2));
        auto spec = FermatSpec::with_default_tau(n, eps, delta, 1 + static_cast<int>(rng.uniform(0, 2)),
                                                 static_cast<int>(rng.uniform(0, 2)));
        FermatCoeffs a, b, sum;
        for (const auto& index : monomials_of_degree(n + 1, delta)) {
            MultiPoly pa = random_homogeneous(rng, n + 1, eps, 2);
            MultiPoly pb = random_homogeneous(rng, n + 1, eps, 2);
            a.a.emplace(index, pa);
            b.a.emplace(index, pb);
            sum.a.emplace(index, pa + pb);
        }
        CHECK(build_section(spec, sum) == build_section(spec, a) + build_section(spec, b));
    }
}

TEST_CASE("coordinate tau sections live on the (r+k)-divisible lattice") {
    auto spec = FermatSpec::with_default_tau(2, 0, 2, 2, 1);  // r+k = 3
    auto sigma = build_section(spec, constant_coeffs(spec, Rational(1)));
    REQUIRE(!sigma.is_zero());
    for (const auto& [e, c] : sigma.terms()) {
        unsigned total = 0;
        for (unsigned v : e) {
            CHECK(v % 3 == 0);
            total += v;
        }
        CHECK(total == 6);  // (r+k) * delta
    }
}

TEST_CASE("family construction") {
    auto spec = FermatSpec::with_default_tau(2, 1, 6, 100, 1);
    // c = 1 reduces to build_section.
    FermatCoeffs coeffs;
    coeffs.a.emplace(Exponents{6, 0, 0}, z(3, 1));
    auto rep = build_family({spec}, {coeffs});
    CHECK(rep.sections.size() == 1);
    CHECK(rep.sections[0] == build_section(spec, coeffs));
    CHECK(rep.kjet_applicable);  // n=2, c=1 -> k = 1 matches, delta=6 >= 4
    CHECK(rep.kjet.verdict == (BigInt(100) > rep.kjet.r_threshold));

    CHECK_THROWS_AS(build_family({}, {}), std::invalid_argument);
    auto other = FermatSpec::with_default_tau(1, 1, 6, 100, 1);
    FermatCoeffs oc;
    CHECK_THROWS_AS(build_family({spec, other}, {coeffs, oc}), std::invalid_argument);
}

TEST_CASE("two-section family with independent coefficients") {
    // n = 3, c = 2: the canonical jet order is 1 and delta0 = 6.
    auto s1 = FermatSpec::with_default_tau(3, 1, 6, 2000, 1);
    auto s2 = s1;
    FermatCoeffs c1, c2;
    c1.a.emplace(Exponents{6, 0, 0, 0}, z(4, 1));
    c2.a.emplace(Exponents{0, 6, 0, 0}, z(4, 2));
    auto rep = build_family({s1, s2}, {c1, c2});
    REQUIRE(rep.sections.size() == 2);
    for (const auto& sigma : rep.sections) {
        CHECK(!sigma.is_zero());
        CHECK(sigma.homogeneous_degree() == s1.section_degree());
    }
    CHECK(rep.sections[0] != rep.sections[1]);
    CHECK(rep.kjet_applicable);
    CHECK(rep.kjet.delta_ok);
    CHECK(rep.kjet.eps_ok);
}

TEST_CASE("smoothness probe accepts the diagonal quadric") {
    MultiPoly sigma = z(3, 0).pow(2) + z(3, 1).pow(2) + z(3, 2).pow(2);
    auto rep = smoothness_probe({sigma}, 40, 7, 0);
    CHECK(rep.tested == 40);
    CHECK(rep.failures.empty());
}

TEST_CASE("smoothness probe flags the double hyperplane") {
    auto rep = smoothness_probe({z(3, 0).pow(2)}, 25, 7, 1);
    CHECK(rep.tested > 0);
    CHECK(!rep.failures.empty());
    for (const auto& f : rep.failures) CHECK(f.rank == 0);
}

TEST_CASE("smoothness probe edge cases") {
    MultiPoly sigma = z(3, 0).pow(2) + z(3, 1).pow(2) + z(3, 2).pow(2);
    auto rep = smoothness_probe({sigma}, 0, 7, 0);
    CHECK(rep.tested == 0);
    CHECK(rep.failures.empty());
    CHECK_THROWS_AS(smoothness_probe({sigma}, 5, 6, 0), std::invalid_argument);  // composite p
    MultiPoly scaled = sigma * Rational(1, 7);
    CHECK_THROWS_AS(smoothness_probe({scaled}, 5, 7, 0), std::invalid_argument);
}

TEST_CASE("smoothness probe is deterministic across worker counts") {
    MultiPoly sigma = z(3, 0).pow(2) + z(3, 1).pow(2) + z(3, 2).pow(2);
    auto serial = smoothness_probe({sigma}, 30, 7, 9, 1);
    auto parallel = smoothness_probe({sigma}, 30, 7, 9, 4);
    CHECK(serial.tested == parallel.tested);
    CHECK(serial.failures.size() == parallel.failures.size());
}

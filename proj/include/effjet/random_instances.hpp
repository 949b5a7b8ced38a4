/*
 * random_instances.hpp
 * --------------------
 * Seeded generators for the randomized identity suites: small-coefficient
 * germs, reparametrizations, polynomials and jet polynomials. Everything
 * draws from the [-9, 9] integer box.
 */
#pragma once

#include "effjet/jetpoly.hpp"
#include "effjet/multipoly.hpp"
#include "effjet/rng.hpp"
#include "effjet/series.hpp"

namespace effjet {

inline Series random_series(SeededRng& rng, int order) {
    Series s(order);
    for (int j = 0; j <= order; ++j) s.set_coeff(j, rng.small_int());
    return s;
}

inline CurveGerm random_germ(SeededRng& rng, int n, int order) {
    std::vector<Series> comps;
    for (int i = 0; i < n; ++i) comps.push_back(random_series(rng, order));
    return CurveGerm(std::move(comps));
}

// Germ based at a prescribed point.
inline CurveGerm random_germ_at(SeededRng& rng, const std::vector<Rational>& base, int order) {
    std::vector<Series> comps;
    for (const auto& b : base) {
        Series s = random_series(rng, order);
        s.set_coeff(0, b);
        comps.push_back(std::move(s));
    }
    return CurveGerm(std::move(comps));
}

inline ReparamGerm random_reparam(SeededRng& rng, int order) {
    Series s(order);
    s.set_coeff(1, rng.small_nonzero());
    for (int j = 2; j <= order; ++j) s.set_coeff(j, rng.small_int());
    return ReparamGerm(std::move(s));
}

inline MultiPoly random_poly(SeededRng& rng, int vars, int maxdeg, int terms) {
    MultiPoly p(vars);
    for (int t = 0; t < terms; ++t) {
        Exponents e(static_cast<std::size_t>(vars), 0);
        long budget = rng.uniform(0, maxdeg);
        for (long used = 0; used < budget; ++used)
            e[static_cast<std::size_t>(rng.uniform(0, vars - 1))] += 1;
        p.add_term(e, rng.small_int());
    }
    return p;
}

inline MultiPoly random_nonzero_poly(SeededRng& rng, int vars, int maxdeg, int terms) {
    MultiPoly p(vars);
    while (p.is_zero()) p = random_poly(rng, vars, maxdeg, terms);
    return p;
}

inline MultiPoly random_homogeneous(SeededRng& rng, int vars, int deg, int terms) {
    MultiPoly p(vars);
    for (int t = 0; t < terms; ++t) {
        Exponents e(static_cast<std::size_t>(vars), 0);
        for (int used = 0; used < deg; ++used)
            e[static_cast<std::size_t>(rng.uniform(0, vars - 1))] += 1;
        p.add_term(e, rng.small_int());
    }
    return p;
}

inline JetPoly random_jetpoly(SeededRng& rng, int n, int k, int terms) {
    JetPoly q(n, k);
    for (int t = 0; t < terms; ++t) {
        Exponents e(static_cast<std::size_t>(q.slots()), 0);
        long factors = rng.uniform(1, 3);
        for (long f = 0; f < factors; ++f) {
            int coord = static_cast<int>(rng.uniform(0, n - 1));
            int deriv = static_cast<int>(rng.uniform(0, k));
            e[static_cast<std::size_t>(q.slot(coord, deriv))] +=
                static_cast<unsigned>(rng.uniform(1, 2));
        }
        q.add_term(e, rng.small_int());
    }
    return q;
}

}  // namespace effjet

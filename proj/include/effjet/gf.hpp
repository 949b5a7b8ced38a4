/*
 * gf.hpp
 * ------
 * Small prime fields F_p, the quadratic extension F_{p^2}, and reductions
 * of rational polynomials mod p. Enough for Monte Carlo smoothness probes
 * and brute-force point counts on projective varieties; p stays small
 * (single machine word, p^2 well under 2^62).
 */
#pragma once

#include <vector>

#include "effjet/multipoly.hpp"

namespace effjet {

bool is_prime(long p);

long mod_pos(long a, long p);
long inv_mod(long a, long p);  // a != 0 mod p
long pow_mod(long a, unsigned long e, long p);

// Element of F_{p^2} = F_p[w]/(w^2 - nonres).
struct Fp2 {
    long a = 0;
    long b = 0;
    bool operator==(const Fp2& o) const { return a == o.a && b == o.b; }
};

struct QuadExt {
    long p;
    long nonres;  // quadratic non-residue mod p

    explicit QuadExt(long prime);

    Fp2 from_base(long x) const { return {mod_pos(x, p), 0}; }
    Fp2 add(Fp2 x, Fp2 y) const { return {(x.a + y.a) % p, (x.b + y.b) % p}; }
    Fp2 mul(Fp2 x, Fp2 y) const;
    Fp2 pow(Fp2 x, unsigned long e) const;
    bool is_zero(Fp2 x) const { return x.a == 0 && x.b == 0; }
    // Enumeration helper: the i-th element, 0 <= i < p^2.
    Fp2 element(long i) const { return {i % p, i / p}; }
    long size() const { return p * p; }
};

// A rational polynomial reduced mod p: term list with coefficients in F_p.
// Throws if p divides a coefficient denominator.
struct GfPoly {
    long p = 0;
    int num_vars = 0;
    std::vector<std::pair<Exponents, long>> terms;

    static GfPoly reduce(const MultiPoly& poly, long p);

    long eval(const std::vector<long>& point) const;
    Fp2 eval2(const QuadExt& f, const std::vector<Fp2>& point) const;

    // Coefficient list of the univariate polynomial obtained by fixing all
    // variables except `var` to `point`'s values.
    std::vector<long> univariate_in(int var, const std::vector<long>& point) const;
};

int rank_mod_p(std::vector<std::vector<long>> rows, long p);

// Reduced row echelon form in place; returns the rank.
int rref_mod_p(std::vector<std::vector<long>>& rows, long p);

}  // namespace effjet

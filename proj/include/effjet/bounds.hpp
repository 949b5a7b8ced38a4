/*
 * bounds.hpp
 * ----------
 * Exact big-integer evaluation of the effective degree bounds: the
 * Kobayashi-conjecture bound n^(2n+3)(n+1), the Debarre-conjecture bound
 * (2n)^(n+3), the Diverio-Trapani-type threshold d_0(n, c), the product-
 * Grassmannian exponents b_i, the degree decomposition d = delta0(r+k)+eps,
 * and the hypothesis checker for almost-k-jet-ampleness of complete
 * intersections. Every intermediate constant is carried in the report so a
 * reader can re-derive the chain line by line.
 */
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "effjet/rational.hpp"

namespace effjet {

struct BoundReport {
    std::string name;
    int n = 0;
    int c = 0;
    int k = 0;
    BigInt delta0;
    BigInt exact;
    BigInt simplified;
    // Intermediate constants, in a fixed order for deterministic output.
    std::vector<std::pair<std::string, BigInt>> params;
};

// Hypersurface degree bound for Kobayashi hyperbolicity: k = n-1,
// delta = n^2, the Wronskian ideal stabilizes at m_inf = k, and the
// base-locus threshold is M = delta^k. Requires n >= 2.
BoundReport kobayashi_bound(int n);

// Complete-intersection degree bound for ample cotangent bundles, at the
// proof's specialization c = ceil(n/2), k = 1, delta0 = 2n-1. Evaluates
// both the displayed closed form and the generic d_0 formula and insists
// they agree. Requires n >= 2.
BoundReport debarre_bound(int n);

// Threshold d_0 for the k-jet-ampleness criterion with k = ceil(n/c)-1 and
// delta0 = n(k+1). Requires 1 <= c <= n-1.
BoundReport dt_bound(int n, int c);

// b_i = (prod_j delta_j^(k+1)) / delta_i; the division is always exact.
std::vector<BigInt> b_coeffs(const std::vector<BigInt>& deltas, int k);

struct Decomposition {
    bool feasible = false;
    int n = 0;
    int c = 0;
    int k = 0;
    BigInt delta0;
    BigInt d;
    BigInt d0;           // threshold; infeasible iff d < d0
    BigInt eps;          // unique in [k, k+delta0) with delta0 | (d - eps)
    BigInt r;            // (d - eps)/delta0 - k
    BigInt r_threshold;  // sum b_i (k+1)(eps + k delta0) with equal deltas
    bool r_margin_ok = false;
};

// Decomposes d = delta0(r+k) + eps per the equal-degree specialization;
// infeasible (not an error) below the threshold d0(n, c).
Decomposition decompose(const BigInt& d, int n, int c);

struct KjetCheck {
    int n = 0;
    int c = 0;
    int k = 0;  // ceil(n/c) - 1
    BigInt delta0;
    std::vector<BigInt> b;
    std::vector<BigInt> d;  // d_i = eps_i + (r+k) delta_i
    BigInt r_threshold;
    bool delta_ok = false;  // delta_i >= n(k+1) for all i
    bool eps_ok = false;    // eps_i >= k for all i
    bool r_ok = false;      // r > sum b_i (k+1)(eps_i + k delta_i)
    bool verdict = false;
};

KjetCheck kjet_check(int n, int c, const std::vector<BigInt>& eps,
                     const std::vector<BigInt>& deltas, const BigInt& r);

}  // namespace effjet

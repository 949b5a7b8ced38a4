/*
 * wronskian.hpp
 * -------------
 * Wronskian jet differentials built from the canonical derivation: the
 * determinant of the (k+1) x (k+1) matrix whose (i, j) entry is D^i
 * applied to g_j. The result is an invariant jet differential of weight
 * k(k+1)/2; the checks below exercise its defining identities on exact
 * germ evaluations.
 */
#pragma once

#include <vector>

#include "effjet/jetpoly.hpp"
#include "effjet/multipoly.hpp"
#include "effjet/series.hpp"

namespace effjet {

struct WronskianInput {
    int k = 0;                 // jet order; expects k+1 entries
    std::vector<MultiPoly> g;  // sections over a shared variable count

    int vars() const { return g.empty() ? 0 : g.front().num_vars(); }
    void validate() const;
};

inline long wronskian_weight(int k) { return static_cast<long>(k) * (k + 1) / 2; }

// Determinant over the jet-polynomial ring (cofactor expansion with
// memoized minors; matrices stay at size k+1 <= 5 in target workloads).
JetPoly wronskian(const WronskianInput& inp);

// Independent check: the classical univariate Wronskian of the composed
// functions g_j o f, as a truncated series. Must agree exactly with
// evaluating wronskian(inp) on f.
Series wronskian_series_oracle(const WronskianInput& inp, const CurveGerm& f, int K);

struct InvarianceReport {
    Rational lhs;  // W evaluated on f o phi, at t = 0
    Rational rhs;  // phi'(0)^(k(k+1)/2) * W evaluated on f, at t = 0
    bool equal = false;
};

InvarianceReport check_reparam_invariance(const WronskianInput& inp, const CurveGerm& f,
                                          const ReparamGerm& phi);

// Order-k Taylor truncation of a section at a point, written in the
// shifted variables u_i = z_i - x_i.
struct JetOfSection {
    std::vector<Rational> base_point;
    int order = 0;
    MultiPoly poly;  // polynomial in u, total degree <= order

    JetOfSection() : poly(0) {}
};

JetOfSection jet_truncate(const MultiPoly& g, const std::vector<Rational>& x, int k);

struct JetDependenceReport {
    Rational perturbed;  // W(g0 + h, g1, ..., gk) on f at t = 0
    Rational original;   // W(g0, ..., gk) on f at t = 0
    bool equal = false;
};

// Requires h to vanish to order >= k+1 at x and f(0) = x; the Wronskian
// value then depends only on the k-jets of the sections at x.
JetDependenceReport check_jet_dependence(const WronskianInput& inp, const MultiPoly& h,
                                         const std::vector<Rational>& x, const CurveGerm& f);

struct TrivializationReport {
    Rational lhs;  // W(h*g0, ..., h*gk) on f at t = 0
    Rational rhs;  // h(f(0))^(k+1) * W(g0, ..., gk) on f at t = 0
    bool equal = false;
};

// Rescaling every section by a unit h (h(f(0)) != 0) rescales the
// evaluated Wronskian by h(f(0))^(k+1); this is the trivialization
// independence of the glued Wronskian section.
TrivializationReport check_trivialization(const WronskianInput& inp, const MultiPoly& h,
                                          const CurveGerm& f);

}  // namespace effjet

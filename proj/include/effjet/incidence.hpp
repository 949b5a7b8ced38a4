/*
 * incidence.hpp
 * -------------
 * Brute-force verification of the concrete intersection claims on the
 * universal family of complete intersections over (products of)
 * Grassmannians: the explicit degree-1 curves, the local intersection
 * multiplicities delta^(N-1) and b_i at their witness points, Pluecker
 * degrees of the moving spans, and finiteness probes for Grassmannian
 * fibers over small prime fields.
 */
#pragma once

#include <string>
#include <vector>

#include "effjet/bounds.hpp"
#include "effjet/localmult.hpp"
#include "effjet/multipoly.hpp"

namespace effjet {

// Affine-chart ideal of the single-Grassmannian witness point: chart
// z_0 = 1, t_0 = 1, variables z_1..z_N, t; generators z_1^delta, ...,
// z_{N-1}^delta, z_N^delta + t, 1 + z_N based at z_N = -1, t = -(-1)^delta.
ChartIdeal build_single_instance(int N, int delta);

// Product-Grassmannian analogue on n = (k+1)c coordinates plus z_0;
// section l of factor m occupies coordinate z_{lc+m}; factor i carries the
// moving section z_i^{delta_i} + t and the hyperplane 1 + z_i.
ChartIdeal build_product_instance(int c, int k, const std::vector<int>& deltas, int i);

struct MultReport {
    std::string instance;
    std::string layout_note;
    ChartIdeal ideal;  // the chart generators and base point verified
    bool cap_exceeded = false;
    long computed = 0;
    BigInt expected;
    bool pass = false;
    LocalLengthResult detail;
};

MultReport verify_single_mult(int N, int delta, int degree_cap = -1);
MultReport verify_product_mult(int c, int k, const std::vector<int>& deltas, int i,
                               int degree_cap = -1);

struct GrassCurveSpec {
    enum class Mode { Single, Product };
    Mode mode = Mode::Single;
    // Single: spans (z_1^delta, ..., z_{N-1}^delta, t_0 z_N^delta + t_1 z_0^delta).
    int N = 2;
    int delta = 1;
    // Product: c factors of (k+1) spans each; factor `moving` carries the
    // pencil t_0 z_i^{delta_i} + t_1 z_0^{delta_i} in its first slot.
    int c = 1;
    int k = 1;
    std::vector<int> deltas;
    int moving = 1;  // 1-based
};

// Parametrized coefficient matrix of a curve of spans: entries are
// polynomials in (t_0, t_1), columns indexed by the descending-lex
// monomial basis of the degree-delta forms.
using ParamMatrix = std::vector<std::vector<MultiPoly>>;

ParamMatrix plucker_matrix_single(int N, int delta);
ParamMatrix plucker_matrix_product(const GrassCurveSpec& spec, int factor);

// Degree of the span curve under the Pluecker map: all maximal minors,
// divided by their gcd, read off as a common homogeneous degree in
// (t_0, t_1). Throws on a rank-deficient matrix.
long plucker_degree_matrix(const ParamMatrix& m);

// Per-factor degrees for a curve spec (one entry in single mode).
std::vector<long> plucker_degrees(const GrassCurveSpec& spec);

struct GrassPointFq {
    long p = 0;
    int N = 0;
    int delta = 1;
    // (k+1) x dim V_delta over the degree-delta monomial basis in
    // lexicographically descending order (z_0^delta first).
    std::vector<std::vector<long>> rows;

    // Reduces entries mod p and row-echelonizes; throws if the rows are
    // dependent (not a Grassmannian point).
    void canonicalize();
};

struct FiberReport {
    enum class Kind { Finite, PositiveDim, Unknown };
    Kind kind = Kind::Unknown;
    long count = -1;      // meaningful for Finite
    bool heuristic = false;  // true on the enumeration (delta >= 2) path
    long count_q = -1;
    long count_q2 = -1;
    std::string note;
};

// Finiteness of the fiber {[z] in P_J : all rows vanish}. Exact linear
// rank for delta = 1; for delta >= 2, point counts over F_p and F_{p^2}
// classify by growth (a d-dimensional component multiplies counts by
// about q^d). Enumeration is capped at `budget` points per field.
FiberReport fiber_finite(const GrassPointFq& pt, const std::vector<int>& J,
                         long budget = 1000000, int workers = 1);

}  // namespace effjet

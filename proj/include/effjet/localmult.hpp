/*
 * localmult.hpp
 * -------------
 * Local intersection multiplicity at an isolated zero, computed as the
 * dimension of the truncated local algebra: for rising degree d, the
 * dimension of C[x]/(I + m^d) is found by exact linear algebra on the
 * monomial basis, and the answer is the first value repeated for two
 * consecutive d (Nakayama: equality at consecutive degrees pins the
 * limit). Generators carrying a linear term are first removed by exact
 * implicit-function substitution, which preserves every truncated
 * dimension and keeps the linear algebra at desk scale.
 */
#pragma once

#include <string>
#include <vector>

#include "effjet/multipoly.hpp"

namespace effjet {

struct ChartIdeal {
    std::vector<std::string> var_names;  // optional; defaults used if empty
    std::vector<MultiPoly> gens;
    std::vector<Rational> base_point;

    int num_vars() const { return static_cast<int>(base_point.size()); }
    // All generators must vanish at the base point.
    void validate() const;
};

struct LocalLengthResult {
    bool stabilized = false;
    long length = 0;       // valid when stabilized
    int stabilized_at = 0;  // the first of the two agreeing degrees
    int cap = 0;
    std::vector<long> dims;  // dim of C[x]/(I + m^d) for d = 1, 2, ...
};

// degree_cap < 0 selects the default 2 + sum of generator total degrees.
LocalLengthResult local_length(const ChartIdeal& ideal, int degree_cap = -1);

}  // namespace effjet

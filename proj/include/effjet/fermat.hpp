/*
 * fermat.hpp
 * ----------
 * Fermat-type sections sigma(a) = sum_{|I|=delta} a_I tau^((r+k)I) over
 * n+1 general-position linear forms tau_j, the complete-intersection
 * families they cut out, and a Monte Carlo smoothness probe over a small
 * prime field.
 */
#pragma once

#include <vector>

#include "effjet/bounds.hpp"
#include "effjet/multipoly.hpp"

namespace effjet {

struct FermatSpec {
    int n = 0;      // ambient projective dimension; polynomials use n+1 vars
    int eps = 0;    // coefficient degree
    int delta = 0;  // index degree |I|
    int r = 1;
    int k = 1;
    std::vector<MultiPoly> tau;  // n+1 homogeneous linear forms

    // Uses the coordinate forms z_0, ..., z_n.
    static FermatSpec with_default_tau(int n, int eps, int delta, int r, int k);

    int section_degree() const { return eps + (r + k) * delta; }

    // Checks linearity, r >= 1, and general position (every n-subset of
    // the forms is linearly independent).
    void validate() const;
};

struct FermatCoeffs {
    // Key: multi-index I of length n+1 with |I| = delta. Missing indices
    // are treated as zero; values must be homogeneous of degree eps.
    std::map<Exponents, MultiPoly> a;
};

MultiPoly build_section(const FermatSpec& spec, const FermatCoeffs& coeffs);

struct FamilyReport {
    std::vector<MultiPoly> sections;
    bool kjet_applicable = false;  // shared r and the canonical jet order for (n, c)
    KjetCheck kjet;
};

FamilyReport build_family(const std::vector<FermatSpec>& specs,
                          const std::vector<FermatCoeffs>& coeffs);

struct SmoothnessFailure {
    std::vector<long> point;  // projective representative over F_p
    int rank = 0;
};

struct SmoothnessReport {
    long p = 0;
    std::uint64_t seed = 0;
    int requested = 0;
    int tested = 0;  // points actually found on the zero locus
    std::vector<SmoothnessFailure> failures;
};

// Samples points of the common zero locus over F_p (solving one
// coordinate where possible, rejecting otherwise) and checks that the
// c x (n+1) Jacobian has rank c at each. Trials get independent seed
// streams, so the report is identical for any worker count.
SmoothnessReport smoothness_probe(const std::vector<MultiPoly>& sections, int trials, long p,
                                  std::uint64_t seed, int workers = 1);

}  // namespace effjet

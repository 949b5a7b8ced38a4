/*
 * multipoly.hpp
 * -------------
 * Sparse multivariate polynomials with exact rational coefficients.
 * A polynomial is a map from exponent vectors (dense, fixed length
 * num_vars) to nonzero coefficients; zero coefficients are never stored.
 * All values are immutable in spirit: operations return new polynomials.
 */
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "effjet/rational.hpp"

namespace effjet {

using Exponents = std::vector<unsigned>;

inline unsigned total_degree(const Exponents& e) {
    unsigned d = 0;
    for (unsigned x : e) d += x;
    return d;
}

class MultiPoly {
public:
    using TermMap = std::map<Exponents, Rational>;

    explicit MultiPoly(int num_vars);

    static MultiPoly constant(int num_vars, const Rational& c);
    static MultiPoly variable(int num_vars, int i);
    static MultiPoly monomial(const Exponents& e, const Rational& c);

    int num_vars() const { return num_vars_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    // Accumulates c * z^e, pruning the term if the sum cancels.
    void add_term(const Exponents& e, const Rational& c);

    const Rational& coeff(const Exponents& e) const;  // zero if absent

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator-() const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator*(const Rational& c) const;
    bool operator==(const MultiPoly& o) const;
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    MultiPoly pow(unsigned e) const;

    // Total degree of the polynomial; -1 for the zero polynomial.
    int degree() const;

    // Degree if every term has the same total degree; nullopt otherwise.
    // The zero polynomial reports 0.
    std::optional<int> homogeneous_degree() const;

    MultiPoly partial(int var) const;

    Rational eval(const std::vector<Rational>& point) const;

    // Substitutes `value` for variable `var`; value shares num_vars.
    MultiPoly substitute(int var, const MultiPoly& value) const;

    // Simultaneous substitution z_i -> values[i].
    MultiPoly substitute_all(const std::vector<MultiPoly>& values) const;

    // Drops every term of total degree > maxdeg.
    MultiPoly truncate_total_degree(int maxdeg) const;

    bool uses_variable(int var) const;

    // Re-indexes onto the subset of variables with keep[i] true. Every
    // surviving term must have zero exponent on dropped variables.
    MultiPoly restrict_variables(const std::vector<bool>& keep) const;

    std::string to_string(const std::vector<std::string>& names = {}) const;

private:
    int num_vars_;
    TermMap terms_;

    void check_same_vars(const MultiPoly& o) const;
};

// Enumerates all exponent vectors over `vars` slots with total degree
// exactly `deg`, in lexicographically descending order (z_0-heavy first).
std::vector<Exponents> monomials_of_degree(int vars, int deg);

// C(n, k) as an exact big integer.
BigInt binomial(unsigned long n, unsigned long k);

// Rank of a rational matrix (Gaussian elimination, exact).
int rational_rank(std::vector<std::vector<Rational>> rows);

}  // namespace effjet

/*
 * jetpoly.hpp
 * -----------
 * Green-Griffiths jet algebra: polynomials in the formal jet variables
 * z_i^(j) (coordinate i, derivative order j), the weighted degree that
 * assigns weight j to z_i^(j), the canonical derivation D that shifts
 * z_i^(j) to z_i^(j+1), and evaluation on truncated curve germs.
 *
 * A JetPoly of coordinate count n and jet order k stores exponent vectors
 * over n*(k+1) slots; slot(i, j) = i*(k+1) + j is the variable z_i^(j).
 */
#pragma once

#include <map>
#include <optional>
#include <string>

#include "effjet/multipoly.hpp"
#include "effjet/series.hpp"

namespace effjet {

class JetPoly {
public:
    using TermMap = std::map<Exponents, Rational>;

    JetPoly(int coords, int order);

    // Lifts an ordinary polynomial to a weight-0 jet polynomial of jet
    // order k (all exponents land on the derivative-order-0 slots).
    static JetPoly from_poly(const MultiPoly& p, int order);

    static JetPoly constant(int coords, int order, const Rational& c);
    static JetPoly jet_variable(int coords, int order, int coord, int deriv);

    int coords() const { return n_; }
    int order() const { return k_; }
    int slots() const { return n_ * (k_ + 1); }
    int slot(int coord, int deriv) const { return coord * (k_ + 1) + deriv; }

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    void add_term(const Exponents& e, const Rational& c);

    // Re-indexes onto a higher jet order (the natural graded inclusion).
    JetPoly with_order(int order) const;

    JetPoly operator+(const JetPoly& o) const;
    JetPoly operator-(const JetPoly& o) const;
    JetPoly operator*(const JetPoly& o) const;
    JetPoly operator*(const Rational& c) const;
    bool operator==(const JetPoly& o) const;
    bool operator!=(const JetPoly& o) const { return !(*this == o); }

    // Weight of one monomial: sum over slots of deriv_order * exponent.
    static long term_weight(const Exponents& e, int coords, int order);

    // Weighted degree when homogeneous; nullopt when weights are mixed.
    // The zero polynomial reports weight 0.
    std::optional<long> weighted_degree() const;

    // The canonical derivation: raises jet order and weight by one and
    // satisfies Leibniz; defined on monomials by bumping one slot's
    // derivative order per summand.
    JetPoly derive() const;

    // Substitutes z_i^(j) by the j-th derivative of germ component i and
    // truncates at K. Requires f.order() >= order() + K.
    Series eval_on_germ(const CurveGerm& f, int K) const;

    bool has_integer_coefficients() const;

    std::string to_string() const;

private:
    int n_;
    int k_;
    TermMap terms_;

    void check_compatible(const JetPoly& o) const;
};

// Iterated canonical derivative of an ordinary polynomial: j applications
// of D to s viewed as a weight-0 jet polynomial. Homogeneous of weight j.
JetPoly d_pow(const MultiPoly& s, int j);

// Same, validating j against a declared ambient jet order.
JetPoly d_pow(const MultiPoly& s, int j, int declared_order);

}  // namespace effjet

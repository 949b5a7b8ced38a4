/*
 * series.hpp
 * ----------
 * Truncated univariate power series over exact rationals, plus curve and
 * reparametrization germs. Every series carries its truncation order
 * explicitly; arithmetic between mixed orders truncates to the minimum,
 * so a coefficient is never claimed beyond what was computed.
 */
#pragma once

#include <vector>

#include "effjet/multipoly.hpp"
#include "effjet/rational.hpp"

namespace effjet {

class Series {
public:
    // Zero series of the given truncation order.
    explicit Series(int order);
    Series(int order, std::vector<Rational> coeffs);

    static Series constant(int order, const Rational& c);
    static Series identity(int order);  // the series t

    int order() const { return order_; }
    const std::vector<Rational>& coeffs() const { return c_; }
    const Rational& coeff(int j) const { return c_.at(static_cast<std::size_t>(j)); }
    const Rational& value_at_zero() const { return c_[0]; }
    bool is_zero() const;

    void set_coeff(int j, const Rational& v) { c_.at(static_cast<std::size_t>(j)) = v; }

    Series truncated(int new_order) const;

    Series operator+(const Series& o) const;
    Series operator-(const Series& o) const;
    Series operator-() const;
    Series operator*(const Series& o) const;
    Series operator*(const Rational& c) const;
    bool operator==(const Series& o) const;
    bool operator!=(const Series& o) const { return !(*this == o); }

    Series pow(unsigned e) const;

    // d/dt; the order drops by one. Throws on order-0 input.
    Series derivative() const;

    // f(phi(t)) for phi with phi(0) = 0; truncates to min order.
    Series compose(const Series& phi) const;

    std::string to_string() const;

private:
    int order_;
    std::vector<Rational> c_;  // size order_ + 1
};

// Invertible reparametrization germ: phi(0) = 0, phi'(0) != 0.
class ReparamGerm {
public:
    explicit ReparamGerm(Series phi);
    const Series& series() const { return phi_; }
    const Rational& derivative_at_zero() const { return phi_.coeff(1); }

private:
    Series phi_;
};

// Truncated germ of a curve (C,0) -> C^n; all components share one order.
class CurveGerm {
public:
    explicit CurveGerm(std::vector<Series> components);

    int num_vars() const { return static_cast<int>(comps_.size()); }
    int order() const { return comps_.front().order(); }
    const Series& component(int i) const { return comps_.at(static_cast<std::size_t>(i)); }
    const std::vector<Series>& components() const { return comps_; }

    std::vector<Rational> value_at_zero() const;

    CurveGerm reparametrize(const ReparamGerm& phi) const;  // f o phi

private:
    std::vector<Series> comps_;
};

Series series_compose(const Series& f, const ReparamGerm& phi);

// Taylor expansion of g o f through f's truncation order.
Series poly_eval_germ(const MultiPoly& g, const CurveGerm& f);

}  // namespace effjet

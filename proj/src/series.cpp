#include "effjet/series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace effjet {

Series::Series(int order) : order_(order) {
    if (order < 0) throw std::invalid_argument("negative truncation order");
    c_.assign(static_cast<std::size_t>(order) + 1, Rational(0));
}

Series::Series(int order, std::vector<Rational> coeffs) : order_(order), c_(std::move(coeffs)) {
    if (order < 0) throw std::invalid_argument("negative truncation order");
    if (c_.size() != static_cast<std::size_t>(order) + 1)
        throw std::invalid_argument("coefficient list length must be order + 1");
}

Series Series::constant(int order, const Rational& c) {
    Series s(order);
    s.c_[0] = c;
    return s;
}

Series Series::identity(int order) {
    if (order < 1) throw std::invalid_argument("identity series needs order >= 1");
    Series s(order);
    s.c_[1] = Rational(1);
    return s;
}

bool Series::is_zero() const {
    for (const auto& c : c_)
        if (sgn(c) != 0) return false;
    return true;
}

Series Series::truncated(int new_order) const {
    if (new_order > order_) throw std::invalid_argument("cannot extend a truncated series");
    Series s(new_order);
    for (int j = 0; j <= new_order; ++j) s.c_[j] = c_[j];
    return s;
}

Series Series::operator+(const Series& o) const {
    int k = std::min(order_, o.order_);
    Series s(k);
    for (int j = 0; j <= k; ++j) s.c_[j] = c_[j] + o.c_[j];
    return s;
}

Series Series::operator-(const Series& o) const {
    int k = std::min(order_, o.order_);
    Series s(k);
    for (int j = 0; j <= k; ++j) s.c_[j] = c_[j] - o.c_[j];
    return s;
}

Series Series::operator-() const {
    Series s(order_);
    for (int j = 0; j <= order_; ++j) s.c_[j] = -c_[j];
    return s;
}

Series Series::operator*(const Series& o) const {
    int k = std::min(order_, o.order_);
    Series s(k);
    for (int i = 0; i <= k; ++i) {
        if (sgn(c_[i]) == 0) continue;
        for (int j = 0; i + j <= k; ++j) {
            if (sgn(o.c_[j]) == 0) continue;
            s.c_[i + j] += c_[i] * o.c_[j];
        }
    }
    return s;
}

Series Series::operator*(const Rational& c) const {
    Series s(order_);
    for (int j = 0; j <= order_; ++j) s.c_[j] = c_[j] * c;
    return s;
}

bool Series::operator==(const Series& o) const {
    return order_ == o.order_ && c_ == o.c_;
}

Series Series::pow(unsigned e) const {
    Series r = constant(order_, Rational(1));
    Series base = *this;
    while (e > 0) {
        if (e & 1u) r = r * base;
        e >>= 1u;
        if (e > 0) base = base * base;
    }
    return r;
}

Series Series::derivative() const {
    if (order_ == 0) throw std::invalid_argument("cannot differentiate an order-0 series");
    Series s(order_ - 1);
    for (int j = 0; j < order_; ++j) s.c_[j] = c_[j + 1] * Rational(j + 1);
    return s;
}

Series Series::compose(const Series& phi) const {
    if (sgn(phi.c_[0]) != 0)
        throw std::invalid_argument("composition requires phi(0) = 0");
    // phi(0) = 0, so coefficients of f beyond index k cannot reach t^k.
    int k = std::min(order_, phi.order_);
    Series phi_t = phi.truncated(k);
    Series r = constant(k, c_[static_cast<std::size_t>(k)]);
    for (int j = k - 1; j >= 0; --j) {
        r = r * phi_t + constant(k, c_[static_cast<std::size_t>(j)]);
    }
    return r;
}

std::string Series::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (int j = 0; j <= order_; ++j) {
        if (sgn(c_[j]) == 0) continue;
        if (!first) os << " + ";
        first = false;
        os << c_[j].get_str();
        if (j >= 1) os << "*t";
        if (j >= 2) os << "^" << j;
    }
    if (first) os << "0";
    os << " + O(t^" << (order_ + 1) << ")";
    return os.str();
}

ReparamGerm::ReparamGerm(Series phi) : phi_(std::move(phi)) {
    if (phi_.order() < 1) throw std::invalid_argument("reparametrization needs order >= 1");
    if (sgn(phi_.coeff(0)) != 0) throw std::invalid_argument("reparametrization must fix 0");
    if (sgn(phi_.coeff(1)) == 0) throw std::invalid_argument("reparametrization must have phi'(0) != 0");
}

CurveGerm::CurveGerm(std::vector<Series> components) : comps_(std::move(components)) {
    if (comps_.empty()) throw std::invalid_argument("curve germ needs at least one component");
    for (const auto& c : comps_)
        if (c.order() != comps_.front().order())
            throw std::invalid_argument("curve germ components must share one truncation order");
}

std::vector<Rational> CurveGerm::value_at_zero() const {
    std::vector<Rational> v;
    v.reserve(comps_.size());
    for (const auto& c : comps_) v.push_back(c.value_at_zero());
    return v;
}

CurveGerm CurveGerm::reparametrize(const ReparamGerm& phi) const {
    std::vector<Series> out;
    out.reserve(comps_.size());
    for (const auto& c : comps_) out.push_back(c.compose(phi.series()));
    return CurveGerm(std::move(out));
}

Series series_compose(const Series& f, const ReparamGerm& phi) {
    return f.compose(phi.series());
}

Series poly_eval_germ(const MultiPoly& g, const CurveGerm& f) {
    if (g.num_vars() != f.num_vars())
        throw std::invalid_argument("polynomial and germ have different variable counts");
    int K = f.order();
    Series acc(K);
    std::vector<std::vector<Series>> powers(static_cast<std::size_t>(f.num_vars()));
    for (int i = 0; i < f.num_vars(); ++i) powers[i].push_back(Series::constant(K, Rational(1)));
    for (const auto& [e, c] : g.terms()) {
        Series term = Series::constant(K, c);
        for (int i = 0; i < f.num_vars(); ++i) {
            while (powers[i].size() <= e[i]) powers[i].push_back(powers[i].back() * f.component(i));
            if (e[i] > 0) term = term * powers[i][e[i]];
        }
        acc = acc + term;
    }
    return acc;
}

}  // namespace effjet

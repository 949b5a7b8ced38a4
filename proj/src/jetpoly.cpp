#include "effjet/jetpoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace effjet {

JetPoly::JetPoly(int coords, int order) : n_(coords), k_(order) {
    if (coords < 1) throw std::invalid_argument("jet polynomial needs at least one coordinate");
    if (order < 0) throw std::invalid_argument("negative jet order");
}

JetPoly JetPoly::from_poly(const MultiPoly& p, int order) {
    JetPoly q(p.num_vars(), order);
    for (const auto& [e, c] : p.terms()) {
        Exponents je(static_cast<std::size_t>(q.slots()), 0);
        for (int i = 0; i < p.num_vars(); ++i) je[q.slot(i, 0)] = e[i];
        q.terms_.emplace(std::move(je), c);
    }
    return q;
}

JetPoly JetPoly::constant(int coords, int order, const Rational& c) {
    JetPoly q(coords, order);
    q.add_term(Exponents(static_cast<std::size_t>(q.slots()), 0), c);
    return q;
}

JetPoly JetPoly::jet_variable(int coords, int order, int coord, int deriv) {
    JetPoly q(coords, order);
    if (coord < 0 || coord >= coords) throw std::invalid_argument("coordinate index out of range");
    if (deriv < 0 || deriv > order) throw std::invalid_argument("derivative order out of range");
    Exponents e(static_cast<std::size_t>(q.slots()), 0);
    e[q.slot(coord, deriv)] = 1;
    q.terms_.emplace(std::move(e), Rational(1));
    return q;
}

void JetPoly::add_term(const Exponents& e, const Rational& c) {
    if (static_cast<int>(e.size()) != slots())
        throw std::invalid_argument("jet exponent vector length mismatch");
    if (sgn(c) == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

JetPoly JetPoly::with_order(int order) const {
    if (order < k_) throw std::invalid_argument("cannot lower a jet order");
    if (order == k_) return *this;
    JetPoly q(n_, order);
    for (const auto& [e, c] : terms_) {
        Exponents e2(static_cast<std::size_t>(q.slots()), 0);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j <= k_; ++j) e2[q.slot(i, j)] = e[slot(i, j)];
        q.terms_.emplace(std::move(e2), c);
    }
    return q;
}

void JetPoly::check_compatible(const JetPoly& o) const {
    if (n_ != o.n_) throw std::invalid_argument("mismatched coordinate counts");
}

JetPoly JetPoly::operator+(const JetPoly& o) const {
    check_compatible(o);
    int k = std::max(k_, o.k_);
    JetPoly a = with_order(k);
    for (const auto& [e, c] : o.with_order(k).terms_) a.add_term(e, c);
    return a;
}

JetPoly JetPoly::operator-(const JetPoly& o) const {
    check_compatible(o);
    int k = std::max(k_, o.k_);
    JetPoly a = with_order(k);
    for (const auto& [e, c] : o.with_order(k).terms_) a.add_term(e, -c);
    return a;
}

JetPoly JetPoly::operator*(const JetPoly& o) const {
    check_compatible(o);
    int k = std::max(k_, o.k_);
    JetPoly a = with_order(k);
    JetPoly b = o.with_order(k);
    JetPoly r(n_, k);
    Exponents e(static_cast<std::size_t>(r.slots()));
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (int i = 0; i < r.slots(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

JetPoly JetPoly::operator*(const Rational& c) const {
    JetPoly r(n_, k_);
    if (sgn(c) == 0) return r;
    for (const auto& [e, coeff] : terms_) r.terms_.emplace(e, coeff * c);
    return r;
}

bool JetPoly::operator==(const JetPoly& o) const {
    if (n_ != o.n_) return false;
    if (k_ == o.k_) return terms_ == o.terms_;
    int k = std::max(k_, o.k_);
    return with_order(k).terms_ == o.with_order(k).terms_;
}

long JetPoly::term_weight(const Exponents& e, int coords, int order) {
    long w = 0;
    for (int i = 0; i < coords; ++i)
        for (int j = 1; j <= order; ++j)
            w += static_cast<long>(j) * e[static_cast<std::size_t>(i * (order + 1) + j)];
    return w;
}

std::optional<long> JetPoly::weighted_degree() const {
    if (terms_.empty()) return 0;
    long w = term_weight(terms_.begin()->first, n_, k_);
    for (const auto& [e, c] : terms_)
        if (term_weight(e, n_, k_) != w) return std::nullopt;
    return w;
}

JetPoly JetPoly::derive() const {
    JetPoly r(n_, k_ + 1);
    for (const auto& [e, c] : terms_) {
        // Lift the monomial to order k+1 once, then bump each occupied slot.
        Exponents lifted(static_cast<std::size_t>(r.slots()), 0);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j <= k_; ++j) lifted[r.slot(i, j)] = e[slot(i, j)];
        for (int i = 0; i < n_; ++i) {
            for (int j = 0; j <= k_; ++j) {
                unsigned exp = e[slot(i, j)];
                if (exp == 0) continue;
                Exponents e2 = lifted;
                e2[r.slot(i, j)] -= 1;
                e2[r.slot(i, j + 1)] += 1;
                r.add_term(e2, c * Rational(static_cast<long>(exp)));
            }
        }
    }
    return r;
}

Series JetPoly::eval_on_germ(const CurveGerm& f, int K) const {
    if (f.num_vars() != n_)
        throw std::invalid_argument("jet polynomial and germ have different coordinate counts");
    if (K < 0) throw std::invalid_argument("negative truncation order");
    if (f.order() < k_ + K)
        throw std::invalid_argument("germ order too small: need at least jet order + truncation");
    // j-th derivative series of each component, truncated to K.
    std::vector<std::vector<Series>> deriv(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) {
        Series cur = f.component(i);
        deriv[i].push_back(cur.truncated(K));
        for (int j = 1; j <= k_; ++j) {
            cur = cur.derivative();
            deriv[i].push_back(cur.truncated(K));
        }
    }
    Series acc(K);
    for (const auto& [e, c] : terms_) {
        Series term = Series::constant(K, c);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j <= k_; ++j) {
                unsigned exp = e[slot(i, j)];
                if (exp > 0) term = term * deriv[i][j].pow(exp);
            }
        acc = acc + term;
    }
    return acc;
}

bool JetPoly::has_integer_coefficients() const {
    for (const auto& [e, c] : terms_)
        if (c.get_den() != 1) return false;
    return true;
}

std::string JetPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c.get_str();
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j <= k_; ++j) {
                unsigned exp = e[slot(i, j)];
                if (exp == 0) continue;
                os << "*z" << (i + 1);
                if (j > 0) os << "^(" << j << ")";
                if (exp > 1) os << "^" << exp;
            }
    }
    return os.str();
}

JetPoly d_pow(const MultiPoly& s, int j) {
    if (j < 0) throw std::invalid_argument("negative derivative count");
    JetPoly q = JetPoly::from_poly(s, 0);
    for (int i = 0; i < j; ++i) q = q.derive();
    return q;
}

JetPoly d_pow(const MultiPoly& s, int j, int declared_order) {
    if (j > declared_order)
        throw std::invalid_argument("derivative count exceeds declared jet order");
    return d_pow(s, j);
}

}  // namespace effjet

#include "effjet/multipoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace effjet {

MultiPoly::MultiPoly(int num_vars) : num_vars_(num_vars) {
    if (num_vars < 0) throw std::invalid_argument("negative variable count");
}

MultiPoly MultiPoly::constant(int num_vars, const Rational& c) {
    MultiPoly p(num_vars);
    p.add_term(Exponents(num_vars, 0), c);
    return p;
}

MultiPoly MultiPoly::variable(int num_vars, int i) {
    if (i < 0 || i >= num_vars) throw std::invalid_argument("variable index out of range");
    Exponents e(num_vars, 0);
    e[i] = 1;
    return monomial(e, Rational(1));
}

MultiPoly MultiPoly::monomial(const Exponents& e, const Rational& c) {
    MultiPoly p(static_cast<int>(e.size()));
    p.add_term(e, c);
    return p;
}

void MultiPoly::add_term(const Exponents& e, const Rational& c) {
    if (static_cast<int>(e.size()) != num_vars_)
        throw std::invalid_argument("exponent vector length mismatch");
    if (sgn(c) == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

const Rational& MultiPoly::coeff(const Exponents& e) const {
    static const Rational zero(0);
    auto it = terms_.find(e);
    return it == terms_.end() ? zero : it->second;
}

void MultiPoly::check_same_vars(const MultiPoly& o) const {
    if (num_vars_ != o.num_vars_)
        throw std::invalid_argument("mismatched variable counts");
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    check_same_vars(o);
    MultiPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    check_same_vars(o);
    MultiPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(num_vars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    check_same_vars(o);
    MultiPoly r(num_vars_);
    Exponents e(num_vars_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            for (int i = 0; i < num_vars_; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

MultiPoly MultiPoly::operator*(const Rational& c) const {
    MultiPoly r(num_vars_);
    if (sgn(c) == 0) return r;
    for (const auto& [e, coeff] : terms_) r.terms_.emplace(e, coeff * c);
    return r;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
    return num_vars_ == o.num_vars_ && terms_ == o.terms_;
}

MultiPoly MultiPoly::pow(unsigned e) const {
    MultiPoly r = constant(num_vars_, Rational(1));
    MultiPoly base = *this;
    while (e > 0) {
        if (e & 1u) r = r * base;
        e >>= 1u;
        if (e > 0) base = base * base;
    }
    return r;
}

int MultiPoly::degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(total_degree(e)));
    return d;
}

std::optional<int> MultiPoly::homogeneous_degree() const {
    if (terms_.empty()) return 0;
    int d = static_cast<int>(total_degree(terms_.begin()->first));
    for (const auto& [e, c] : terms_)
        if (static_cast<int>(total_degree(e)) != d) return std::nullopt;
    return d;
}

MultiPoly MultiPoly::partial(int var) const {
    if (var < 0 || var >= num_vars_) throw std::invalid_argument("variable index out of range");
    MultiPoly r(num_vars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Exponents e2 = e;
        e2[var] -= 1;
        r.add_term(e2, c * Rational(static_cast<long>(e[var])));
    }
    return r;
}

Rational MultiPoly::eval(const std::vector<Rational>& point) const {
    if (static_cast<int>(point.size()) != num_vars_)
        throw std::invalid_argument("evaluation point has wrong dimension");
    Rational acc(0);
    for (const auto& [e, c] : terms_) {
        Rational term = c;
        for (int i = 0; i < num_vars_; ++i)
            if (e[i] > 0) term *= rational_pow(point[i], e[i]);
        acc += term;
    }
    return acc;
}

MultiPoly MultiPoly::substitute(int var, const MultiPoly& value) const {
    check_same_vars(value);
    if (var < 0 || var >= num_vars_) throw std::invalid_argument("variable index out of range");
    // Powers of the replacement are shared across terms.
    std::vector<MultiPoly> powers = {constant(num_vars_, Rational(1))};
    MultiPoly r(num_vars_);
    for (const auto& [e, c] : terms_) {
        unsigned k = e[var];
        while (powers.size() <= k) powers.push_back(powers.back() * value);
        Exponents e2 = e;
        e2[var] = 0;
        r = r + powers[k] * monomial(e2, c);
    }
    return r;
}

MultiPoly MultiPoly::substitute_all(const std::vector<MultiPoly>& values) const {
    if (static_cast<int>(values.size()) != num_vars_)
        throw std::invalid_argument("substitution list has wrong length");
    int target_vars = values.empty() ? num_vars_ : values.front().num_vars();
    for (const auto& v : values)
        if (v.num_vars() != target_vars) throw std::invalid_argument("inconsistent substitution values");
    MultiPoly r(target_vars);
    std::vector<std::vector<MultiPoly>> powers(num_vars_);
    for (int i = 0; i < num_vars_; ++i) powers[i].push_back(constant(target_vars, Rational(1)));
    for (const auto& [e, c] : terms_) {
        MultiPoly term = constant(target_vars, c);
        for (int i = 0; i < num_vars_; ++i) {
            while (powers[i].size() <= e[i]) powers[i].push_back(powers[i].back() * values[i]);
            if (e[i] > 0) term = term * powers[i][e[i]];
        }
        r = r + term;
    }
    return r;
}

MultiPoly MultiPoly::truncate_total_degree(int maxdeg) const {
    MultiPoly r(num_vars_);
    for (const auto& [e, c] : terms_)
        if (static_cast<int>(total_degree(e)) <= maxdeg) r.terms_.emplace(e, c);
    return r;
}

bool MultiPoly::uses_variable(int var) const {
    for (const auto& [e, c] : terms_)
        if (e[var] > 0) return true;
    return false;
}

MultiPoly MultiPoly::restrict_variables(const std::vector<bool>& keep) const {
    if (static_cast<int>(keep.size()) != num_vars_)
        throw std::invalid_argument("keep mask has wrong length");
    std::vector<int> map(num_vars_, -1);
    int nv = 0;
    for (int i = 0; i < num_vars_; ++i)
        if (keep[i]) map[i] = nv++;
    MultiPoly r(nv);
    for (const auto& [e, c] : terms_) {
        Exponents e2(nv, 0);
        for (int i = 0; i < num_vars_; ++i) {
            if (e[i] == 0) continue;
            if (map[i] < 0) throw std::logic_error("restrict_variables: dropped variable still occurs");
            e2[map[i]] = e[i];
        }
        r.add_term(e2, c);
    }
    return r;
}

std::string MultiPoly::to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c.get_str();
        for (int i = 0; i < num_vars_; ++i) {
            if (e[i] == 0) continue;
            os << "*";
            if (static_cast<std::size_t>(i) < names.size())
                os << names[i];
            else
                os << "z" << i;
            if (e[i] > 1) os << "^" << e[i];
        }
    }
    return os.str();
}

namespace {

void enumerate_degree(int vars, int slot, int remaining, Exponents& buf,
                      std::vector<Exponents>& out) {
    if (slot == vars - 1) {
        buf[slot] = static_cast<unsigned>(remaining);
        out.push_back(buf);
        return;
    }
    for (int e = remaining; e >= 0; --e) {
        buf[slot] = static_cast<unsigned>(e);
        enumerate_degree(vars, slot + 1, remaining - e, buf, out);
    }
}

}  // namespace

std::vector<Exponents> monomials_of_degree(int vars, int deg) {
    if (vars <= 0) throw std::invalid_argument("monomials_of_degree: need at least one variable");
    std::vector<Exponents> out;
    Exponents buf(vars, 0);
    enumerate_degree(vars, 0, deg, buf, out);
    return out;
}

BigInt binomial(unsigned long n, unsigned long k) {
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

int rational_rank(std::vector<std::vector<Rational>> rows) {
    if (rows.empty()) return 0;
    std::size_t cols = rows[0].size();
    int rank = 0;
    std::size_t lead = 0;
    for (std::size_t r = 0; r < rows.size() && lead < cols; ++lead) {
        std::size_t pivot = r;
        while (pivot < rows.size() && sgn(rows[pivot][lead]) == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[r], rows[pivot]);
        Rational inv = Rational(1) / rows[r][lead];
        for (std::size_t j = lead; j < cols; ++j) rows[r][j] *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || sgn(rows[i][lead]) == 0) continue;
            Rational f = rows[i][lead];
            for (std::size_t j = lead; j < cols; ++j) rows[i][j] -= f * rows[r][j];
        }
        ++r;
        ++rank;
    }
    return rank;
}

}  // namespace effjet

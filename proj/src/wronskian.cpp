#include "effjet/wronskian.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>

namespace effjet {

void WronskianInput::validate() const {
    if (k < 0) throw std::invalid_argument("negative jet order");
    if (static_cast<int>(g.size()) != k + 1)
        throw std::invalid_argument("wronskian input needs exactly k+1 sections");
    for (const auto& p : g)
        if (p.num_vars() != g.front().num_vars())
            throw std::invalid_argument("wronskian sections must share one variable count");
}

namespace {

// det of rows r.. over the columns in `mask`, memoized on the mask (the
// starting row is determined by the popcount).
JetPoly minor_det(const std::vector<std::vector<JetPoly>>& m, int r, std::uint32_t mask,
                  std::map<std::uint32_t, JetPoly>& memo, int coords, int order) {
    int size = static_cast<int>(m.size());
    if (r == size) return JetPoly::constant(coords, order, Rational(1));
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    JetPoly acc(coords, order);
    int sign = 1;
    for (int j = 0; j < size; ++j) {
        if (!(mask & (1u << j))) continue;
        JetPoly sub = minor_det(m, r + 1, mask & ~(1u << j), memo, coords, order);
        JetPoly contrib = m[r][j] * sub;
        acc = (sign > 0) ? acc + contrib : acc - contrib;
        sign = -sign;
    }
    memo.emplace(mask, acc);
    return acc;
}

Series series_det(const std::vector<std::vector<Series>>& m, int r, std::uint32_t mask,
                  std::map<std::uint32_t, Series>& memo, int order) {
    int size = static_cast<int>(m.size());
    if (r == size) return Series::constant(order, Rational(1));
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    Series acc(order);
    int sign = 1;
    for (int j = 0; j < size; ++j) {
        if (!(mask & (1u << j))) continue;
        Series sub = series_det(m, r + 1, mask & ~(1u << j), memo, order);
        Series contrib = m[r][j] * sub;
        acc = (sign > 0) ? acc + contrib : acc - contrib;
        sign = -sign;
    }
    memo.emplace(mask, acc);
    return acc;
}

Rational value_at_zero(const JetPoly& w, const CurveGerm& f) {
    return w.eval_on_germ(f, 0).value_at_zero();
}

}  // namespace

JetPoly wronskian(const WronskianInput& inp) {
    inp.validate();
    int k = inp.k;
    int n = inp.vars();
    std::vector<std::vector<JetPoly>> m(static_cast<std::size_t>(k + 1));
    for (int j = 0; j <= k; ++j) {
        JetPoly cur = JetPoly::from_poly(inp.g[static_cast<std::size_t>(j)], 0);
        for (int i = 0; i <= k; ++i) {
            m[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(k + 1),
                                                  JetPoly(n, 0));
            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = cur.with_order(k);
            if (i < k) cur = cur.derive();
        }
    }
    std::map<std::uint32_t, JetPoly> memo;
    std::uint32_t full = (1u << (k + 1)) - 1u;
    return minor_det(m, 0, full, memo, n, k);
}

Series wronskian_series_oracle(const WronskianInput& inp, const CurveGerm& f, int K) {
    inp.validate();
    if (f.order() < inp.k + K)
        throw std::invalid_argument("germ order too small for wronskian oracle");
    int k = inp.k;
    std::vector<std::vector<Series>> m(
        static_cast<std::size_t>(k + 1),
        std::vector<Series>(static_cast<std::size_t>(k + 1), Series(0)));
    for (int j = 0; j <= k; ++j) {
        Series cur = poly_eval_germ(inp.g[static_cast<std::size_t>(j)], f);
        for (int i = 0; i <= k; ++i) {
            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = cur;
            if (i < k) cur = cur.derivative();
        }
    }
    std::map<std::uint32_t, Series> memo;
    std::uint32_t full = (1u << (k + 1)) - 1u;
    // Entries carry order >= f.order - k >= K; the determinant keeps that.
    return series_det(m, 0, full, memo, f.order() - k).truncated(K);
}

InvarianceReport check_reparam_invariance(const WronskianInput& inp, const CurveGerm& f,
                                          const ReparamGerm& phi) {
    JetPoly w = wronskian(inp);
    InvarianceReport rep;
    rep.lhs = value_at_zero(w, f.reparametrize(phi));
    rep.rhs = rational_pow(phi.derivative_at_zero(),
                           static_cast<unsigned long>(wronskian_weight(inp.k))) *
              value_at_zero(w, f);
    rep.equal = (rep.lhs == rep.rhs);
    return rep;
}

JetOfSection jet_truncate(const MultiPoly& g, const std::vector<Rational>& x, int k) {
    if (static_cast<int>(x.size()) != g.num_vars())
        throw std::invalid_argument("base point has wrong dimension");
    if (k < 0) throw std::invalid_argument("negative truncation order");
    // Shift to u = z - x: expanding g(x + u) collects (1/gamma!) d^gamma g(x)
    // as the coefficient of u^gamma.
    std::vector<MultiPoly> shift;
    shift.reserve(x.size());
    for (int i = 0; i < g.num_vars(); ++i)
        shift.push_back(MultiPoly::variable(g.num_vars(), i) +
                        MultiPoly::constant(g.num_vars(), x[static_cast<std::size_t>(i)]));
    JetOfSection out;
    out.base_point = x;
    out.order = k;
    out.poly = g.substitute_all(shift).truncate_total_degree(k);
    return out;
}

JetDependenceReport check_jet_dependence(const WronskianInput& inp, const MultiPoly& h,
                                         const std::vector<Rational>& x, const CurveGerm& f) {
    inp.validate();
    if (h.num_vars() != inp.vars())
        throw std::invalid_argument("perturbation has wrong variable count");
    if (!jet_truncate(h, x, inp.k).poly.is_zero())
        throw std::invalid_argument("perturbation must vanish to order k+1 at the base point");
    if (f.value_at_zero() != x)
        throw std::invalid_argument("germ must be based at the perturbation point");
    WronskianInput perturbed = inp;
    perturbed.g[0] = perturbed.g[0] + h;
    JetDependenceReport rep;
    rep.perturbed = value_at_zero(wronskian(perturbed), f);
    rep.original = value_at_zero(wronskian(inp), f);
    rep.equal = (rep.perturbed == rep.original);
    return rep;
}

TrivializationReport check_trivialization(const WronskianInput& inp, const MultiPoly& h,
                                          const CurveGerm& f) {
    inp.validate();
    if (h.num_vars() != inp.vars())
        throw std::invalid_argument("unit has wrong variable count");
    Rational h0 = h.eval(f.value_at_zero());
    if (sgn(h0) == 0)
        throw std::invalid_argument("unit must be nonzero at the germ base point");
    WronskianInput scaled = inp;
    for (auto& p : scaled.g) p = p * h;
    TrivializationReport rep;
    rep.lhs = value_at_zero(wronskian(scaled), f);
    rep.rhs = rational_pow(h0, static_cast<unsigned long>(inp.k) + 1) *
              value_at_zero(wronskian(inp), f);
    rep.equal = (rep.lhs == rep.rhs);
    return rep;
}

}  // namespace effjet

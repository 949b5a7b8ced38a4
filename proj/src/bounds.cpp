#include "effjet/bounds.hpp"

#include <stdexcept>

namespace effjet {

namespace {

// d_0 = delta0 (c(k+1)(k + delta0 + k delta0 - 1) delta0^(c(k+1)-1) + 1 + k) + k
BigInt d0_formula(int c, int k, const BigInt& delta0) {
    BigInt inner = BigInt(c) * (k + 1) * (BigInt(k) + delta0 + BigInt(k) * delta0 - 1) *
                       bigint_pow(delta0, static_cast<unsigned long>(c) * (k + 1) - 1) +
                   1 + k;
    return delta0 * inner + k;
}

}  // namespace

BoundReport kobayashi_bound(int n) {
    if (n < 2) throw std::invalid_argument("kobayashi bound needs n >= 2");
    BoundReport rep;
    rep.name = "kobayashi";
    rep.n = n;
    rep.c = 1;
    rep.k = n - 1;
    BigInt delta = BigInt(n) * n;
    rep.delta0 = delta;
    BigInt m_inf = rep.k;  // Wronskian ideal stabilization order
    BigInt M = bigint_pow(delta, static_cast<unsigned long>(rep.k));
    BigInt R = M * (rep.k + 1) * (m_inf + delta - 1 + BigInt(rep.k) * delta) + 1;
    rep.exact = m_inf + delta + (R + rep.k) * delta;
    rep.simplified = bigint_pow(BigInt(n), 2ul * static_cast<unsigned long>(n) + 3) * (n + 1);
    rep.params = {{"k", BigInt(rep.k)}, {"delta", delta}, {"m_inf", m_inf}, {"M", M}, {"R", R}};
    if (rep.exact > rep.simplified) throw std::logic_error("bound chain violated: exact > simplified");
    return rep;
}

BoundReport debarre_bound(int n) {
    if (n < 2) throw std::invalid_argument("debarre bound needs n >= 2");
    BoundReport rep;
    rep.name = "debarre";
    rep.n = n;
    rep.c = ceil_div_int(n, 2);
    rep.k = 1;
    BigInt delta0 = BigInt(2) * n - 1;
    rep.delta0 = delta0;
    // Displayed closed form.
    BigInt direct = BigInt(4) * bigint_pow(delta0, 2ul * static_cast<unsigned long>(rep.c) + 1) *
                        rep.c +
                    2 * delta0 + 1;
    // Generic route through d_0; the two must agree identically.
    BigInt generic = d0_formula(rep.c, rep.k, delta0);
    if (direct != generic) throw std::logic_error("debarre bound formula routes disagree");
    rep.exact = direct;
    rep.simplified = bigint_pow(BigInt(2) * n, static_cast<unsigned long>(n) + 3);
    rep.params = {{"c", BigInt(rep.c)},
                  {"k", BigInt(rep.k)},
                  {"delta0", delta0},
                  {"direct_route", direct},
                  {"generic_route", generic}};
    if (rep.exact > rep.simplified) throw std::logic_error("bound chain violated: exact > simplified");
    return rep;
}

BoundReport dt_bound(int n, int c) {
    if (c < 1 || c > n - 1) throw std::invalid_argument("dt bound needs 1 <= c <= n-1");
    BoundReport rep;
    rep.name = "dt";
    rep.n = n;
    rep.c = c;
    rep.k = ceil_div_int(n, c) - 1;
    BigInt delta0 = BigInt(n) * (rep.k + 1);
    rep.delta0 = delta0;
    rep.exact = d0_formula(c, rep.k, delta0);
    unsigned long cnc = static_cast<unsigned long>(c) * static_cast<unsigned long>(ceil_div_int(n, c));
    rep.simplified = BigInt(2) * c * bigint_pow(BigInt(n), cnc + 1) *
                     bigint_pow(BigInt(ceil_div_int(n, c)), cnc + 3);
    rep.params = {{"k", BigInt(rep.k)}, {"delta0", delta0}};
    if (rep.exact > rep.simplified) throw std::logic_error("bound chain violated: exact > simplified");
    return rep;
}

std::vector<BigInt> b_coeffs(const std::vector<BigInt>& deltas, int k) {
    if (k < 0) throw std::invalid_argument("negative jet order");
    if (deltas.empty()) throw std::invalid_argument("empty degree list");
    BigInt prod(1);
    for (const auto& d : deltas) {
        if (d < 1) throw std::invalid_argument("degrees must be >= 1");
        prod *= bigint_pow(d, static_cast<unsigned long>(k) + 1);
    }
    std::vector<BigInt> b;
    b.reserve(deltas.size());
    for (const auto& d : deltas) {
        BigInt q, rem;
        mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), prod.get_mpz_t(), d.get_mpz_t());
        if (rem != 0) throw std::logic_error("b_i division not exact");
        b.push_back(q);
    }
    return b;
}

Decomposition decompose(const BigInt& d, int n, int c) {
    if (c < 1 || c > n - 1) throw std::invalid_argument("decompose needs 1 <= c <= n-1");
    Decomposition out;
    out.n = n;
    out.c = c;
    out.k = ceil_div_int(n, c) - 1;
    out.delta0 = BigInt(n) * (out.k + 1);
    out.d = d;
    out.d0 = d0_formula(c, out.k, out.delta0);
    if (d < out.d0) {
        out.feasible = false;
        return out;
    }
    // eps is the unique representative of d mod delta0 in [k, k + delta0).
    BigInt shifted = d - out.k;
    BigInt rem;
    mpz_mod(rem.get_mpz_t(), shifted.get_mpz_t(), out.delta0.get_mpz_t());
    out.eps = BigInt(out.k) + rem;
    int hits = 0;
    for (BigInt e = out.k; e < BigInt(out.k) + out.delta0; ++e) {
        BigInt diff = d - e;
        BigInt m;
        mpz_mod(m.get_mpz_t(), diff.get_mpz_t(), out.delta0.get_mpz_t());
        if (m == 0) ++hits;
    }
    if (hits != 1) throw std::logic_error("decompose residue window is not unique");
    out.r = (d - out.eps) / out.delta0 - out.k;
    // Equal degrees: every b_i = delta0^(c(k+1)-1).
    BigInt b_equal = bigint_pow(out.delta0, static_cast<unsigned long>(c) * (out.k + 1) - 1);
    out.r_threshold = BigInt(c) * b_equal * (out.k + 1) * (out.eps + BigInt(out.k) * out.delta0);
    out.r_margin_ok = (out.r > out.r_threshold);
    out.feasible = true;
    return out;
}

KjetCheck kjet_check(int n, int c, const std::vector<BigInt>& eps,
                     const std::vector<BigInt>& deltas, const BigInt& r) {
    if (c < 1 || c > n - 1) throw std::invalid_argument("kjet check needs 1 <= c <= n-1");
    if (static_cast<int>(eps.size()) != c || static_cast<int>(deltas.size()) != c)
        throw std::invalid_argument("eps and deltas lists must have length c");
    KjetCheck out;
    out.n = n;
    out.c = c;
    out.k = ceil_div_int(n, c) - 1;
    out.delta0 = BigInt(n) * (out.k + 1);
    out.b = b_coeffs(deltas, out.k);
    out.delta_ok = true;
    out.eps_ok = true;
    out.r_threshold = 0;
    for (int i = 0; i < c; ++i) {
        if (deltas[static_cast<std::size_t>(i)] < out.delta0) out.delta_ok = false;
        if (eps[static_cast<std::size_t>(i)] < out.k) out.eps_ok = false;
        out.r_threshold += out.b[static_cast<std::size_t>(i)] * (out.k + 1) *
                           (eps[static_cast<std::size_t>(i)] +
                            BigInt(out.k) * deltas[static_cast<std::size_t>(i)]);
        out.d.push_back(eps[static_cast<std::size_t>(i)] +
                        (r + out.k) * deltas[static_cast<std::size_t>(i)]);
    }
    out.r_ok = (r > out.r_threshold);
    out.verdict = out.delta_ok && out.eps_ok && out.r_ok;
    return out;
}

}  // namespace effjet

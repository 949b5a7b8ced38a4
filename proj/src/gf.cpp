#include "effjet/gf.hpp"

#include <stdexcept>

namespace effjet {

bool is_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

long mod_pos(long a, long p) {
    long r = a % p;
    return r < 0 ? r + p : r;
}

long pow_mod(long a, unsigned long e, long p) {
    long r = 1 % p;
    long base = mod_pos(a, p);
    while (e > 0) {
        if (e & 1ul) r = (r * base) % p;
        base = (base * base) % p;
        e >>= 1ul;
    }
    return r;
}

long inv_mod(long a, long p) {
    a = mod_pos(a, p);
    if (a == 0) throw std::invalid_argument("inverse of zero mod p");
    return pow_mod(a, static_cast<unsigned long>(p - 2), p);
}

QuadExt::QuadExt(long prime) : p(prime), nonres(-1) {
    if (!is_prime(p) || p == 2)
        throw std::invalid_argument("quadratic extension needs an odd prime");
    for (long r = 2; r < p; ++r) {
        if (pow_mod(r, static_cast<unsigned long>((p - 1) / 2), p) == p - 1) {
            nonres = r;
            break;
        }
    }
    if (nonres < 0) throw std::logic_error("no quadratic non-residue found");
}

Fp2 QuadExt::mul(Fp2 x, Fp2 y) const {
    long a = (x.a * y.a + ((x.b * y.b) % p) * nonres) % p;
    long b = (x.a * y.b + x.b * y.a) % p;
    return {a, b};
}

Fp2 QuadExt::pow(Fp2 x, unsigned long e) const {
    Fp2 r = from_base(1);
    while (e > 0) {
        if (e & 1ul) r = mul(r, x);
        x = mul(x, x);
        e >>= 1ul;
    }
    return r;
}

GfPoly GfPoly::reduce(const MultiPoly& poly, long p) {
    if (!is_prime(p)) throw std::invalid_argument("modulus must be prime");
    GfPoly out;
    out.p = p;
    out.num_vars = poly.num_vars();
    for (const auto& [e, c] : poly.terms()) {
        BigInt den = c.get_den();
        BigInt dm;
        mpz_mod_ui(dm.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(p));
        if (dm == 0)
            throw std::invalid_argument("modulus divides a coefficient denominator");
        BigInt num = c.get_num();
        BigInt nm;
        mpz_mod_ui(nm.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(p));
        long coeff = (nm.get_si() * inv_mod(dm.get_si(), p)) % p;
        if (coeff != 0) out.terms.emplace_back(e, coeff);
    }
    return out;
}

long GfPoly::eval(const std::vector<long>& point) const {
    long acc = 0;
    for (const auto& [e, c] : terms) {
        long t = c;
        for (int i = 0; i < num_vars; ++i)
            if (e[static_cast<std::size_t>(i)] > 0)
                t = (t * pow_mod(point[static_cast<std::size_t>(i)],
                                 e[static_cast<std::size_t>(i)], p)) %
                    p;
        acc = (acc + t) % p;
    }
    return acc;
}

Fp2 GfPoly::eval2(const QuadExt& f, const std::vector<Fp2>& point) const {
    Fp2 acc = f.from_base(0);
    for (const auto& [e, c] : terms) {
        Fp2 t = f.from_base(c);
        for (int i = 0; i < num_vars; ++i)
            if (e[static_cast<std::size_t>(i)] > 0)
                t = f.mul(t, f.pow(point[static_cast<std::size_t>(i)],
                                   e[static_cast<std::size_t>(i)]));
        acc = f.add(acc, t);
    }
    return acc;
}

std::vector<long> GfPoly::univariate_in(int var, const std::vector<long>& point) const {
    unsigned maxdeg = 0;
    for (const auto& [e, c] : terms)
        maxdeg = std::max(maxdeg, e[static_cast<std::size_t>(var)]);
    std::vector<long> coeffs(maxdeg + 1, 0);
    for (const auto& [e, c] : terms) {
        long t = c;
        for (int i = 0; i < num_vars; ++i) {
            if (i == var || e[static_cast<std::size_t>(i)] == 0) continue;
            t = (t * pow_mod(point[static_cast<std::size_t>(i)],
                             e[static_cast<std::size_t>(i)], p)) %
                p;
        }
        std::size_t d = e[static_cast<std::size_t>(var)];
        coeffs[d] = (coeffs[d] + t) % p;
    }
    return coeffs;
}

int rref_mod_p(std::vector<std::vector<long>>& rows, long p) {
    if (rows.empty()) return 0;
    std::size_t cols = rows[0].size();
    std::size_t r = 0;
    for (std::size_t lead = 0; lead < cols && r < rows.size(); ++lead) {
        std::size_t pivot = r;
        while (pivot < rows.size() && mod_pos(rows[pivot][lead], p) == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[r], rows[pivot]);
        long inv = inv_mod(rows[r][lead], p);
        for (std::size_t j = 0; j < cols; ++j) rows[r][j] = mod_pos(rows[r][j] * inv, p);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r) continue;
            long f = mod_pos(rows[i][lead], p);
            if (f == 0) continue;
            for (std::size_t j = 0; j < cols; ++j)
                rows[i][j] = mod_pos(rows[i][j] - f * rows[r][j], p);
        }
        ++r;
    }
    return static_cast<int>(r);
}

int rank_mod_p(std::vector<std::vector<long>> rows, long p) { return rref_mod_p(rows, p); }

}  // namespace effjet

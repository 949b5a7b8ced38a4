#include "effjet/fermat.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

#include "effjet/gf.hpp"
#include "effjet/rng.hpp"

namespace effjet {

FermatSpec FermatSpec::with_default_tau(int n, int eps, int delta, int r, int k) {
    FermatSpec s;
    s.n = n;
    s.eps = eps;
    s.delta = delta;
    s.r = r;
    s.k = k;
    for (int j = 0; j <= n; ++j) s.tau.push_back(MultiPoly::variable(n + 1, j));
    s.validate();
    return s;
}

void FermatSpec::validate() const {
    if (n < 1) throw std::invalid_argument("fermat spec needs n >= 1");
    if (eps < 0 || delta < 0 || k < 0) throw std::invalid_argument("negative fermat parameter");
    if (r < 1) throw std::invalid_argument("fermat spec needs r >= 1");
    if (static_cast<int>(tau.size()) != n + 1)
        throw std::invalid_argument("fermat spec needs n+1 linear forms");
    for (const auto& t : tau) {
        if (t.num_vars() != n + 1)
            throw std::invalid_argument("linear forms must use n+1 variables");
        if (t.is_zero() || t.homogeneous_degree() != 1)
            throw std::invalid_argument("tau entries must be homogeneous linear");
    }
    // General position: every n-subset of the forms has full rank n.
    for (int omit = 0; omit <= n; ++omit) {
        std::vector<std::vector<Rational>> rows;
        for (int j = 0; j <= n; ++j) {
            if (j == omit) continue;
            std::vector<Rational> row(static_cast<std::size_t>(n) + 1, Rational(0));
            for (const auto& [e, c] : tau[static_cast<std::size_t>(j)].terms())
                for (int i = 0; i <= n; ++i)
                    if (e[static_cast<std::size_t>(i)] == 1) row[static_cast<std::size_t>(i)] = c;
            rows.push_back(std::move(row));
        }
        if (rational_rank(rows) != n)
            throw std::invalid_argument("tau forms are not in general position");
    }
}

MultiPoly build_section(const FermatSpec& spec, const FermatCoeffs& coeffs) {
    spec.validate();
    int vars = spec.n + 1;
    unsigned rk = static_cast<unsigned>(spec.r + spec.k);
    MultiPoly sigma(vars);
    // tau powers are shared across indices.
    std::vector<std::vector<MultiPoly>> tau_pow(static_cast<std::size_t>(vars));
    for (int j = 0; j < vars; ++j)
        tau_pow[static_cast<std::size_t>(j)].push_back(MultiPoly::constant(vars, Rational(1)));
    for (const auto& [index, a] : coeffs.a) {
        if (static_cast<int>(index.size()) != vars || total_degree(index) != static_cast<unsigned>(spec.delta))
            throw std::invalid_argument("coefficient index set must be the degree-delta monomials");
        if (a.num_vars() != vars)
            throw std::invalid_argument("coefficient polynomial has wrong variable count");
        if (a.is_zero()) continue;
        if (a.homogeneous_degree() != spec.eps)
            throw std::invalid_argument("coefficient polynomial is not homogeneous of degree eps");
        MultiPoly term = a;
        for (int j = 0; j < vars; ++j) {
            unsigned want = rk * index[static_cast<std::size_t>(j)];
            auto& pows = tau_pow[static_cast<std::size_t>(j)];
            while (pows.size() <= want) pows.push_back(pows.back() * spec.tau[static_cast<std::size_t>(j)]);
            if (want > 0) term = term * pows[want];
        }
        sigma = sigma + term;
    }
    if (!sigma.is_zero() && sigma.homogeneous_degree() != spec.section_degree())
        throw std::logic_error("fermat section degree bookkeeping failed");
    return sigma;
}

FamilyReport build_family(const std::vector<FermatSpec>& specs,
                          const std::vector<FermatCoeffs>& coeffs) {
    if (specs.empty()) throw std::invalid_argument("empty family");
    if (specs.size() != coeffs.size())
        throw std::invalid_argument("family needs one coefficient set per spec");
    int n = specs.front().n;
    for (const auto& s : specs)
        if (s.n != n) throw std::invalid_argument("mismatched ambient dimensions");
    FamilyReport rep;
    for (std::size_t i = 0; i < specs.size(); ++i)
        rep.sections.push_back(build_section(specs[i], coeffs[i]));
    int c = static_cast<int>(specs.size());
    // The ampleness hypotheses apply when the family shares one r and uses
    // the canonical jet order for (n, c).
    int k_canonical = ceil_div_int(n, c) - 1;
    rep.kjet_applicable = (c <= n - 1);
    for (const auto& s : specs)
        if (s.r != specs.front().r || s.k != k_canonical) rep.kjet_applicable = false;
    if (rep.kjet_applicable) {
        std::vector<BigInt> eps, deltas;
        for (const auto& s : specs) {
            eps.emplace_back(s.eps);
            deltas.emplace_back(s.delta);
        }
        rep.kjet = kjet_check(n, c, eps, deltas, BigInt(specs.front().r));
    }
    return rep;
}

namespace {

struct TrialOutcome {
    bool found = false;
    SmoothnessFailure failure;
    bool failed = false;
};

// One sampling trial: try to land on the common zero locus, then check the
// Jacobian rank there.
TrialOutcome run_trial(const std::vector<GfPoly>& secs,
                       const std::vector<std::vector<GfPoly>>& jac, int vars, long p,
                       std::uint64_t stream) {
    SeededRng rng(stream);
    int c = static_cast<int>(secs.size());
    TrialOutcome out;
    for (int attempt = 0; attempt < 200 && !out.found; ++attempt) {
        int solve_var = static_cast<int>(rng.uniform(0, vars - 1));
        std::vector<long> point(static_cast<std::size_t>(vars), 0);
        for (int i = 0; i < vars; ++i)
            if (i != solve_var) point[static_cast<std::size_t>(i)] = rng.uniform(0, p - 1);
        std::vector<long> uni = secs[0].univariate_in(solve_var, point);
        for (long root = 0; root < p && !out.found; ++root) {
            long val = 0;
            for (std::size_t d = uni.size(); d-- > 0;) val = (val * root + uni[d]) % p;
            if (val != 0) continue;
            point[static_cast<std::size_t>(solve_var)] = root;
            bool all_zero_coords = std::all_of(point.begin(), point.end(),
                                               [](long v) { return v == 0; });
            if (all_zero_coords) continue;  // not a projective point
            bool on_locus = true;
            for (int s = 1; s < c && on_locus; ++s)
                if (secs[static_cast<std::size_t>(s)].eval(point) != 0) on_locus = false;
            if (!on_locus) continue;
            out.found = true;
            std::vector<std::vector<long>> j(static_cast<std::size_t>(c));
            for (int s = 0; s < c; ++s)
                for (int vidx = 0; vidx < vars; ++vidx)
                    j[static_cast<std::size_t>(s)].push_back(
                        jac[static_cast<std::size_t>(s)][static_cast<std::size_t>(vidx)].eval(point));
            int rank = rank_mod_p(j, p);
            if (rank < c) {
                out.failed = true;
                out.failure.point = point;
                out.failure.rank = rank;
            }
        }
    }
    return out;
}

}  // namespace

SmoothnessReport smoothness_probe(const std::vector<MultiPoly>& sections, int trials, long p,
                                  std::uint64_t seed, int workers) {
    if (sections.empty()) throw std::invalid_argument("smoothness probe needs sections");
    if (!is_prime(p)) throw std::invalid_argument("smoothness probe needs a prime modulus");
    if (trials < 0) throw std::invalid_argument("negative trial count");
    int vars = sections.front().num_vars();
    for (const auto& s : sections)
        if (s.num_vars() != vars) throw std::invalid_argument("sections must share one variable count");

    std::vector<GfPoly> secs;
    std::vector<std::vector<GfPoly>> jac;
    for (const auto& s : sections) {
        secs.push_back(GfPoly::reduce(s, p));
        std::vector<GfPoly> row;
        for (int v = 0; v < vars; ++v) row.push_back(GfPoly::reduce(s.partial(v), p));
        jac.push_back(std::move(row));
    }

    SmoothnessReport rep;
    rep.p = p;
    rep.seed = seed;
    rep.requested = trials;

    std::vector<TrialOutcome> outcomes(static_cast<std::size_t>(trials));
    auto worker = [&](int begin, int end) {
        for (int t = begin; t < end; ++t)
            outcomes[static_cast<std::size_t>(t)] =
                run_trial(secs, jac, vars, p, SeededRng::substream(seed, static_cast<std::uint64_t>(t)));
    };
    workers = std::max(1, std::min(workers, trials == 0 ? 1 : trials));
    if (workers == 1) {
        worker(0, trials);
    } else {
        std::vector<std::thread> pool;
        int chunk = (trials + workers - 1) / workers;
        for (int w = 0; w < workers; ++w) {
            int lo = w * chunk;
            int hi = std::min(trials, lo + chunk);
            if (lo < hi) pool.emplace_back(worker, lo, hi);
        }
        for (auto& th : pool) th.join();
    }
    for (const auto& o : outcomes) {
        if (!o.found) continue;
        ++rep.tested;
        if (o.failed) rep.failures.push_back(o.failure);
    }
    return rep;
}

}  // namespace effjet

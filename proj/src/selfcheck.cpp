#include "effjet/selfcheck.hpp"

#include <chrono>
#include <sstream>

#include "effjet/bounds.hpp"
#include "effjet/fermat.hpp"
#include "effjet/incidence.hpp"
#include "effjet/random_instances.hpp"
#include "effjet/wronskian.hpp"

namespace effjet {

namespace {

struct Check {
    bool ok = true;
    std::ostringstream detail;

    void expect(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail << what;
        }
    }
};

std::string big(const BigInt& z) { return z.get_str(); }

// --- 1: bound formulas ------------------------------------------------------

void criterion_bounds(Check& c, bool, SeededRng&) {
    auto kob2 = kobayashi_bound(2);
    c.expect(kob2.exact == 269 && kob2.simplified == 384,
             "kobayashi n=2: got exact=" + big(kob2.exact) + " simplified=" + big(kob2.simplified));
    auto kob3 = kobayashi_bound(3);
    c.expect(kob3.exact == 61274 && kob3.simplified == 78732,
             "kobayashi n=3: got exact=" + big(kob3.exact) + " simplified=" + big(kob3.simplified));
    auto deb3 = debarre_bound(3);  // both formula routes compared internally
    c.expect(deb3.exact == 25011 && deb3.simplified == 46656,
             "debarre n=3: got exact=" + big(deb3.exact) + " simplified=" + big(deb3.simplified));
    auto dt31 = dt_bound(3, 1);
    c.expect(dt31.exact == 61265 && dt31.simplified == 118098,
             "dt (3,1): got exact=" + big(dt31.exact) + " simplified=" + big(dt31.simplified));
    auto dt21 = dt_bound(2, 1);
    c.expect(dt21.exact == 265, "dt (2,1): got exact=" + big(dt21.exact));
    c.expect(kob2.exact <= kob2.simplified && kob3.exact <= kob3.simplified &&
                 deb3.exact <= deb3.simplified && dt31.exact <= dt31.simplified,
             "exact exceeded simplified");
}

// --- 2: decomposition -------------------------------------------------------

void criterion_decompose(Check& c, bool quick, SeededRng& rng) {
    auto d265 = decompose(BigInt(265), 2, 1);
    c.expect(d265.feasible && d265.eps == 1 && d265.r == 65 && d265.delta0 == 4 && d265.k == 1,
             "decompose(265,2,1) mismatch");
    c.expect(d265.r_margin_ok, "decompose(265,2,1) r-margin failed");
    int trials = quick ? 100 : 500;
    for (int t = 0; t < trials && c.ok; ++t) {
        int n = static_cast<int>(rng.uniform(2, 6));
        int cc = static_cast<int>(rng.uniform(1, n - 1));
        BigInt d0 = dt_bound(n, cc).exact;
        BigInt d = d0 + rng.uniform(0, 1000000);
        auto dec = decompose(d, n, cc);
        std::ostringstream inst;
        inst << "decompose(d=" << big(d) << ", n=" << n << ", c=" << cc << ")";
        c.expect(dec.feasible, inst.str() + " infeasible above threshold");
        if (!c.ok) break;
        c.expect(dec.delta0 * (dec.r + dec.k) + dec.eps == d, inst.str() + " reconstruction failed");
        c.expect(dec.eps >= dec.k && dec.eps < BigInt(dec.k) + dec.delta0,
                 inst.str() + " eps window violated");
        c.expect(dec.r_margin_ok, inst.str() + " r-margin violated");
    }
}

// --- 3: derivation oracle ---------------------------------------------------

void criterion_derivation(Check& c, bool quick, SeededRng& rng) {
    int trials = quick ? 50 : 200;
    for (int t = 0; t < trials && c.ok; ++t) {
        int n = static_cast<int>(rng.uniform(1, 3));
        int k = static_cast<int>(rng.uniform(1, 3));
        int K = static_cast<int>(rng.uniform(0, 3));
        JetPoly q = random_jetpoly(rng, n, k, static_cast<int>(rng.uniform(1, 4)));
        CurveGerm f = random_germ(rng, n, k + K + 1);
        Series lhs = q.derive().eval_on_germ(f, K);
        Series rhs = q.eval_on_germ(f, K + 1).derivative();
        std::ostringstream inst;
        inst << "derivation oracle trial " << t << " (n=" << n << ", k=" << k << ", K=" << K << ")";
        c.expect(lhs == rhs, inst.str());
    }
}

// --- 4: wronskian identities ------------------------------------------------

WronskianInput random_wronskian_input(SeededRng& rng, int n, int k) {
    WronskianInput inp;
    inp.k = k;
    for (int j = 0; j <= k; ++j)
        inp.g.push_back(random_poly(rng, n, 2, static_cast<int>(rng.uniform(1, 3))));
    return inp;
}

void criterion_wronskian(Check& c, bool quick, SeededRng& rng) {
    // (a) series oracle equivalence
    int trials = quick ? 50 : 200;
    for (int t = 0; t < trials && c.ok; ++t) {
        int n = static_cast<int>(rng.uniform(1, 3));
        int k = static_cast<int>(rng.uniform(1, 3));
        int K = static_cast<int>(rng.uniform(0, 4));
        WronskianInput inp = random_wronskian_input(rng, n, k);
        CurveGerm f = random_germ(rng, n, k + K);
        Series lhs = wronskian(inp).eval_on_germ(f, K);
        Series rhs = wronskian_series_oracle(inp, f, K);
        std::ostringstream inst;
        inst << "wronskian oracle trial " << t;
        c.expect(lhs == rhs, inst.str());
    }
    // (b) reparametrization covariance
    trials = quick ? 25 : 100;
    for (int t = 0; t < trials && c.ok; ++t) {
        int n = static_cast<int>(rng.uniform(1, 3));
        int k = static_cast<int>(rng.uniform(1, 3));
        WronskianInput inp = random_wronskian_input(rng, n, k);
        CurveGerm f = random_germ(rng, n, k + 2);
        ReparamGerm phi = random_reparam(rng, k + 2);
        auto rep = check_reparam_invariance(inp, f, phi);
        std::ostringstream inst;
        inst << "reparam covariance trial " << t;
        c.expect(rep.equal, inst.str());
    }
    // (c) alternating + multilinear axioms
    trials = quick ? 8 : 20;
    for (int t = 0; t < trials && c.ok; ++t) {
        int n = static_cast<int>(rng.uniform(1, 3));
        int k = static_cast<int>(rng.uniform(1, 3));
        WronskianInput inp = random_wronskian_input(rng, n, k);
        int slot = static_cast<int>(rng.uniform(0, k));
        int other = static_cast<int>(rng.uniform(0, k));
        if (other == slot) other = (slot + 1) % (k + 1);

        WronskianInput repeated = inp;
        repeated.g[static_cast<std::size_t>(other)] = repeated.g[static_cast<std::size_t>(slot)];
        c.expect(wronskian(repeated).is_zero(), "alternating axiom (repeated argument)");

        WronskianInput swapped = inp;
        std::swap(swapped.g[static_cast<std::size_t>(slot)],
                  swapped.g[static_cast<std::size_t>(other)]);
        c.expect(wronskian(swapped) == wronskian(inp) * Rational(-1), "swap negates");

        MultiPoly a = random_poly(rng, n, 2, 2);
        MultiPoly b = random_poly(rng, n, 2, 2);
        WronskianInput wa = inp, wb = inp, wab = inp;
        wa.g[static_cast<std::size_t>(slot)] = a;
        wb.g[static_cast<std::size_t>(slot)] = b;
        wab.g[static_cast<std::size_t>(slot)] = a + b;
        c.expect(wronskian(wab) == wronskian(wa) + wronskian(wb), "additivity in a slot");

        Rational lambda = rng.small_int();
        WronskianInput wl = inp;
        wl.g[static_cast<std::size_t>(slot)] = wa.g[static_cast<std::size_t>(slot)] * lambda;
        c.expect(wronskian(wl) == wronskian(wa) * lambda, "scalar homogeneity in a slot");

        JetPoly w = wronskian(inp);
        if (!w.is_zero())
            c.expect(w.weighted_degree() == wronskian_weight(k), "wronskian weighted degree");
    }
    // (d) trivialization independence on evaluated germs
    trials = quick ? 10 : 25;
    for (int t = 0; t < trials && c.ok; ++t) {
        int n = static_cast<int>(rng.uniform(1, 3));
        int k = static_cast<int>(rng.uniform(1, 3));
        WronskianInput inp = random_wronskian_input(rng, n, k);
        CurveGerm f = random_germ(rng, n, k);
        MultiPoly h(n);
        Rational h0(0);
        while (sgn(h0) == 0) {
            h = random_poly(rng, n, 2, 2) + MultiPoly::constant(n, rng.small_int());
            h0 = h.eval(f.value_at_zero());
        }
        auto rep = check_trivialization(inp, h, f);
        std::ostringstream inst;
        inst << "trivialization trial " << t;
        c.expect(rep.equal, inst.str());
    }
    // (e) dependence only on k-jets at the base point
    trials = quick ? 10 : 25;
    for (int t = 0; t < trials && c.ok; ++t) {
        int n = static_cast<int>(rng.uniform(1, 3));
        int k = static_cast<int>(rng.uniform(1, 3));
        WronskianInput inp = random_wronskian_input(rng, n, k);
        std::vector<Rational> x;
        for (int i = 0; i < n; ++i) x.push_back(Rational(rng.uniform(-2, 2)));
        MultiPoly h(n);
        for (int i = 0; i < n; ++i) {
            MultiPoly shifted =
                MultiPoly::variable(n, i) - MultiPoly::constant(n, x[static_cast<std::size_t>(i)]);
            h = h + random_poly(rng, n, 1, 2) * shifted.pow(static_cast<unsigned>(k) + 1);
        }
        CurveGerm f = random_germ_at(rng, x, k);
        auto rep = check_jet_dependence(inp, h, x, f);
        std::ostringstream inst;
        inst << "jet dependence trial " << t;
        c.expect(rep.equal, inst.str());
    }
}

// --- 5: intersection multiplicities ----------------------------------------

void criterion_multiplicities(Check& c, bool quick, SeededRng&) {
    for (int N = 2; N <= 4 && c.ok; ++N) {
        for (int delta = 1; delta <= 4 && c.ok; ++delta) {
            auto rep = verify_single_mult(N, delta);
            c.expect(rep.pass && !rep.cap_exceeded, rep.instance + " failed");
        }
    }
    int cmax = quick ? 2 : 3;
    int dmax = quick ? 2 : 3;
    for (int cc = 1; cc <= cmax && c.ok; ++cc) {
        for (int k = 1; k <= 2 && c.ok; ++k) {
            std::vector<int> deltas(static_cast<std::size_t>(cc), 1);
            bool more = true;
            while (more && c.ok) {
                for (int i = 1; i <= cc && c.ok; ++i) {
                    auto rep = verify_product_mult(cc, k, deltas, i);
                    c.expect(rep.pass && !rep.cap_exceeded, rep.instance + " failed");
                }
                more = false;
                for (std::size_t j = deltas.size(); j-- > 0;) {
                    if (deltas[j] < dmax) {
                        ++deltas[j];
                        for (std::size_t l = j + 1; l < deltas.size(); ++l) deltas[l] = 1;
                        more = true;
                        break;
                    }
                }
            }
        }
    }
}

// --- 6: Pluecker degrees ----------------------------------------------------

void criterion_plucker(Check& c, bool, SeededRng&) {
    for (int N = 2; N <= 3 && c.ok; ++N) {
        for (int delta = 2; delta <= 3 && c.ok; ++delta) {
            GrassCurveSpec spec;
            spec.mode = GrassCurveSpec::Mode::Single;
            spec.N = N;
            spec.delta = delta;
            auto degs = plucker_degrees(spec);
            std::ostringstream inst;
            inst << "plucker single N=" << N << " delta=" << delta;
            c.expect(degs.size() == 1 && degs[0] == 1, inst.str());
        }
    }
    struct ProductCase {
        int c, k;
        std::vector<int> deltas;
    };
    std::vector<ProductCase> cases = {
        {2, 1, {2, 3}}, {2, 1, {2, 2}}, {3, 1, {2, 1, 3}}, {2, 2, {2, 2}}};
    for (const auto& pc : cases) {
        for (int moving = 1; moving <= pc.c && c.ok; ++moving) {
            GrassCurveSpec spec;
            spec.mode = GrassCurveSpec::Mode::Product;
            spec.c = pc.c;
            spec.k = pc.k;
            spec.deltas = pc.deltas;
            spec.moving = moving;
            auto degs = plucker_degrees(spec);
            bool good = static_cast<int>(degs.size()) == pc.c;
            for (int factor = 1; factor <= pc.c && good; ++factor)
                good = degs[static_cast<std::size_t>(factor - 1)] == (factor == moving ? 1 : 0);
            std::ostringstream inst;
            inst << "plucker product c=" << pc.c << " k=" << pc.k << " moving=" << moving;
            c.expect(good, inst.str());
        }
    }
}

// --- 7: Fermat sections -----------------------------------------------------

void criterion_fermat(Check& c, bool quick, SeededRng& rng) {
    int trials = quick ? 30 : 100;
    for (int t = 0; t < trials && c.ok; ++t) {
        int n = static_cast<int>(rng.uniform(1, 3));
        int delta = static_cast<int>(rng.uniform(0, 2));
        int eps = static_cast<int>(rng.uniform(0, 2));
        int r = static_cast<int>(rng.uniform(1, 3));
        int k = static_cast<int>(rng.uniform(0, 2));
        FermatSpec spec = FermatSpec::with_default_tau(n, eps, delta, r, k);
        FermatCoeffs coeffs;
        MultiPoly nonzero(n + 1);
        for (const auto& index : monomials_of_degree(n + 1, delta)) {
            if (rng.chance(1, 2)) continue;
            MultiPoly a = random_homogeneous(rng, n + 1, eps, 2);
            if (!a.is_zero()) nonzero = a;
            coeffs.a.emplace(index, std::move(a));
        }
        if (nonzero.is_zero()) {
            MultiPoly a(n + 1);
            while (a.is_zero()) a = random_homogeneous(rng, n + 1, eps, 2);
            coeffs.a.insert_or_assign(monomials_of_degree(n + 1, delta).front(), a);
        }
        MultiPoly sigma = build_section(spec, coeffs);
        std::ostringstream inst;
        inst << "fermat degree trial " << t;
        c.expect(!sigma.is_zero() && sigma.homogeneous_degree() == spec.section_degree(),
                 inst.str());
    }

    // Smooth diagonal instances over F_7, several seeds, zero failures.
    int probe_trials = quick ? 50 : 200;
    int seeds = quick ? 2 : 5;
    for (int m : {2, 3}) {
        MultiPoly sigma(3);
        for (int j = 0; j < 3; ++j)
            sigma = sigma + MultiPoly::variable(3, j).pow(static_cast<unsigned>(m));
        for (int s = 0; s < seeds && c.ok; ++s) {
            auto rep = smoothness_probe({sigma}, probe_trials, 7,
                                        static_cast<std::uint64_t>(s));
            std::ostringstream inst;
            inst << "smoothness probe m=" << m << " seed=" << s << ": tested=" << rep.tested
                 << " failures=" << rep.failures.size();
            c.expect(rep.tested == probe_trials && rep.failures.empty(), inst.str());
        }
    }

    // Degenerate double hyperplane must be flagged.
    MultiPoly degenerate = MultiPoly::variable(3, 0).pow(2);
    auto rep = smoothness_probe({degenerate}, quick ? 20 : 50, 7, 0);
    c.expect(rep.tested > 0 && !rep.failures.empty(),
             "degenerate section produced no rank-drop failures");
}

// --- 8: local length closed-form oracle -------------------------------------

void criterion_local_length(Check& c, bool quick, SeededRng& rng) {
    int trials = quick ? 20 : 50;
    for (int t = 0; t < trials && c.ok; ++t) {
        int vars = static_cast<int>(rng.uniform(1, 4));
        ChartIdeal ideal;
        ideal.base_point.assign(static_cast<std::size_t>(vars), Rational(0));
        long expected = 1;
        for (int i = 0; i < vars; ++i) {
            long a = rng.uniform(1, 4);
            expected *= a;
            ideal.gens.push_back(MultiPoly::variable(vars, i).pow(static_cast<unsigned>(a)));
        }
        auto res = local_length(ideal);
        std::ostringstream inst;
        inst << "monomial ideal trial " << t << ": expected " << expected;
        c.expect(res.stabilized && res.length == expected, inst.str());
    }
}

}  // namespace

std::vector<CriterionResult> run_acceptance(bool quick, std::uint64_t seed) {
    struct Entry {
        int id;
        const char* name;
        double budget;
        void (*fn)(Check&, bool, SeededRng&);
    };
    const Entry entries[] = {
        {1, "bound-formulas", 1.0, criterion_bounds},
        {2, "degree-decomposition", 1.0, criterion_decompose},
        {3, "derivation-oracle", 10.0, criterion_derivation},
        {4, "wronskian-identities", 30.0, criterion_wronskian},
        {5, "intersection-multiplicities", 60.0, criterion_multiplicities},
        {6, "plucker-degrees", 5.0, criterion_plucker},
        {7, "fermat-sections", 30.0, criterion_fermat},
        {8, "local-length-oracle", 10.0, criterion_local_length},
    };
    std::vector<CriterionResult> out;
    for (const auto& e : entries) {
        CriterionResult r;
        r.id = e.id;
        r.name = e.name;
        r.budget_seconds = e.budget;
        Check check;
        SeededRng rng(SeededRng::substream(seed, static_cast<std::uint64_t>(e.id)));
        auto start = std::chrono::steady_clock::now();
        try {
            e.fn(check, quick, rng);
        } catch (const std::exception& ex) {
            check.ok = false;
            check.detail << "exception: " << ex.what();
        }
        auto stop = std::chrono::steady_clock::now();
        r.seconds = std::chrono::duration<double>(stop - start).count();
        r.within_budget = r.seconds <= e.budget;
        r.pass = check.ok && r.within_budget;
        r.detail = check.ok ? (r.within_budget ? "" : "exceeded time budget") : check.detail.str();
        out.push_back(std::move(r));
    }
    return out;
}

bool all_pass(const std::vector<CriterionResult>& results) {
    for (const auto& r : results)
        if (!r.pass) return false;
    return true;
}

}  // namespace effjet

/*
 * effjet.cpp
 * ----------
 * Command-line front end. Every subcommand prints a deterministic report
 * (plain text by default, --json for a structured document), carries a
 * `claim` field naming the statement being checked, and encodes verdicts
 * in the exit code: 0 all verdicts pass, 1 a verdict failed, 2 malformed
 * input. Randomized subcommands take --seed and report it.
 */
#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "effjet/io.hpp"
#include "effjet/random_instances.hpp"
#include "effjet/selfcheck.hpp"

namespace {

using effjet::Json;

bool g_json = false;

void print_human(const Json& j, const std::string& prefix) {
    if (j.is_object()) {
        for (const auto& [key, value] : j.items()) {
            std::string name = prefix.empty() ? key : prefix + "." + key;
            if (value.is_object() || value.is_array())
                print_human(value, name);
            else
                std::cout << name << " = " << (value.is_string() ? value.get<std::string>() : value.dump())
                          << "\n";
        }
    } else if (j.is_array()) {
        int i = 0;
        for (const auto& value : j) {
            std::string name = prefix + "[" + std::to_string(i++) + "]";
            if (value.is_object() || value.is_array())
                print_human(value, name);
            else
                std::cout << name << " = " << (value.is_string() ? value.get<std::string>() : value.dump())
                          << "\n";
        }
        if (i == 0) std::cout << prefix << " = []\n";
    } else {
        std::cout << prefix << " = " << j.dump() << "\n";
    }
}

void emit(const Json& doc) {
    if (g_json)
        std::cout << doc.dump(2) << "\n";
    else
        print_human(doc, "");
}

int workers_from_env() {
    const char* v = std::getenv("EFFJET_WORKERS");
    if (!v) return 1;
    int n = std::atoi(v);
    return n >= 1 ? n : 1;
}

// ---------------------------------------------------------------------------

int run_bound(const std::string& which, int n, int c) {
    effjet::BoundReport rep;
    std::string claim;
    if (which == "kobayashi") {
        rep = effjet::kobayashi_bound(n);
        claim = "kobayashi-hypersurface-degree-bound";
    } else if (which == "debarre") {
        rep = effjet::debarre_bound(n);
        claim = "debarre-complete-intersection-degree-bound";
    } else {
        rep = effjet::dt_bound(n, c);
        claim = "jet-ampleness-degree-threshold";
    }
    Json doc = effjet::bound_report_to_json(rep);
    doc["claim"] = claim;
    emit(doc);
    return rep.exact <= rep.simplified ? 0 : 1;
}

int run_decompose(const std::string& d_str, int n, int c) {
    effjet::BigInt d = effjet::bigint_from_string(d_str);
    auto dec = effjet::decompose(d, n, c);
    Json doc = effjet::decomposition_to_json(dec);
    doc["claim"] = "degree-decomposition-with-jet-ampleness-margin";
    if (!dec.feasible) doc["verdict"] = "INFEASIBLE";
    emit(doc);
    return (dec.feasible && dec.r_margin_ok) ? 0 : 1;
}

int run_kjet_check(const std::string& path) {
    Json in = effjet::load_json_file(path);
    int n = in.at("n").get<int>();
    int c = in.at("c").get<int>();
    std::vector<effjet::BigInt> eps, deltas;
    for (const auto& e : in.at("eps")) eps.push_back(effjet::bigint_from_json(e));
    for (const auto& e : in.at("deltas")) deltas.push_back(effjet::bigint_from_json(e));
    effjet::BigInt r = effjet::bigint_from_json(in.at("r"));
    auto chk = effjet::kjet_check(n, c, eps, deltas, r);
    Json doc = effjet::kjet_to_json(chk);
    doc["claim"] = "jet-ampleness-hypotheses";
    emit(doc);
    return chk.verdict ? 0 : 1;
}

int run_wronskian_eval(const std::string& path) {
    Json in = effjet::load_json_file(path);
    auto inp = effjet::wronskian_input_from_json(in);
    effjet::JetPoly w = effjet::wronskian(inp);
    Json doc;
    doc["claim"] = "wronskian-jet-differential";
    doc["k"] = inp.k;
    doc["weighted_degree"] =
        w.weighted_degree() ? Json(*w.weighted_degree()) : Json("inhomogeneous");
    doc["wronskian"] = effjet::jetpoly_to_json(w);
    emit(doc);
    return 0;
}

int run_wronskian_oracle(const std::string& path, std::uint64_t seed, int trials, int trunc) {
    Json in = effjet::load_json_file(path);
    auto inp = effjet::wronskian_input_from_json(in);
    effjet::SeededRng rng(seed);
    int failures = 0;
    for (int t = 0; t < trials; ++t) {
        effjet::CurveGerm f = effjet::random_germ(rng, inp.vars(), inp.k + trunc);
        effjet::Series lhs = effjet::wronskian(inp).eval_on_germ(f, trunc);
        effjet::Series rhs = effjet::wronskian_series_oracle(inp, f, trunc);
        if (!(lhs == rhs)) ++failures;
    }
    Json doc;
    doc["claim"] = "wronskian-series-oracle-equivalence";
    doc["seed"] = seed;
    doc["trials"] = trials;
    doc["trunc"] = trunc;
    doc["failures"] = failures;
    doc["verdict"] = (failures == 0);
    emit(doc);
    return failures == 0 ? 0 : 1;
}

int run_wronskian_invariance(const std::string& path, std::uint64_t seed, int trials) {
    Json in = effjet::load_json_file(path);
    auto inp = effjet::wronskian_input_from_json(in);
    Json instances = Json::array();
    bool all_equal = true;
    if (in.contains("germ") && in.contains("reparam")) {
        effjet::CurveGerm f = effjet::germ_from_json(in["germ"]);
        effjet::ReparamGerm phi(effjet::series_from_json(in["reparam"]));
        auto rep = effjet::check_reparam_invariance(inp, f, phi);
        instances.push_back(Json{{"lhs", effjet::rational_to_json(rep.lhs)},
                                 {"rhs", effjet::rational_to_json(rep.rhs)},
                                 {"equal", rep.equal}});
        all_equal = rep.equal;
    } else {
        effjet::SeededRng rng(seed);
        for (int t = 0; t < trials; ++t) {
            effjet::CurveGerm f = effjet::random_germ(rng, inp.vars(), inp.k + 2);
            effjet::ReparamGerm phi = effjet::random_reparam(rng, inp.k + 2);
            auto rep = effjet::check_reparam_invariance(inp, f, phi);
            instances.push_back(Json{{"lhs", effjet::rational_to_json(rep.lhs)},
                                     {"rhs", effjet::rational_to_json(rep.rhs)},
                                     {"equal", rep.equal}});
            all_equal = all_equal && rep.equal;
        }
    }
    Json doc;
    doc["claim"] = "wronskian-reparametrization-covariance";
    doc["seed"] = seed;
    doc["instances"] = std::move(instances);
    doc["verdict"] = all_equal;
    emit(doc);
    return all_equal ? 0 : 1;
}

std::vector<std::pair<effjet::FermatSpec, effjet::FermatCoeffs>> load_fermat(const Json& in) {
    std::vector<std::pair<effjet::FermatSpec, effjet::FermatCoeffs>> out;
    if (in.contains("specs")) {
        for (const auto& entry : in["specs"]) {
            auto spec = effjet::fermat_spec_from_json(entry);
            auto coeffs = effjet::fermat_coeffs_from_json(entry.at("coeffs"), spec);
            out.emplace_back(std::move(spec), std::move(coeffs));
        }
    } else {
        auto spec = effjet::fermat_spec_from_json(in);
        auto coeffs = effjet::fermat_coeffs_from_json(in.at("coeffs"), spec);
        out.emplace_back(std::move(spec), std::move(coeffs));
    }
    if (out.empty()) throw effjet::FormatError("empty family");
    return out;
}

int run_fermat_build(const std::string& path) {
    Json in = effjet::load_json_file(path);
    auto family = load_fermat(in);
    std::vector<effjet::FermatSpec> specs;
    std::vector<effjet::FermatCoeffs> coeffs;
    for (auto& [s, a] : family) {
        specs.push_back(s);
        coeffs.push_back(a);
    }
    auto rep = effjet::build_family(specs, coeffs);
    Json sections = Json::array();
    bool verdict = true;
    for (std::size_t i = 0; i < rep.sections.size(); ++i) {
        const auto& sigma = rep.sections[i];
        int expected = specs[i].section_degree();
        bool degree_ok = sigma.is_zero() || sigma.homogeneous_degree() == expected;
        verdict = verdict && degree_ok;
        sections.push_back(Json{{"degree", sigma.degree()},
                                {"expected_degree", expected},
                                {"degree_ok", degree_ok},
                                {"section", effjet::poly_to_json(sigma)}});
    }
    Json doc;
    doc["claim"] = "fermat-type-section-degree";
    doc["sections"] = std::move(sections);
    if (rep.kjet_applicable) doc["kjet"] = effjet::kjet_to_json(rep.kjet);
    doc["verdict"] = verdict;
    emit(doc);
    return verdict ? 0 : 1;
}

int run_fermat_probe(const std::string& path, long p, int trials, std::uint64_t seed) {
    Json in = effjet::load_json_file(path);
    auto family = load_fermat(in);
    std::vector<effjet::MultiPoly> sections;
    for (auto& [s, a] : family) sections.push_back(effjet::build_section(s, a));
    auto rep = effjet::smoothness_probe(sections, trials, p, seed, workers_from_env());
    Json doc = effjet::smoothness_to_json(rep);
    doc["claim"] = "complete-intersection-smoothness-probe";
    emit(doc);
    return rep.failures.empty() ? 0 : 1;
}

int run_verify_single(int N, int delta, int cap) {
    auto rep = effjet::verify_single_mult(N, delta, cap);
    Json doc = effjet::mult_report_to_json(rep);
    doc["claim"] = "single-grassmannian-intersection-multiplicity";
    emit(doc);
    return rep.pass ? 0 : 1;
}

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t comma = s.find(',', pos);
        std::string part = s.substr(pos, comma == std::string::npos ? comma : comma - pos);
        if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos)
            throw effjet::FormatError("bad integer list: " + s);
        out.push_back(std::stoi(part));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

int run_verify_product(int c, int k, const std::string& deltas_str, int i, int cap) {
    auto deltas = parse_int_list(deltas_str);
    auto rep = effjet::verify_product_mult(c, k, deltas, i, cap);
    Json doc = effjet::mult_report_to_json(rep);
    doc["claim"] = "product-grassmannian-intersection-multiplicity";
    emit(doc);
    return rep.pass ? 0 : 1;
}

int run_verify_plucker(const std::string& path) {
    Json in = effjet::load_json_file(path);
    auto spec = effjet::curve_spec_from_json(in);
    auto degs = effjet::plucker_degrees(spec);
    Json expected = Json::array();
    bool verdict = true;
    for (std::size_t f = 0; f < degs.size(); ++f) {
        long want = 1;
        if (spec.mode == effjet::GrassCurveSpec::Mode::Product)
            want = (static_cast<int>(f) + 1 == spec.moving) ? 1 : 0;
        expected.push_back(want);
        verdict = verdict && (degs[f] == want);
    }
    Json doc;
    doc["claim"] = "curve-plucker-degrees";
    doc["degrees"] = degs;
    doc["expected"] = std::move(expected);
    doc["verdict"] = verdict;
    emit(doc);
    return verdict ? 0 : 1;
}

int run_verify_fiber(const std::string& path, long p, const std::string& j_list) {
    Json in = effjet::load_json_file(path);
    auto pt = effjet::grass_point_from_json(in, p);
    std::vector<int> J;
    if (!j_list.empty()) J = parse_int_list(j_list);
    auto rep = effjet::fiber_finite(pt, J, 1000000, workers_from_env());
    Json doc = effjet::fiber_to_json(rep, &pt);
    doc["claim"] = "grassmannian-fiber-finiteness";
    emit(doc);
    return 0;
}

int run_selftest(bool quick, std::uint64_t seed) {
    auto results = effjet::run_acceptance(quick, seed);
    for (const auto& r : results) {
        std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.id << " " << r.name << " (budget "
                  << r.budget_seconds << "s)";
        if (!r.pass && !r.detail.empty()) std::cout << " -- " << r.detail;
        std::cout << "\n";
        std::cerr << "criterion " << r.id << " took " << r.seconds << "s\n";
    }
    bool ok = effjet::all_pass(results);
    std::cout << (ok ? "ALL CRITERIA PASS" : "CRITERIA FAILED") << "\n";
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact jet-differential calculus and effective hyperbolicity degree bounds"};
    app.require_subcommand(1);
    app.add_flag("--json", g_json, "emit reports as JSON documents");

    int exit_code = 0;
    auto guard = [&exit_code](auto fn) {
        return [&exit_code, fn]() {
            try {
                exit_code = fn();
            } catch (const effjet::FormatError& e) {
                std::cerr << "input error: " << e.what() << "\n";
                exit_code = 2;
            } catch (const std::invalid_argument& e) {
                std::cerr << "input error: " << e.what() << "\n";
                exit_code = 2;
            } catch (const std::exception& e) {
                std::cerr << "error: " << e.what() << "\n";
                exit_code = 2;
            }
        };
    };

    // bounds
    auto* bounds = app.add_subcommand("bounds", "effective degree bounds");
    bounds->require_subcommand(1);
    static int bn = 2, bc = 1;
    auto* kob = bounds->add_subcommand("kobayashi", "hypersurface bound n^(2n+3)(n+1)");
    kob->add_option("--n", bn, "ambient dimension")->required();
    kob->callback(guard([&]() { return run_bound("kobayashi", bn, bc); }));
    auto* deb = bounds->add_subcommand("debarre", "complete-intersection bound (2n)^(n+3)");
    deb->add_option("--n", bn, "ambient dimension")->required();
    deb->callback(guard([&]() { return run_bound("debarre", bn, bc); }));
    auto* dt = bounds->add_subcommand("dt", "jet-ampleness threshold d0(n, c)");
    dt->add_option("--n", bn, "ambient dimension")->required();
    dt->add_option("--c", bc, "codimension")->required();
    dt->callback(guard([&]() { return run_bound("dt", bn, bc); }));

    // decompose
    static std::string dd;
    static int dn = 2, dc = 1;
    auto* dec = app.add_subcommand("decompose", "degree decomposition d = delta0(r+k)+eps");
    dec->add_option("--d", dd, "degree (decimal integer)")->required();
    dec->add_option("--n", dn, "ambient dimension")->required();
    dec->add_option("--c", dc, "codimension")->required();
    dec->callback(guard([&]() { return run_decompose(dd, dn, dc); }));

    // kjet-check
    static std::string kjet_file;
    auto* kjet = app.add_subcommand("kjet-check", "check the jet-ampleness hypotheses");
    kjet->add_option("--spec", kjet_file, "JSON file with n, c, eps, deltas, r")->required();
    kjet->callback(guard([&]() { return run_kjet_check(kjet_file); }));

    // wronskian
    static std::string winput;
    static std::uint64_t wseed = 0;
    static int wtrials = 50, wtrunc = 3;
    auto* wr = app.add_subcommand("wronskian", "wronskian jet differentials");
    wr->require_subcommand(1);
    auto* weval = wr->add_subcommand("eval", "compute the wronskian of k+1 sections");
    weval->add_option("--input", winput, "JSON file with k and g")->required();
    weval->callback(guard([&]() { return run_wronskian_eval(winput); }));
    auto* woracle = wr->add_subcommand("oracle", "compare against the univariate series oracle");
    woracle->add_option("--input", winput, "JSON file with k and g")->required();
    woracle->add_option("--seed", wseed, "random seed");
    woracle->add_option("--trials", wtrials, "number of random germs");
    woracle->add_option("--trunc", wtrunc, "series truncation order");
    woracle->callback(guard([&]() { return run_wronskian_oracle(winput, wseed, wtrials, wtrunc); }));
    auto* winv = wr->add_subcommand("invariance", "reparametrization covariance check");
    winv->add_option("--input", winput, "JSON file with k and g (optional germ/reparam)")->required();
    winv->add_option("--seed", wseed, "random seed");
    winv->add_option("--trials", wtrials, "number of random instances");
    winv->callback(guard([&]() { return run_wronskian_invariance(winput, wseed, wtrials); }));

    // fermat
    static std::string fspec;
    static long fp = 7;
    static int ftrials = 200;
    static std::uint64_t fseed = 0;
    auto* fer = app.add_subcommand("fermat", "fermat-type sections and families");
    fer->require_subcommand(1);
    auto* fbuild = fer->add_subcommand("build", "build sections and check degrees");
    fbuild->add_option("--spec", fspec, "JSON spec file")->required();
    fbuild->callback(guard([&]() { return run_fermat_build(fspec); }));
    auto* fprobe = fer->add_subcommand("probe", "finite-field smoothness probe");
    fprobe->add_option("--spec", fspec, "JSON spec file")->required();
    fprobe->add_option("--p", fp, "prime modulus");
    fprobe->add_option("--trials", ftrials, "points to sample");
    fprobe->add_option("--seed", fseed, "random seed");
    fprobe->callback(guard([&]() { return run_fermat_probe(fspec, fp, ftrials, fseed); }));

    // verify
    static int vN = 2, vdelta = 2, vcap = -1, vc = 2, vk = 1, vi = 1;
    static std::string vdeltas, vmatrix, vJ, vcurve;
    static long vp = 5;
    auto* ver = app.add_subcommand("verify", "intersection and fiber verifications");
    ver->require_subcommand(1);
    auto* vsingle = ver->add_subcommand("single-mult", "multiplicity delta^(N-1)");
    vsingle->add_option("--N", vN, "projective dimension")->required();
    vsingle->add_option("--delta", vdelta, "form degree")->required();
    vsingle->add_option("--cap", vcap, "degree cap override");
    vsingle->callback(guard([&]() { return run_verify_single(vN, vdelta, vcap); }));
    auto* vprod = ver->add_subcommand("product-mult", "multiplicities b_i");
    vprod->add_option("--c", vc, "number of factors")->required();
    vprod->add_option("--k", vk, "jet order")->required();
    vprod->add_option("--deltas", vdeltas, "comma-separated degrees")->required();
    vprod->add_option("--i", vi, "moving factor (1-based)")->required();
    vprod->add_option("--cap", vcap, "degree cap override");
    vprod->callback(guard([&]() { return run_verify_product(vc, vk, vdeltas, vi, vcap); }));
    auto* vpl = ver->add_subcommand("plucker", "curve degrees under the Pluecker maps");
    vpl->add_option("--spec", vcurve, "JSON curve spec")->required();
    vpl->callback(guard([&]() { return run_verify_plucker(vcurve); }));
    auto* vfib = ver->add_subcommand("fiber", "fiber finiteness over F_p");
    vfib->add_option("--matrix", vmatrix, "JSON matrix document")->required();
    vfib->add_option("--p", vp, "prime modulus")->required();
    vfib->add_option("--J", vJ, "comma-separated vanishing coordinate indices");
    vfib->callback(guard([&]() { return run_verify_fiber(vmatrix, vp, vJ); }));

    // selftest
    static bool quick = false;
    static std::uint64_t sseed = 0;
    auto* self = app.add_subcommand("selftest", "run the acceptance suite");
    self->add_flag("--quick", quick, "shrink randomized suites");
    self->add_option("--seed", sseed, "random seed");
    self->callback(guard([&]() { return run_selftest(quick, sseed); }));

    // Let global flags like --json trail the subcommand.
    for (auto* sub : app.get_subcommands({})) {
        sub->fallthrough();
        for (auto* leaf : sub->get_subcommands({})) leaf->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;  // malformed invocation
    }
    return exit_code;
}

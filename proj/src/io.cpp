#include "effjet/io.hpp"

#include <fstream>

namespace effjet {

namespace {

std::string int_like_to_string(const Json& j, const char* what) {
    if (j.is_string()) return j.get<std::string>();
    if (j.is_number_integer()) return std::to_string(j.get<long long>());
    throw FormatError(std::string(what) + " must be a decimal string or integer");
}

const Json& field(const Json& j, const char* name) {
    auto it = j.find(name);
    if (it == j.end()) throw FormatError(std::string("missing field: ") + name);
    return *it;
}

Exponents exponents_from_json(const Json& j, int expect_len) {
    if (!j.is_array()) throw FormatError("exp must be an array");
    Exponents e;
    for (const auto& v : j) {
        if (!v.is_number_integer() || v.get<long long>() < 0)
            throw FormatError("exponents must be non-negative integers");
        e.push_back(static_cast<unsigned>(v.get<long long>()));
    }
    if (expect_len >= 0 && static_cast<int>(e.size()) != expect_len)
        throw FormatError("exponent vector has wrong length");
    return e;
}

}  // namespace

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open input file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw FormatError("invalid JSON in " + path + ": " + e.what());
    }
    return j;
}

Json rational_to_json(const Rational& q) {
    return Json{{"num", num_string(q)}, {"den", den_string(q)}};
}

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
    if (!j.is_object()) throw FormatError("rational must be an object or integer");
    try {
        return rational_from_strings(int_like_to_string(field(j, "num"), "num"),
                                     j.contains("den") ? int_like_to_string(field(j, "den"), "den")
                                                       : "1");
    } catch (const std::invalid_argument& e) {
        throw FormatError(e.what());
    }
}

Json bigint_to_json(const BigInt& z) { return Json(z.get_str()); }

BigInt bigint_from_json(const Json& j) {
    try {
        return bigint_from_string(int_like_to_string(j, "integer"));
    } catch (const std::invalid_argument& e) {
        throw FormatError(e.what());
    }
}

Json poly_to_json(const MultiPoly& p) {
    Json terms = Json::array();
    for (const auto& [e, c] : p.terms()) {
        Json t;
        t["exp"] = e;
        t["num"] = num_string(c);
        t["den"] = den_string(c);
        terms.push_back(std::move(t));
    }
    return Json{{"vars", p.num_vars()}, {"terms", std::move(terms)}};
}

MultiPoly poly_from_json(const Json& j) {
    if (!j.is_object()) throw FormatError("polynomial must be an object");
    int vars = field(j, "vars").get<int>();
    if (vars < 0) throw FormatError("vars must be non-negative");
    MultiPoly p(vars);
    for (const auto& t : field(j, "terms")) {
        Exponents e = exponents_from_json(field(t, "exp"), vars);
        p.add_term(e, rational_from_json(t));
    }
    return p;
}

Json series_to_json(const Series& s) {
    Json coeffs = Json::array();
    for (const auto& c : s.coeffs()) coeffs.push_back(rational_to_json(c));
    return Json{{"order", s.order()}, {"coeffs", std::move(coeffs)}};
}

Series series_from_json(const Json& j) {
    if (!j.is_object()) throw FormatError("series must be an object");
    int order = field(j, "order").get<int>();
    std::vector<Rational> coeffs;
    for (const auto& c : field(j, "coeffs")) coeffs.push_back(rational_from_json(c));
    if (order < 0 || coeffs.size() != static_cast<std::size_t>(order) + 1)
        throw FormatError("series needs order+1 coefficients");
    return Series(order, std::move(coeffs));
}

Json jetpoly_to_json(const JetPoly& q) {
    Json terms = Json::array();
    for (const auto& [e, c] : q.terms()) {
        Json t;
        t["exp"] = e;
        t["num"] = num_string(c);
        t["den"] = den_string(c);
        terms.push_back(std::move(t));
    }
    return Json{{"vars", q.coords()}, {"order", q.order()}, {"terms", std::move(terms)}};
}

JetPoly jetpoly_from_json(const Json& j) {
    if (!j.is_object()) throw FormatError("jet polynomial must be an object");
    int vars = field(j, "vars").get<int>();
    int order = field(j, "order").get<int>();
    if (vars < 1 || order < 0) throw FormatError("bad jet polynomial header");
    JetPoly q(vars, order);
    for (const auto& t : field(j, "terms")) {
        Exponents e = exponents_from_json(field(t, "exp"), vars * (order + 1));
        q.add_term(e, rational_from_json(t));
    }
    return q;
}

Json germ_to_json(const CurveGerm& f) {
    Json comps = Json::array();
    for (const auto& c : f.components()) comps.push_back(series_to_json(c));
    return Json{{"components", std::move(comps)}};
}

CurveGerm germ_from_json(const Json& j) {
    if (!j.is_object()) throw FormatError("germ must be an object");
    std::vector<Series> comps;
    for (const auto& c : field(j, "components")) comps.push_back(series_from_json(c));
    try {
        return CurveGerm(std::move(comps));
    } catch (const std::invalid_argument& e) {
        throw FormatError(e.what());
    }
}

WronskianInput wronskian_input_from_json(const Json& j) {
    if (!j.is_object()) throw FormatError("wronskian input must be an object");
    WronskianInput inp;
    inp.k = field(j, "k").get<int>();
    for (const auto& g : field(j, "g")) inp.g.push_back(poly_from_json(g));
    try {
        inp.validate();
    } catch (const std::invalid_argument& e) {
        throw FormatError(e.what());
    }
    return inp;
}

FermatSpec fermat_spec_from_json(const Json& j) {
    if (!j.is_object()) throw FormatError("fermat spec must be an object");
    FermatSpec s;
    s.n = field(j, "n").get<int>();
    s.eps = field(j, "eps").get<int>();
    s.delta = field(j, "delta").get<int>();
    s.r = field(j, "r").get<int>();
    s.k = field(j, "k").get<int>();
    if (j.contains("tau")) {
        for (const auto& t : j["tau"]) s.tau.push_back(poly_from_json(t));
    } else {
        for (int i = 0; i <= s.n; ++i) s.tau.push_back(MultiPoly::variable(s.n + 1, i));
    }
    try {
        s.validate();
    } catch (const std::invalid_argument& e) {
        throw FormatError(e.what());
    }
    return s;
}

FermatCoeffs fermat_coeffs_from_json(const Json& j, const FermatSpec& spec) {
    if (!j.is_object()) throw FormatError("coeffs must be an object keyed by index strings");
    FermatCoeffs out;
    for (const auto& [key, value] : j.items()) {
        Exponents index;
        std::size_t pos = 0;
        while (pos <= key.size()) {
            std::size_t comma = key.find(',', pos);
            std::string part = key.substr(pos, comma == std::string::npos ? comma : comma - pos);
            if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos)
                throw FormatError("bad index key: " + key);
            index.push_back(static_cast<unsigned>(std::stoul(part)));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        if (static_cast<int>(index.size()) != spec.n + 1 ||
            total_degree(index) != static_cast<unsigned>(spec.delta))
            throw FormatError("index key must list n+1 entries summing to delta: " + key);
        out.a.emplace(std::move(index), poly_from_json(value));
    }
    return out;
}

GrassCurveSpec curve_spec_from_json(const Json& j) {
    if (!j.is_object()) throw FormatError("curve spec must be an object");
    GrassCurveSpec s;
    std::string mode = field(j, "mode").get<std::string>();
    if (mode == "single") {
        s.mode = GrassCurveSpec::Mode::Single;
        s.N = field(j, "N").get<int>();
        s.delta = field(j, "delta").get<int>();
    } else if (mode == "product") {
        s.mode = GrassCurveSpec::Mode::Product;
        s.c = field(j, "c").get<int>();
        s.k = field(j, "k").get<int>();
        for (const auto& d : field(j, "deltas")) s.deltas.push_back(d.get<int>());
        s.moving = field(j, "moving").get<int>();
    } else {
        throw FormatError("mode must be single or product");
    }
    return s;
}

GrassPointFq grass_point_from_json(const Json& j, long p) {
    if (!j.is_object()) throw FormatError("matrix document must be an object");
    GrassPointFq pt;
    pt.p = p;
    pt.N = field(j, "N").get<int>();
    pt.delta = field(j, "delta").get<int>();
    for (const auto& row : field(j, "rows")) {
        std::vector<long> r;
        for (const auto& v : row) r.push_back(v.get<long>());
        pt.rows.push_back(std::move(r));
    }
    try {
        pt.canonicalize();
    } catch (const std::invalid_argument& e) {
        throw FormatError(e.what());
    }
    return pt;
}

ChartIdeal chart_ideal_from_json(const Json& j) {
    if (!j.is_object()) throw FormatError("chart ideal must be an object");
    ChartIdeal ideal;
    for (const auto& g : field(j, "gens")) ideal.gens.push_back(poly_from_json(g));
    for (const auto& x : field(j, "base_point")) ideal.base_point.push_back(rational_from_json(x));
    if (j.contains("vars"))
        for (const auto& v : j["vars"]) ideal.var_names.push_back(v.get<std::string>());
    try {
        ideal.validate();
    } catch (const std::invalid_argument& e) {
        throw FormatError(e.what());
    }
    return ideal;
}

Json bound_report_to_json(const BoundReport& rep) {
    Json params = Json::object();
    for (const auto& [name, value] : rep.params) params[name] = value.get_str();
    return Json{{"bound", rep.name},
                {"n", rep.n},
                {"c", rep.c},
                {"k", rep.k},
                {"delta0", rep.delta0.get_str()},
                {"exact", rep.exact.get_str()},
                {"simplified", rep.simplified.get_str()},
                {"exact_le_simplified", rep.exact <= rep.simplified},
                {"params", std::move(params)}};
}

Json decomposition_to_json(const Decomposition& d) {
    Json j{{"d", d.d.get_str()},      {"n", d.n},
           {"c", d.c},                {"k", d.k},
           {"delta0", d.delta0.get_str()}, {"d0", d.d0.get_str()},
           {"feasible", d.feasible}};
    if (d.feasible) {
        j["eps"] = d.eps.get_str();
        j["r"] = d.r.get_str();
        j["r_threshold"] = d.r_threshold.get_str();
        j["r_margin_ok"] = d.r_margin_ok;
        j["reconstructed"] = BigInt(d.delta0 * (d.r + d.k) + d.eps).get_str();
    }
    return j;
}

Json kjet_to_json(const KjetCheck& k) {
    Json b = Json::array();
    for (const auto& v : k.b) b.push_back(v.get_str());
    Json d = Json::array();
    for (const auto& v : k.d) d.push_back(v.get_str());
    return Json{{"n", k.n},
                {"c", k.c},
                {"k", k.k},
                {"delta0", k.delta0.get_str()},
                {"b", std::move(b)},
                {"d", std::move(d)},
                {"r_threshold", k.r_threshold.get_str()},
                {"delta_ok", k.delta_ok},
                {"eps_ok", k.eps_ok},
                {"r_ok", k.r_ok},
                {"verdict", k.verdict}};
}

Json mult_report_to_json(const MultReport& rep) {
    Json j{{"instance", rep.instance}};
    if (!rep.layout_note.empty()) j["layout"] = rep.layout_note;
    Json gens = Json::array();
    for (const auto& g : rep.ideal.gens) gens.push_back(poly_to_json(g));
    j["generators"] = std::move(gens);
    Json base = Json::array();
    for (const auto& x : rep.ideal.base_point) base.push_back(rational_to_json(x));
    j["base_point"] = std::move(base);
    if (!rep.ideal.var_names.empty()) j["vars"] = rep.ideal.var_names;
    j["cap_exceeded"] = rep.cap_exceeded;
    if (!rep.cap_exceeded) j["computed"] = rep.computed;
    j["expected"] = rep.expected.get_str();
    j["verdict"] = rep.pass;
    j["stabilized_at"] = rep.detail.stabilized_at;
    j["degree_cap"] = rep.detail.cap;
    return j;
}

Json smoothness_to_json(const SmoothnessReport& rep) {
    Json failures = Json::array();
    for (const auto& f : rep.failures)
        failures.push_back(Json{{"point", f.point}, {"rank", f.rank}});
    return Json{{"p", rep.p},
                {"seed", rep.seed},
                {"requested", rep.requested},
                {"tested", rep.tested},
                {"failures", std::move(failures)},
                {"verdict", rep.failures.empty()}};
}

Json fiber_to_json(const FiberReport& rep, const GrassPointFq* pt) {
    Json j;
    if (pt) {
        j["p"] = pt->p;
        j["N"] = pt->N;
        j["delta"] = pt->delta;
    }
    switch (rep.kind) {
        case FiberReport::Kind::Finite:
            j["kind"] = "finite";
            j["count"] = rep.count;
            break;
        case FiberReport::Kind::PositiveDim:
            j["kind"] = "positive_dim";
            break;
        case FiberReport::Kind::Unknown:
            j["kind"] = "unknown";
            break;
    }
    j["heuristic"] = rep.heuristic;
    if (rep.count_q >= 0) j["count_q"] = rep.count_q;
    if (rep.count_q2 >= 0) j["count_q2"] = rep.count_q2;
    j["note"] = rep.note;
    return j;
}

}  // namespace effjet

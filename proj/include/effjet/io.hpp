/*
 * io.hpp
 * ------
 * JSON interchange for every value the CLI consumes or emits. Numbers are
 * exact: integers travel as decimal strings (or plain JSON integers on
 * input), rationals as {"num": "...", "den": "..."} pairs. Emitted
 * documents use a fixed field order so identical invocations are
 * byte-identical.
 *
 * Polynomials: {"vars": n, "terms": [{"exp": [e0, ...], "num": "..",
 * "den": ".."}]}. Series: {"order": K, "coeffs": [num/den pairs]}.
 * Jet polynomials add an "order" field; exponent slot (i, j) = i*(k+1)+j
 * is the j-th derivative of coordinate i.
 */
#pragma once

#include <nlohmann/json.hpp>
#include <stdexcept>
#include <string>

#include "effjet/bounds.hpp"
#include "effjet/fermat.hpp"
#include "effjet/incidence.hpp"
#include "effjet/jetpoly.hpp"
#include "effjet/localmult.hpp"
#include "effjet/multipoly.hpp"
#include "effjet/series.hpp"
#include "effjet/wronskian.hpp"

namespace effjet {

using Json = nlohmann::ordered_json;

// Malformed input documents; the CLI maps this to exit code 2.
struct FormatError : std::runtime_error {
    explicit FormatError(const std::string& what) : std::runtime_error(what) {}
};

Json rational_to_json(const Rational& q);
Rational rational_from_json(const Json& j);

Json bigint_to_json(const BigInt& z);
BigInt bigint_from_json(const Json& j);

Json poly_to_json(const MultiPoly& p);
MultiPoly poly_from_json(const Json& j);

Json series_to_json(const Series& s);
Series series_from_json(const Json& j);

Json jetpoly_to_json(const JetPoly& q);
JetPoly jetpoly_from_json(const Json& j);

Json germ_to_json(const CurveGerm& f);
CurveGerm germ_from_json(const Json& j);

WronskianInput wronskian_input_from_json(const Json& j);

FermatSpec fermat_spec_from_json(const Json& j);
FermatCoeffs fermat_coeffs_from_json(const Json& j, const FermatSpec& spec);

GrassCurveSpec curve_spec_from_json(const Json& j);
GrassPointFq grass_point_from_json(const Json& j, long p);

ChartIdeal chart_ideal_from_json(const Json& j);

Json bound_report_to_json(const BoundReport& rep);
Json decomposition_to_json(const Decomposition& d);
Json kjet_to_json(const KjetCheck& k);
Json mult_report_to_json(const MultReport& rep);
Json smoothness_to_json(const SmoothnessReport& rep);
Json fiber_to_json(const FiberReport& rep, const GrassPointFq* pt = nullptr);

Json load_json_file(const std::string& path);

}  // namespace effjet

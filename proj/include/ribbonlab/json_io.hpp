#pragma once

// JSON encodings of the library types, plus a small text syntax for
// polynomials ("u0*u2 - u1^2", "x0^8 + 3/2*x1^8").

#include "ribbonlab/conormal.hpp"
#include "ribbonlab/exact.hpp"
#include "ribbonlab/families.hpp"
#include "ribbonlab/fitting.hpp"
#include "ribbonlab/groebner.hpp"
#include "ribbonlab/poly.hpp"
#include "ribbonlab/syzygy.hpp"
#include "ribbonlab/xg.hpp"

#include <json.hpp>

#include <string>

namespace ribbonlab {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& r);
Json to_json(const RatVector& v);
Json to_json(const RatMatrix& m);
Json to_json(const BinaryForm& f);
/// List of {"u": [...], "v": [...], "c": "p/q"}.
Json to_json(const WPoly& p);
Json to_json(const XgIdeal& ideal);
Json to_json(const ConormalMatrix& phi);
Json to_json(const IdealSlice& slice);
/// Like XgIdeal, with "c" an array of pi-adic digits, plus "N".
Json to_json(const TruncatedFamily& family);
Json to_json(const PowerIdealReport& report, bool with_witnesses = true);
Json to_json(const SyzygyReport& report);
Json to_json(const GroebnerResult& result, int max_degree);

/// Accepts "p/q" strings and JSON integers.
Rational rational_from_json(const Json& j);
RatVector vector_from_json(const Json& j);
RatMatrix matrix_from_json(const Json& j);
BinaryForm binary_form_from_json(const Json& j);
WPoly wpoly_from_json(const Json& j, int g);
XgIdeal xg_ideal_from_json(const Json& j);
TruncatedFamily family_from_json(const Json& j);

/// Text syntax: sums of terms [coefficient*]var[^k]*..., variables u<i>, v<j>.
WPoly parse_wpoly(const std::string& text, int g);
/// Variables x0, x1; the degree must be given (terms must match it).
BinaryForm parse_binary_form(const std::string& text, int degree);

/// Reads a JSON value from a file path, or parses the text itself when it
/// does not name a readable file.
Json load_json_argument(const std::string& arg);

}  // namespace ribbonlab

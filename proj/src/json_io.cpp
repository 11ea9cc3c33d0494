#include "ribbonlab/json_io.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace ribbonlab {

Json to_json(const Rational& r) { return to_string(r); }

Json to_json(const RatVector& v) {
  Json j = Json::array();
  for (const Rational& x : v) j.push_back(to_string(x));
  return j;
}

Json to_json(const RatMatrix& m) {
  Json j = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) j.push_back(to_json(m.row_vector(r)));
  return j;
}

Json to_json(const BinaryForm& f) { return Json{{"degree", f.degree()}, {"coeffs", to_json(f.coeffs())}}; }

namespace {

Json monomial_json(const Monomial& m, int g) {
  Json u = Json::array(), v = Json::array();
  for (int i = 0; i < g; ++i) u.push_back(m[i]);
  for (int j = 0; j < g - 2; ++j) v.push_back(m[g + j]);
  return Json{{"u", u}, {"v", v}};
}

Monomial monomial_from_json(const Json& j, int g) {
  const Json& u = j.at("u");
  const Json& v = j.at("v");
  if (!u.is_array() || !v.is_array() || u.size() != static_cast<std::size_t>(g) || v.size() != static_cast<std::size_t>(g - 2)) {
    throw std::invalid_argument("monomial exponent arrays must have lengths g and g-2");
  }
  Monomial m;
  for (int i = 0; i < g; ++i) {
    const int e = u[static_cast<std::size_t>(i)].get<int>();
    if (e < 0 || e > 255) throw std::invalid_argument("exponent out of range");
    m[i] = static_cast<std::uint8_t>(e);
  }
  for (int k = 0; k < g - 2; ++k) {
    const int e = v[static_cast<std::size_t>(k)].get<int>();
    if (e < 0 || e > 255) throw std::invalid_argument("exponent out of range");
    m[g + k] = static_cast<std::uint8_t>(e);
  }
  return m;
}

int genus_from_json(const Json& j) {
  const int g = j.at("g").get<int>();
  check_genus(g);
  return g;
}

}  // namespace

Json to_json(const WPoly& p) {
  Json j = Json::array();
  // Largest monomial first, matching WPoly::to_string.
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    Json t = monomial_json(it->first, p.genus());
    t["c"] = to_string(it->second);
    j.push_back(std::move(t));
  }
  return j;
}

Json to_json(const XgIdeal& ideal) {
  Json j{{"g", ideal.g}};
  for (GroupTag tag : {GroupTag::UU, GroupTag::UV, GroupTag::VV}) {
    Json group = Json::array();
    for (const WPoly& p : ideal.group(tag)) group.push_back(to_json(p));
    j[group_name(tag)] = std::move(group);
  }
  return j;
}

Json to_json(const ConormalMatrix& phi) {
  return Json{{"g", phi.g}, {"d", phi.d}, {"matrix", to_json(phi.matrix)}};
}

Json to_json(const IdealSlice& slice) {
  Json basis = Json::array();
  for (const WPoly& p : slice.basis) basis.push_back(to_json(p));
  return Json{{"g", slice.g}, {"degree", slice.degree}, {"dimension", slice.dimension()}, {"basis", basis}};
}

Json to_json(const TruncatedFamily& family) {
  Json j{{"g", family.g}, {"N", family.order_bound}};
  for (GroupTag tag : {GroupTag::UU, GroupTag::UV, GroupTag::VV}) {
    Json group = Json::array();
    for (const TruncatedPoly& p : family.group(tag)) {
      Json terms = Json::array();
      for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        Json t = monomial_json(it->first, family.g);
        t["c"] = to_json(it->second.digits());
        terms.push_back(std::move(t));
      }
      group.push_back(std::move(terms));
    }
    j[group_name(tag)] = std::move(group);
  }
  return j;
}

Json to_json(const PowerIdealReport& report, bool with_witnesses) {
  Json j{{"m", report.m},
         {"r", report.r},
         {"mode", fitting_mode_name(report.mode)},
         {"monomials_checked", report.monomials_checked},
         {"all_realized", report.all_realized}};
  Json w = Json::array();
  if (with_witnesses) {
    for (const MinorWitness& x : report.witnesses) {
      w.push_back(Json{{"monomial", zmonomial_to_string(x.monomial)},
                       {"columns", x.columns},
                       {"minor", zpoly_to_string(x.minor)},
                       {"sign", x.sign}});
    }
  }
  j["witnesses"] = std::move(w);
  return j;
}

Json to_json(const SyzygyReport& report) {
  const char* blocks = report.blocks == SyzygyBlocks::bigraded   ? "bigraded"
                       : report.blocks == SyzygyBlocks::v_parity ? "v-parity"
                                                                 : "weighted";
  Json degrees = Json::array();
  for (const SyzygyDegree& d : report.degrees) {
    degrees.push_back(Json{{"degree", d.degree},
                           {"kernel", d.kernel_dimension},
                           {"decomposable", d.decomposable_dimension},
                           {"minimal", d.minimal_count}});
  }
  std::map<std::pair<int, std::string>, std::pair<std::size_t, bool>> shapes;
  for (const SyzygyRecord& r : report.minimal) {
    auto& slot = shapes[{r.degree, r.shape}];
    ++slot.first;
    slot.second = r.matches_schematic;
  }
  Json minimal = Json::array();
  for (const auto& [key, val] : shapes) {
    minimal.push_back(Json{{"degree", key.first}, {"shape", key.second}, {"count", val.first}, {"matches", val.second}});
  }
  return Json{{"g", report.g},
              {"degree_cap", report.degree_cap},
              {"shape_family", shape_family_name(report.shapes)},
              {"blocks", blocks},
              {"degrees", degrees},
              {"minimal_degrees", report.minimal_degrees},
              {"minimal", minimal},
              {"all_shapes_match", report.all_shapes_match}};
}

Json to_json(const GroebnerResult& result, int max_degree) {
  Json leading = Json::array();
  for (const Monomial& m : result.leading) leading.push_back(monomial_to_string(m, result.spec.g));
  return Json{{"order", order_name(result.spec.order)},
              {"grading", result.spec.grading == Grading::koszul ? "koszul" : "weighted"},
              {"degree_cap", result.degree_cap},
              {"input_is_groebner", result.input_is_groebner},
              {"input_pairs", result.input_pairs},
              {"nonzero_input_remainders", result.nonzero_input_remainders},
              {"basis_size", result.basis.size()},
              {"leading_monomials", leading},
              {"normal_monomial_counts", normal_monomial_counts(result, max_degree)}};
}

// ---------------------------------------------------------------------------

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw std::invalid_argument("rational must be a \"p/q\" string or an integer");
}

RatVector vector_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected an array of rationals");
  RatVector v;
  for (const Json& x : j) v.push_back(rational_from_json(x));
  return v;
}

RatMatrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument("expected a nonempty array of rows");
  std::vector<RatVector> rows;
  for (const Json& r : j) rows.push_back(vector_from_json(r));
  for (const RatVector& r : rows)
    if (r.size() != rows.front().size()) throw std::invalid_argument("ragged matrix");
  return RatMatrix::from_rows(rows);
}

BinaryForm binary_form_from_json(const Json& j) {
  const int degree = j.at("degree").get<int>();
  RatVector c = vector_from_json(j.at("coeffs"));
  if (degree < 0 || c.size() != static_cast<std::size_t>(degree + 1)) throw std::invalid_argument("binary form needs degree+1 coefficients");
  return BinaryForm(degree, std::move(c));
}

WPoly wpoly_from_json(const Json& j, int g) {
  if (!j.is_array()) throw std::invalid_argument("polynomial must be a list of terms");
  WPoly p(g);
  for (const Json& t : j) p.add_term(monomial_from_json(t, g), rational_from_json(t.at("c")));
  return p;
}

XgIdeal xg_ideal_from_json(const Json& j) {
  XgIdeal ideal{genus_from_json(j), {}, {}, {}};
  for (GroupTag tag : {GroupTag::UU, GroupTag::UV, GroupTag::VV}) {
    for (const Json& p : j.at(group_name(tag))) ideal.group(tag).push_back(wpoly_from_json(p, ideal.g));
  }
  return ideal;
}

TruncatedFamily family_from_json(const Json& j) {
  const int g = genus_from_json(j);
  const long n = j.at("N").get<long>();
  if (n < 1) throw std::invalid_argument("N must be positive");
  TruncatedFamily f{g, static_cast<std::size_t>(n), {}, {}, {}};
  for (GroupTag tag : {GroupTag::UU, GroupTag::UV, GroupTag::VV}) {
    for (const Json& terms : j.at(group_name(tag))) {
      TruncatedPoly p(g, f.order_bound);
      for (const Json& t : terms) {
        RatVector digits = vector_from_json(t.at("c"));
        if (digits.size() > f.order_bound) throw std::invalid_argument("more digits than N");
        digits.resize(f.order_bound);
        p.add_term(monomial_from_json(t, g), TruncatedScalar(std::move(digits)));
      }
      f.group(tag).push_back(std::move(p));
    }
  }
  return f;
}

// ---------------------------------------------------------------------------

namespace {

struct ParsedTerm {
  Rational coeff = 1;
  std::map<std::string, int> powers;
};

std::vector<ParsedTerm> parse_terms(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw std::invalid_argument("empty polynomial");
  std::vector<ParsedTerm> terms;
  std::size_t pos = 0;
  while (pos < s.size()) {
    ParsedTerm t;
    if (s[pos] == '+' || s[pos] == '-') {
      if (s[pos] == '-') t.coeff = -1;
      ++pos;
    } else if (!terms.empty()) {
      throw std::invalid_argument("expected + or - between terms");
    }
    std::size_t end = s.find_first_of("+-", pos);
    if (end == std::string::npos) end = s.size();
    const std::string body = s.substr(pos, end - pos);
    if (body.empty()) throw std::invalid_argument("empty term in polynomial");
    std::stringstream factors(body);
    std::string f;
    while (std::getline(factors, f, '*')) {
      if (f.empty()) throw std::invalid_argument("empty factor in polynomial");
      if (std::isdigit(static_cast<unsigned char>(f[0]))) {
        t.coeff *= parse_rational(f);
        continue;
      }
      const std::size_t caret = f.find('^');
      const std::string name = f.substr(0, caret);
      int k = 1;
      if (caret != std::string::npos) {
        const std::string e = f.substr(caret + 1);
        if (e.empty() || e.find_first_not_of("0123456789") != std::string::npos) throw std::invalid_argument("bad exponent: " + f);
        k = std::stoi(e);
      }
      t.powers[name] += k;
    }
    terms.push_back(std::move(t));
    pos = end;
  }
  return terms;
}

int index_after(const std::string& name, char prefix) {
  if (name.size() < 2 || name[0] != prefix || name.find_first_not_of("0123456789", 1) != std::string::npos) return -1;
  return std::stoi(name.substr(1));
}

}  // namespace

WPoly parse_wpoly(const std::string& text, int g) {
  check_genus(g);
  WPoly p(g);
  for (const ParsedTerm& t : parse_terms(text)) {
    Monomial m;
    for (const auto& [name, k] : t.powers) {
      const int ui = index_after(name, 'u'), vi = index_after(name, 'v');
      int var = -1;
      if (ui >= 0 && ui < g) var = u_var(ui);
      if (vi >= 0 && vi < g - 2) var = v_var(g, vi);
      if (var < 0) throw std::invalid_argument("unknown variable for this genus: " + name);
      if (m[var] + k > 255) throw std::invalid_argument("exponent out of range");
      m[var] = static_cast<std::uint8_t>(m[var] + k);
    }
    p.add_term(m, t.coeff);
  }
  return p;
}

BinaryForm parse_binary_form(const std::string& text, int degree) {
  BinaryForm f(degree);
  for (const ParsedTerm& t : parse_terms(text)) {
    int a = 0, b = 0;
    for (const auto& [name, k] : t.powers) {
      if (name == "x0") {
        a += k;
      } else if (name == "x1") {
        b += k;
      } else {
        throw std::invalid_argument("binary forms use the variables x0 and x1: " + name);
      }
    }
    if (a + b != degree) throw std::invalid_argument("term degree does not match the form degree");
    f[a] += t.coeff;
  }
  return f;
}

Json load_json_argument(const std::string& arg) {
  std::ifstream in(arg);
  if (in) {
    std::stringstream buf;
    buf << in.rdbuf();
    return Json::parse(buf.str());
  }
  return Json::parse(arg);
}

}  // namespace ribbonlab

#include "ribbonlab/cli.hpp"

#include "ribbonlab/conormal.hpp"
#include "ribbonlab/families.hpp"
#include "ribbonlab/fitting.hpp"
#include "ribbonlab/groebner.hpp"
#include "ribbonlab/rnc.hpp"
#include "ribbonlab/sampling.hpp"
#include "ribbonlab/syzygy.hpp"
#include "ribbonlab/verify.hpp"
#include "ribbonlab/xg.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>

namespace ribbonlab {

namespace {

bool looks_like_json(const std::string& text) {
  const auto pos = text.find_first_not_of(" \t\r\n");
  if (pos == std::string::npos) return false;
  const char c = text[pos];
  return c == '[' || c == '{' || c == '"' || std::filesystem::is_regular_file(text);
}

WPoly poly_from_value(const Json& j, int g) {
  if (j.is_string()) return parse_wpoly(j.get<std::string>(), g);
  return wpoly_from_json(j, g);
}

WPoly poly_argument(const std::string& text, int g) {
  if (looks_like_json(text)) return poly_from_value(load_json_argument(text), g);
  return parse_wpoly(text, g);
}

BinaryForm form_argument(const std::string& text, int degree) {
  if (looks_like_json(text)) {
    const Json j = load_json_argument(text);
    if (j.is_string()) return parse_binary_form(j.get<std::string>(), degree);
    BinaryForm f = binary_form_from_json(j);
    if (f.degree() != degree) throw std::invalid_argument("binary form has degree " + std::to_string(f.degree()) + ", expected " + std::to_string(degree));
    return f;
  }
  return parse_binary_form(text, degree);
}

std::vector<WPoly> ell_argument(const std::string& text, int g) {
  const Json j = load_json_argument(text);
  if (!j.is_array()) throw std::invalid_argument("--ell must be a JSON array of polynomials");
  std::vector<WPoly> ell;
  for (const Json& e : j) ell.push_back(poly_from_value(e, g));
  if (ell.size() != uu_relations(g).size())
    throw std::invalid_argument("--ell needs one v-linear form per UU relation (" + std::to_string(uu_relations(g).size()) + ")");
  return ell;
}

LambdaFunctional lambda_argument(const std::string& text, int g) {
  return LambdaFunctional(g, vector_from_json(load_json_argument(text)));
}

Json optional_vector(const std::optional<RatVector>& v) { return v ? to_json(*v) : Json(nullptr); }

void require_genus(int g) {
  if (g < kMinGenus || g > kMaxGenus) throw std::invalid_argument("g must be in 3..10");
}

// ---------------------------------------------------------------------------

struct Common {
  std::string json_out;
  bool quiet = false;
  bool timing = false;
};

struct LimitQuadricArgs {
  int g = 0;
  std::string q;
};

Json cmd_limit_quadric(const LimitQuadricArgs& a) {
  require_genus(a.g);
  const RatMatrix m = matrix_from_json(load_json_argument(a.q));
  const auto n = static_cast<std::size_t>(a.g - 2);
  if (m.rows() != n || m.cols() != n) throw std::invalid_argument("q must be a " + std::to_string(n) + "x" + std::to_string(n) + " matrix");
  if (!m.is_symmetric()) throw std::invalid_argument("q must be symmetric");
  const QuadForm q(a.g, m);
  const QuadricVerdict v = is_limit_quadric(q);
  return Json{{"g", a.g},
              {"degenerate", v.degenerate},
              {"det", to_string(v.determinant)},
              {"witness_lambda", optional_vector(v.witness)},
              {"quadric", q_to_quadric(q).to_string()}};
}

struct LimitRelationArgs {
  int g = 0;
  int d = 0;
  std::string poly;
};

Json cmd_limit_relation(const LimitRelationArgs& a) {
  require_genus(a.g);
  const WPoly x = poly_argument(a.poly, a.g);
  RelationVerdict v;
  try {
    v = is_limit_relation(x, a.d);
  } catch (const NotInIdealError&) {
    throw std::invalid_argument("not a canonical relation: the polynomial does not vanish on the rational normal curve");
  }
  return Json{{"g", a.g},
              {"d", a.d},
              {"polynomial", x.to_string()},
              {"rank", v.rank},
              {"full_rank", a.g - 2},
              {"limit", v.limit},
              {"matrix", to_json(v.phi)},
              {"witness_lambda", optional_vector(v.witness)}};
}

struct VerifyArgs {
  VerifyOptions options;
};

struct FamilyArgs {
  int g = 0;
  int d = 1;
  int k = 0;
  std::optional<std::size_t> order_bound;
  std::string h, lambda, ell, family;
  std::uint64_t seed = 1;
};

BinaryForm h_or_sample(const std::string& text, int g, std::uint64_t seed, Json& echo) {
  if (!text.empty()) return form_argument(text, 2 * g + 2);
  Sampler s = Sampler::stream(seed, 0);
  const BinaryForm h = s.squarefree_form(2 * g + 2);
  echo["seed"] = seed;
  return h;
}

std::vector<WPoly> direction(const FamilyArgs& a) {
  if (!a.ell.empty() && !a.lambda.empty()) throw std::invalid_argument("give at most one of --lambda and --ell");
  if (!a.ell.empty()) return ell_argument(a.ell, a.g);
  if (!a.lambda.empty()) return ribbon_ell(lambda_argument(a.lambda, a.g));
  RatVector e0(static_cast<std::size_t>(a.g - 2));
  e0[0] = 1;
  return ribbon_ell(LambdaFunctional(a.g, e0));
}

Json order_json(std::size_t order, std::size_t bound) {
  if (order >= bound) return "\xE2\x89\xA5 " + std::to_string(bound);
  return Json(order);
}

Json cmd_family(const std::string& op, const FamilyArgs& a) {
  if (op == "build") {
    require_genus(a.g);
    if (a.d < 1) throw std::invalid_argument("d must be >= 1");
    Json echo = Json::object();
    const BinaryForm h = h_or_sample(a.h, a.g, a.seed, echo);
    const std::size_t n = a.order_bound.value_or(static_cast<std::size_t>(3 * a.d + 1));
    Json out{{"h", h.to_string()}, {"d", a.d}};
    if (echo.contains("seed")) out["seed"] = echo["seed"];
    out["family"] = to_json(perturb_hyperelliptic(a.g, h, a.d, n, direction(a)));
    return out;
  }
  if (a.family.empty()) throw std::invalid_argument("--family is required");
  const TruncatedFamily f = family_from_json(load_json_argument(a.family));
  if (op == "rescale") return Json{{"k", a.k}, {"family", to_json(rescale_v(f, a.k))}};
  if (op == "order") {
    return Json{{"N", f.order_bound},
                {"ribbon_order", order_json(ribbon_order(f), f.order_bound)},
                {"hyperell_order", order_json(hyperell_order(f), f.order_bound)}};
  }
  if (op == "discriminant") {
    const BinaryForm s = discriminant_section(f);
    return Json{{"ribbon_order", ribbon_order(f)},
                {"section", to_json(s)},
                {"section_text", s.to_string()},
                {"discriminant", to_string(binary_discriminant(s))}};
  }
  throw std::invalid_argument("unknown family operation: " + op);
}

struct XgArgs {
  std::string model = "split";
  std::string op = "hilbert";
  std::string order = "graded_lex";
  int g = 0;
  int max_degree = 6;
  std::string h, lambda, ell;
  std::uint64_t seed = 1;
};

Json cmd_xg(const XgArgs& a) {
  require_genus(a.g);
  if (a.max_degree < 0 || a.max_degree > 12) throw std::invalid_argument("max-degree must be in 0..12");
  Json out{{"model", a.model}, {"g", a.g}};
  XgIdeal ideal;
  ShapeFamily shapes = ShapeFamily::split_ribbon;
  if (a.model == "split") {
    ideal = split_ribbon_ideal(a.g);
  } else if (a.model == "hyperelliptic") {
    const BinaryForm h = h_or_sample(a.h, a.g, a.seed, out);
    out["h"] = h.to_string();
    ideal = hyperelliptic_model(a.g, h);
    shapes = ShapeFamily::hyperelliptic;
  } else if (a.model == "canonical") {
    if (!a.ell.empty() && !a.lambda.empty()) throw std::invalid_argument("give at most one of --lambda and --ell");
    std::vector<WPoly> ell;
    if (!a.ell.empty()) {
      ell = ell_argument(a.ell, a.g);
    } else {
      LambdaFunctional lambda = a.lambda.empty() ? Sampler::stream(a.seed, 0).lambda(a.g) : lambda_argument(a.lambda, a.g);
      if (a.lambda.empty()) out["seed"] = a.seed;
      out["lambda"] = to_json(lambda.coords());
      ell = ribbon_ell(lambda);
    }
    ideal = canonical_ribbon_ideal(a.g, ell);
    shapes = ShapeFamily::canonical_ribbon;
  } else {
    throw std::invalid_argument("unknown model: " + a.model + " (split, hyperelliptic, canonical)");
  }

  if (a.op == "ideal") {
    out["ideal"] = to_json(ideal);
  } else if (a.op == "hilbert") {
    out["weighted"] = hilbert_function(ideal, Grading::weighted, a.max_degree);
    out["koszul"] = hilbert_function(ideal, Grading::koszul, a.max_degree);
    std::vector<std::size_t> expected;
    for (int d = 0; d <= a.max_degree; ++d) expected.push_back(expected_ribbon_hilbert(a.g, d));
    out["expected_weighted"] = expected;
  } else if (a.op == "groebner") {
    MonomialOrder order;
    if (a.order == "graded_lex") order = MonomialOrder::graded_lex;
    else if (a.order == "graded_revlex") order = MonomialOrder::graded_revlex;
    else throw std::invalid_argument("unknown order: " + a.order);
    const GroebnerResult gb = buchberger(ideal, order, a.max_degree);
    out["groebner"] = to_json(gb, a.max_degree);
    out["normal_monomial_counts"] = normal_monomial_counts(gb, a.max_degree);
    out["hilbert_function"] = hilbert_function(ideal, Grading::weighted, a.max_degree);
  } else if (a.op == "syzygies") {
    out["syzygies"] = to_json(syzygies_by_degree(ideal, a.max_degree, shapes));
  } else if (a.op == "eliminate") {
    Json slices = Json::array();
    for (const IdealSlice& s : eliminate_v(ideal, a.max_degree)) slices.push_back(to_json(s));
    out["u_only_slices"] = slices;
    if (a.model == "canonical") {
      const LambdaMatch m = match_lambda(ideal);
      out["lambda_match"] = {{"solution_dimension", m.solution_dimension},
                             {"lambda", m.lambda ? to_json(m.lambda->coords()) : Json(nullptr)},
                             {"slices_equal", m.slices_equal}};
    }
  } else {
    throw std::invalid_argument("unknown op: " + a.op + " (ideal, hilbert, groebner, syzygies, eliminate)");
  }
  return out;
}

struct FittingArgs {
  std::size_t m = 0;
  std::size_t r = 0;
  std::string mode = "phi2";
};

Json cmd_fitting(const FittingArgs& a) {
  FittingMode mode;
  if (a.mode == "phi2") mode = FittingMode::phi2;
  else if (a.mode == "blocks") mode = FittingMode::blocks;
  else throw std::invalid_argument("unknown mode: " + a.mode);
  const std::size_t r = a.r == 0 ? a.m : a.r;
  return to_json(verify_power_ideal(a.m, r, mode));
}

CliOutcome finish(Json result, const Common& common, int exit_code) {
  CliOutcome out;
  out.exit_code = exit_code;
  out.result = std::move(result);
  const std::string text = out.result.dump(2) + "\n";
  if (!common.json_out.empty()) {
    std::ofstream f(common.json_out);
    if (!f) {
      out.exit_code = 1;
      out.result = Json{{"status", "error"}, {"payload", {{"message", "cannot write " + common.json_out}}}};
      out.text = out.result.dump(2) + "\n";
      return out;
    }
    f << text;
  }
  if (!common.quiet) out.text = text;
  return out;
}

}  // namespace

CliOutcome run_cli(const std::vector<std::string>& args) {
  CLI::App app{"Exact computations on canonical ribbons and hyperelliptic limits", "ribbonlab"};
  app.set_help_flag("--help", "Print help");
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  app.add_option("--json-out", common.json_out, "Also write the JSON result to this path");
  app.add_flag("--quiet", common.quiet, "Print nothing on stdout");
  app.add_flag("--timing", common.timing, "Add elapsed milliseconds to the result");

  std::function<Json()> action;

  LimitQuadricArgs lq;
  auto* c_lq = app.add_subcommand("limit-quadric", "Is x_q a limit of canonical quadrics");
  c_lq->add_option("--g", lq.g, "Genus")->required();
  c_lq->add_option("--q", lq.q, "Symmetric (g-2)x(g-2) matrix: file or inline JSON")->required();
  c_lq->callback([&] { action = [&] { return cmd_limit_quadric(lq); }; });

  LimitRelationArgs lr;
  auto* c_lr = app.add_subcommand("limit-relation", "Rank test for a degree-d relation");
  c_lr->add_option("--g", lr.g, "Genus")->required();
  c_lr->add_option("--d", lr.d, "Degree")->required();
  c_lr->add_option("--poly", lr.poly, "Polynomial: text, file or inline JSON")->required();
  c_lr->callback([&] { action = [&] { return cmd_limit_relation(lr); }; });

  VerifyArgs va;
  auto* c_v = app.add_subcommand("verify", "Run property suites");
  c_v->add_option("--suite", va.options.suite, "rnc|conormal|xg|fitting|families|all");
  c_v->add_option("--gmax", va.options.gmax, "Largest genus");
  c_v->add_option("--dmax", va.options.dmax, "Largest degree");
  c_v->add_option("--seed", va.options.seed, "Random seed");
  bool verify_failed = false;
  c_v->callback([&] {
    action = [&] {
      const VerifyReport rep = run_verify(va.options);
      verify_failed = !rep.all_pass;
      return to_json(rep);
    };
  });

  FamilyArgs fa;
  std::string family_op;
  auto* c_f = app.add_subcommand("family", "Truncated families: build, rescale, order, discriminant");
  c_f->add_option("op", family_op, "build|rescale|order|discriminant")->required();
  c_f->add_option("--g", fa.g, "Genus");
  c_f->add_option("--d", fa.d, "Perturbation order");
  c_f->add_option("--N", fa.order_bound, "Truncation order (default 3d+1)");
  c_f->add_option("--h", fa.h, "Degree 2g+2 binary form (default: sampled from --seed)");
  c_f->add_option("--lambda", fa.lambda, "Functional giving the odd direction (default e_0)");
  c_f->add_option("--ell", fa.ell, "Explicit odd direction: JSON list of v-linear forms");
  c_f->add_option("--family", fa.family, "Family JSON: file or inline");
  c_f->add_option("--k", fa.k, "Rescaling exponent");
  c_f->add_option("--seed", fa.seed, "Random seed");
  c_f->callback([&] { action = [&] { return cmd_family(family_op, fa); }; });

  XgArgs xa;
  auto* c_x = app.add_subcommand("xg", "Models in weighted projective space");
  c_x->add_option("--model", xa.model, "split|hyperelliptic|canonical");
  c_x->add_option("--op", xa.op, "ideal|hilbert|groebner|syzygies|eliminate");
  c_x->add_option("--g", xa.g, "Genus")->required();
  c_x->add_option("--max-degree", xa.max_degree, "Largest weighted degree");
  c_x->add_option("--order", xa.order, "graded_lex|graded_revlex");
  c_x->add_option("--h", xa.h, "Degree 2g+2 binary form (default: sampled from --seed)");
  c_x->add_option("--lambda", xa.lambda, "Functional for the canonical model");
  c_x->add_option("--ell", xa.ell, "Explicit v-linear forms for the canonical model");
  c_x->add_option("--seed", xa.seed, "Random seed");
  c_x->callback([&] { action = [&] { return cmd_xg(xa); }; });

  FittingArgs fi;
  auto* c_fit = app.add_subcommand("fitting", "Monomials of degree r as maximal minors");
  c_fit->add_option("--m", fi.m, "Number of formal variables")->required();
  c_fit->add_option("--r", fi.r, "Degree (default m)");
  c_fit->add_option("--mode", fi.mode, "phi2|blocks");
  c_fit->callback([&] { action = [&] { return cmd_fitting(fi); }; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    CliOutcome out;
    out.text = app.help();
    return out;
  } catch (const CLI::CallForAllHelp&) {
    CliOutcome out;
    out.text = app.help("", CLI::AppFormatMode::All);
    return out;
  } catch (const CLI::ParseError& e) {
    return finish(Json{{"status", "error"}, {"payload", {{"message", e.what()}}}}, common, 1);
  }

  const auto start = std::chrono::steady_clock::now();
  Json result;
  int code = 0;
  try {
    Json payload = action();
    result = Json{{"status", "ok"}, {"payload", std::move(payload)}};
    if (verify_failed) code = 2;
  } catch (const std::exception& e) {
    result = Json{{"status", "error"}, {"payload", {{"message", e.what()}}}};
    code = 1;
  }
  if (common.timing) {
    const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    result["timing_ms"] = ms;
  }
  return finish(std::move(result), common, code);
}

}  // namespace ribbonlab
